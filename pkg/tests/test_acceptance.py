"""The eight acceptance criteria, one test each.

Every test records a PASS/FAIL line that is printed in the terminal summary
(and echoed immediately, visible with ``-s``).
"""

import time
from contextlib import contextmanager
from itertools import combinations

import numpy as np
import pytest

from conftest import ACCEPTANCE
from oracles import psl2_order, suzuki_order
from zmoufang import (
    FieldElement,
    MoufangSet,
    PartitionTag,
    Status,
    build_projective_line,
    build_suzuki,
    list_checks,
    norm,
    norm0,
    partition_classify,
    partition_sizes,
    recompose,
    run_check,
    run_suite,
)
from zmoufang.lemmas.zassenhaus import hua_element_orders


@contextmanager
def criterion(k):
    notes = []
    ok = False
    try:
        yield notes
        ok = True
    finally:
        detail = "; ".join(notes)
        ACCEPTANCE[k] = (ok, detail)
        print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def test_1_moufang_axiom():
    with criterion(1) as notes:
        builders = [
            ("M(F4)", lambda: build_projective_line(4, verify=False)),
            ("M(F8)", lambda: build_projective_line(8, verify=False)),
            ("MSuz(8)", lambda: build_suzuki(8, verify=False)),
            ("MSuz(32)", lambda: build_suzuki(32, verify=False)),
        ]
        for name, make in builders:
            M = make()
            rep, dt = timed(M.verify_moufang)
            assert rep.passed, (name, rep.counterexample)
            assert rep.cases == M.U.size - 1
            assert dt < 10, (name, dt)
            notes.append(f"{name} {dt:.2f}s")


def test_2_orders():
    with criterion(2) as notes:
        cases = [
            ("M(F4)", build_projective_line(4), "naive", 60, 5),
            ("M(F8)", build_projective_line(8), "naive", 504, 5),
            ("MSuz(8)", build_suzuki(8), "naive", 29120, 60),
            ("MSuz(32)", build_suzuki(32), "schreier", 32_537_600, 120),
        ]
        for name, M, strategy, want, limit in cases:
            got, dt = timed(M.group_order, strategy)
            assert got == want, (name, got)
            assert dt < limit, (name, dt)
            notes.append(f"{name}={got} {dt:.2f}s")
        assert psl2_order(4) == 60 and psl2_order(8) == 504
        assert suzuki_order(8) == 29120 and suzuki_order(32) == 32_537_600


@pytest.fixture(scope="module")
def suz():
    return {8: build_suzuki(8), 32: build_suzuki(32)}


def test_3_suzuki_fundamentals(suz):
    with criterion(3) as notes:
        for q, M in suz.items():
            t = M.tau.images
            assert np.array_equal(t[t], np.arange(M.npoints))
            f = M.U.spec
            zeros = [(a, b) for a in range(q) for b in range(q) if int(norm(f.element(a), f.element(b))) == 0]
            assert zeros == [(0, 0)]
            notes.append(f"q={q} tau^2=1, N anisotropic")
        M, f, U = suz[8], suz[8].U.spec, suz[8].U
        N = {x: int(norm(*(f.element(c) for c in U.coords(x)))) for x in range(1, U.size)}
        mus = {x: M.mu(x) for x in range(1, U.size)}
        pairs = 0
        for x in N:
            for y in N:
                assert (mus[x] == mus[y]) == (N[x] == N[y]), (x, y)
                pairs += 1
        assert pairs == 63**2
        for x in range(1, U.size):
            n0 = int(norm0(*(FieldElement(f, c) for c in U.coords(x))))
            assert M.mu(U.index(0, n0)) == mus[x]
        notes.append(f"q=8 mu/N equivalence over {pairs} pairs, mu_(0,N0) = mu")


def test_4_identity_catalog():
    with criterion(4) as notes:
        ids = [cid for cid, _, _ in list_checks() if cid.startswith(("L3.", "E3"))]
        t0 = time.perf_counter()
        for M in (build_projective_line(8), build_suzuki(8)):
            rep = run_suite(M, ids)
            assert rep.passed, [r.to_dict() for r in rep.results if r.status is Status.FAIL or not r.expected]
            counts = {}
            for r in rep.results:
                # Inapplicable is accepted only where the registry whitelists it (hypothesis absent)
                assert r.status is Status.PASS or r.expected, r.check_id
                counts[r.status.value] = counts.get(r.status.value, 0) + 1
            notes.append(f"{M.kind}: " + ", ".join(f"{k} {v}" for k, v in sorted(counts.items())))
        dt = time.perf_counter() - t0
        assert dt < 60
        notes.append(f"{len(ids)} checks x 2 sets in {dt:.2f}s")


def test_5_structure_facts(suz):
    with criterion(5) as notes:
        M = suz[8]
        U = M.U
        H = M.hua_subgroup()
        assert H.order == 7 and H.is_cyclic
        inv = sorted(U.involutions)
        assert len(inv) == 7 and set(inv) <= U.center
        for i in inv:
            assert sorted(h(i) for h in H) == inv  # transitive, and |H| = 7 makes it regular
        assert U.exponent == 4 and len(U.center) == 8
        assert M.specials == ()
        mf8 = build_projective_line(8)
        assert mf8.specials == tuple(range(1, 8))
        for a in inv:
            assert (M.mu(a) * M.alpha(a)).order() == 5
        for q in (8, 32):
            assert 3 not in hua_element_orders(suz[q])
        notes.append("|H|=7 cyclic, regular on 7 central involutions, exp 4, |Z|=8, specials 0/7, order 5, no order 3")


def test_6_partition(suz):
    with criterion(6) as notes:
        for q, want in ((8, [1, 7, 7, 7, 42]), (32, [1, 31, 31, 31, 930])):
            M = suz[q]
            assert list(partition_sizes(M).values()) == want
            mixed = 0
            for x in range(M.U.size):
                cls = partition_classify(M, x)
                if cls.tag is PartitionTag.MIXED:
                    assert recompose(M, *cls.decomposition) == x
                    mixed += 1
            assert mixed == want[-1]
            notes.append(f"q={q} " + "/".join(map(str, want)))


def test_7_theorem_finite_case(suz):
    with criterion(7) as notes:
        for q, M in suz.items():
            for cid in ("T6.1c", "T6.1d", "T6.1e"):
                r = run_check(cid, M)
                assert r.status is Status.PASS, (q, cid, r.counterexample)
            notes.append(f"q={q} c/d/e pass")


def test_8_mutation_sensitivity(suz):
    with criterion(8) as notes:
        M = suz[8]
        tau = M.tau.images
        caught = total = 0
        for x, y in combinations(range(1, M.inf), 2):
            t = tau.copy()
            t[x], t[y] = t[y], t[x]
            bad = MoufangSet(M.U, t, kind="suzuki")
            broken = not bad.verify_moufang().passed or not np.array_equal(t[t], np.arange(M.npoints))
            caught += broken
            total += 1
        assert caught == total == 63 * 62 // 2
        notes.append(f"{caught}/{total} transpositions on U^# detected")

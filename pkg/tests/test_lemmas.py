import json

import numpy as np
import pytest

from zmoufang import MoufangSet, Status, list_checks, run_check, run_suite
from zmoufang.lemmas import results_from_json

REQUIRED = (
    [f"L3.1{x}" for x in "abcdefghijkl"]
    + ["E3A", "E3B", "L3.2a", "L3.2b", "L3.2c", "L3.3", "L3.4", "L3.7", "L3.9a", "L3.9b", "L3.9c"]
    + ["L3.10a", "L3.10b", "L3.11", "L3.12"]
    + [f"L3.13{x}" for x in "abcdefghi"]
    + ["P3.14", "L3.15", "P3.17-CONCL", "Z4", "L4.4", "L4.5a", "L4.5b", "L4.5c"]
    + ["SUZ5.8", "SUZ5.9", "SUZ5.10b", "SUZ5.11", "SUZ5.12", "SUZ5.13", "SUZ5.14", "SUZ5.15"]
    + ["SUZ5.16", "SUZ5.17", "SUZ5.18", "SUZ5.19a", "SUZ5.19b", "SUZ5.19c", "SUZ5.19d", "SUZ5.20-TITS"]
    + ["T6.1c", "T6.1d", "T6.1e"]
)


def test_registry_contents():
    rows = list_checks()
    ids = [r[0] for r in rows]
    assert len(ids) >= 45
    assert set(REQUIRED) <= set(ids)
    assert len(ids) == len(set(ids))
    assert all(anchor and appl for _, anchor, appl in rows)


def test_applicability_descriptions():
    appl = {i: a for i, _, a in list_checks()}
    assert "special" in appl["L3.13a"]
    assert "no special involution" in appl["SUZ5.8"]


def test_unknown_id(msuz8):
    with pytest.raises(KeyError):
        run_check("L9.99", msuz8)
    with pytest.raises(KeyError):
        run_suite(msuz8, ["L3.1a", "nope"])


def test_spec_examples(mf8, msuz8):
    r = run_check("L3.1a", msuz8)
    assert r.status is Status.PASS and r.cases_checked == 63
    r = run_check("P3.14", mf8)
    assert r.status is Status.VACUOUS and r.cases_checked == 0 and r.expected
    r = run_check("SUZ5.10b", msuz8)
    assert r.status is Status.PASS and r.cases_checked == 7
    assert run_check("L3.13a", msuz8).status is Status.INAPPLICABLE
    assert run_check("SUZ5.8", mf8).status is Status.INAPPLICABLE


VACUOUS = {
    "psl2": {"L3.1l", "L3.10b", "P3.14", "L3.15"} | {f"L3.13{x}" for x in "abcdefgh"},
    "suzuki": {"L3.9c", "L3.10a", "L3.11"},
}
INAPPLICABLE = {
    "psl2": {i for i in REQUIRED if i.startswith(("SUZ", "T6.1"))},
    "suzuki": {f"L3.13{x}" for x in "abcdefghi"} | {"P3.14", "L3.15", "P3.17-CONCL"},
}


@pytest.mark.parametrize("name", ["mf4", "mf8", "msuz8"])
def test_suite_statuses(name, request):
    M = request.getfixturevalue(name)
    rep = run_suite(M)
    assert rep.passed
    by = {r.check_id: r.status for r in rep.results}
    vac = {i for i, s in by.items() if s is Status.VACUOUS}
    ina = {i for i, s in by.items() if s is Status.INAPPLICABLE}
    assert vac == VACUOUS[M.kind]
    assert ina == INAPPLICABLE[M.kind]
    assert all(s is Status.PASS for i, s in by.items() if i not in vac | ina)


def closed_forms(M):
    """Quantifier domain sizes written out from |U|, q, |H| and the involution count."""
    q, u = M.U.spec.order, M.U.size
    un, h = u - 1, len(M.hua_subgroup())
    i = len(M.U.involutions)
    forms = {
        **{k: un for k in ["L3.1a", "L3.1e", "L3.1f", "L3.1i", "L3.1j", "L3.1k", "L3.7", "L3.9a", "L3.12", "VA"]},
        "E3A": un * (un - 1),
        "E3B": un * (un - 1),
        "L3.1c": un * un,
        "L3.1d": 1 + h,
        "L3.1g": h * un,
        "L3.1h": h * un,
        **{k: i for k in ["L3.2a", "L3.2b", "L3.2c", "L3.9b", "L4.5a"]},
        "L3.3": i * (i - 1),
        "L3.4": i * i,
        "L4.5b": un,
        "L4.5c": 1 + h * h,
        "Z4": (h - 1) * un,
    }
    if M.kind == "suzuki":
        forms.update(
            {
                "L3.1b": un,
                "L3.1l": un * q,
                "L3.10b": u - q,
                "L4.4": (q * q + 1) * (q - 1),
                **{k: q - 1 for k in ["SUZ5.8", "SUZ5.9", "SUZ5.10b", "SUZ5.19a", "SUZ5.19b", "SUZ5.19c", "T6.1d"]},
                **{k: q for k in ["SUZ5.11", "SUZ5.15", "SUZ5.20-TITS"]},
                **{k: (q - 1) * (q - 2) for k in ["SUZ5.12", "SUZ5.16", "SUZ5.19d"]},
                "SUZ5.13": (q - 1) * (q - 2) * (q - 1) * 2 + (q - 1) * (q - 2),
                "SUZ5.14": q + (q - 1) * (q - 2),
                "SUZ5.17": un,
                "SUZ5.18": (q - 1) * (q - 1) * (q - 2),
                "T6.1c": u,
                "T6.1e": un,
            }
        )
    else:
        forms.update({"L3.1b": un, "L4.4": q * q - 1, "L3.11": un * h, "L3.13i": un, "L3.10a": un, "L3.9c": un})
    return forms


@pytest.mark.parametrize("name", ["mf4", "mf8", "msuz8"])
def test_case_counts_match_closed_forms(name, request):
    M = request.getfixturevalue(name)
    for cid, want in closed_forms(M).items():
        assert run_check(cid, M).cases_checked == want, cid


def test_determinism(msuz8):
    a = [r.to_dict() for r in run_suite(msuz8).results]
    b = [r.to_dict() for r in run_suite(msuz8, jobs=4).results]
    for r in a + b:
        r.pop("millis")
    assert a == b


def test_machine_report_round_trip(msuz8):
    rep = run_suite(msuz8, ["T6.1c", "L3.1a", "E3A"])
    rows = results_from_json(rep.to_json())
    assert [r["check_id"] for r in rows] == ["E3A", "L3.1a", "T6.1c"]
    assert set(rows[0]) == {"check_id", "anchor", "status", "cases_checked", "millis"}
    with pytest.raises(ValueError):
        results_from_json(json.dumps([{"check_id": "x"}]))
    with pytest.raises(ValueError):
        bad = rows[0] | {"status": "maybe"}
        results_from_json(json.dumps([bad]))


def _corrupt(M, x, y, kind):
    t = M.tau.images.copy()
    t[x], t[y] = t[y], t[x]
    return MoufangSet(M.U, t, kind=kind)


def test_corrupted_tau_fails_suite(mf8, msuz8):
    for M, (x, y) in ((msuz8, (9, 63)), (mf8, (2, 3))):
        bad = _corrupt(M, x, y, M.kind)
        rep = run_suite(bad)
        assert not rep.passed
        fails = [r for r in rep.results if r.status is Status.FAIL]
        assert fails and all(r.counterexample for r in fails)
        assert {"E3A", "L3.1c"} <= {r.check_id for r in fails}


def test_unexpected_vacuity_fails_suite(mf8):
    relabelled = MoufangSet(mf8.U, mf8.tau, kind="custom")
    rep = run_suite(relabelled)
    assert all(r.status is not Status.FAIL for r in rep.results)
    assert not rep.passed
    assert "unexpected" in rep.to_text()


def test_counterexample_witness_names_elements(msuz8):
    bad = _corrupt(msuz8, 9, 63, "suzuki")
    r = run_check("E3A", bad)
    assert r.status is Status.FAIL
    assert set(r.counterexample) >= {"a", "b"}
    assert all(isinstance(v, str) for v in r.counterexample.values())


def test_text_report(msuz8):
    text = run_suite(msuz8, ["L3.1a"]).to_text()
    assert "L3.1a" in text and "suite PASSED" in text


def test_suzuki_exhaustive_values_q8(msuz8):
    # (~a)*2 = a and the tau closed forms, re-derived outside the registry
    U, f = msuz8.U, msuz8.U.spec
    s = msuz8.sim_table
    for a in U.involutions:
        assert U.times(int(s[a]), 2) == a
    tau = msuz8.tau
    for a in range(1, 8):
        ap = f.one_plus_theta(a)
        assert tau(U.index(0, ap)) == U.index(f.inv(a), 0)
        assert tau(U.index(a, 0)) == U.index(0, f.inv(ap))
        assert tau(U.index(a, ap)) == U.index(f.inv(a), f.inv(ap))


def test_norm_factorisation(msuz8):
    from zmoufang.constructions import _norm

    f = msuz8.U.spec
    for a in range(1, 8):
        for b in range(8):
            r = f.div(b, a)
            assert _norm(f, a, b) == f.one_plus_theta(r) ^ f.one_plus_theta(f.theta(a) ^ r)


def test_order_three_absent_q32(msuz32):
    from zmoufang.lemmas.zassenhaus import hua_element_orders

    orders = hua_element_orders(msuz32)
    assert len(orders) == 31 and 3 not in orders
    assert np.all(np.array(orders[1:]) == 31)


def test_suite_on_suzuki_32_without_quadratic_sweeps(msuz32):
    # E3B and L3.1c sweep all |U^#|^2 pairs (about a minute); the rest runs here
    ids = [cid for cid, _, _ in list_checks() if cid not in ("E3B", "L3.1c")]
    rep = run_suite(msuz32, ids, jobs=4)
    assert rep.passed
    by = {r.check_id: r for r in rep.results}
    assert by["SUZ5.10b"].status is Status.PASS and by["SUZ5.10b"].cases_checked == 31
    assert by["SUZ5.16"].cases_checked == 31 * 30
    # above the enumeration cap L4.4 works in H + H mu_e, whose involutions are the coset H mu_e
    assert by["L4.4"].cases_checked == 31

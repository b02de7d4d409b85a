"""Checks for Zassenhaus Moufang sets with |U| even and no special involution.

The generic ones only use Moufang-set operations.  Those marked as needing
coordinates additionally read (a, b) pairs of A(n, theta) and field values.
"""

from __future__ import annotations

import numpy as np

from ..field import FieldElement
from ._common import comp, coordinatized, ctx, no_special_involution, porder, same
from .registry import register
from .zassenhaus import hua_element_orders

PSL2 = "psl2"

_GENERIC = dict(
    applies=no_special_involution,
    applicability="Zassenhaus, |U| even, no special involution",
    inapplicable_ok=[PSL2],
)
_COORD = dict(
    applies=coordinatized,
    applicability="as the generic Suzuki checks, with U given as A(n, theta)",
    inapplicable_ok=[PSL2],
)


def _pairs(xs):
    return ((a, b) for a in xs for b in xs if a != b)


@register("SUZ5.8", "(~a)*2 = a for every involution a", **_GENERIC)
def _s58(M, sw):
    c = ctx(M)
    for a in c.invols:
        sw.case(lambda: c.times(c.sim(a), 2) == a, a=a)


@register("SUZ5.9", "H has no element of order 3", **_GENERIC)
def _s59(M, sw):
    for k, o in enumerate(hua_element_orders(M)):
        sw.expect(o != 3, hua_element=str(k), order=str(o))


@register("SUZ5.10b", "mu_a alpha_a has order 5 for every involution a", **_GENERIC)
def _s510b(M, sw):
    c = ctx(M)
    for a in c.invols:
        o = porder(comp(c.mu(a), c.alpha(a)))
        sw.expect(o == 5, a=a, order=str(o))


@register("SUZ5.11", "{0} and the ~a for a in Z(U)^# form a transversal of Z(U) in U", **_GENERIC)
def _s511(M, sw):
    c = ctx(M)
    reps = [0] + [c.sim(z) for z in c.center_nz]
    seen: set[frozenset] = set()
    for t in reps:
        coset = frozenset(c.add(t, z) for z in c.center)
        sw.expect(coset not in seen, representative=t)
        seen.add(coset)
    if len(reps) * len(c.center) != c.n:
        sw.expect(False, representatives=str(len(reps)), center=str(len(c.center)))


@register("SUZ5.12", "mu_{a+b} = mu_{-~a+~b} for distinct central involutions a, b", **_GENERIC)
def _s512(M, sw):
    c = ctx(M)
    for a, b in _pairs(c.central_invols):
        sw.case(lambda: same(c.mu(c.add(a, b)), c.mu(c.add(c.neg(c.sim(a)), c.sim(b)))), a=a, b=b)


@register(
    "SUZ5.13",
    "-~a+~b avoids c, ~c and -~c for central involutions a != b, c; with the two ~(-~a+~b) expansions",
    **_GENERIC,
)
def _s513(M, sw):
    c = ctx(M)
    Z = c.central_invols
    for a, b in _pairs(Z):
        x = c.add(c.neg(c.sim(a)), c.sim(b))
        for z in Z:
            sw.case(lambda: x not in (z, c.sim(z), c.neg(c.sim(z))), a=a, b=b, c=z)

    def expansion_ab(a, b):
        x = c.add(c.neg(c.sim(a)), c.sim(b))
        w = c.mu_at(b, c.mu_at(a, a))
        t1 = c.add(w, b)
        r1 = c.add(c.neg(c.sim(c.mu_at(t1, c.mu_at(b, a)))), c.sim(t1))
        r2 = c.add(c.neg(c.sim(c.add(a, w))), c.sim(c.add(b, w)))
        return c.sim(x) == r1 == r2

    for a, b in _pairs(Z):
        sw.case(lambda: expansion_ab(a, b), a=a, b=b)

    def expansion_gh(e, g, h, gi):
        eg, eh = int(g[e]), int(h[e])
        z = int(gi[h[h[e]]])
        lhs = c.sim(c.add(c.neg(c.sim(eg)), c.sim(eh)))
        return lhs == c.add(c.neg(c.sim(c.add(z, eg))), c.sim(c.add(z, eh)))

    for e in Z:
        for i, g in enumerate(c.H):
            for j, h in enumerate(c.H):
                if i != j:
                    sw.case(lambda: expansion_gh(e, g, h, c.Hinv[i]), e=e, g=str(i), h=str(j))


@register("SUZ5.14", "theta fixes only 0 and 1, and [~e, ~eh] != 0 for central involutions e and h in H^#", **_COORD)
def _s514(M, sw):
    c = ctx(M)
    f = M.U.spec
    for x in range(f.order):
        sw.expect((f.theta(x) == x) == (x in (0, 1)), x=str(x))
    for e in c.central_invols:
        se = c.sim(e)
        for k, h in enumerate(c.H[1:], start=1):
            sw.case(lambda: M.U.commutator(se, c.sim(int(h[e]))) != 0, e=e, hua_element=str(k))


def _mixed(f, a, b):
    t = f.theta_inv(f.div(b, a))
    return a ^ t, t


def _mixed_elements(M):
    U, f = M.U, M.U.spec
    for x in range(1, U.size):
        a, b = U.coords(x)
        if a and b and b != f.one_plus_theta(a):
            yield x, a, b


@register("SUZ5.15", "-~e = (1,0); -~(0,a^(1+theta)) = (a,0) and ~(0,a^(1+theta)) = (a,a^(1+theta))", **_COORD)
def _s515(M, sw):
    c, U, f = ctx(M), M.U, M.U.spec
    sw.case(lambda: c.neg(c.sim(U.index(0, 1))) == U.index(1, 0), e=U.index(0, 1))
    for a in range(1, f.order):
        ap = f.one_plus_theta(a)
        z = U.index(0, ap)
        sw.case(lambda: c.neg(c.sim(z)) == U.index(a, 0) and c.sim(z) == U.index(a, ap), a=str(a))


def _recompose(c, f, U, s, t):
    return c.add(c.neg(c.sim(U.index(0, f.one_plus_theta(s)))), c.sim(U.index(0, f.one_plus_theta(t))))


@register(
    "SUZ5.16",
    "each (a,b) off Z(U), ~Z(U) and -~Z(U) is -~(0,s^(1+theta)) + ~(0,t^(1+theta)) for exactly one pair (s,t)",
    **_COORD,
)
def _s516(M, sw):
    c, U, f = ctx(M), M.U, M.U.spec
    reps: dict[int, list[tuple[int, int]]] = {}
    for u in range(1, f.order):
        for v in range(1, f.order):
            if u != v:
                reps.setdefault(_recompose(c, f, U, u, v), []).append((u, v))
    for x, a, b in _mixed_elements(M):
        s, t = _mixed(f, a, b)
        sw.case(
            lambda: _recompose(c, f, U, s, t) == x and reps.get(x) == [(s, t)],
            x=x,
            s=str(s),
            t=str(t),
            representations=str(reps.get(x)),
        )


@register("SUZ5.17", "mu_{(0, N0(a,b))} = mu_{(a,b)}", **_COORD)
def _s517(M, sw):
    from ..constructions import norm0

    c, U, f = ctx(M), M.U, M.U.spec
    for x in range(1, c.n):
        a, b = U.coords(x)
        n0 = norm0(FieldElement(f, a), FieldElement(f, b)).bits
        sw.case(lambda: n0 != 0 and same(c.mu(U.index(0, n0)), c.mu(x)), x=x, n0=str(n0))


@register(
    "SUZ5.18",
    "(-~eg + ~eh) mu_e = -~(e j^-1 h^-2) + ~(e h^-1) where e j = e g^-1 + e h^-1, for g != h in H",
    **_GENERIC,
)
def _s518(M, sw):
    c = ctx(M)
    H, Hinv = c.H, c.Hinv
    for e in c.central_invols:
        where = {int(h[e]): k for k, h in enumerate(H)}

        def holds(i, j):
            g, h, hi = H[i], H[j], Hinv[j]
            lhs = c.mu_at(e, c.add(c.neg(c.sim(int(g[e]))), c.sim(int(h[e]))))
            k = where.get(c.add(int(Hinv[i][e]), int(hi[e])))
            if k is None:
                return False
            p = int(hi[hi[Hinv[k][e]]])
            return lhs == c.add(c.neg(c.sim(p)), c.sim(int(hi[e])))

        for i in range(len(H)):
            for j in range(len(H)):
                if i != j:
                    sw.case(lambda: holds(i, j), e=e, g=str(i), h=str(j))


def _suz519(check_id, anchor, domain, expected):
    @register(check_id, anchor, **_COORD)
    def run(M, sw):
        c, U, f = ctx(M), M.U, M.U.spec
        e = U.index(0, 1)
        for x, want in ((x, expected(f, *U.coords(x))) for x in domain(M)):
            sw.case(lambda: c.mu_at(e, x) == U.index(*want), x=x, expected=U.index(*want))

    return run


def _nonzero_scalars(M):
    return range(1, M.U.spec.order)


_suz519(
    "SUZ5.19a",
    "(0, a^(1+theta)) mu_e = (a^-1, 0)",
    lambda M: [M.U.index(0, M.U.spec.one_plus_theta(a)) for a in _nonzero_scalars(M)],
    lambda f, _, b: (f.inv(f.root_one_plus_theta(b)), 0),
)
_suz519(
    "SUZ5.19b",
    "(a, 0) mu_e = (0, a^(-1-theta))",
    lambda M: [M.U.index(a, 0) for a in _nonzero_scalars(M)],
    lambda f, a, _: (0, f.inv(f.one_plus_theta(a))),
)
_suz519(
    "SUZ5.19c",
    "(a, a^(1+theta)) mu_e = (a^-1, a^(-1-theta))",
    lambda M: [M.U.index(a, M.U.spec.one_plus_theta(a)) for a in _nonzero_scalars(M)],
    lambda f, a, _: (f.inv(a), f.inv(f.one_plus_theta(a))),
)


def _s519d_expected(f, a, b):
    from ..constructions import norm0

    s, t = _mixed(f, a, b)
    n0 = norm0(FieldElement(f, a), FieldElement(f, b)).bits
    N = f.root_one_plus_theta(n0)
    if f.one_plus_theta(N) != n0:
        raise AssertionError("(1+theta)-th root does not invert")
    v = f.div(s, f.mul(N, t)) ^ f.inv(t)
    return v, f.div(v, f.theta(t))


_suz519(
    "SUZ5.19d",
    "(a,b) mu_e = (s/(Nt) + 1/t, (s/(Nt) + 1/t)/t^theta) with N^(1+theta) = N0(a,b)",
    lambda M: [x for x, _, _ in _mixed_elements(M)],
    _s519d_expected,
)


@register("SUZ5.20-TITS", "theta^2 is the Frobenius map", **_COORD)
def _s520(M, sw):
    f = M.U.spec
    for x in range(f.order):
        sw.expect(f.theta(f.theta(x)) == f.mul(x, x), x=str(x))


# finite case of the generalised Suzuki characterisation


@register("T6.1c", "Z(U), ~Z(U)^#, -~Z(U)^# and the -~a+~b (a != b) partition U", **_GENERIC)
def _t61c(M, sw):
    c = ctx(M)
    Zs = c.center_nz
    parts = [
        set(c.center),
        {c.sim(z) for z in Zs},
        {c.neg(c.sim(z)) for z in Zs},
        {c.add(c.neg(c.sim(a)), c.sim(b)) for a, b in _pairs(Zs)},
    ]
    for x in range(c.n):
        hits = [k for k, p in enumerate(parts) if x in p]
        sw.expect(len(hits) == 1, x=x, parts=hits)


@register("T6.1d", "H is transitive on Z(U)^#", **_GENERIC)
def _t61d(M, sw):
    c = ctx(M)
    if not c.center_nz:
        return
    orbit = set(c.H[:, c.center_nz[0]].tolist())
    for z in c.center_nz:
        sw.expect(z in orbit, z=z)


@register("T6.1e", "every a in U^# lies in V_b for some b in Z(U)^#", **_GENERIC)
def _t61e(M, sw):
    c = ctx(M)
    central_ids = set(c.mu_ids[c.center_nz].tolist())
    ok = np.array([int(c.mu_ids[a]) in central_ids for a in range(1, c.n)])
    sw.rows(ok, lambda i: {"a": i + 1})

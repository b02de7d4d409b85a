"""Identities valid in every Moufang set: mu-maps, ~, involutions, special elements."""

from __future__ import annotations

import numpy as np

from ..perm import Permutation
from ._common import comp, conj, ctx, inv, is_proper, porder, same
from .registry import register

PSL2, SUZ = "psl2", "suzuki"


def _pairs(elements):
    for a in elements:
        for b in elements:
            if a != b:
                yield a, b


# mu-maps and ~


@register("L3.1a", "mu_a^-1 = mu_{-a}")
def _l31a(M, sw):
    c = ctx(M)
    for a in range(1, c.n):
        sw.expect(same(inv(c.mu(a)), c.mu(c.neg(a))), a=a)


def _tau_involutive_set(M) -> bool:
    return M.same_as(Permutation(M._tinv, check=False))


@register(
    "L3.1b",
    "mu_{a tau} = (mu_{-a})^tau",
    applies=_tau_involutive_set,
    applicability="M(U, tau) = M(U, tau^-1), tested",
)
def _l31b(M, sw):
    c = ctx(M)
    for a in range(1, c.n):
        sw.case(lambda: same(c.mu(c.t(a)), conj(c.mu(c.neg(a)), c.tau)), a=a)


@register("L3.1c", "mu_{a mu_b} = (mu_{-a})^{mu_b}")
def _l31c(M, sw):
    c = ctx(M)
    A = c.nz
    for b in range(1, c.n):
        mb = c.mut[b]
        img = mb[A]
        valid = (img > 0) & (img < c.n)
        lhs = c.mut[np.where(valid, img, 1)]
        rhs = mb[c.mut[c.negt[A]][:, inv(mb)]]
        ok = valid & np.all(lhs == rhs, axis=1)
        sw.rows(ok, lambda i: {"a": int(A[i]), "b": b})


@register("L3.1d", "the Hua subgroup is the stabiliser of 0 and inf in the little projective group")
def _l31d(M, sw):
    c = ctx(M)
    chain = M.stabilizer_chain
    stab = chain.stabilizer_order(2) if chain.base[:2] == [c.inf, 0] else -1
    sw.expect(stab == len(c.H), hua_order=str(len(c.H)), stabilizer_order=str(stab))
    for k, h in enumerate(c.H):
        sw.expect(chain.contains(Permutation(h, check=False)), hua_element=str(k))


@register("L3.1e", "~a = -((-a) mu_a)")
def _l31e(M, sw):
    c = ctx(M)
    for a in range(1, c.n):
        sw.case(lambda: c.sim(a) == c.neg(c.mu_at(a, c.neg(a))), a=a)


@register("L3.1f", "mu_{-a} = alpha_{-~a} mu_{-a} alpha_a mu_{-a} alpha_{~-a}")
def _l31f(M, sw):
    c = ctx(M)

    def holds(a):
        na = c.neg(a)
        rhs = comp(c.alpha(c.neg(c.sim(a))), c.mu(na), c.alpha(a), c.mu(na), c.alpha(c.sim(na)))
        return same(rhs, c.mu(na))

    for a in range(1, c.n):
        sw.case(lambda: holds(a), a=a)


@register("L3.1g", "mu_{ah} = (mu_a)^h for h in H")
def _l31g(M, sw):
    c = ctx(M)
    A = c.nz
    for k, (h, hi) in enumerate(zip(c.H, c.Hinv)):
        lhs = c.mut[h[A]]
        rhs = h[c.mut[A][:, hi]]
        sw.rows(np.all(lhs == rhs, axis=1), lambda i: {"a": int(A[i]), "hua_element": str(k)})


@register("L3.1h", "~(ah) = (~a) h for h in H")
def _l31h(M, sw):
    c = ctx(M)
    A = c.nz
    for k, h in enumerate(c.H):
        sw.rows(c.simt[h[A]] == h[c.simt[A]], lambda i: {"a": int(A[i]), "hua_element": str(k)})


@register("L3.1i", "mu_{~a} = mu_{-a} and mu_a = mu_{-~a} = mu_{~-a}")
def _l31i(M, sw):
    c = ctx(M)

    def holds(a):
        na, sa = c.neg(a), c.sim(a)
        return (
            same(c.mu(sa), c.mu(na))
            and same(c.mu(a), c.mu(c.neg(sa)))
            and same(c.mu(a), c.mu(c.sim(na)))
        )

    for a in range(1, c.n):
        sw.case(lambda: holds(a), a=a)


@register("L3.1j", "~(a tau) = (-a) tau and -(a tau^-1) = (~a) tau^-1")
def _l31j(M, sw):
    c = ctx(M)
    for a in range(1, c.n):
        sw.case(lambda: c.sim(c.t(a)) == c.t(c.neg(a)) and c.neg(c.ti(a)) == c.ti(c.sim(a)), a=a)


@register("L3.1k", "a mu_a = ~-~a and a mu_{-a} = -~-a; these agree when mu_a is an involution")
def _l31k(M, sw):
    c = ctx(M)

    def holds(a):
        na = c.neg(a)
        x = c.sim(c.neg(c.sim(a)))
        y = c.neg(c.sim(na))
        ok = c.mu_at(a, a) == x and c.mu_at(na, a) == y
        if porder(c.mu(a)) <= 2:
            ok = ok and x == y
        return ok

    for a in range(1, c.n):
        sw.case(lambda: holds(a), a=a)


@register(
    "L3.1l",
    "a != b with mu_a = mu_b: mu_{a mu_a^-1 - b mu_a^-1} = mu_{a-b} and mu_{-a+b} = mu_{-~a+~b}",
    vacuous_ok=[PSL2],
)
def _l31l(M, sw):
    c = ctx(M)

    def holds(a, b):
        na = c.neg(a)
        x, y = c.mu_at(na, a), c.mu_at(na, b)
        return same(c.mu(c.sub(x, y)), c.mu(c.sub(a, b))) and same(
            c.mu(c.add(na, b)), c.mu(c.add(c.neg(c.sim(a)), c.sim(b)))
        )

    for a in range(1, c.n):
        for b in M.fiber(a):
            if b != a:
                sw.case(lambda: holds(a, b), a=a, b=b)


# the two fundamental equations


def _e3_c(c, b, A):
    """c = (a tau^-1 - b tau^-1) tau for all a in A, as an array."""
    return c.tau[c.addt[c.tinv[A], c.negt[c.tinv[b]]]]


@register("E3A", "for a != b: (a tau^-1 - b tau^-1) tau = (a - b) mu_b + ~b")
def _e3a(M, sw):
    c = ctx(M)
    for b in range(1, c.n):
        A = c.nz[c.nz != b]
        lhs = _e3_c(c, b, A)
        rhs = c.addt[c.mut[b][c.addt[A, c.negt[b]]], c.simt[b]]
        sw.rows(lhs == rhs, lambda i: {"a": int(A[i]), "b": b})


@register("E3B", "for a != b and c = (a tau^-1 - b tau^-1) tau: mu_c = mu_{-b} mu_{b-a} mu_a")
def _e3b(M, sw):
    c = ctx(M)
    for b in range(1, c.n):
        A = c.nz[c.nz != b]
        cc = _e3_c(c, b, A)
        valid = (cc > 0) & (cc < c.n)
        lhs = c.mut[np.where(valid, cc, 1)]
        first = c.mut[c.negt[b]]
        second = c.mut[c.addt[b, c.negt[A]]][:, first]
        rhs = np.take_along_axis(c.mut[A], second, axis=1)
        ok = valid & np.all(lhs == rhs, axis=1)
        sw.rows(ok, lambda i: {"a": int(A[i]), "b": b, "c": int(cc[i])})


# involutions


@register("L3.2a", "for an involution a: (mu_a)^{alpha_{-~a}} = (alpha_a)^{mu_a}, and mu_a is an involution")
def _l32a(M, sw):
    c = ctx(M)

    def holds(a):
        m = c.mu(a)
        return same(conj(m, c.alpha(c.neg(c.sim(a)))), conj(c.alpha(a), m)) and same(m[m], c.ident)

    for a in c.invols:
        sw.case(lambda: holds(a), a=a)


@register("L3.2b", "for an involution a: ~a is the unique fixed point of mu_a")
def _l32b(M, sw):
    c = ctx(M)
    for a in c.invols:
        fixed = np.flatnonzero(c.mu(a) == c.ident).tolist()
        sw.case(lambda: fixed == [c.sim(a)], a=a, fixed_points=[M.fmt(x) for x in fixed])


@register("L3.2c", "for an involution a: ~-~a = a mu_a = -~a")
def _l32c(M, sw):
    c = ctx(M)
    for a in c.invols:
        sw.case(lambda: c.sim(c.neg(c.sim(a))) == c.mu_at(a, a) == c.neg(c.sim(a)), a=a)


@register("L3.3", "distinct involutions have distinct mu-maps")
def _l33(M, sw):
    c = ctx(M)
    for a, b in _pairs(c.invols):
        sw.expect(not same(c.mu(a), c.mu(b)), a=a, b=b)


@register("L3.4", "for involutions a, b: mu_a mu_b has odd order", applicability="|U| finite and even")
def _l34(M, sw):
    c = ctx(M)
    for a in c.invols:
        for b in c.invols:
            o = porder(comp(c.mu(a), c.mu(b)))
            sw.expect(o % 2 == 1, a=a, b=b, order=str(o))


@register("VA", "-V_a = V_{-a}, and -~a, ~-a lie in V_a")
def _va(M, sw):
    c = ctx(M)

    def holds(a):
        va = M.fiber(a)
        neg_va = sorted(c.neg(x) for x in va)
        return neg_va == M.fiber(c.neg(a)) and c.neg(c.sim(a)) in va and c.sim(c.neg(a)) in va

    for a in range(1, c.n):
        sw.case(lambda: holds(a), a=a)


# special elements


@register("L3.7", "the seven characterisations of a special element agree")
def _l37(M, sw):
    c = ctx(M)
    fam_inv = c.rho_family_inv

    def flags(a):
        na = c.neg(a)
        per_rho = [r[na] == c.neg(int(r[a])) for r in fam_inv]
        return {
            "definition": c.ti(na) == c.neg(c.ti(a)),
            "sim_is_neg": c.sim(a) == na,
            "neg_a_mu_a": c.mu_at(a, na) == a,
            "a_mu_neg_a": c.mu_at(na, a) == na,
            "every_rho": all(per_rho),
            "some_rho": any(per_rho),
            "mu_a_commutes_with_neg": c.mu_at(a, na) == c.neg(c.mu_at(a, a)),
            "library": c.is_special(a),
        }

    for a in range(1, c.n):
        f = {}

        def agree():
            f.update(flags(a))
            return len(set(f.values())) == 1

        sw.case(agree, a=a, flags=f)


@register("L3.9a", "a is special iff -a is special")
def _l39a(M, sw):
    c = ctx(M)
    for a in range(1, c.n):
        sw.case(lambda: c.is_special(a) == c.is_special(c.neg(a)), a=a)


@register("L3.9b", "an involution a is special iff a tau^-1 is an involution")
def _l39b(M, sw):
    c = ctx(M)
    for a in c.invols:
        def holds():
            x = c.ti(a)
            return c.is_special(a) == (x not in (0, c.inf) and c.add(x, x) == 0)

        sw.case(holds, a=a)


@register("L3.9c", "a special central a has a rho^-1 central for every admissible rho", vacuous_ok=[SUZ])
def _l39c(M, sw):
    c = ctx(M)
    center = M.U.center
    for a in c.center_nz:
        if c.is_special(a):
            sw.expect(all(int(r[a]) in center for r in c.rho_family_inv), a=a)


@register("L3.10a", "a special: a mu_a = -a = a mu_{-a}", vacuous_ok=[SUZ])
def _l310a(M, sw):
    c = ctx(M)
    for a in M.specials:
        sw.case(lambda: c.mu_at(a, a) == c.neg(a) == c.mu_at(c.neg(a), a), a=a)


@register("L3.10b", "elements of order 4 are not special", vacuous_ok=[PSL2])
def _l310b(M, sw):
    c = ctx(M)
    for a in range(1, c.n):
        if M.U.order_of(a) == 4:
            sw.expect(not c.is_special(a), a=a)


@register("L3.11", "a special implies ah special for h in H", vacuous_ok=[SUZ])
def _l311(M, sw):
    c = ctx(M)
    for a in M.specials:
        imgs = c.H[:, a]
        sw.rows(c.special[imgs], lambda i: {"a": a, "ah": int(imgs[i])})


@register("L3.12", "a special iff mu_a = b alpha_a b for some b in U_0, and then b = (alpha_a)^{mu_a}")
def _l312(M, sw):
    c = ctx(M)
    # U_0 = { alpha_g^tau }, one row per g in U
    u0 = c.tau[c.alphat[:, c.tinv]]
    keys = {r.tobytes() for r in u0}
    for a in range(1, c.n):
        al, m = c.alpha(a), c.mu(a)
        # b alpha_a b sends 0 to inf only when b sends a to inf
        cand = u0[u0[:, a] == c.inf]
        prods = np.take_along_axis(cand, al[cand], axis=1)
        exists = bool(np.any(np.all(prods == m, axis=1)))
        ok = exists == c.is_special(a)
        if ok and exists:
            b = conj(al, m)
            ok = b.tobytes() in keys and same(comp(b, al, b), m)
        sw.expect(ok, a=a, special=c.is_special(a), representation_found=exists)


# special central elements and their fibres


def _l313_domain(M) -> list[int]:
    c = ctx(M)
    cached = getattr(c, "_l313", None)
    if cached is not None:
        return cached
    out = []
    if not _tau_involutive_set(M):
        c._l313 = out
        return out
    for a in c.center_nz:
        if c.is_special(a):
            m = c.mu(a)
            if same(m, c.mu(c.neg(a))) and same(m, inv(m)):
                out.append(a)
    c._l313 = out
    return out


def _l313_applies(M) -> bool:
    return bool(_l313_domain(M))


def _l313_pairs(M):
    c = ctx(M)
    for a in _l313_domain(M):
        excluded = {a, c.neg(a)}
        for b in M.fiber(a):
            if b not in excluded:
                yield a, b


_L313 = dict(
    applies=_l313_applies,
    applicability="M(U,tau) = M(U,tau^-1) and some special central a has mu_a = mu_{-a} = mu_a^-1",
    vacuous_ok=[PSL2],
    inapplicable_ok=[SUZ],
)


def _l313(check_id, anchor, relation):
    @register(check_id, anchor, **_L313)
    def run(M, sw):
        c = ctx(M)
        for a, b in _l313_pairs(M):
            sw.case(lambda: relation(c, a, b), a=a, b=b)

    return run


_l313(
    "L3.13a",
    "-(b-a) mu_a + (a-b) mu_a = ~-b + a - ~b",
    lambda c, a, b: c.add(c.neg(c.mu_at(a, c.sub(b, a))), c.mu_at(a, c.sub(a, b)))
    == c.add(c.sim(c.neg(b)), a, c.neg(c.sim(b))),
)
_l313(
    "L3.13b",
    "-(a-b) mu_a + (b-a) mu_a = b + a*2",
    lambda c, a, b: c.add(c.neg(c.mu_at(a, c.sub(a, b))), c.mu_at(a, c.sub(b, a))) == c.add(b, c.times(a, 2)),
)
_l313(
    "L3.13c",
    "-a*3 = ~-b - ~b + b = -~b + b + ~-b = b + ~-b - ~b",
    lambda c, a, b: c.neg(c.times(a, 3))
    == c.add(c.sim(c.neg(b)), c.neg(c.sim(b)), b)
    == c.add(c.neg(c.sim(b)), b, c.sim(c.neg(b)))
    == c.add(b, c.sim(c.neg(b)), c.neg(c.sim(b))),
)


def _l313d(c, a, b):
    p = c.t(c.sub(c.ti(c.neg(a)), c.ti(c.neg(b))))
    r = c.t(c.sub(c.ti(a), c.ti(b)))
    return c.add(c.neg(p), r) == a and c.add(r, c.neg(p)) == a


_l313("L3.13d", "-((-a) tau^-1 - (-b) tau^-1) tau + (a tau^-1 - b tau^-1) tau = a, in either order", _l313d)
_l313(
    "L3.13e",
    "(a-b) tau - (-a-~b) tau = a tau",
    lambda c, a, b: c.sub(c.t(c.sub(a, b)), c.t(c.sub(c.neg(a), c.sim(b)))) == c.t(a),
)
_l313(
    "L3.13f",
    "-(-(b tau^-1) - a tau^-1) tau + ((-b) tau^-1 - a tau^-1) tau = -~b - a",
    lambda c, a, b: c.add(
        c.neg(c.t(c.sub(c.neg(c.ti(b)), c.ti(a)))), c.t(c.sub(c.ti(c.neg(b)), c.ti(a)))
    )
    == c.sub(c.neg(c.sim(b)), a),
)
_l313(
    "L3.13g",
    "-(-a-b) tau + (~b - a) tau = -~(b tau) - a tau",
    lambda c, a, b: c.add(c.neg(c.t(c.sub(c.neg(a), b))), c.t(c.sub(c.sim(b), a)))
    == c.sub(c.neg(c.sim(c.t(b))), c.t(a)),
)
_l313(
    "L3.13h",
    "-(-a-b) mu_a + (~b - a) mu_a = ~b + a",
    lambda c, a, b: c.add(c.neg(c.mu_at(a, c.sub(c.neg(a), b))), c.mu_at(a, c.sub(c.sim(b), a)))
    == c.add(c.sim(b), a),
)


@register(
    "L3.13i",
    "a and -a are the only special elements of V_a",
    applies=_l313_applies,
    applicability=_L313["applicability"],
    inapplicable_ok=[SUZ],
)
def _l313i(M, sw):
    c = ctx(M)
    for a in _l313_domain(M):
        extra = [x for x in M.fiber(a) if c.is_special(x) and x not in (a, c.neg(a))]
        sw.expect(not extra, a=a, other_special=[M.fmt(x) for x in extra])


@register(
    "P3.14",
    "mu_a = mu_{a-b} mu_{a*5+b} mu_{a-b}, and mu_a = mu_{a+b} for an involution a",
    **_L313,
)
def _p314(M, sw):
    c = ctx(M)

    def holds(a, b):
        d = c.mu(c.sub(a, b))
        ok = same(c.mu(a), comp(d, c.mu(c.add(c.times(a, 5), b)), d))
        if c.add(a, a) == 0:
            ok = ok and same(c.mu(a), c.mu(c.add(a, b)))
        return ok

    for a, b in _l313_pairs(M):
        sw.case(lambda: holds(a, b), a=a, b=b)


def _central_special_involutions(M) -> list[int]:
    c = ctx(M)
    return [a for a in c.central_invols if c.is_special(a)]


@register(
    "L3.15",
    "a special central involution, mu_{x+a} = mu_x = mu_{-x} implies mu_x = mu_a",
    applies=lambda M: bool(_central_special_involutions(M)),
    applicability="a special central involution exists",
    vacuous_ok=[PSL2],
    inapplicable_ok=[SUZ],
)
def _l315(M, sw):
    c = ctx(M)
    ids = c.mu_ids
    for a in _central_special_involutions(M):
        for x in range(1, c.n):
            xa = c.add(x, a)
            if xa and ids[xa] == ids[x] == ids[c.neg(x)]:
                sw.expect(ids[x] == ids[a], a=a, x=x)


def _condspecial_hypotheses(M) -> bool:
    c = ctx(M)
    if not is_proper(M) or not M.U.is_nilpotent():
        return False
    good = set(_central_special_involutions(M))
    return all(any(x in good for x in M.fiber(b)) for b in range(1, c.n))


@register(
    "P3.17-CONCL",
    "proper, U nilpotent, every V_b holds a special central involution: U elementary abelian and every element special",
    applies=_condspecial_hypotheses,
    applicability="hypotheses tested: proper, U nilpotent, each V_b meets the special central involutions",
    inapplicable_ok=[SUZ],
)
def _p317(M, sw):
    c = ctx(M)
    t = c.addt
    for b in range(1, c.n):
        ok = t[b, b] == 0 and bool(np.array_equal(t[b], t[:, b])) and c.is_special(b)
        sw.expect(ok, b=b)

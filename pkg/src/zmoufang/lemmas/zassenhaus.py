"""Checks for finite Zassenhaus Moufang sets."""

from __future__ import annotations

import numpy as np

from ._common import comp, ctx, inv, porder, same, zassenhaus_even
from .registry import register

ENUMERATION_CAP = 200_000


@register("Z4", "C_U(h) = 1 for every nontrivial h in H")
def _z4(M, sw):
    c = ctx(M)
    pts = np.arange(1, c.inf)
    for k, h in enumerate(c.H[1:], start=1):
        moved = h[1 : c.inf] != pts
        sw.rows(moved, lambda i: {"hua_element": str(k), "fixed": int(pts[i])})


def _odd_hua(M) -> bool:
    return M.is_zassenhaus() and len(M.hua_array) % 2 == 1


def _is_involution(rows: np.ndarray, ident: np.ndarray) -> np.ndarray:
    sq = np.take_along_axis(rows, rows, axis=1)
    return np.all(sq == ident, axis=1) & np.any(rows != ident, axis=1)


@register(
    "L4.4",
    "one conjugacy class of involutions in the little projective group when |H| is odd",
    applies=_odd_hua,
    applicability="Zassenhaus with |H| odd",
)
def _l44(M, sw):
    """Enumerates the whole group when it is small enough.

    Otherwise the check runs inside N = H + H mu_e, the setwise stabiliser
    of {0, inf}.  Every involution of the group is conjugate into N by double
    transitivity, so conjugacy of the involutions of N is the substantive part.
    """
    c = ctx(M)
    if M.stabilizer_chain.order() <= ENUMERATION_CAP:
        G = np.stack([g.images for g in M.group_elements(ENUMERATION_CAP)])
    else:
        e = next(iter(c.invols), 1)
        G = np.concatenate([c.H, c.H[:, c.mu(e)]])
    invs = G[_is_involution(G, c.ident)]
    if len(invs) == 0:
        return
    t0 = invs[0]
    # t0^g = g^-1 t0 g for every g in G at once
    Ginv = np.argsort(G, axis=1)
    conjugates = np.take_along_axis(G, t0[Ginv], axis=1)
    klass = {r.tobytes() for r in conjugates}
    for k, s in enumerate(invs):
        sw.expect(s.tobytes() in klass, involution=s)


_EVEN = dict(applies=zassenhaus_even, applicability="Zassenhaus with |U| even")


@register("L4.5a", "the involutions of U form one H-orbit inside Z(U)", **_EVEN)
def _l45a(M, sw):
    c = ctx(M)
    if not c.invols:
        return
    orbit = set(c.H[:, c.invols[0]].tolist())
    center = M.U.center
    for a in c.invols:
        sw.expect(a in orbit and a in center, a=a)


@register("L4.5b", "each V_a holds exactly one involution, and mu_a is an involution", **_EVEN)
def _l45b(M, sw):
    c = ctx(M)
    inv_set = set(c.invols)
    for a in range(1, c.n):
        hits = [b for b in M.fiber(a) if b in inv_set]
        m = c.mu(a)
        sw.expect(len(hits) == 1 and same(m[m], c.ident), a=a, involutions_in_fibre=[M.fmt(b) for b in hits])


@register("L4.5c", "H is cyclic and every element of N outside H inverts H", **_EVEN)
def _l45c(M, sw):
    c = ctx(M)
    sw.expect(M.hua_subgroup().is_cyclic, hua_order=str(len(c.H)))
    e = c.invols[0]
    me = c.mu(e)
    for k, h in enumerate(c.H):
        n = comp(h, me)
        ni = inv(n)
        # h'^n = n^-1 h' n for all h' at once
        conj_all = n[c.H[:, ni]]
        sw.rows(np.all(conj_all == c.Hinv, axis=1), lambda i: {"coset_element": str(k), "hua_element": str(i)})


def hua_element_orders(M) -> list[int]:
    return [porder(h) for h in ctx(M).H]

"""Shared index-level helpers for the checks.

Permutations here are raw image arrays; ``comp(p, q)`` is "p then q".
Element helpers raise :class:`Undefined` instead of silently producing
garbage when an expression leaves U (hits inf) or needs a nonzero element.
"""

from __future__ import annotations

import threading
from functools import cached_property

import numpy as np

from ..moufang import MoufangSet
from ..perm import perm_order
from .registry import Undefined

_lock = threading.Lock()


def comp(*ps: np.ndarray) -> np.ndarray:
    r = ps[0]
    for p in ps[1:]:
        r = p[r]
    return r


def inv(p: np.ndarray) -> np.ndarray:
    out = np.empty_like(p)
    out[p] = np.arange(len(p), dtype=p.dtype)
    return out


def conj(p: np.ndarray, h: np.ndarray) -> np.ndarray:
    """``h^-1 p h``."""
    return h[p[inv(h)]]


def same(p: np.ndarray, q: np.ndarray) -> bool:
    return bool(np.array_equal(p, q))


def porder(p: np.ndarray) -> int:
    return perm_order(p)


class Ctx:
    def __init__(self, M: MoufangSet):
        U = M.U
        self.M = M
        self.U = U
        self.n = U.size
        self.inf = M.inf
        self.ident = np.arange(M.npoints)
        self.addt = U.add_table
        self.negt = U.neg_table
        self.tau = M._tau
        self.tinv = M._tinv
        self.simt = M.sim_table
        self.mut = M.mu_table
        self.alphat = M.alpha_table
        self.nz = np.arange(1, self.n)
        self._addl = U._add_rows
        self._negl = U._neg_list
        self._taul = self.tau.tolist()
        self._tinvl = self.tinv.tolist()
        self._siml = self.simt.tolist()
        self._mul = None
        self.center = sorted(U.center)
        self.center_nz = [z for z in self.center if z]
        self.invols = list(U.involutions)
        self.central_invols = [z for z in self.invols if z in U.center]
        self.mu_ids = M.mu_ids

    # computed on first use: either may raise on a set that is not Moufang

    @cached_property
    def H(self) -> np.ndarray:
        return self.M.hua_array

    @cached_property
    def Hinv(self) -> np.ndarray:
        return np.stack([inv(h) for h in self.H])

    @cached_property
    def special(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=bool)
        out[list(self.M.specials)] = True
        return out

    # element-level arithmetic with definedness checks

    def _el(self, x: int, what: str) -> int:
        if x == self.inf:
            raise Undefined(f"{what} is inf")
        return x

    def _nz(self, x: int, what: str) -> int:
        if x == self.inf or x == 0:
            raise Undefined(f"{what} is {'inf' if x else '0'}, a nonzero element is needed")
        return x

    def add(self, *xs: int) -> int:
        r = self._el(xs[0], "summand")
        for x in xs[1:]:
            r = self._addl[r][self._el(x, "summand")]
        return r

    def neg(self, x: int) -> int:
        return self._negl[self._el(x, "negated point")]

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def times(self, x: int, k: int) -> int:
        return self.U.times(self._el(x, "multiplied point"), k)

    def t(self, x: int) -> int:
        return self._taul[x]

    def ti(self, x: int) -> int:
        return self._tinvl[x]

    def sim(self, a: int) -> int:
        return self._siml[self._nz(a, "argument of ~")]

    def mu(self, a: int) -> np.ndarray:
        return self.mut[self._nz(a, "index of mu")]

    def mu_at(self, a: int, x: int) -> int:
        if self._mul is None:
            with _lock:
                if self._mul is None:
                    self._mul = self.mut.tolist()
        return self._mul[self._nz(a, "index of mu")][x]

    def alpha(self, a: int) -> np.ndarray:
        return self.alphat[self._el(a, "index of alpha")]

    def is_special(self, a: int) -> bool:
        return bool(self.special[self._nz(a, "tested element")])

    def commutes(self, x: int, y: int) -> bool:
        return self._addl[x][y] == self._addl[y][x]

    # derived families

    @property
    def rho_family(self) -> list[np.ndarray]:
        """Permutations rho with M(U, rho) = M(U, tau): tau, the distinct mu_b, and h tau for h in H."""
        fam = getattr(self, "_rho", None)
        if fam is None:
            cands = [self.tau] + [self.mut[b] for b in self.M.distinct_mu] + [comp(h, self.tau) for h in self.H]
            seen, fam = set(), []
            for r in cands:
                k = r.tobytes()
                if k in seen:
                    continue
                seen.add(k)
                if not self.M.same_as(r):
                    raise AssertionError("rho family member does not define the same Moufang set")
                fam.append(r)
            self._rho = fam
        return fam

    @property
    def rho_family_inv(self) -> list[np.ndarray]:
        fi = getattr(self, "_rho_inv", None)
        if fi is None:
            fi = self._rho_inv = [inv(r) for r in self.rho_family]
        return fi


def ctx(M: MoufangSet) -> Ctx:
    c = M.__dict__.get("_lemma_ctx")
    if c is None:
        with _lock:
            c = M.__dict__.get("_lemma_ctx")
            if c is None:
                c = Ctx(M)
                M.__dict__["_lemma_ctx"] = c
    return c


# applicability predicates shared across modules


def is_proper(M: MoufangSet) -> bool:
    return len(M.hua_array) > 1


def zassenhaus_even(M: MoufangSet) -> bool:
    return M.is_zassenhaus() and M.U.size % 2 == 0


def no_special_involution(M: MoufangSet) -> bool:
    return zassenhaus_even(M) and not any(M.is_special(a) for a in M.U.involutions)


def coordinatized(M: MoufangSet) -> bool:
    from ..rootgroup import Kind

    return no_special_involution(M) and M.U.kind is Kind.SUZUKI

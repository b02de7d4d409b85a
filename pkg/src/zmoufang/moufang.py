"""The Moufang set M(U, tau) on X = U + {inf}.

Points are integer indices: ``0 .. |U|-1`` are root group elements (same
indices as :class:`~zmoufang.rootgroup.RootGroup`) and ``|U|`` is infinity.
Permutations act on the right and compose left to right (see
:mod:`zmoufang.perm`).

With ``c' = (-a) tau^-1`` and ``c'' = -(a tau^-1)`` the maps computed here are

    mu_a = alpha_{c'}^tau * alpha_a * alpha_{c''}^tau
    h_a  = tau * alpha_a * alpha_{c''}^tau * alpha_{-~a}
    ~a   = (-(a tau^-1)) tau

for ``a != 0``.  ``mu_a`` must swap 0 and inf; this is asserted for every
``a`` when the table is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .perm import (
    ClosureCapExceeded,
    NAIVE_CAP,
    Permutation,
    StabilizerChain,
    closure,
    format_permutations,
    perm_order,
)
from .rootgroup import RootGroup, RootGroupElement

# H is closed with a cap of max(|U|^2, this); larger means tau is not a Moufang tau
HUA_CAP_FLOOR = 1000


class ZeroElementError(ValueError):
    """Raised when a map defined only on U^# is asked for at 0."""


class Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"


INF = Infinity()

Point = RootGroupElement | Infinity


@dataclass
class MoufangReport:
    passed: bool
    cases: int
    distinct_maps: int
    counterexample: dict | None = None


@dataclass(frozen=True)
class HuaSubgroup:
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in set(self.elements)

    def nontrivial(self) -> list[Permutation]:
        return [h for h in self.elements if not h.is_identity()]

    def generator(self) -> Permutation | None:
        """An element of order ``|H|``, if one exists."""
        n = self.order
        return next((h for h in self.elements if h.order() == n), None)

    @property
    def is_cyclic(self) -> bool:
        return self.generator() is not None


class MoufangSet:
    """M(U, tau): a root group together with a permutation swapping 0 and inf.

    ``kind`` is a free-form label (``"psl2"``, ``"suzuki"`` or ``"custom"``)
    used by the lemma suite to look up which vacuous results are expected.
    """

    def __init__(self, U: RootGroup, tau: Permutation | np.ndarray, kind: str = "custom"):
        if not isinstance(tau, Permutation):
            tau = Permutation(tau)
        if tau.degree != U.size + 1:
            raise ValueError(f"tau acts on {tau.degree} points, expected {U.size + 1}")
        inf = U.size
        if tau(0) != inf or tau(inf) != 0:
            raise ValueError("tau must interchange 0 and inf")
        self.U = U
        self.tau = tau
        self.kind = kind
        self.inf = inf
        self.npoints = inf + 1
        self._tau = tau.images
        self._tinv = tau.inverse().images

    def __repr__(self) -> str:
        return f"MoufangSet({self.U!r}, kind={self.kind!r}, points={self.npoints})"

    # coercion helpers

    def idx(self, a: RootGroupElement | int | str) -> int:
        if isinstance(a, RootGroupElement):
            if a.group is not self.U:
                raise ValueError("element belongs to a different root group")
            return a.index
        if isinstance(a, str):
            return self.U.parse(a).index
        a = int(a)
        if not 0 <= a < self.U.size:
            raise ValueError(f"index {a} is not an element of U")
        return a

    def _nonzero(self, a) -> int:
        i = self.idx(a)
        if i == 0:
            raise ZeroElementError("defined on nonzero elements only")
        return i

    def elem(self, i: int) -> RootGroupElement:
        return RootGroupElement(self.U, int(i))

    def point(self, i: int) -> Point:
        return INF if i == self.inf else self.elem(i)

    def point_index(self, p: Point) -> int:
        return self.inf if p is INF else self.idx(p)

    def fmt(self, i: int) -> str:
        return "inf" if i == self.inf else self.U.format(int(i))

    def apply(self, g: Permutation, p: Point) -> Point:
        return self.point(g(self.point_index(p)))

    # tables

    @cached_property
    def ext_add(self) -> np.ndarray:
        """``ext_add[x, c] = x + c`` with ``inf + c = inf``; shape (|X|, |U|)."""
        t = np.empty((self.npoints, self.U.size), dtype=np.int64)
        t[: self.U.size] = self.U.add_table
        t[self.inf] = self.inf
        return t

    @cached_property
    def alpha_table(self) -> np.ndarray:
        """Row ``a`` is the image table of ``alpha_a``."""
        return np.ascontiguousarray(self.ext_add.T)

    @cached_property
    def sim_table(self) -> np.ndarray:
        """``~a`` for ``a != 0``; entry 0 is -1."""
        nz = np.arange(1, self.U.size)
        out = np.full(self.U.size, -1, dtype=np.int64)
        out[nz] = self._tau[self.U.neg_table[self._tinv[nz]]]
        return out

    def _conj_tau_alpha(self, x: np.ndarray, c: np.ndarray) -> np.ndarray:
        # x alpha_c^tau = ((x tau^-1) + c) tau
        return self._tau[self.ext_add[self._tinv[x], c]]

    @cached_property
    def mu_table(self) -> np.ndarray:
        """Row ``a`` is the image table of ``mu_a`` (row 0 is -1)."""
        U, inf = self.U, self.inf
        nz = np.arange(1, U.size)
        c1 = self._tinv[U.neg_table[nz]]
        c2 = U.neg_table[self._tinv[nz]]
        x = np.broadcast_to(np.arange(self.npoints), (len(nz), self.npoints))
        y = self._conj_tau_alpha(x, c1[:, None])
        y = self.ext_add[y, nz[:, None]]
        y = self._conj_tau_alpha(y, c2[:, None])
        if not (np.all(y[:, inf] == 0) and np.all(y[:, 0] == inf)):
            bad = int(nz[np.flatnonzero((y[:, inf] != 0) | (y[:, 0] != inf))[0]])
            raise AssertionError(f"mu_{self.fmt(bad)} does not interchange 0 and inf")
        out = np.full((U.size, self.npoints), -1, dtype=np.int64)
        out[1:] = y
        return out

    @cached_property
    def hua_table(self) -> np.ndarray:
        U = self.U
        nz = np.arange(1, U.size)
        c2 = U.neg_table[self._tinv[nz]]
        last = U.neg_table[self.sim_table[nz]]
        x = np.broadcast_to(np.arange(self.npoints), (len(nz), self.npoints))
        y = self._tau[x]
        y = self.ext_add[y, nz[:, None]]
        y = self._conj_tau_alpha(y, c2[:, None])
        y = self.ext_add[y, last[:, None]]
        out = np.full((U.size, self.npoints), -1, dtype=np.int64)
        out[1:] = y
        return out

    @cached_property
    def mu_ids(self) -> np.ndarray:
        """Label per element so that ``mu_ids[a] == mu_ids[b]`` iff ``mu_a == mu_b``."""
        _, inv = np.unique(self.mu_table[1:], axis=0, return_inverse=True)
        out = np.full(self.U.size, -1, dtype=np.int64)
        out[1:] = inv.ravel()
        return out

    def fiber(self, a) -> list[int]:
        """``V_a = {b in U^# : mu_b = mu_a}`` as indices."""
        a = self._nonzero(a)
        return np.flatnonzero(self.mu_ids == self.mu_ids[a]).tolist()

    @cached_property
    def distinct_mu(self) -> list[int]:
        """One representative ``a`` per distinct mu-map."""
        _, first = np.unique(self.mu_ids[1:], return_index=True)
        return sorted((first + 1).tolist())

    # maps

    def alpha(self, a) -> Permutation:
        return Permutation(self.alpha_table[self.idx(a)], check=False)

    def mu(self, a) -> Permutation:
        return Permutation(self.mu_table[self._nonzero(a)], check=False)

    def hua(self, a) -> Permutation:
        return Permutation(self.hua_table[self._nonzero(a)], check=False)

    def sim(self, a) -> RootGroupElement:
        return self.elem(self.sim_table[self._nonzero(a)])

    def is_special(self, a) -> bool:
        """``(-a) tau^-1 == -(a tau^-1)``, cross-checked against ``(-a) mu_a == a``."""
        i = self._nonzero(a)
        neg = self.U.neg_table
        by_def = bool(self._tinv[neg[i]] == neg[self._tinv[i]])
        by_mu = bool(self.mu_table[i][neg[i]] == i)
        if by_def != by_mu:
            raise AssertionError(f"special-element criteria disagree at {self.fmt(i)}")
        return by_def

    @cached_property
    def specials(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.U.size) if self.is_special(i))

    # Moufang axiom

    def verify_moufang(self) -> MoufangReport:
        """Check that every Hua map fixes 0, inf and restricts to Aut(U).

        Identical Hua maps are checked once; ``cases`` still counts every ``a``.
        """
        U, inf = self.U, self.inf
        t = U.add_table
        checked: dict[bytes, dict | None] = {}
        first_bad = None
        for a in range(1, U.size):
            row = self.hua_table[a]
            key = row.tobytes()
            if key not in checked:
                checked[key] = self._hua_defect(row, t, inf)
            if checked[key] is not None and first_bad is None:
                first_bad = {"a": self.fmt(a), **checked[key]}
        return MoufangReport(first_bad is None, U.size - 1, len(checked), first_bad)

    def _hua_defect(self, row: np.ndarray, t: np.ndarray, inf: int) -> dict | None:
        if row[0] != 0 or row[inf] != inf:
            return {"reason": "does not fix 0 and inf"}
        h = row[:inf]
        if len(np.unique(h)) != len(h):
            return {"reason": "not a bijection of U"}
        bad = np.argwhere(h[t] != t[h[:, None], h[None, :]])
        if len(bad):
            x, y = bad[0].tolist()
            return {"reason": "not additive", "x": self.fmt(x), "y": self.fmt(y)}
        return None

    # Hua subgroup and Zassenhaus property

    @cached_property
    def _hua_subgroup(self) -> HuaSubgroup:
        reps = [Permutation(self.mu_table[a], check=False) for a in self.distinct_mu]
        # mu_a mu_b = (mu_a mu_c)(mu_c^-1 mu_b), and mu_c^-1 mu_b = (mu_c mu_c)^-1 mu_c mu_b lies in H
        c = reps[0]
        gens = {}
        for p in reps:
            for g in (p * c, c.inverse() * p):
                gens.setdefault(g.key(), g)
        gens = tuple(gens.values())
        elements = tuple(closure(gens, cap=max(self.U.size**2, HUA_CAP_FLOOR)))
        for h in elements:
            if h(0) != 0 or h(self.inf) != self.inf:
                raise AssertionError("Hua subgroup element moves 0 or inf")
        return HuaSubgroup(elements, gens)

    def hua_subgroup(self) -> HuaSubgroup:
        return self._hua_subgroup

    @cached_property
    def hua_array(self) -> np.ndarray:
        """Elements of H stacked as rows, identity first."""
        return np.stack([h.images for h in self._hua_subgroup.elements])

    def is_zassenhaus(self) -> bool:
        H = self.hua_array
        if len(H) == 1:
            return False
        nontriv = H[1:, 1 : self.inf]
        return not bool(np.any(nontriv == np.arange(1, self.inf)))

    # little projective group

    def generators(self) -> list[Permutation]:
        """Generators of G^dagger = <U_inf, U_0>: ``alpha_g`` and ``alpha_g^tau``."""
        al = [self.alpha(g) for g in self.U.generators]
        return al + [a.conj(self.tau) for a in al]

    @cached_property
    def stabilizer_chain(self) -> StabilizerChain:
        return StabilizerChain(self.generators(), base_prefix=(self.inf, 0, 1))

    def group_order(self, strategy: str = "naive", cap: int = NAIVE_CAP) -> int:
        if strategy == "naive":
            return len(self.group_elements(cap))
        if strategy == "schreier":
            return self.stabilizer_chain.order()
        raise ValueError(f"unknown strategy {strategy!r}")

    def group_elements(self, cap: int = NAIVE_CAP) -> list[Permutation]:
        cached = getattr(self, "_elements", None)
        if cached is None:
            cached = closure(self.generators(), cap)
            self._elements = cached
        return cached

    def export_generators(self) -> str:
        header = {"points": self.npoints, "encoding": self.U.encoding, "degree": self.U.spec.degree}
        return format_permutations(self.generators(), header)

    # misc predicates

    def same_as(self, rho: np.ndarray | Permutation) -> bool:
        """``M(U, rho) == M(U, tau)``: rho swaps 0, inf and ``U_inf^rho == U_inf^tau``."""
        rho = rho.images if isinstance(rho, Permutation) else np.asarray(rho)
        if rho[0] != self.inf or rho[self.inf] != 0:
            return False
        return self._u0_keys(rho) == self._u0_keys(self._tau)

    def _u0_keys(self, rho: np.ndarray) -> frozenset[bytes]:
        rinv = np.empty_like(rho)
        rinv[rho] = np.arange(len(rho))
        conj = rho[self.alpha_table[:, rinv]]
        return frozenset(r.tobytes() for r in conj)


def order(p: Permutation | np.ndarray) -> int:
    return perm_order(p.images if isinstance(p, Permutation) else p)


def alpha(M: MoufangSet, a) -> Permutation:
    return M.alpha(a)


def mu(M: MoufangSet, a) -> Permutation:
    return M.mu(a)


def hua(M: MoufangSet, a) -> Permutation:
    return M.hua(a)


def sim(M: MoufangSet, a) -> RootGroupElement:
    return M.sim(a)


def verify_moufang(M: MoufangSet) -> MoufangReport:
    return M.verify_moufang()


def hua_subgroup(M: MoufangSet) -> HuaSubgroup:
    return M.hua_subgroup()


def is_special(M: MoufangSet, a) -> bool:
    return M.is_special(a)


def is_zassenhaus(M: MoufangSet) -> bool:
    return M.is_zassenhaus()


def group_order(M: MoufangSet, strategy: str = "naive") -> int:
    return M.group_order(strategy)


__all__ = [
    "INF",
    "ClosureCapExceeded",
    "HuaSubgroup",
    "MoufangReport",
    "MoufangSet",
    "ZeroElementError",
    "alpha",
    "group_order",
    "hua",
    "hua_subgroup",
    "is_special",
    "is_zassenhaus",
    "mu",
    "order",
    "sim",
    "verify_moufang",
]

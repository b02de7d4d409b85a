"""Root groups: the additive group of GF(q) and the Suzuki 2-groups A(n, theta).

Both are written additively.  A(n, theta) is *not* commutative: ``x + y``
and ``y + x`` differ in general, and ``-x`` is not ``x`` for elements
outside the centre.  The operation on pairs is

    (a, b) + (c, d) = (a + c, b + d + a * theta(c)).

Elements are addressed by dense integer indices: a scalar ``a`` has index
``a``; a pair ``(a, b)`` has index ``a * 2^n + b``.  Index 0 is the neutral
element in both cases.  Group operations are precomputed into numpy tables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from .field import FieldElement, FieldSpec

MAX_ORDER = 1 << 12


class Kind(str, Enum):
    ABELIAN = "abelian"
    SUZUKI = "suzuki"


class RootGroup:
    """A finite root group with table-driven arithmetic on element indices."""

    def __init__(self, spec: FieldSpec, kind: Kind = Kind.ABELIAN):
        kind = Kind(kind)
        if kind is Kind.SUZUKI and not (spec.tits and spec.degree % 2 == 1 and spec.degree >= 3):
            raise ValueError("A(n, theta) needs a Tits-flagged field with n odd >= 3")
        self.spec = spec
        self.kind = kind
        self.size = spec.order if kind is Kind.ABELIAN else spec.order**2
        if self.size > MAX_ORDER:
            raise ValueError(f"root group of order {self.size} exceeds the table limit {MAX_ORDER}")

    @classmethod
    def abelian(cls, spec: FieldSpec) -> RootGroup:
        return cls(spec, Kind.ABELIAN)

    @classmethod
    def suzuki(cls, spec: FieldSpec) -> RootGroup:
        return cls(spec, Kind.SUZUKI)

    def __repr__(self) -> str:
        if self.kind is Kind.ABELIAN:
            return f"RootGroup(GF({self.spec.order}), +)"
        return f"RootGroup(A({self.spec.degree}, theta^{self.spec.theta_exponent}))"

    def __len__(self) -> int:
        return self.size

    @property
    def encoding(self) -> str:
        return "scalar" if self.kind is Kind.ABELIAN else "pair"

    # index <-> coordinates

    def index(self, a: int, b: int | None = None) -> int:
        q = self.spec.order
        if self.kind is Kind.ABELIAN:
            if b is not None or not 0 <= a < q:
                raise ValueError(f"bad scalar coordinates {(a, b)}")
            return a
        if b is None or not (0 <= a < q and 0 <= b < q):
            raise ValueError(f"bad pair coordinates {(a, b)}")
        return a * q + b

    def coords(self, x: int) -> tuple[int, ...]:
        if self.kind is Kind.ABELIAN:
            return (x,)
        return divmod(x, self.spec.order)

    def format(self, x: int) -> str:
        c = self.coords(x)
        return str(c[0]) if len(c) == 1 else f"({c[0]},{c[1]})"

    def parse(self, text: str) -> RootGroupElement:
        nums = [int(t) for t in re.findall(r"-?\d+", text)]
        if len(nums) not in (1, 2):
            raise ValueError(f"cannot parse root group element {text!r}")
        return self.element(*nums)

    def element(self, a: int, b: int | None = None) -> RootGroupElement:
        return RootGroupElement(self, self.index(a, b))

    def __iter__(self):
        return (RootGroupElement(self, x) for x in range(self.size))

    @property
    def zero(self) -> RootGroupElement:
        return RootGroupElement(self, 0)

    # tables

    @cached_property
    def add_table(self) -> np.ndarray:
        idx = np.arange(self.size)
        if self.kind is Kind.ABELIAN:
            return idx[:, None] ^ idx[None, :]
        n, q = self.spec.degree, self.spec.order
        a, b = idx >> n, idx & (q - 1)
        mul, th = self.spec.mul_table, self.spec.theta_table
        first = a[:, None] ^ a[None, :]
        second = b[:, None] ^ b[None, :] ^ mul[a[:, None], th[a][None, :]]
        return (first << n) | second

    @cached_property
    def neg_table(self) -> np.ndarray:
        idx = np.arange(self.size)
        if self.kind is Kind.ABELIAN:
            return idx
        n, q = self.spec.degree, self.spec.order
        a, b = idx >> n, idx & (q - 1)
        return (a << n) | (b ^ self.spec.one_plus_theta_table[a])

    @cached_property
    def double_table(self) -> np.ndarray:
        idx = np.arange(self.size)
        return self.add_table[idx, idx]

    @cached_property
    def _add_rows(self) -> list[list[int]]:
        return self.add_table.tolist()

    @cached_property
    def _neg_list(self) -> list[int]:
        return self.neg_table.tolist()

    def add(self, x: int, y: int) -> int:
        return self._add_rows[x][y]

    def neg(self, x: int) -> int:
        return self._neg_list[x]

    def sub(self, x: int, y: int) -> int:
        """``x - y``, i.e. ``x + (-y)``."""
        return self._add_rows[x][self._neg_list[y]]

    def times(self, x: int, k: int) -> int:
        """``x * k`` in additive notation (``k`` may be negative)."""
        if k < 0:
            x, k = self.neg(x), -k
        r = 0
        for _ in range(k):
            r = self.add(r, x)
        return r

    def commutator(self, x: int, y: int) -> int:
        """``[x, y] = -x - y + x + y``."""
        return self.add(self.add(self.add(self.neg(x), self.neg(y)), x), y)

    def order_of(self, x: int) -> int:
        k, r = 1, x
        while r:
            r = self.add(r, x)
            k += 1
        return k

    # structure

    @cached_property
    def center(self) -> frozenset[int]:
        """Centre computed by brute-force commutation.

        For A(n, theta) the result is checked against the closed form
        (first coordinate zero) before being returned.
        """
        t = self.add_table
        z = frozenset(np.flatnonzero(np.all(t == t.T, axis=1)).tolist())
        if self.kind is Kind.SUZUKI:
            closed = frozenset(range(self.spec.order))
            if z != closed:
                raise AssertionError("centre differs from the first-coordinate-zero description")
        return z

    @cached_property
    def involutions(self) -> tuple[int, ...]:
        d = self.double_table
        return tuple(int(x) for x in np.flatnonzero(d == 0) if x != 0)

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        e = 1
        for x in range(self.size):
            e = lcm(e, self.order_of(x))
        return e

    @cached_property
    def is_abelian(self) -> bool:
        t = self.add_table
        return bool(np.array_equal(t, t.T))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by index."""
        t = self.add_table
        members = np.zeros(self.size, dtype=bool)
        members[0] = True
        gens: list[int] = []
        for x in range(self.size):
            if members[x]:
                continue
            gens.append(x)
            frontier = np.flatnonzero(members)
            while frontier.size:
                new = np.unique(t[frontier][:, gens].ravel())
                new = new[~members[new]]
                members[new] = True
                frontier = new
        return tuple(gens)

    def is_nilpotent(self) -> bool:
        """Upper central series reaches the whole group."""
        comm = self._commutator_table
        z = np.zeros(self.size, dtype=bool)
        z[0] = True
        while True:
            nxt = np.all(z[comm], axis=1)
            if nxt.all():
                return True
            if np.array_equal(nxt, z):
                return False
            z = nxt

    @cached_property
    def _commutator_table(self) -> np.ndarray:
        t, neg = self.add_table, self.neg_table
        idx = np.arange(self.size)
        s = t[neg[:, None], neg[None, :]]
        s = t[s, idx[:, None]]
        return t[s, idx[None, :]]

    def h_lambda(self, lam: int, x: int) -> int:
        """``(a, b) -> (lam*a, lam^(1+theta)*b)``; an automorphism of A(n, theta)."""
        if self.kind is not Kind.SUZUKI:
            raise ValueError("h_lambda is defined on A(n, theta) only")
        if lam == 0:
            raise ValueError("lambda must be nonzero")
        f = self.spec
        a, b = self.coords(x)
        return self.index(f.mul(lam, a), f.mul(f.one_plus_theta(lam), b))


@dataclass(frozen=True)
class RootGroupElement:
    group: RootGroup
    index: int

    def _same(self, other: RootGroupElement) -> None:
        if not isinstance(other, RootGroupElement) or other.group is not self.group:
            raise ValueError("elements belong to different root groups")

    def __add__(self, other: RootGroupElement) -> RootGroupElement:
        self._same(other)
        return RootGroupElement(self.group, self.group.add(self.index, other.index))

    def __neg__(self) -> RootGroupElement:
        return RootGroupElement(self.group, self.group.neg(self.index))

    def __sub__(self, other: RootGroupElement) -> RootGroupElement:
        return self + (-other)

    def __mul__(self, k: int) -> RootGroupElement:
        return RootGroupElement(self.group, self.group.times(self.index, k))

    def __bool__(self) -> bool:
        return self.index != 0

    @property
    def coords(self) -> tuple[int, ...]:
        return self.group.coords(self.index)

    @property
    def a(self) -> FieldElement:
        return self.group.spec.element(self.coords[0])

    @property
    def b(self) -> FieldElement:
        if self.group.kind is not Kind.SUZUKI:
            raise AttributeError("scalar elements have no second coordinate")
        return self.group.spec.element(self.coords[1])

    def order(self) -> int:
        return self.group.order_of(self.index)

    def __str__(self) -> str:
        return self.group.format(self.index)

    def __repr__(self) -> str:
        return f"<{self.group.encoding} {self}>"


def rg_add(x: RootGroupElement, y: RootGroupElement) -> RootGroupElement:
    return x + y


def rg_neg(x: RootGroupElement) -> RootGroupElement:
    return -x


def rg_double(x: RootGroupElement) -> RootGroupElement:
    return x + x


def rg_center(U: RootGroup) -> set[RootGroupElement]:
    return {RootGroupElement(U, z) for z in U.center}


def rg_involutions(U: RootGroup) -> set[RootGroupElement]:
    return {RootGroupElement(U, x) for x in U.involutions}


def h_lambda(lam: FieldElement | int, x: RootGroupElement) -> RootGroupElement:
    return RootGroupElement(x.group, x.group.h_lambda(int(lam), x.index))

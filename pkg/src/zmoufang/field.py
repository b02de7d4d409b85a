"""Binary finite fields GF(2^n) with Frobenius-power endomorphisms.

Elements are coefficient bitmasks: bit ``i`` holds the coefficient of ``x^i``.
All arithmetic is exact integer arithmetic; nothing here touches floats.

A :class:`FieldSpec` carries the modulus and one distinguished endomorphism
``theta: x -> x^(2^k)``.  When the FieldSpec is flagged ``tits`` the exponent
satisfies ``2k = 1 (mod n)`` so that ``theta(theta(x)) = x^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

MAX_DEGREE = 16


def _deg(p: int) -> int:
    return p.bit_length() - 1


def _pmod(a: int, m: int) -> int:
    dm = _deg(m)
    while a and _deg(a) >= dm:
        a ^= m << (_deg(a) - dm)
    return a


def clmul(a: int, b: int) -> int:
    """Carry-less (GF(2)[x]) product of two bitmasks."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2."""
    n = _deg(p)
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if _pmod(p, f) == 0:
                return False
    return True


def find_irreducible(n: int) -> int:
    """Smallest integer encoding of an irreducible degree-``n`` polynomial."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    for p in range(1 << n, 1 << (n + 1)):
        if is_irreducible(p):
            return p
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FieldSpec:
    degree: int
    modulus: int | None = None
    theta_exponent: int = 0
    tits: bool = False

    def __post_init__(self):
        n = self.degree
        if not 1 <= n <= MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {n}")
        if self.modulus is None:
            object.__setattr__(self, "modulus", find_irreducible(n))
        if _deg(self.modulus) != n or not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#b} is not irreducible of degree {n}")
        if not 0 <= self.theta_exponent < n:
            raise ValueError(f"theta exponent must be in 0..{n - 1}")
        if self.tits and (2 * self.theta_exponent - 1) % n:
            raise ValueError(f"2k = 1 (mod n) fails for k={self.theta_exponent}, n={n}")

    @classmethod
    def tits_field(cls, n: int) -> FieldSpec:
        """GF(2^n), n odd, with theta = x -> x^(2^((n+1)/2))."""
        if n % 2 == 0:
            raise ValueError(f"a Tits endomorphism of GF(2^{n}) needs n odd")
        return cls(n, theta_exponent=((n + 1) // 2) % n, tits=True)

    @property
    def order(self) -> int:
        return 1 << self.degree

    def elements(self) -> range:
        return range(self.order)

    def element(self, bits: int) -> FieldElement:
        return FieldElement(self, bits)

    # integer-level arithmetic

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return _pmod(clmul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frob(self, a: int, times: int = 1) -> int:
        for _ in range(times % self.degree):
            a = self.mul(a, a)
        return a

    def theta(self, a: int) -> int:
        return self.frob(a, self.theta_exponent)

    def theta_inv(self, a: int) -> int:
        return self.frob(a, -self.theta_exponent % self.degree)

    def one_plus_theta(self, a: int) -> int:
        """``a^(1+theta) = a * theta(a)``."""
        return self.mul(a, self.theta(a))

    def root_one_plus_theta(self, y: int) -> int:
        """The unique ``x`` with ``x^(1+theta) = y``; needs the map to be bijective."""
        table = self._one_plus_theta_inverse
        if table is None:
            raise ValueError("x -> x^(1+theta) is not a bijection for this spec")
        return int(table[y])

    @cached_property
    def _one_plus_theta_inverse(self) -> np.ndarray | None:
        img = self.one_plus_theta_table
        if len(set(img.tolist())) != self.order:
            return None
        out = np.empty(self.order, dtype=np.int64)
        out[img] = np.arange(self.order)
        return out

    # numpy tables, built lazily; only sensible for small fields

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.order
        if q > 1 << 12:
            raise ValueError("multiplication table too large")
        return np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)

    @cached_property
    def theta_table(self) -> np.ndarray:
        return np.array([self.theta(a) for a in self.elements()], dtype=np.int64)

    @cached_property
    def one_plus_theta_table(self) -> np.ndarray:
        return np.array([self.one_plus_theta(a) for a in self.elements()], dtype=np.int64)

    # serialisation

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "modulus": self.modulus,
            "theta_exponent": self.theta_exponent,
            "tits": self.tits,
        }

    @classmethod
    def from_dict(cls, d: dict) -> FieldSpec:
        return cls(int(d["degree"]), int(d["modulus"]), int(d["theta_exponent"]), bool(d["tits"]))


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.spec.order:
            raise ValueError(f"{self.bits} is not an element of GF(2^{self.spec.degree})")

    def _same(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise ValueError("field elements belong to different fields")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        return FieldElement(self.spec, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        return FieldElement(self.spec, self.spec.mul(self.bits, other.bits))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        return FieldElement(self.spec, self.spec.div(self.bits, other.bits))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.spec, self.spec.pow(self.bits, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.bits))

    def theta(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.theta(self.bits))

    def __int__(self) -> int:
        return self.bits

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"GF(2^{self.spec.degree})({self.bits})"


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def ff_inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises ZeroDivisionError on zero."""
    return a.inverse()


def theta_apply(spec: FieldSpec, a: FieldElement | int) -> FieldElement:
    """Apply ``x -> x^(2^k)`` by ``k`` repeated squarings."""
    bits = int(a)
    if isinstance(a, FieldElement) and a.spec != spec:
        raise ValueError("element does not belong to this field")
    return FieldElement(spec, spec.theta(bits))

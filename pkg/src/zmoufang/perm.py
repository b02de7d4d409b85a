"""Permutations acting on the right, product closure, and Schreier-Sims.

Convention used throughout the package: permutations act on the right and
compose left to right, so ``x (p * q) = (x p) q``.  Conjugation is
``p.conj(h) = h^-1 p h``.  As image arrays, ``(p * q).images = q.images[p.images]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm, prod
from typing import Iterable, Sequence

import numpy as np

NAIVE_CAP = 10**6


class ClosureCapExceeded(RuntimeError):
    pass


def _inverse_array(p: np.ndarray) -> np.ndarray:
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


class Permutation:
    """An immutable permutation of ``{0, ..., n-1}`` stored as an image table."""

    __slots__ = ("images", "_key")

    def __init__(self, images: Sequence[int] | np.ndarray, check: bool = True):
        arr = np.array(images, dtype=np.int64)
        if check:
            n = len(arr)
            if arr.ndim != 1 or not np.array_equal(np.sort(arr), np.arange(n)):
                raise ValueError("image table is not a bijection")
        arr.flags.writeable = False
        self.images = arr
        self._key = None

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(np.arange(n), check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def key(self) -> bytes:
        if self._key is None:
            self._key = self.images.tobytes()
        return self._key

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(other.images[self.images], check=False)

    def inverse(self) -> Permutation:
        return Permutation(_inverse_array(self.images), check=False)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self, h: Permutation) -> Permutation:
        """``h^-1 * self * h``."""
        return h.inverse() * self * h

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        return hash(self.key())

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.degree)))

    def fixed_points(self) -> list[int]:
        return np.flatnonzero(self.images == np.arange(self.degree)).tolist()

    def cycles(self) -> list[tuple[int, ...]]:
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        img = self.images
        for i in range(self.degree):
            if seen[i] or img[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = int(img[i])
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = int(img[j])
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return perm_order(self.images)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "Permutation(())"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        if len(body) > 80:
            body = body[:77] + "..."
        return f"Permutation({body})"


def perm_order(p: np.ndarray) -> int:
    seen = np.zeros(len(p), dtype=bool)
    o = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        k, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            k += 1
        o = lcm(o, k)
    return o


def closure(gens: Iterable[Permutation], cap: int = NAIVE_CAP) -> list[Permutation]:
    """All elements of the group generated by ``gens`` (breadth-first, hashed)."""
    gens = [g.images for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    ident = np.arange(n, dtype=np.int64)
    seen = {ident.tobytes()}
    elements = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g[x]
                k = y.tobytes()
                if k not in seen:
                    seen.add(k)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        raise ClosureCapExceeded(f"closure exceeded {cap} elements")
        frontier = nxt
    return [Permutation(e, check=False) for e in elements]


@dataclass
class _Level:
    point: int
    gens: list[np.ndarray] = field(default_factory=list)
    trans: dict[int, np.ndarray] = field(default_factory=dict)
    trans_inv: dict[int, np.ndarray] = field(default_factory=dict)

    def rebuild(self, n: int) -> None:
        ident = np.arange(n, dtype=np.int64)
        self.trans = {self.point: ident}
        frontier = [self.point]
        while frontier:
            nxt = []
            for beta in frontier:
                u = self.trans[beta]
                for s in self.gens:
                    gamma = int(s[beta])
                    if gamma not in self.trans:
                        self.trans[gamma] = s[u]
                        nxt.append(gamma)
            frontier = nxt
        self.trans_inv = {b: _inverse_array(u) for b, u in self.trans.items()}


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    ``base_prefix`` fixes the first base points; further points are appended
    as needed.  Level ``i`` stores the basic orbit of ``base[i]`` under the
    pointwise stabiliser of ``base[:i]``.
    """

    def __init__(self, gens: Iterable[Permutation], base_prefix: Sequence[int] = ()):
        gens = [g.images for g in gens if not g.is_identity()]
        self.degree = None
        for g in gens:
            self.degree = len(g)
        self.levels: list[_Level] = [_Level(int(b)) for b in base_prefix]
        if self.degree is None:
            return
        n = self.degree
        ident = np.arange(n, dtype=np.int64)
        for g in gens:
            if all(g[lv.point] == lv.point for lv in self.levels):
                self.levels.append(_Level(int(np.flatnonzero(g != ident)[0])))
        for i, lv in enumerate(self.levels):
            lv.gens = [g for g in gens if all(g[b.point] == b.point for b in self.levels[:i])]
            lv.rebuild(n)
        self._complete(ident)

    def sift(self, g: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        for j in range(start, len(self.levels)):
            lv = self.levels[j]
            x = int(g[lv.point])
            if x not in lv.trans_inv:
                return g, j
            g = lv.trans_inv[x][g]
        return g, len(self.levels)

    def _complete(self, ident: np.ndarray) -> None:
        n = len(ident)
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            restart = None
            for beta, u in list(lv.trans.items()):
                for s in lv.gens:
                    gamma = int(s[beta])
                    schreier = lv.trans_inv[gamma][s[u]]
                    h, j = self.sift(schreier, i + 1)
                    if np.array_equal(h, ident):
                        continue
                    if j == len(self.levels):
                        moved = int(np.flatnonzero(h != ident)[0])
                        self.levels.append(_Level(moved))
                    for lvl in range(i + 1, j + 1):
                        self.levels[lvl].gens.append(h)
                        self.levels[lvl].rebuild(n)
                    restart = j
                    break
                if restart is not None:
                    break
            i = restart if restart is not None else i - 1

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def orbit_sizes(self) -> list[int]:
        return [len(lv.trans) for lv in self.levels]

    def order(self) -> int:
        return prod(self.orbit_sizes())

    def stabilizer_order(self, depth: int) -> int:
        """Order of the pointwise stabiliser of ``base[:depth]``."""
        return prod(self.orbit_sizes()[depth:])

    def contains(self, g: Permutation) -> bool:
        h, j = self.sift(g.images)
        return j == len(self.levels) and bool(np.array_equal(h, np.arange(len(h))))


def group_order(gens: Sequence[Permutation], strategy: str = "naive", base: Sequence[int] = ()) -> int:
    if strategy == "naive":
        return len(closure(gens))
    if strategy == "schreier":
        return StabilizerChain(gens, base).order()
    raise ValueError(f"unknown strategy {strategy!r}")


def format_permutations(perms: Iterable[Permutation], header: dict[str, object]) -> str:
    """One permutation per line as space-separated images, after a ``#`` header."""
    head = "#" + " ".join(f"{k}={v}" for k, v in header.items())
    lines = [head] + [" ".join(map(str, p.images.tolist())) for p in perms]
    return "\n".join(lines) + "\n"


def parse_permutations(text: str) -> tuple[dict[str, str], list[Permutation]]:
    header: dict[str, str] = {}
    perms = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                k, _, v = tok.partition("=")
                header[k] = v
            continue
        perms.append(Permutation([int(t) for t in line.split()]))
    if "points" in header and any(p.degree != int(header["points"]) for p in perms):
        raise ValueError("permutation length does not match the header point count")
    return header, perms

"""Builders for the projective lines M(F_q) and the Suzuki Moufang sets MSuz(q).

For MSuz(q), q = 2^n with n odd, the root group is A(n, theta) with the
Tits automorphism theta(x) = x^(2^((n+1)/2)) and

    N(a, b)   = a^(2+theta) + a b + b^theta
    (a, b)tau = (b / N(a, b), a / N(a, b))        on U^#.

For M(F_q) the root group is (F_q, +) and tau is field inversion on F_q^#.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .field import FieldElement, FieldSpec
from .moufang import INF, MoufangSet, Point
from .perm import Permutation
from .rootgroup import Kind, RootGroup, RootGroupElement


def field_degree(q: int) -> int:
    """``n`` with ``q == 2^n``; raises ValueError otherwise."""
    if q < 2 or q & (q - 1):
        raise ValueError(f"q = {q} is not a power of 2")
    return q.bit_length() - 1


def build_projective_line(q: int, verify: bool = True) -> MoufangSet:
    n = field_degree(q)
    if n < 2:
        raise ValueError("the projective line needs q >= 4")
    return _projective_line(FieldSpec(n), verify)


def _projective_line(spec: FieldSpec, verify: bool = True) -> MoufangSet:
    U = RootGroup.abelian(spec)
    inf = U.size
    tau = np.empty(inf + 1, dtype=np.int64)
    tau[0], tau[inf] = inf, 0
    for x in range(1, inf):
        tau[x] = spec.inv(x)
    M = MoufangSet(U, Permutation(tau), kind="psl2")
    if verify:
        _require_moufang(M)
    return M


def build_suzuki(q: int, verify: bool = True) -> MoufangSet:
    n = field_degree(q)
    if n < 3 or n % 2 == 0:
        raise ValueError(f"MSuz(q) needs q = 2^n with n odd >= 3, got q = {q}")
    spec = FieldSpec.tits_field(n)
    U = RootGroup.suzuki(spec)
    M = MoufangSet(U, Permutation(suzuki_tau_table(U)), kind="suzuki")
    tau = M.tau.images
    if not np.array_equal(tau[tau], np.arange(M.npoints)):
        raise AssertionError("tau^2 != 1")
    e = U.index(0, 1)
    if M.sim_table[e] != U.index(1, 1) or U.neg(int(M.sim_table[e])) != U.index(1, 0):
        raise AssertionError("normalisation -~(0,1) = (1,0) does not hold")
    if verify:
        _require_moufang(M)
    return M


def _require_moufang(M: MoufangSet) -> None:
    rep = M.verify_moufang()
    if not rep.passed:
        raise AssertionError(f"not a Moufang set: {rep.counterexample}")


def _norm(f: FieldSpec, a: int, b: int) -> int:
    return f.mul(f.mul(a, a), f.theta(a)) ^ f.mul(a, b) ^ f.theta(b)


def _norm0(f: FieldSpec, a: int, b: int) -> int:
    # a^(theta - theta^-1) is read as theta(a)/theta^-1(a), and as 0 at a = 0
    twist = f.div(f.theta(a), f.theta_inv(a)) if a else 0
    return f.one_plus_theta(a) ^ f.mul(twist, f.theta_inv(b)) ^ b


def norm(a: FieldElement, b: FieldElement) -> FieldElement:
    """``a^(2+theta) + a b + b^theta``; zero only at ``a = b = 0``."""
    if a.spec != b.spec:
        raise ValueError("coordinates from different fields")
    return FieldElement(a.spec, _norm(a.spec, a.bits, b.bits))


def norm0(a: FieldElement, b: FieldElement) -> FieldElement:
    """``a^(1+theta) + a^(theta - theta^-1) b^(theta^-1) + b``."""
    if a.spec != b.spec:
        raise ValueError("coordinates from different fields")
    return FieldElement(a.spec, _norm0(a.spec, a.bits, b.bits))


def suzuki_tau_table(U: RootGroup) -> np.ndarray:
    if U.kind is not Kind.SUZUKI:
        raise ValueError("needs A(n, theta)")
    f, inf = U.spec, U.size
    tau = np.empty(inf + 1, dtype=np.int64)
    tau[0], tau[inf] = inf, 0
    for x in range(1, inf):
        a, b = U.coords(x)
        ninv = f.inv(_norm(f, a, b))
        tau[x] = U.index(f.mul(b, ninv), f.mul(a, ninv))
    return tau


def suzuki_tau(U: RootGroup, x: Point) -> Point:
    """The Suzuki involution applied to a point of U + {inf}."""
    if x is INF:
        return RootGroupElement(U, 0)
    if x.group is not U:
        raise ValueError("point from a different root group")
    if x.index == 0:
        return INF
    f = U.spec
    a, b = x.coords
    ninv = f.inv(_norm(f, a, b))
    return U.element(f.mul(b, ninv), f.mul(a, ninv))


class PartitionTag(str, Enum):
    ZERO = "zero"
    CENTER = "center"
    SIM_Z = "sim_z"
    NEG_SIM_Z = "neg_sim_z"
    MIXED = "mixed"


PARTITION_ORDER = (PartitionTag.ZERO, PartitionTag.CENTER, PartitionTag.SIM_Z, PartitionTag.NEG_SIM_Z, PartitionTag.MIXED)


@dataclass(frozen=True)
class SuzukiPartitionClass:
    tag: PartitionTag
    decomposition: tuple[int, int] | None = None


def _mixed_pair(f: FieldSpec, a: int, b: int) -> tuple[int, int]:
    t = f.theta_inv(f.div(b, a))
    return a ^ t, t


def recompose(M: MoufangSet, s: int, t: int) -> int:
    """``-~(0, s^(1+theta)) + ~(0, t^(1+theta))`` evaluated through the Moufang set."""
    U, f = M.U, M.U.spec
    left = U.neg(int(M.sim_table[U.index(0, f.one_plus_theta(s))]))
    right = int(M.sim_table[U.index(0, f.one_plus_theta(t))])
    return U.add(left, right)


def partition_classify(M: MoufangSet, x: RootGroupElement | int) -> SuzukiPartitionClass:
    U = M.U
    if U.kind is not Kind.SUZUKI:
        raise ValueError("the Suzuki partition is defined for A(n, theta)")
    i = M.idx(x)
    f = U.spec
    a, b = U.coords(i)
    if i == 0:
        return SuzukiPartitionClass(PartitionTag.ZERO)
    if a == 0:
        return SuzukiPartitionClass(PartitionTag.CENTER)
    if b == 0:
        return SuzukiPartitionClass(PartitionTag.NEG_SIM_Z)
    if b == f.one_plus_theta(a):
        return SuzukiPartitionClass(PartitionTag.SIM_Z)
    s, t = _mixed_pair(f, a, b)
    if recompose(M, s, t) != i:
        raise AssertionError(f"mixed decomposition of {U.format(i)} does not recompose")
    return SuzukiPartitionClass(PartitionTag.MIXED, (s, t))


def partition_sizes(M: MoufangSet) -> dict[str, int]:
    counts = {tag.value: 0 for tag in PARTITION_ORDER}
    for x in range(M.U.size):
        counts[partition_classify(M, x).tag.value] += 1
    return counts


def build_report(M: MoufangSet) -> dict:
    U = M.U
    report = {
        "kind": M.kind,
        "field": U.spec.to_dict(),
        "theta_exponent": U.spec.theta_exponent,
        "points": M.npoints,
        "root_group_order": U.size,
        "center_order": len(U.center),
        "involutions": len(U.involutions),
        "hua_order": M.hua_subgroup().order,
    }
    if U.kind is Kind.SUZUKI:
        report["partition"] = partition_sizes(M)
    return report

"""Finite Moufang sets over GF(2^n): projective lines and Suzuki Moufang sets."""

from .constructions import (
    PartitionTag,
    SuzukiPartitionClass,
    build_projective_line,
    build_report,
    build_suzuki,
    norm,
    norm0,
    partition_classify,
    partition_sizes,
    recompose,
    suzuki_tau,
)
from .field import FieldElement, FieldSpec, ff_add, ff_inv, ff_mul, find_irreducible, theta_apply
from .lemmas import CheckResult, Status, list_checks, run_check, run_suite
from .moufang import (
    INF,
    HuaSubgroup,
    MoufangReport,
    MoufangSet,
    ZeroElementError,
    alpha,
    group_order,
    hua,
    hua_subgroup,
    is_special,
    is_zassenhaus,
    mu,
    order,
    sim,
    verify_moufang,
)
from .perm import ClosureCapExceeded, Permutation, StabilizerChain
from .rootgroup import (
    Kind,
    RootGroup,
    RootGroupElement,
    h_lambda,
    rg_add,
    rg_center,
    rg_double,
    rg_involutions,
    rg_neg,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

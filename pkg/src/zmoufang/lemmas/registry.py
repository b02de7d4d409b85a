"""Registry, sweep bookkeeping and runners for the identity checks."""

from __future__ import annotations

import json
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable

import numpy as np

from ..moufang import MoufangSet


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"
    INAPPLICABLE = "inapplicable"


class Undefined(Exception):
    """An expression hit infinity or 0 where an element of U (or U^#) was required."""


@dataclass
class CheckResult:
    check_id: str
    anchor: str
    status: Status
    cases_checked: int
    counterexample: dict | None = None
    elapsed: float = 0.0
    expected: bool = True

    def to_dict(self) -> dict:
        d = {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "status": self.status.value,
            "cases_checked": self.cases_checked,
            "millis": round(self.elapsed * 1000, 3),
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    applicability: str
    fn: Callable[[MoufangSet, "Sweep"], None]
    applies: Callable[[MoufangSet], bool]
    vacuous_ok: frozenset[str] = frozenset()
    inapplicable_ok: frozenset[str] = frozenset()


REGISTRY: dict[str, Check] = {}


def _natural_key(s: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


def always(M: MoufangSet) -> bool:
    return True


def register(
    check_id: str,
    anchor: str,
    *,
    applies: Callable[[MoufangSet], bool] = always,
    applicability: str = "any Moufang set",
    vacuous_ok: Iterable[str] = (),
    inapplicable_ok: Iterable[str] = (),
):
    def deco(fn):
        if check_id in REGISTRY:
            raise ValueError(f"duplicate check id {check_id}")
        REGISTRY[check_id] = Check(
            check_id, anchor, applicability, fn, applies, frozenset(vacuous_ok), frozenset(inapplicable_ok)
        )
        return fn

    return deco


class Sweep:
    """Counts quantifier instances and keeps the first failing one."""

    def __init__(self, M: MoufangSet):
        self.M = M
        self.cases = 0
        self.counterexample: dict | None = None

    def _fmt(self, v):
        if isinstance(v, (int, np.integer)):
            return self.M.fmt(int(v))
        if isinstance(v, np.ndarray):
            return v.tolist()
        return v

    def expect(self, ok: bool, **witness) -> bool:
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = {k: self._fmt(v) for k, v in witness.items()}
        return ok

    def case(self, fn: Callable[[], bool], **witness) -> bool:
        try:
            ok = bool(fn())
        except Undefined as exc:
            ok = False
            witness["undefined"] = str(exc)
        return self.expect(ok, **witness)

    def rows(self, ok: np.ndarray, witness: Callable[[int], dict]) -> None:
        """Vectorised variant: one case per entry of the boolean array ``ok``."""
        self.cases += len(ok)
        if self.counterexample is None and not ok.all():
            i = int(np.flatnonzero(~ok)[0])
            self.counterexample = {k: self._fmt(v) for k, v in witness(i).items()}


def list_checks() -> list[tuple[str, str, str]]:
    _load()
    return [(c.id, c.anchor, c.applicability) for c in sorted(REGISTRY.values(), key=lambda c: _natural_key(c.id))]


def run_check(check_id: str, M: MoufangSet) -> CheckResult:
    _load()
    try:
        chk = REGISTRY[check_id]
    except KeyError:
        raise KeyError(f"unknown check id {check_id!r}") from None
    t0 = time.perf_counter()
    sw = Sweep(M)
    try:
        if not chk.applies(M):
            return CheckResult(
                chk.id, chk.anchor, Status.INAPPLICABLE, 0, None, time.perf_counter() - t0, M.kind in chk.inapplicable_ok
            )
        chk.fn(M, sw)
    except Exception as exc:  # a broken set must surface as a failure, not abort the suite
        witness = {"error": f"{type(exc).__name__}: {exc}"}
        return CheckResult(chk.id, chk.anchor, Status.FAIL, sw.cases, witness, time.perf_counter() - t0, False)
    elapsed = time.perf_counter() - t0
    if sw.counterexample is not None:
        return CheckResult(chk.id, chk.anchor, Status.FAIL, sw.cases, sw.counterexample, elapsed, False)
    if sw.cases == 0:
        return CheckResult(chk.id, chk.anchor, Status.VACUOUS, 0, None, elapsed, M.kind in chk.vacuous_ok)
    return CheckResult(chk.id, chk.anchor, Status.PASS, sw.cases, None, elapsed, True)


@dataclass
class SuiteReport:
    kind: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """No failures, and every vacuous or inapplicable result was expected."""
        return all(r.status is not Status.FAIL and r.expected for r in self.results)

    def to_json(self) -> str:
        return json.dumps([r.to_dict() for r in self.results], indent=2)

    def to_text(self) -> str:
        lines = [f"{'check':<14} {'status':<13} {'cases':>8} {'ms':>9}  note"]
        for r in self.results:
            note = ""
            if r.status is Status.FAIL:
                note = json.dumps(r.counterexample)
            elif not r.expected:
                note = "unexpected"
            lines.append(f"{r.check_id:<14} {r.status.value:<13} {r.cases_checked:>8} {r.elapsed * 1000:>9.1f}  {note}")
        lines.append(f"suite {'PASSED' if self.passed else 'FAILED'} ({len(self.results)} checks, kind={self.kind})")
        return "\n".join(lines)


def run_suite(M: MoufangSet, check_ids: Iterable[str] | None = None, jobs: int = 1) -> SuiteReport:
    _load()
    ids = [c[0] for c in list_checks()] if check_ids is None else sorted(check_ids, key=_natural_key)
    for i in ids:
        if i not in REGISTRY:
            raise KeyError(f"unknown check id {i!r}")
    # warm shared caches before any fan-out
    for attr in ("mu_table", "sim_table", "mu_ids", "hua_array", "specials"):
        try:
            getattr(M, attr)
        except Exception:
            pass  # reported per check by run_check
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda i: run_check(i, M), ids))
    else:
        results = [run_check(i, M) for i in ids]
    return SuiteReport(M.kind, results)


def results_from_json(text: str) -> list[dict]:
    """Parse a machine-readable suite report, validating the field set."""
    data = json.loads(text)
    required = {"check_id", "anchor", "status", "cases_checked", "millis"}
    for row in data:
        missing = required - row.keys()
        if missing:
            raise ValueError(f"report row {row.get('check_id')} lacks {sorted(missing)}")
        Status(row["status"])
    return data


def _load() -> None:
    from . import general, suzuki, zassenhaus  # noqa: F401  (registration side effects)

"""Grid sweeps over congruence parameter cells with JSON run manifests.

A sweep runs one check kind over the product of the n, m, r, a ranges and
the selected signs.  Cells are independent, so execution may fan out over a
process pool; reports are always assembled in ascending (n, m, r, epsilon,
a) order, which makes manifests deterministic regardless of parallelism.

Manifest conventions: one JSON document per run, every integer rendered as
a decimal string (consumers never lose precision), schema versioned via the
top-level "schema" field.  Timing fields are wall-clock and therefore
excluded from determinism guarantees; stable=True zeroes them.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Optional

from . import __version__
from .congruence import CongruenceReport, pan_check, theorem_check
from .schmidt import SchmidtParams
from .weights import generalized_check

SCHEMA = "schmidtpoly-run/1"

CHECKS = ("theorem", "pan", "kk1", "odd_power")


class SweepSpecError(ValueError):
    """Invalid sweep parameters (a usage error, exit code 2 at the CLI)."""


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: a check kind, inclusive parameter ranges, and run options."""

    check: str = "theorem"
    n: tuple[int, int] = (1, 1)
    m: tuple[int, int] = (1, 1)
    r: tuple[int, int] = (1, 1)
    a: tuple[int, int] = (0, 0)
    signs: tuple[int, ...] = (1,)
    jobs: int = 1
    stable: bool = False
    output: str = "-"
    cache_dir: Optional[str] = None
    exploratory: bool = False

    def validate(self) -> None:
        if self.check not in CHECKS:
            raise SweepSpecError(f"unknown check {self.check!r}; expected one of {CHECKS}")
        for name, (lo, hi), least in (
            ("n", self.n, 1),
            ("m", self.m, 1),
            ("r", self.r, 1),
            ("a", self.a, 0),
        ):
            if lo < least:
                raise SweepSpecError(f"{name} must be >= {least}, got {lo}")
            if hi < lo:
                raise SweepSpecError(f"empty {name} range {lo}..{hi}")
        if not self.signs or any(s not in (1, -1) for s in self.signs):
            raise SweepSpecError(f"signs must be drawn from +1/-1, got {self.signs}")
        if self.jobs < 1:
            raise SweepSpecError(f"jobs must be >= 1, got {self.jobs}")
        if self.check in ("theorem", "pan") and self.a != (0, 0):
            raise SweepSpecError(f"--a applies only to kk1/odd_power, not {self.check}")
        if self.check == "odd_power" and self.m[1] > 1 and not self.exploratory:
            raise SweepSpecError(
                "odd_power is a verified claim only at m=1; "
                "use --exploratory to sweep m > 1"
            )

    def cells(self) -> list[SchmidtParams]:
        """Grid cells in ascending (n, m, r, epsilon, a) order."""
        out = []
        for n in range(self.n[0], self.n[1] + 1):
            for m in range(self.m[0], self.m[1] + 1):
                for r in range(self.r[0], self.r[1] + 1):
                    for eps in sorted(self.signs):
                        for a in range(self.a[0], self.a[1] + 1):
                            out.append(SchmidtParams(n=n, m=m, r=r, epsilon=eps, a=a))
        return out

    def echo(self) -> dict:
        return {
            "check": self.check,
            "n": list(self.n),
            "m": list(self.m),
            "r": list(self.r),
            "a": list(self.a),
            "signs": sorted(self.signs),
            "exploratory": self.exploratory,
        }


def run_cell(check: str, p: SchmidtParams, exploratory: bool = False) -> CongruenceReport:
    if check == "theorem":
        return theorem_check(p)
    if check == "pan":
        return pan_check(p.n, p.m, p.r, p.epsilon)
    if check in ("kk1", "odd_power"):
        return generalized_check(p, check, exploratory=exploratory)
    raise SweepSpecError(f"unknown check {check!r}")


def _run_cell_args(args: tuple[str, SchmidtParams, bool]) -> CongruenceReport:
    return run_cell(*args)


@dataclass
class RunManifest:
    """All reports of one sweep plus the aggregate verdict."""

    spec: SweepSpec
    reports: list[CongruenceReport]
    total_elapsed_ms: float
    schema: str = SCHEMA
    tool_version: str = field(default=__version__)

    @property
    def passed(self) -> bool:
        return all(rep.passed for rep in self.reports)

    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self) -> dict:
        stable = self.spec.stable
        cells = []
        for rep in self.reports:
            witness = None
            if rep.witness is not None:
                witness = {
                    "monomial": rep.witness.monomial,
                    "coefficient": str(rep.witness.coefficient),
                    "residue": str(rep.witness.residue),
                }
            cell = {
                "n": rep.params.n,
                "m": rep.params.m,
                "r": rep.params.r,
                "epsilon": rep.params.epsilon,
                "a": rep.params.a,
                "check": rep.check,
                "weight": rep.weight,
                "verdict": "pass" if rep.passed else "fail",
                "num_terms": rep.num_terms,
                "polynomial": rep.polynomial,
                "coefficients": [str(c) for c in rep.coefficients],
                "witness": witness,
                "elapsed_ms": 0.0 if stable else rep.elapsed_ms,
            }
            if rep.specialization_equal is not None:
                cell["specialization_equal"] = rep.specialization_equal
            cells.append(cell)
        return {
            "schema": self.schema,
            "tool_version": self.tool_version,
            "spec": self.spec.echo(),
            "cells": cells,
            "aggregate": "pass" if self.passed else "fail",
            "counterexamples": sum(1 for rep in self.reports if not rep.passed),
            "total_elapsed_ms": 0.0 if stable else self.total_elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def run_sweep(spec: SweepSpec) -> RunManifest:
    """Execute every cell of the sweep, serially or over a process pool."""
    spec.validate()
    start = time.perf_counter()
    cells = spec.cells()
    work = [(spec.check, p, spec.exploratory) for p in cells]
    if spec.jobs == 1 or len(cells) <= 1:
        reports = [run_cell(*args) for args in work]
    else:
        with Pool(processes=spec.jobs) as pool:
            reports = pool.map(_run_cell_args, work)
    total_ms = (time.perf_counter() - start) * 1000.0
    return RunManifest(spec=spec, reports=reports, total_elapsed_ms=total_ms)

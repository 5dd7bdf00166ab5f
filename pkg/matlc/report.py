"""
Per-matroid theorem reports.

A report collects the f- and h-vectors of IN(M) and of BC(M) under each
requested ordering, the characteristic polynomials and the Whitney numbers,
then records:

- verdicts: h-vectors nonnegative, log-concave and without internal zeros;
  f-vectors strictly log-concave
- cross-checks between independent computations, raised as
  InvariantViolation when they disagree

Matroids not known to be representable over Q are labelled as conjecture
checks rather than theorem checks.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from matlc.complexes import Ordering, bc_complex, independence_complex, reduced_bc_complex
from matlc.config import get_config, resolve_cap
from matlc.errors import InvariantViolation
from matlc.lattice import (
    bc_h_from_reduced,
    char_poly,
    char_poly_boolean,
    reduce_chi,
    whitney_from_chi,
)
from matlc.matroids.base import Matroid
from matlc.polynomial import IntPolynomial
from matlc.sequences import IntSeq, LogConcavityVerdict, analyze_sequence

logger = logging.getLogger(__name__)

THEOREM = "theorem check"
CONJECTURE = "conjecture check (not Q-representable)"


def random_orderings(labels: Sequence[str], k: int, rng: random.Random) -> List[Tuple[str, ...]]:
    """k shuffles of ``labels`` drawn from ``rng``."""
    out = []
    for _ in range(k):
        perm = list(labels)
        rng.shuffle(perm)
        out.append(tuple(perm))
    return out


def _h_passes(v: LogConcavityVerdict) -> bool:
    return v.nonnegative and v.log_concave and not v.internal_zeros


def _f_passes(v: LogConcavityVerdict) -> bool:
    return v.nonnegative and v.strictly_log_concave


@dataclass
class OrderingResult:
    ordering: Tuple[str, ...]
    f: IntSeq
    h: IntSeq

    def to_json(self) -> Dict[str, object]:
        return {
            "ordering": list(self.ordering),
            "f": [str(x) for x in self.f],
            "h": [str(x) for x in self.h],
        }


@dataclass
class TheoremReport:
    name: str
    label: str
    matroid: Dict[str, object]
    f_in: IntSeq
    h_in: IntSeq
    bc: List[OrderingResult]
    chi: IntPolynomial
    reduced_chi: Optional[IntPolynomial]
    whitney: IntSeq
    has_loop: bool
    verdicts: Dict[str, LogConcavityVerdict] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)

    @property
    def representable_over_q(self) -> bool:
        return self.label == THEOREM

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "label": self.label,
            "matroid": self.matroid,
            "IN": {"f": [str(x) for x in self.f_in], "h": [str(x) for x in self.h_in]},
            "BC": [r.to_json() for r in self.bc],
            "chi": self.chi.to_json(),
            "reduced_chi": self.reduced_chi.to_json() if self.reduced_chi is not None else None,
            "whitney": [str(x) for x in self.whitney],
            "has_loop": self.has_loop,
            "verdicts": {k: v.to_json() for k, v in self.verdicts.items()},
            "violations": list(self.violations),
            "passed": self.passed,
        }


def _cross_check(matroid: Matroid, report: TheoremReport, orderings: Sequence[Ordering], cap: Optional[int]) -> None:
    if len(matroid) <= get_config().validation_cap:
        boolean = char_poly_boolean(matroid, cap)
        if boolean != report.chi:
            raise InvariantViolation(f"Möbius chi {report.chi} differs from Boolean chi {boolean}")
    if report.has_loop or not len(matroid):
        return
    bridge_h = bc_h_from_reduced(report.reduced_chi, matroid.full_rank)
    base_f = report.bc[0].f
    for result in report.bc:
        if result.f != report.whitney:
            raise InvariantViolation(f"NBC counts {result.f} differ from Whitney numbers {report.whitney}")
        if result.f != base_f:
            raise InvariantViolation(f"BC f-vector depends on the ordering: {base_f} vs {result.f}")
        if result.h != bridge_h:
            raise InvariantViolation(f"h(BC) = {result.h} but reduced chi at q+1 gives {bridge_h}")
    reduced = reduced_bc_complex(matroid, orderings[0], cap)
    r = matroid.full_rank - 1
    f_red = reduced.f_vector()
    from_reduced = IntPolynomial(tuple((-1) ** (r - k) * f_red[r - k] for k in range(r + 1)))
    if from_reduced != report.reduced_chi:
        raise InvariantViolation(f"reduced BC f-vector {f_red} does not give reduced chi {report.reduced_chi}")
    if reduced.h_vector() != report.bc[0].h[:-1]:
        raise InvariantViolation(f"h of the reduced BC complex {reduced.h_vector()} != {report.bc[0].h[:-1]}")


def theorem_report(
    matroid: Matroid,
    orderings: Optional[Sequence[Ordering]] = None,
    name: str = "",
    cap: Optional[int] = None,
) -> TheoremReport:
    """Build the report for ``matroid`` under each ordering (default: ground-set order)."""
    orderings = list(orderings) if orderings else [None]
    cap = resolve_cap(cap)
    label = THEOREM if matroid.representable_over_q else CONJECTURE
    in_complex = independence_complex(matroid, cap)
    bc_results = []
    for sigma in orderings:
        bc = bc_complex(matroid, sigma, cap)
        bc_results.append(OrderingResult(tuple(sigma or matroid.labels), bc.f_vector(), bc.h_vector()))
    # One flat lattice per report; Whitney numbers and reduced chi derive from chi.
    chi = char_poly(matroid, cap)
    whitney = whitney_from_chi(chi, matroid.full_rank)
    report = TheoremReport(
        name=name or matroid.kind,
        label=label,
        matroid=matroid.describe(),
        f_in=in_complex.f_vector(),
        h_in=in_complex.h_vector(),
        bc=bc_results,
        chi=chi,
        reduced_chi=reduce_chi(chi) if len(matroid) else None,
        whitney=whitney.values,
        has_loop=whitney.has_loop,
    )
    _judge(report)
    _cross_check(matroid, report, orderings, cap)
    if report.violations:
        level = logging.WARNING if label == CONJECTURE else logging.ERROR
        logger.log(level, f"[TheoremReport] {report.name}: {'; '.join(report.violations)}")
    return report


def _judge(report: TheoremReport) -> None:
    checks: List[Tuple[str, IntSeq, bool]] = [("h(IN)", report.h_in, True), ("f(IN)", report.f_in, False)]
    # BC(M) is empty for a matroid with a loop, so only IN(M) is judged then.
    if not report.has_loop:
        for k, result in enumerate(report.bc):
            checks.append((f"h(BC)[{k}]", result.h, True))
            checks.append((f"f(BC)[{k}]", result.f, False))
    for key, seq, is_h in checks:
        verdict = analyze_sequence(seq)
        report.verdicts[key] = verdict
        ok = _h_passes(verdict) if is_h else _f_passes(verdict)
        if not ok:
            what = "nonnegative, log-concave, no internal zeros" if is_h else "strictly log-concave"
            report.violations.append(f"{key} = {seq} is not {what}")

"""
Acceptance suites.

Each suite turns into a list of Cases, runs them through the CheckRunner and
returns a SuiteResult. Cases that need randomness receive an explicit seed
derived from the run seed, so results do not depend on scheduling.
"""
from __future__ import annotations

import logging
import random
import time
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable, Dict, List, Optional, Sequence

from matlc.arrangements import (
    CentralArrangement,
    affine_char_poly,
    bounded_regions_2d,
    concurrent_lines,
    decone,
    generic_lines,
    random_central_arrangement,
    varchenko_count,
)
from matlc.check.corpus import Fixture, build_corpus, find_fixture
from matlc.check.runner import Case, CaseOutcome, run_cases
from matlc.complexes import independence_complex, reduced_bc_complex
from matlc.config import get_config
from matlc.errors import ParseError
from matlc.graphs.chromatic import chromatic_report
from matlc.graphs.corpus import connected_graphs_upto, random_connected_graph
from matlc.graphs.cycles import cycle_matroid
from matlc.graphs.reliability import reliability_report
from matlc.lattice import reduced_char_poly
from matlc.matroids.base import Matroid
from matlc.matroids.constructions import (
    add_parallel,
    check_rank_axioms,
    dual,
    free_dual_extension,
    rank_oracles_equal,
)
from matlc.matroids.graphic import Multigraph
from matlc.matroids.uniform import UniformMatroid
from matlc.report import random_orderings, theorem_report

logger = logging.getLogger(__name__)

SUITES = (
    "theorem",
    "uniform-ones",
    "free-dual",
    "chromatic",
    "reliability",
    "simplification",
    "arrangements",
)


@dataclass
class CheckOptions:
    """Parameters of a check run; ``None`` filters mean "use the default corpus"."""
    seed: Optional[int] = None
    orderings: int = 0
    uniform_upto: Optional[int] = None
    graphs_upto: Optional[int] = None
    fixture: Optional[str] = None
    workers: int = 1
    timeout_s: float = 0.0
    fail_fast: bool = False
    chromatic_samples: int = 500
    simplification_trials: int = 50
    arrangement_samples: int = 30
    reliability_vertices: int = 8

    def rng(self, purpose: str) -> random.Random:
        """Seeded generator for one purpose; a missing seed is a usage error."""
        if self.seed is None:
            raise ParseError(f"--seed is required for {purpose}")
        return random.Random(f"{self.seed}:{purpose}")


@dataclass
class SuiteResult:
    name: str
    cases: int
    violations: List[str] = field(default_factory=list)
    conjecture_violations: List[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    def passed(self, strict_representability: bool = False) -> bool:
        if self.violations:
            return False
        return not (strict_representability and self.conjecture_violations)

    def to_json(self, timing: bool = False) -> Dict[str, object]:
        """Report fields; wall-clock time only when ``timing`` is set, so stdout stays reproducible."""
        out = asdict(self)
        elapsed = out.pop("elapsed_s")
        if timing:
            out["elapsed_s"] = round(elapsed, 3)
        return out


def _collect(name: str, outcomes: Sequence[CaseOutcome], started: float) -> SuiteResult:
    result = SuiteResult(name, len(outcomes), elapsed_s=time.perf_counter() - started)
    for o in outcomes:
        result.violations.extend(f"{o.key}: {v}" for v in o.violations)
        result.conjecture_violations.extend(f"{o.key}: {v}" for v in o.conjecture_violations)
    logger.info(
        f"[CheckRunner] suite {name}: {result.cases} cases, {len(result.violations)} violations, "
        f"{len(result.conjecture_violations)} conjecture-check failures in {result.elapsed_s:.2f}s"
    )
    return result


AXIOM_CHECK_SIZE = 10
DUAL_CHECK_SIZE = 8


def oracle_problems(matroid: Matroid) -> List[str]:
    """Exhaustive rank-axiom and dual-involution checks on small fixtures."""
    problems = []
    if len(matroid) <= AXIOM_CHECK_SIZE:
        failure = check_rank_axioms(matroid)
        if failure:
            problems.append(f"rank axioms: {failure}")
    if len(matroid) <= DUAL_CHECK_SIZE and not rank_oracles_equal(dual(dual(matroid)), matroid):
        problems.append("dual(dual(M)) differs from M")
    return problems


# -- case functions (module level so isolated workers can import them) --


def theorem_case(key: str, matroid: Matroid, orderings: List[Optional[tuple]]) -> CaseOutcome:
    report = theorem_report(matroid, orderings, name=key)
    outcome = CaseOutcome(key)
    outcome.violations.extend(oracle_problems(matroid))
    if report.representable_over_q:
        outcome.violations.extend(report.violations)
    else:
        outcome.conjecture_violations.extend(report.violations)
    return outcome


def uniform_ones_case(key: str, r: int) -> CaseOutcome:
    report = theorem_report(UniformMatroid(r + 1, r + 2), name=key)
    outcome = CaseOutcome(key)
    for what, h in (("h(IN)", report.h_in), ("h(BC)", report.bc[0].h)):
        if any(h[i] != 1 for i in range(1, r + 1)):
            outcome.violations.append(f"{what} = {h}, expected 1 at indices 1..{r}")
    return outcome


def free_dual_case(key: str, matroid: Matroid) -> CaseOutcome:
    extended = free_dual_extension(matroid, "p*")
    outcome = CaseOutcome(key)
    if extended.labels[0] != "p*":
        outcome.violations.append("the new element is not the smallest")
    ind = independence_complex(matroid).face_sets()
    red = reduced_bc_complex(extended).face_sets()
    if ind != red:
        outcome.violations.append(f"IN(M) has {len(ind)} faces, reduced BC(M x p) has {len(red)}")
    if extended.full_rank != matroid.full_rank + 1:
        outcome.violations.append(f"rank(M x p) = {extended.full_rank}, expected {matroid.full_rank + 1}")
    return outcome


def chromatic_case(key: str, graph: Multigraph, method: str) -> CaseOutcome:
    report = chromatic_report(graph, method)
    outcome = CaseOutcome(key)
    if not report.passed:
        outcome.violations.append(f"coefficients {report.coefficients} fail {report.verdict}")
    return outcome


def reliability_case(key: str, graph: Multigraph) -> CaseOutcome:
    report = reliability_report(graph)
    outcome = CaseOutcome(key)
    if not report.bridge_holds:
        outcome.violations.append(f"h = {report.data.hseq}, IN(cocycle) h = {report.cocycle_h}")
    if not report.passed and report.bridge_holds:
        outcome.violations.append(f"h = {report.data.hseq} fails {report.verdict}")
    return outcome


def simplification_case(key: str, matroid: Matroid, seed: str) -> CaseOutcome:
    rng = random.Random(seed)
    extended = matroid
    for k in range(rng.randint(1, 3)):
        extended = add_parallel(extended, rng.choice(matroid.labels), f"par{k}")
    outcome = CaseOutcome(key)
    before, after = reduced_char_poly(matroid), reduced_char_poly(extended)
    if before != after:
        outcome.violations.append(f"reduced chi changed from {before} to {after}")
    return outcome


def arrangement_case(key: str, arrangement: CentralArrangement) -> CaseOutcome:
    expected = reduced_char_poly(arrangement.matroid())
    outcome = CaseOutcome(key)
    for i in range(len(arrangement)):
        affine = decone(arrangement, i)
        chi = affine_char_poly(affine)
        if chi != expected:
            outcome.violations.append(f"infinity {i}: chi_A = {chi}, reduced chi_M = {expected}")
        if affine.dim == 2 and affine.is_essential():
            regions, count = bounded_regions_2d(affine), varchenko_count(affine)
            if regions != count:
                outcome.violations.append(f"infinity {i}: {regions} bounded regions, (-1)^r chi_A(1) = {count}")
    return outcome


def line_family_case(key: str, n: int, concurrent: bool) -> CaseOutcome:
    affine = concurrent_lines(n) if concurrent else generic_lines(n)
    expected = 0 if concurrent else comb(n - 1, 2)
    outcome = CaseOutcome(key)
    regions, count = bounded_regions_2d(affine), varchenko_count(affine)
    if not regions == count == expected:
        outcome.violations.append(f"{regions} bounded regions, Varchenko count {count}, expected {expected}")
    return outcome


# -- suite builders --


def _theorem_fixtures(options: CheckOptions) -> List[Fixture]:
    if options.fixture:
        return [find_fixture(options.fixture)]
    if options.uniform_upto is None and options.graphs_upto is None:
        return build_corpus()
    return build_corpus(options.uniform_upto, options.graphs_upto, matrices=False, explicit=False)


def theorem_cases(options: CheckOptions) -> List[Case]:
    fixtures = _theorem_fixtures(options)
    rng = options.rng("ordering sampling") if options.orderings else None
    cases = []
    for fx in fixtures:
        orderings: List[Optional[tuple]] = [None]
        if rng is not None:
            orderings.extend(random_orderings(fx.matroid.labels, options.orderings, rng))
        cases.append(Case(fx.key, theorem_case, (fx.matroid, orderings)))
    return cases


def uniform_ones_cases(options: CheckOptions) -> List[Case]:
    return [Case(f"uniform/U{r + 1}_{r + 2}", uniform_ones_case, (r,)) for r in range(1, 8)]


def free_dual_cases(options: CheckOptions) -> List[Case]:
    cases = [
        Case(f"uniform/U{k}_{n}", free_dual_case, (UniformMatroid(k, n),))
        for n in range(1, 8)
        for k in range(0, n + 1)
    ]
    for i, g in enumerate(connected_graphs_upto(5)):
        cases.append(Case(f"graph/{i:03d}", free_dual_case, (cycle_matroid(g),)))
    return cases


def chromatic_cases(options: CheckOptions) -> List[Case]:
    cases = [
        Case(f"graph/{i:03d}", chromatic_case, (g, "both"))
        for i, g in enumerate(connected_graphs_upto(5))
    ]
    rng = options.rng("graph sampling")
    for i in range(options.chromatic_samples):
        g = random_connected_graph(rng, rng.choice((7, 8)))
        cases.append(Case(f"random/{i:04d}", chromatic_case, (g, "deletion-contraction")))
    return cases


RELIABILITY_MAX_EDGES = 12


def reliability_cases(options: CheckOptions) -> List[Case]:
    graphs = connected_graphs_upto(options.reliability_vertices, max_edges=RELIABILITY_MAX_EDGES)
    return [Case(f"graph/{i:04d}", reliability_case, (g,)) for i, g in enumerate(graphs)]


def simplification_cases(options: CheckOptions) -> List[Case]:
    bases: List[Matroid] = [
        cycle_matroid(Multigraph.complete(3)),
        cycle_matroid(Multigraph.complete(4)),
        cycle_matroid(Multigraph.cycle(5)),
        UniformMatroid(2, 4),
        UniformMatroid(3, 5),
    ]
    rng = options.rng("simplification trials")
    cases = []
    for t in range(options.simplification_trials):
        base = rng.choice(bases)
        cases.append(Case(f"trial/{t:03d}", simplification_case, (base, f"{options.seed}:{t}")))
    return cases


def arrangement_cases(options: CheckOptions) -> List[Case]:
    rng = options.rng("arrangement sampling")
    cases = []
    for i in range(options.arrangement_samples):
        arrangement = random_central_arrangement(rng, rng.randint(4, 9))
        cases.append(Case(f"random/{i:03d}", arrangement_case, (arrangement,)))
    cases.extend(Case(f"generic/{n}", line_family_case, (n, False)) for n in range(3, 9))
    cases.extend(Case(f"concurrent/{n}", line_family_case, (n, True)) for n in range(2, 7))
    return cases


BUILDERS: Dict[str, Callable[[CheckOptions], List[Case]]] = {
    "theorem": theorem_cases,
    "uniform-ones": uniform_ones_cases,
    "free-dual": free_dual_cases,
    "chromatic": chromatic_cases,
    "reliability": reliability_cases,
    "simplification": simplification_cases,
    "arrangements": arrangement_cases,
}


def run_suite(name: str, options: CheckOptions) -> SuiteResult:
    if name not in BUILDERS:
        raise ParseError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)} or all")
    started = time.perf_counter()
    cases = BUILDERS[name](options)
    logger.info(f"[CheckRunner] suite {name}: {len(cases)} cases")
    outcomes = run_cases(cases, options.workers, options.timeout_s, options.fail_fast)
    return _collect(name, outcomes, started)


def run_suites(names: Sequence[str], options: CheckOptions) -> List[SuiteResult]:
    """Run suites in order; with fail_fast, stop after the first failing suite."""
    strict = get_config().strict_representability
    results = []
    for name in names:
        result = run_suite(name, options)
        results.append(result)
        if options.fail_fast and not result.passed(strict):
            break
    return results

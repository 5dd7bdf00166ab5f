"""
matlc command line.

    matlc invariants --uniform 2,3
    matlc invariants --graph k4.json --ordering random --seed 7
    matlc check --graphs-upto 6 --orderings 20 --seed 1
    matlc check --suite all --seed 1 --out reports/check.json
    matlc chromatic --graph k3.json
    matlc reliability --graph c3.json
    matlc regions --lines generic4.json
    matlc regions --central pencil.json --infinity 0

Reports go to stdout as JSON, diagnostics to stderr. Exit codes: 0 pass,
1 violation found, 2 parse or domain error, 3 capacity, 4 internal invariant.
"""
from __future__ import annotations

import argparse
import logging
import random
import sys
from dataclasses import replace
from typing import List, Optional, Sequence

from matlc.arrangements import (
    AffineArrangement,
    CentralArrangement,
    affine_char_poly,
    bounded_regions_2d,
    decone,
    varchenko_count,
)
from matlc.check import SUITES, CheckOptions, find_fixture, run_suites
from matlc.config import MatlcConfig, get_config, set_config
from matlc.errors import MatlcError, ParseError
from matlc.graphs.chromatic import METHODS, chromatic_report
from matlc.graphs.reliability import reliability_report
from matlc.lattice import reduced_char_poly
from matlc.matroids.base import Matroid
from matlc.matroids.graphic import GraphicMatroid
from matlc.matroids.io import load_graph, load_matroid, read_json
from matlc.matroids.uniform import UniformMatroid
from matlc.output import render_json, write_json, write_summary
from matlc.report import random_orderings, theorem_report

logger = logging.getLogger("matlc.cli")

VIOLATION = 1


def _emit(payload: object) -> None:
    sys.stdout.write(render_json(payload) + "\n")


def _parse_uniform(text: str) -> UniformMatroid:
    try:
        k, n = (int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"--uniform expects 'k,n', got {text!r}") from None
    return UniformMatroid(k, n)


def _load_input_matroid(args: argparse.Namespace) -> Matroid:
    if args.uniform:
        return _parse_uniform(args.uniform)
    if args.graph:
        return GraphicMatroid(load_graph(args.graph))
    if args.matrix:
        return load_matroid(args.matrix, expected="matrix")
    if args.circuits:
        return load_matroid(args.circuits, expected="circuits")
    if args.input:
        return load_matroid(args.input)
    return find_fixture(args.fixture).matroid


def cmd_invariants(args: argparse.Namespace) -> int:
    matroid = _load_input_matroid(args)
    orderings: List[Optional[tuple]] = []
    if args.ordering == "given":
        orderings.append(None)
    k = args.orderings or (1 if args.ordering == "random" else 0)
    if k:
        if args.seed is None:
            raise ParseError("--seed is required for random orderings")
        orderings.extend(random_orderings(matroid.labels, k, random.Random(args.seed)))
    report = theorem_report(matroid, orderings)
    _emit(report.to_json())
    if report.representable_over_q or get_config().strict_representability:
        return 0 if report.passed else VIOLATION
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    options = CheckOptions(
        seed=args.seed,
        orderings=args.orderings,
        uniform_upto=args.uniform_upto,
        graphs_upto=args.graphs_upto,
        fixture=args.fixture,
        workers=args.workers if args.workers is not None else get_config().workers,
        timeout_s=args.timeout if args.timeout is not None else get_config().fixture_timeout_s,
        fail_fast=args.fail_fast,
        chromatic_samples=args.chromatic_samples,
        simplification_trials=args.simplification_trials,
        arrangement_samples=args.arrangement_samples,
        reliability_vertices=args.reliability_vertices,
    )
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cfg = get_config()
    strict = cfg.strict_representability
    results = run_suites(names, options)
    passed = all(r.passed(strict) for r in results)
    payload = {"suites": [r.to_json() for r in results], "passed": passed}
    if args.out:
        write_json(cfg.report_path(args.out), payload)
    if args.summary:
        write_summary(cfg.report_path(args.summary), [r.to_json(timing=True) for r in results])
    _emit(payload)
    for r in results:
        status = "PASS" if r.passed(strict) else "FAIL"
        logger.info(f"[CheckRunner] {status} {r.name}: {r.cases} cases in {r.elapsed_s:.2f}s")
    return 0 if passed else VIOLATION


def cmd_chromatic(args: argparse.Namespace) -> int:
    report = chromatic_report(load_graph(args.graph), args.method)
    _emit(report.to_json())
    return 0 if report.passed else VIOLATION


def cmd_reliability(args: argparse.Namespace) -> int:
    report = reliability_report(load_graph(args.graph))
    _emit(report.to_json())
    return 0 if report.passed else VIOLATION


def cmd_regions(args: argparse.Namespace) -> int:
    central = None
    if args.lines:
        affine = AffineArrangement.from_json(read_json(args.lines))
    else:
        if args.infinity is None:
            raise ParseError("--central needs --infinity")
        central = CentralArrangement.from_json(read_json(args.central))
        affine = decone(central, args.infinity)
    chi = affine_char_poly(affine)
    regions = bounded_regions_2d(affine)
    count = varchenko_count(affine)
    payload = {
        "arrangement": affine.to_json(),
        "chi": chi.to_json(),
        "bounded_regions": regions,
        "varchenko_count": count,
        "agrees": regions == count,
    }
    ok = regions == count
    if central is not None:
        reduced = reduced_char_poly(central.matroid())
        payload["reduced_chi"] = reduced.to_json()
        payload["decone_identity"] = chi == reduced
        ok = ok and chi == reduced
    _emit(payload)
    return 0 if ok else VIOLATION


def _add_matroid_inputs(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--uniform", metavar="K,N", help="uniform matroid U(K,N)")
    src.add_argument("--graph", metavar="FILE", help="cycle matroid of a graph file ('-' for stdin)")
    src.add_argument("--matrix", metavar="FILE", help="column matroid of a rational matrix JSON")
    src.add_argument("--circuits", metavar="FILE", help="matroid given by its circuits")
    src.add_argument("--input", metavar="FILE", help="any typed matroid JSON")
    src.add_argument("--fixture", metavar="NAME", help="built-in fixture, e.g. fano or U2_3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matlc", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--json", action="store_true", help="also report errors as JSON on stdout")
    parser.add_argument("--log-level", default=None, help="logging level (default from MATLC_LOG_LEVEL)")
    parser.add_argument("--config", metavar="FILE", help="JSON config file")
    parser.add_argument("--cap", type=int, default=None, help="enumeration cap override")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="f/h-vectors, chi, Whitney numbers and verdicts for one matroid")
    _add_matroid_inputs(p)
    p.add_argument("--ordering", choices=("given", "random"), default="given")
    p.add_argument("--orderings", type=int, default=0, metavar="K", help="random orderings to add")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("check", help="run acceptance suites over the built-in corpus")
    p.add_argument("--suite", choices=SUITES + ("all",), default="theorem")
    p.add_argument("--graphs-upto", type=int, default=None, metavar="V")
    p.add_argument("--uniform-upto", type=int, default=None, metavar="N")
    p.add_argument("--fixture", default=None, metavar="NAME")
    p.add_argument("--orderings", type=int, default=0, metavar="K")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--timeout", type=float, default=None, metavar="S", help="per-case timeout in seconds")
    p.add_argument("--fail-fast", action="store_true")
    p.add_argument("--out", default=None, metavar="FILE", help="also write the JSON report here (bare names go under report_dir)")
    p.add_argument("--summary", default=None, metavar="FILE", help="write a markdown summary with timings (bare names go under report_dir)")
    p.add_argument("--chromatic-samples", type=int, default=500)
    p.add_argument("--simplification-trials", type=int, default=50)
    p.add_argument("--arrangement-samples", type=int, default=30)
    p.add_argument("--reliability-vertices", type=int, default=8, metavar="V",
                   help="largest vertex count in the reliability suite (edges are capped at 12)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("chromatic", help="chromatic polynomial of a graph")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("reliability", help="reliability f- and h-sequences of a connected graph")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.set_defaults(func=cmd_reliability)

    p = sub.add_parser("regions", help="bounded regions of a line arrangement")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--lines", metavar="FILE", help="affine lines [a1, a2, b] meaning a1 x + a2 y = b")
    src.add_argument("--central", metavar="FILE", help="central arrangement in 3 variables to decone")
    p.add_argument("--infinity", type=int, default=None, help="index of the hyperplane sent to infinity")
    p.set_defaults(func=cmd_regions)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    previous = get_config()
    cfg = MatlcConfig.from_file(args.config) if args.config else previous
    if args.cap is not None:
        cfg = replace(cfg, enumeration_cap=args.cap)
    logging.basicConfig(
        level=(args.log_level or cfg.log_level).upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    set_config(cfg)
    try:
        return args.func(args)
    except MatlcError as e:
        logger.error(f"[CLI] {e.kind}: {e}")
        if args.json:
            _emit({"error": e.kind, "message": str(e)})
        return e.exit_code
    finally:
        set_config(previous)

"""Command line front end: ``confspace <command> [options]``"""

import argparse
import logging
import sys
from typing import Dict, List, Optional

from ..core_model.cells import enumerate_cells
from ..core_model.surface import SurfaceParams, expected_cell_count
from ..exceptions import (
    BoundarySquareError,
    ChainMapError,
    GuardrailError,
    ParseError,
)
from ..fn_complex.builder import build_complex
from ..free_group.magnus import johnson_depth
from ..free_group.parser import parse_mapping_class
from ..integral_linear.homology import (
    cohomology_table,
    homology,
    homology_report,
    is_identity_on_homology,
)
from ..mcg_action.action import action_on_cohomology, cohomology_groups
from ..mcg_action.verification import conjecture_probe, verify_johnson_triviality
from ..simplicial_pairs.moriyama import mor_action, mor_rank, mor_report
from ..simplicial_pairs.one_complex import WEDGE, surface_model, wedge_model
from ..simplicial_pairs.oracle import (
    matches_cell_homology,
    oracle_report,
    relative_homology_oracle,
)
from ..simplicial_pairs.product_complex import BASEPOINT_MODE, BOUNDARY_MODE
from .config import RunConfig
from .reports import render, with_echo
from .selftest import run_selftest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _classes(config: RunConfig, expected: Optional[int] = 1):
    if expected is not None and len(config.classes) != expected:
        raise ValueError(
            f"{config.command} expects {expected} --class, got {len(config.classes)}"
        )
    return [parse_mapping_class(text, config.genus) for text in config.classes]


def _dense(matrix) -> List[List[int]]:
    return [[int(x) for x in row] for row in matrix.to_dense()]


def cmd_cells(config: RunConfig) -> Dict:
    """cell counts per degree"""
    params = SurfaceParams(config.genus)
    basis = enumerate_cells(params, config.n)
    return {
        "g": config.genus,
        "n": config.n,
        "total": len(basis),
        "expected": expected_cell_count(config.genus, config.n),
        "per_degree": {str(d): basis.dimension(d) for d in basis.degrees},
        "pure_arc": len(basis.pure_arc_cells()),
    }


def cmd_homology(config: RunConfig) -> Dict:
    """cohomology of the open configuration space"""
    complex_ = build_complex(config.genus, config.n, {"progress": config.progress})
    summary = homology(complex_)
    return cohomology_table(summary, config.n, config.genus)


def cmd_oracle(config: RunConfig) -> Dict:
    """product model homology, compared with the cell complex for the surface"""
    options = {**config.options("oracle"), "progress": config.progress}
    if config.model == WEDGE:
        model, mode = wedge_model(config.genus), BASEPOINT_MODE
    else:
        model, mode = surface_model(config.genus), BOUNDARY_MODE
    summary = relative_homology_oracle(model, config.n, mode, options)
    report = oracle_report(summary, model, config.n, mode)
    if config.model != WEDGE:
        cells = homology(build_complex(config.genus, config.n))
        report["cells"] = homology_report(cells, config.n, config.genus)
        report["matches"] = matches_cell_homology(summary, cells)
    return report


def cmd_mor_rank(config: RunConfig) -> Dict:
    """rank of the Moriyama module"""
    return {"g": config.genus, "n": config.n, "rank": mor_rank(config.genus, config.n)}


def cmd_mor_action(config: RunConfig) -> Dict:
    """Moriyama matrix of one class"""
    (phi,) = _classes(config)
    options = {**config.options("moriyama"), "progress": config.progress}
    matrix = mor_action(phi, config.n, config.genus, options)
    report = mor_report(phi, config.n, matrix)
    report["identity"] = matrix.is_identity()
    return report


def cmd_johnson_depth(config: RunConfig) -> Dict:
    """Johnson filtration depth of one class"""
    (phi,) = _classes(config)
    depth = johnson_depth(phi.endomorphism, config.degree_bound)
    return {
        "phi": phi.normal_form(),
        "g": config.genus,
        "D": config.degree_bound,
        "depth": depth,
    }


def cmd_act(config: RunConfig) -> Dict:
    """action matrices on every cohomology group"""
    (phi,) = _classes(config)
    complex_ = build_complex(config.genus, config.n)
    summary = homology(complex_)
    groups = cohomology_groups(complex_, summary)
    options = {**config.options("moriyama"), "progress": config.progress}
    matrices = action_on_cohomology(
        phi, config.genus, config.n, complex_, summary, options
    )
    return {
        "phi": phi.normal_form(),
        "g": config.genus,
        "n": config.n,
        "H": {
            str(i): {
                "betti": groups[i].betti,
                "torsion": list(groups[i].torsion),
                "matrix": _dense(matrices[i]),
                "identity": is_identity_on_homology(matrices[i], groups[i]),
            }
            for i in sorted(matrices)
        },
    }


def cmd_verify(config: RunConfig) -> Dict:
    """Johnson depth against the (co)homology action"""
    (phi,) = _classes(config)
    degree = config.n if config.degree is None else config.degree
    options = {**config.options("moriyama"), "progress": config.progress}
    report = verify_johnson_triviality(
        phi,
        config.genus,
        config.n,
        degree,
        config.degree_bound,
        options=options,
        homological=config.homological,
    )
    return report.to_json()


def cmd_conjecture_probe(config: RunConfig) -> Dict:
    """exploratory probe, no claim"""
    classes = _classes(config, expected=None)
    if not classes:
        raise ValueError("conjecture-probe expects at least one --class")
    options = {**config.options("moriyama"), "progress": config.progress}
    records = conjecture_probe(
        classes, config.genus, config.n, config.max_power, options=options
    )
    return {"records": [record.to_json() for record in records]}


COMMANDS = {
    "cells": cmd_cells,
    "homology": cmd_homology,
    "oracle": cmd_oracle,
    "mor-rank": cmd_mor_rank,
    "mor-action": cmd_mor_action,
    "johnson-depth": cmd_johnson_depth,
    "act": cmd_act,
    "verify": cmd_verify,
    "conjecture-probe": cmd_conjecture_probe,
}


def _common(parser: argparse.ArgumentParser, points: bool = True) -> None:
    parser.add_argument("-g", "--genus", type=int, default=1, help="genus g")
    if points:
        parser.add_argument("-n", type=int, default=1, help="number of points")
    parser.add_argument("-o", "--output", default=None, help="output file")
    parser.add_argument(
        "--format", dest="fmt", choices=("json", "csv", "text"), default="json"
    )
    parser.add_argument("--progress", action="store_true", help="progress bars")


def _guardrails(parser: argparse.ArgumentParser, oracle: bool = False) -> None:
    if oracle:
        parser.add_argument("--max-wedge-points", type=int, default=None)
        parser.add_argument("--max-surface-points", type=int, default=None)
        parser.add_argument("--max-simplices", type=int, default=None)
    else:
        parser.add_argument("--max-points", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    """argument parser with one subparser per command"""
    parser = argparse.ArgumentParser(
        prog="confspace",
        description="Cohomology of configuration spaces of surfaces "
        "and the mapping class group action on it",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log INFO")
    subparsers = parser.add_subparsers(dest="command")

    _common(subparsers.add_parser("cells", help="count cells"))
    _common(subparsers.add_parser("homology", help="cohomology table"))
    _common(subparsers.add_parser("mor-rank", help="rank of the Moriyama module"))

    oracle_p = subparsers.add_parser("oracle", help="product model homology")
    _common(oracle_p)
    oracle_p.add_argument("--model", choices=("surface", "wedge"), default="surface")
    _guardrails(oracle_p, oracle=True)

    for name, text in (
        ("mor-action", "Moriyama matrix of a class"),
        ("act", "action on every cohomology group"),
        ("verify", "Johnson depth against the cohomology action"),
    ):
        sub = subparsers.add_parser(name, help=text)
        _common(sub)
        sub.add_argument("--class", dest="classes", action="append", required=True)
        sub.add_argument("-D", dest="degree_bound", type=int, default=4)
        if name == "verify":
            sub.add_argument("-i", dest="degree", type=int, default=None)
            sub.add_argument(
                "--homological", action="store_true", help="act on H_j instead of H^j"
            )
        _guardrails(sub)

    depth_p = subparsers.add_parser("johnson-depth", help="Johnson filtration depth")
    _common(depth_p, points=False)
    depth_p.add_argument("--class", dest="classes", action="append", required=True)
    depth_p.add_argument("-D", dest="degree_bound", type=int, default=4)

    probe_p = subparsers.add_parser("conjecture-probe", help="exploratory probe")
    _common(probe_p)
    probe_p.add_argument("--class", dest="classes", action="append", required=True)
    probe_p.add_argument("-K", dest="max_power", type=int, default=2)
    _guardrails(probe_p)

    selftest_p = subparsers.add_parser("selftest", help="run the acceptance checks")
    _common(selftest_p, points=False)
    selftest_p.add_argument("--quick", action="store_true", help="reduced ranges")
    return parser


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fhandle:
            fhandle.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run a command and write its report

    Args:
        argv (Optional[List[str]]): arguments, ``sys.argv[1:]`` when None

    Returns:
        int: 0 on success, 1 when ``selftest`` fails, 2 on usage or input
            errors, 3 when an internal consistency check fails
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code == 0 else EXIT_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        config = RunConfig.from_namespace(args)
        if config.command == "selftest":
            results = run_selftest(config.quick)
            passed = all(r["passed"] for r in results.values())
            payload = {"passed": passed, "checks": results}
            code = EXIT_OK if passed else EXIT_SELFTEST
        else:
            payload = COMMANDS[config.command](config)
            code = EXIT_OK
    except (BoundarySquareError, ChainMapError) as err:
        sys.stderr.write(f"internal check failed: {err}\n")
        return EXIT_INTERNAL
    except (ParseError, GuardrailError, ValueError) as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE

    _emit(render(with_echo(payload, config), config.fmt), config.output)
    return code


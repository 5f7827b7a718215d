"""
Command-line entry point for branchlab
"""
import argparse
import sys
from typing import List, Optional

from loguru import logger

from branchlab.branchdual import branch, classify_sbo, source_roots
from branchlab.cli.params import ParameterRequest, resolve_pair, resolve_parameter
from branchlab.cli.render import render_catalog, render_classification, render_suite, render_table
from branchlab.cli.suites import SUITES, SuiteOptions, run_suite
from branchlab.config import settings
from branchlab.errors import BranchlabError, CutoffExceededError
from branchlab.models import CatalogRowModel, OutputFormat, Status
from branchlab.sympair.catalog import load_catalog
from branchlab.sympair.pair import find_system


def configure_logging(level: Optional[str] = None) -> None:
    logger.remove()
    logger.add(
        sys.stderr,
        level=level or settings.log_level,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
    )
    if settings.log_file:
        logger.add(
            settings.log_file,
            level=level or settings.log_level,
            rotation="10 MB",
            retention="7 days",
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function} - {message}"
        )


def _add_parameter_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pair", required=True, help="Catalog identifier, alias or series name")
    parser.add_argument("--m", type=int, help="Series member of spin2m2")
    parser.add_argument("--n", type=int, help="Series member of sun1_un11, or the E6 family parameter")
    parser.add_argument("--lambda", dest="lam", type=int, help="Scalar weight of the first factor")
    parser.add_argument("--lambda2", dest="lam2", type=int, help="Scalar weight of the second factor")
    parser.add_argument("--a", type=int, help="Symmetric power of the sym family")
    parser.add_argument("--hc", help="Harish-Chandra parameter as comma-separated Dynkin labels")
    parser.add_argument("--ktype", help="Lowest K-type as comma-separated Dynkin labels")
    parser.add_argument("--system", help="Cataloged positive system")
    parser.add_argument("--family", help="Cataloged parameter family")
    parser.add_argument("--format", dest="fmt", type=OutputFormat, choices=list(OutputFormat),
                        default=OutputFormat.TABLE)


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="branchlab",
        description="Branching laws of discrete series under symmetric pairs.",
    )
    parser.add_argument("--log-level", dest="log_level", help="Override the configured log level")
    commands = parser.add_subparsers(dest="command", required=True)

    catalog = commands.add_parser("catalog", help="List cataloged symmetric pairs")
    catalog.add_argument("--format", dest="fmt", type=OutputFormat, choices=list(OutputFormat),
                         default=OutputFormat.TABLE)

    branch_cmd = commands.add_parser("branch", help="Branching table of an admissible restriction")
    _add_parameter_args(branch_cmd)
    branch_cmd.add_argument("--cutoff", type=int, help="Degree cutoff (defaults to the catalog value)")
    branch_cmd.add_argument("--engine", default="blattner", choices=["blattner", "oracle"])
    branch_cmd.add_argument("--strict", action="store_true", help="Exit 3 when the table is incomplete")

    classify = commands.add_parser("classify-sbo", help="Normal-derivative classification report")
    _add_parameter_args(classify)
    classify.add_argument("--max-n", dest="max_n", type=int, default=2, help="Bound of the gradient order search")

    verify = commands.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", choices=list(SUITES) + ["all"])
    verify.add_argument("--quick", action="store_true", help="Reduced cutoffs and samples")
    verify.add_argument("--N", dest="truncation", type=int, help="Kernel series truncation")
    verify.add_argument("--samples", type=int, help="Samples per kernel check")
    verify.add_argument("--tolerance", type=float, help="Residual tolerance of the kernel checks")
    verify.add_argument("--format", dest="fmt", type=OutputFormat, choices=list(OutputFormat),
                        default=OutputFormat.TABLE)
    return parser.parse_args(argv)


def _request(args: argparse.Namespace) -> ParameterRequest:
    values = {"m": args.m, "n": args.n, "lam": args.lam, "lam2": args.lam2, "a": args.a}
    return ParameterRequest(hc=args.hc, ktype=args.ktype, system=args.system, family=args.family, values=values)


def cmd_catalog(args: argparse.Namespace) -> int:
    catalog = load_catalog()
    rows = [
        CatalogRowModel(
            id=entry.id,
            aliases=entry.aliases,
            title=entry.title,
            h0=entry.h0_title,
            ambient_type=entry.ambient_type,
            holomorphic_pair=entry.holomorphic_pair,
            systems=[s.name for s in entry.systems],
            admissible_systems=[s.name for s in entry.systems if s.admissible],
            provenance=entry.provenance,
        )
        for entry in (catalog.entries[i] for i in catalog.ids())
    ]
    print(render_catalog(rows, args.fmt))
    return 0


def cmd_branch(args: argparse.Namespace) -> int:
    request = _request(args)
    pair = resolve_pair(args.pair, request)
    ds = resolve_parameter(pair, request)
    table = branch(pair, ds, cutoff=args.cutoff, engine=args.engine)
    print(render_table(table.to_model(source_roots(pair)), args.fmt))
    if args.strict and not table.complete_below_cutoff:
        raise CutoffExceededError(
            f"Table for {table.pair_id} has {len(table.diagnostics)} unresolved L-types below cutoff {table.cutoff}"
        )
    return 0


def cmd_classify_sbo(args: argparse.Namespace) -> int:
    request = _request(args)
    pair = resolve_pair(args.pair, request)
    ds = resolve_parameter(pair, request)
    selected = pair.for_system(find_system(pair, ds.system) or pair.entry.default_system)
    report = classify_sbo(selected, ds.lowest_ktype.weight, max_n=args.max_n)
    print(render_classification(report, args.fmt))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    options = SuiteOptions(quick=args.quick, truncation=args.truncation, samples=args.samples,
                           tolerance=args.tolerance)
    result = run_suite(args.suite, options)
    print(render_suite(result, args.fmt))
    return 0 if result.status == Status.PASS else 1


COMMANDS = {
    "catalog": cmd_catalog,
    "branch": cmd_branch,
    "classify-sbo": cmd_classify_sbo,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = _parse_args(argv)
    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except BranchlabError as e:
        logger.error(str(e))
        return e.exit_code
    except ValueError as e:
        logger.error(f"Invalid input: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())

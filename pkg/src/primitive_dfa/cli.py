"""
Command line interface.

Exit codes: 0 on success, 1 when a check fails or an internal inconsistency
is found, 2 for usage errors and bad input, 3 when a size or element limit
refuses the computation.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from .automata import Dfa
from .config import (
    DEFAULT_ELEMENT_CAP, DEFAULT_SUBSET_LIMIT, DEFAULT_SUITE_SEED,
    DEFAULT_UBM_LIMIT, Limits,
)
from .dfa_file import format_dfa_file, read_dfa_file, write_dfa_file
from .errors import (
    InconsistencyError, LimitExceededError, PreconditionError,
    PrimitiveDfaError,
)
from .families import (
    affine_pair_non_ubm, affine_pair_ubm, alternating_dfa, cyclic_dfa,
    maslov_pair, symmetric_dfa, yzs_pair,
)
from .gf2k import Gf2kField
from .reports import analyze_report, product_report, render_json, render_text
from .suite import CHECKS, conjecture_affine_ubm, format_table, run_suite
from .version import __version__


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

FAMILIES = (
    "cyclic", "symmetric", "alternating", "maslov", "yzs",
    "affine-non-ubm", "affine-ubm",
)


def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="log progress (-v) or debugging details (-vv) to stderr",
    )
    parent.add_argument(
        "--element-cap", type=int, default=DEFAULT_ELEMENT_CAP,
        help="largest group that may be enumerated (default %(default)s)",
    )
    parent.add_argument(
        "--subset-limit", type=int, default=DEFAULT_SUBSET_LIMIT,
        help="most states for brute-force uniform minimality"
        " (default %(default)s)",
    )
    parent.add_argument(
        "--ubm-limit", type=int, default=DEFAULT_UBM_LIMIT,
        help="most states per factor for boolean sweeps (default %(default)s)",
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="primitive-dfa",
        description="Analyze permutation DFAs, their transition groups and"
        " the boolean operations on their languages.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        "analyze", parents=[common], help="describe a single DFA",
    )
    analyze.add_argument("path", help="DFA file")
    analyze.add_argument("--json", action="store_true", help="print JSON")

    product = commands.add_parser(
        "product", parents=[common], help="describe the product of two DFAs",
    )
    product.add_argument("left", help="DFA file of the left factor")
    product.add_argument("right", help="DFA file of the right factor")
    product.add_argument(
        "--ubm", action="store_true",
        help="decide uniform boolean minimality by brute force",
    )
    product.add_argument(
        "--boolean", action="store_true",
        help="list the state complexity of every proper operation",
    )
    product.add_argument("--json", action="store_true", help="print JSON")

    gen = commands.add_parser(
        "gen", parents=[common], help="write DFAs of a named family",
    )
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("--n", type=int, help="state count (or right state count)")
    gen.add_argument("--m", type=int, help="left state count of a pair")
    gen.add_argument("--k", type=int, help="field degree of an affine pair")
    gen.add_argument(
        "-o", "--out",
        help="output path prefix; PREFIX.dfa, or PREFIX-left.dfa and"
        " PREFIX-right.dfa for pairs (default: standard output)",
    )

    suite = commands.add_parser(
        "paper-suite", parents=[common], help="run the table of known facts",
    )
    suite.add_argument(
        "--seed", type=int, default=DEFAULT_SUITE_SEED,
        help="seed of the randomized rows (default %(default)s)",
    )
    suite.add_argument(
        "--only", action="append", metavar="ID",
        choices=[check.row_id for check in CHECKS],
        help="run only this row (repeatable)",
    )
    suite.add_argument(
        "--timings", action="store_true", help="show the runtime of each row",
    )

    conjecture = commands.add_parser(
        "conjecture-affine-ubm", parents=[common],
        help="brute-force uniform boolean minimality of the two-letter"
        " affine pair",
    )
    conjecture.add_argument("--k", type=int, required=True)
    return parser


def _require(value: Optional[int], flag: str, family: str) -> int:
    if value is None:
        raise PreconditionError(f"{family} needs {flag}")
    return value


def _generate(args: argparse.Namespace) -> list[tuple[str, Dfa]]:
    family = args.family
    if family in ("cyclic", "symmetric", "alternating"):
        n = _require(args.n, "--n", family)
        maker = {
            "cyclic": cyclic_dfa,
            "symmetric": symmetric_dfa,
            "alternating": alternating_dfa,
        }[family]
        return [("", maker(n))]
    if family in ("maslov", "yzs"):
        m = _require(args.m, "--m", family)
        n = _require(args.n, "--n", family)
        pair = (maslov_pair if family == "maslov" else yzs_pair)(m, n)
    else:
        field = Gf2kField(_require(args.k, "--k", family))
        pair = (
            affine_pair_non_ubm if family == "affine-non-ubm" else affine_pair_ubm
        )(field)
    return list(zip(("left", "right"), pair))


def cmd_analyze(args: argparse.Namespace, limits: Limits) -> int:
    report = analyze_report(read_dfa_file(args.path), limits=limits)
    print(render_json(report) if args.json else render_text(report), end="")
    return EXIT_OK


def cmd_product(args: argparse.Namespace, limits: Limits) -> int:
    report = product_report(
        read_dfa_file(args.left),
        read_dfa_file(args.right),
        limits=limits,
        ubm=args.ubm,
        boolean=args.boolean,
    )
    print(render_json(report) if args.json else render_text(report), end="")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, limits: Limits) -> int:
    for part, d in _generate(args):
        if args.out:
            path = f"{args.out}-{part}.dfa" if part else f"{args.out}.dfa"
            write_dfa_file(path, d)
            logger.info("wrote %s", path)
        else:
            if part:
                print(f"# {part}")
            print(format_dfa_file(d), end="")
    return EXIT_OK


def cmd_paper_suite(args: argparse.Namespace, limits: Limits) -> int:
    rows = run_suite(limits=limits, seed=args.seed, only=args.only)
    print(format_table(rows, timings=args.timings), end="")
    if any(row.ok is False and not row.limited for row in rows):
        return EXIT_FAILED
    if any(row.limited for row in rows):
        return EXIT_LIMIT
    return EXIT_OK


def cmd_conjecture(args: argparse.Namespace, limits: Limits) -> int:
    witness = conjecture_affine_ubm(args.k, limit=limits.ubm_limit)
    if witness is None:
        print(f"k={args.k}: uniformly boolean minimal")
    else:
        print(f"k={args.k}: not uniformly boolean minimal ({witness})")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "product": cmd_product,
    "gen": cmd_gen,
    "paper-suite": cmd_paper_suite,
    "conjecture-affine-ubm": cmd_conjecture,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=(
            logging.WARNING if args.verbose == 0 else
            logging.INFO if args.verbose == 1 else
            logging.DEBUG
        ),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        limits = Limits(args.element_cap, args.subset_limit, args.ubm_limit)
        return COMMANDS[args.command](args, limits)
    except LimitExceededError as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except InconsistencyError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (PrimitiveDfaError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

"""Command line front end.

Every subcommand reads JSON (from --input, "-" for stdin), writes one
deterministic JSON document to stdout (census writes one compact JSON
line per ideal, diagram writes plain text), and reports failures as a
single JSON object on stderr. Exit codes sort failures by kind:

    0  success (including check-stable reporting an unstable input)
    1  bad input, bad usage, I/O trouble, or an exhausted budget
    2  infeasible spec, unstable input where stability is required
    3  corner positions outside the decided first-degree-2 cases
    4  a constructed witness failed its own verification
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .betti import (
    corner_sequence,
    ek_betti,
    module_corner_report,
    render_diagram,
)
from .errors import (
    InfeasibleSpec,
    NotStable,
    RankOutOfRange,
    StableBettiError,
    UncoveredByCharacterization,
    VerificationFailed,
)
from .ideals import parse_module_or_ideal
from .monomials import format_monomial
from .oracle import enumerate_strongly_stable, koszul_betti
from .realize_ideal import (
    MODE_COUPLED,
    MODES,
    CornerSpec,
    _check_mode,
    construct_ideal,
)
from .realize_module import realize_module


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="stablebetti",
        description="Betti tables and corner realization for strongly "
        "stable monomial ideals and their direct sums.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def with_input(p):
        p.add_argument(
            "-i",
            "--input",
            default="-",
            help="path to a JSON document, or - for stdin (default)",
        )
        return p

    with_input(sub.add_parser("betti", help="Betti table of a stable input"))
    with_input(
        sub.add_parser("corners", help="corner report for an ideal or module")
    )
    with_input(
        sub.add_parser("check-stable", help="stability check, never errors")
    )
    with_input(sub.add_parser("diagram", help="plain-text Betti diagram"))

    p = with_input(
        sub.add_parser("oracle-betti", help="Betti table from Koszul homology")
    )
    p.add_argument(
        "--degree-cap",
        type=int,
        default=None,
        help="refuse tables reaching this internal degree (default: safe)",
    )

    p = with_input(
        sub.add_parser("realize-ideal", help="construct an ideal from a spec")
    )
    p.add_argument(
        "--mode",
        choices=sorted(MODES),
        default=None,
        help='value-bound regime; overrides the document "mode" key',
    )

    p = with_input(
        sub.add_parser(
            "realize-module", help="construct a direct sum from a spec"
        )
    )
    p.add_argument(
        "--mode",
        choices=sorted(MODES),
        default=None,
        help='value-bound regime; overrides the document "mode" key',
    )
    p.add_argument(
        "--m",
        type=int,
        default=None,
        help='component count; overrides the document "m" key',
    )

    p = sub.add_parser(
        "census", help="enumerate strongly stable ideals, one JSON line each"
    )
    p.add_argument("-n", type=int, required=True, help="number of variables")
    p.add_argument(
        "-d", "--max-degree", type=int, required=True, help="largest generator degree"
    )
    p.add_argument(
        "--max-gens", type=int, default=None, help="cap on the generator count"
    )
    p.add_argument(
        "--allow-large",
        action="store_true",
        help="lift the n <= 5, max_degree <= 6 guard rails",
    )
    return parser


def _read_input(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _dump(obj: dict, stdout) -> None:
    json.dump(obj, stdout, indent=2, sort_keys=True)
    stdout.write("\n")


def _stars(table):
    return {c for c, _v in corner_sequence(table)}


def _cmd_betti(args, stdout, stdin) -> int:
    module = parse_module_or_ideal(_read_input(args.input, stdin))
    table = ek_betti(module)
    _dump(
        {
            "table": table.to_obj(),
            "diagram": render_diagram(table, _stars(table)),
        },
        stdout,
    )
    return 0


def _cmd_corners(args, stdout, stdin) -> int:
    module = parse_module_or_ideal(_read_input(args.input, stdin))
    _dump(module_corner_report(module), stdout)
    return 0


def _cmd_check_stable(args, stdout, stdin) -> int:
    module = parse_module_or_ideal(_read_input(args.input, stdin))
    stable = all(c.is_stable() for c in module.components)
    strongly = all(c.is_strongly_stable() for c in module.components)
    violation = None
    if not strongly:
        for h, ideal in enumerate(module.components):
            hit = ideal.stability_violation(strong=True)
            if hit is not None:
                g, i, j, moved = hit
                violation = {
                    "component": h + 1,
                    "generator": format_monomial(g),
                    "variable": i,
                    "target": j,
                    "moved": format_monomial(moved) if moved else None,
                }
                break
    _dump(
        {"stable": stable, "strongly_stable": strongly, "violation": violation},
        stdout,
    )
    return 0


def _cmd_diagram(args, stdout, stdin) -> int:
    module = parse_module_or_ideal(_read_input(args.input, stdin))
    table = ek_betti(module)
    stdout.write(render_diagram(table, _stars(table)) + "\n")
    return 0


def _cmd_oracle_betti(args, stdout, stdin) -> int:
    module = parse_module_or_ideal(_read_input(args.input, stdin))
    table = koszul_betti(module, degree_cap=args.degree_cap)
    out = {
        "table": table.to_obj(),
        "diagram": render_diagram(table, _stars(table)),
    }
    if all(
        not c.is_zero and c.is_stable() for c in module.components
    ):
        out["matches_generator_formula"] = ek_betti(module) == table
    _dump(out, stdout)
    return 0


def _spec_and_mode(args, stdin) -> tuple[CornerSpec, str, dict]:
    obj = json.loads(_read_input(args.input, stdin))
    spec = CornerSpec.from_obj(obj)
    mode = args.mode or (obj.get("mode") if isinstance(obj, dict) else None)
    return spec, _check_mode(mode or MODE_COUPLED), obj


def _cmd_realize_ideal(args, stdout, stdin) -> int:
    spec, mode, _obj = _spec_and_mode(args, stdin)
    realization = construct_ideal(spec, mode)
    table = ek_betti(realization.ideal)
    out = realization.to_obj()
    out["table"] = table.to_obj()
    out["diagram"] = render_diagram(table, _stars(table))
    _dump(out, stdout)
    return 0


def _cmd_realize_module(args, stdout, stdin) -> int:
    spec, mode, obj = _spec_and_mode(args, stdin)
    m = args.m if args.m is not None else obj.get("m")
    if m is None:
        raise _UsageError(
            'realize-module needs a component count: pass --m or an "m" key'
        )
    realization = realize_module(spec, m, mode)
    table = ek_betti(realization.module)
    out = realization.to_obj()
    out["table"] = table.to_obj()
    out["diagram"] = render_diagram(table, _stars(table))
    _dump(out, stdout)
    return 0


def _cmd_census(args, stdout) -> int:
    for ideal in enumerate_strongly_stable(
        args.n,
        args.max_degree,
        args.max_gens,
        allow_large=args.allow_large,
    ):
        stdout.write(ideal.to_json() + "\n")
    return 0


def _exit_code(exc: BaseException) -> int:
    if isinstance(exc, VerificationFailed):
        return 4
    if isinstance(exc, UncoveredByCharacterization):
        return 3
    if isinstance(exc, (NotStable, InfeasibleSpec, RankOutOfRange)):
        return 2
    return 1


def run(argv=None, stdout=None, stderr=None, stdin=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    stdin = sys.stdin if stdin is None else stdin
    if argv and argv[0] in ("--version", "-V"):
        stdout.write(f"stablebetti {__version__}\n")
        return 0
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise _UsageError("stablebetti: a COMMAND is required (see --help)")
        if args.command == "betti":
            return _cmd_betti(args, stdout, stdin)
        if args.command == "corners":
            return _cmd_corners(args, stdout, stdin)
        if args.command == "check-stable":
            return _cmd_check_stable(args, stdout, stdin)
        if args.command == "diagram":
            return _cmd_diagram(args, stdout, stdin)
        if args.command == "oracle-betti":
            return _cmd_oracle_betti(args, stdout, stdin)
        if args.command == "realize-ideal":
            return _cmd_realize_ideal(args, stdout, stdin)
        if args.command == "realize-module":
            return _cmd_realize_module(args, stdout, stdin)
        if args.command == "census":
            return _cmd_census(args, stdout)
        raise AssertionError(f"unhandled command {args.command!r}")
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    except (
        StableBettiError,
        json.JSONDecodeError,
        OSError,
        _UsageError,
    ) as exc:
        json.dump(
            {"error": type(exc).__name__, "message": str(exc)},
            stderr,
            sort_keys=True,
        )
        stderr.write("\n")
        return _exit_code(exc)


def main() -> None:
    sys.exit(run())

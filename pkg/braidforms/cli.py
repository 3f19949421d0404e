"""Command-line interface for braidforms.

Every subcommand prints canonical text by default or a JSON document with
``--format json``. Exit codes: 0 success, 1 computation error, 2 usage or
input error, 3 selfcheck failure.
"""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence

from pydantic import BaseModel, ValidationError

from .algebra.braid import BraidWord, Permutation, parse_braid
from .algebra.hecke import braid_to_hecke
from .algebra.inner import (
    Basis,
    expand_in_neg_basis,
    gram,
    gram_determinant,
    inner,
    mfw_sharp,
)
from .algebra.trace import (
    Side,
    extremal_column,
    framed_homfly,
    homfly_P,
    mfw_report,
    mfw_window_check,
    trace_of_braid,
)
from .config import get_settings
from .exceptions import (
    BraidformsError,
    BraidParseError,
    FrontFileNotFoundError,
    FrontParseError,
    PolynomialParseError,
)
from .fronts.construct import closure_pos_braid, closure_two_perms
from .fronts.models import FrontDiagram
from .fronts.parser import parse_front, parse_front_text
from .fronts.ruling import enumerate_rulings, validate_and_orient
from .fronts.svg import write_svg
from .schema import (
    ExpansionResult,
    ExpansionTerm,
    FrontResult,
    FrontStatsResult,
    GramResult,
    HomflyResult,
    InnerResult,
    MFWResult,
    PolynomialModel,
    RulingModel,
    RulingResult,
    SharpnessResult,
    TraceResult,
    shipped_schema,
)
from .selfcheck import LEVELS, run_selfcheck
from .skein.diagram import braid_closure_pd
from .skein.oracle import skein_homfly

logger = logging.getLogger(__name__)

GREEN = "\033[92m"
RED = "\033[91m"
RESET = "\033[0m"

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_USAGE = 2
EXIT_SELFCHECK = 3

_USAGE_ERRORS = (
    BraidParseError,
    FrontParseError,
    FrontFileNotFoundError,
    PolynomialParseError,
    ValidationError,
    ValueError,
)

Outcome = tuple[str, BaseModel | None]


def _braid(args: argparse.Namespace, text: str | None = None) -> BraidWord:
    return parse_braid(args.braid if text is None else text, args.strands)


def _front(args: argparse.Namespace) -> tuple[FrontDiagram, str]:
    if args.file is not None:
        f = parse_front(args.file)
    else:
        f = parse_front_text(args.front)
    return f, str(f)


# Algebra


def _cmd_homfly(args: argparse.Namespace) -> Outcome:
    w = _braid(args)
    if args.command == "framed-homfly":
        p = framed_homfly(w).value
    elif args.command == "oracle-homfly":
        p = skein_homfly(braid_closure_pd(w))
    else:
        p = homfly_P(w)
    invariant = "framed-homfly" if args.command == "framed-homfly" else "homfly"
    model = HomflyResult(
        braid=str(w), strands=w.n, invariant=invariant, polynomial=PolynomialModel.of(p)
    )
    return p.render(), model


def _cmd_trace(args: argparse.Namespace) -> Outcome:
    w = _braid(args)
    tr = trace_of_braid(w).value
    return tr.render(), TraceResult(
        braid=str(w), strands=w.n, trace=PolynomialModel.of(tr)
    )


def _cmd_mfw(args: argparse.Namespace) -> Outcome:
    w = _braid(args)
    report = mfw_report(w)
    window_ok = mfw_window_check(framed_homfly(w))
    model = MFWResult(
        braid=str(w),
        strands=w.n,
        writhe=report.writhe,
        window_ok=window_ok,
        v_min=report.v_min,
        v_max=report.v_max,
        lower=PolynomialModel.of(report.lower),
        upper=PolynomialModel.of(report.upper),
        lower_sharp=report.lower_sharp,
        upper_sharp=report.upper_sharp,
        braid_index_bound=report.braid_index_bound,
    )
    text = "\n".join(
        [
            f"window: {'ok' if window_ok else 'violated'}",
            f"v-range of P: [{report.v_min}, {report.v_max}]",
            f"lower column: {report.lower}"
            + ("" if report.lower_sharp else " (not sharp)"),
            f"upper column: {report.upper}"
            + ("" if report.upper_sharp else " (not sharp)"),
            f"braid index >= {report.braid_index_bound}",
        ]
    )
    return text, model


def _cmd_inner(args: argparse.Namespace) -> Outcome:
    a, b = _braid(args, args.a), _braid(args, args.b)
    side = Side.parse(args.side)
    value = inner(a, b, side)
    model = InnerResult(
        a=str(a),
        b=str(b),
        strands=args.strands,
        side=args.side.upper(),
        value=PolynomialModel.of(value),
    )
    return value.render(), model


def _cmd_gram(args: argparse.Namespace) -> Outcome:
    g = gram(args.n, Basis(args.basis), Side.parse(args.side))
    det = gram_determinant(g) if args.det else None
    model = GramResult(
        n=g.n,
        basis=g.basis.value,
        side=args.side.upper(),
        perms=[list(p.image) for p in g.perms],
        matrix=[[PolynomialModel.of(x) for x in row] for row in g.entries],
        identity=g.is_identity(),
        determinant=None if det is None else PolynomialModel.of(det),
    )
    lines = [" | ".join(x.render() for x in row) for row in g.entries]
    if det is not None:
        lines.append(f"det = {det}")
    return "\n".join(lines), model


def _cmd_expand(args: argparse.Namespace) -> Outcome:
    w = _braid(args)
    coeffs = expand_in_neg_basis(w)
    model = ExpansionResult(
        braid=str(w),
        strands=w.n,
        element=ExpansionTerm.rows(braid_to_hecke(w).terms),
        coefficients=ExpansionTerm.rows(coeffs.items()),
    )
    return "\n".join(f"{p}: {c}" for p, c in coeffs.items()), model


def _cmd_mfw_sharp(args: argparse.Namespace) -> Outcome:
    w = _braid(args)
    side = Side.parse(args.side)
    sharp = mfw_sharp(w, side)
    model = SharpnessResult(
        braid=str(w),
        strands=w.n,
        side=side.value,
        sharp=sharp,
        column=PolynomialModel.of(extremal_column(w, side)),
    )
    return ("sharp" if sharp else "not sharp"), model


# Fronts


def _perm(text: str, n: int) -> Permutation:
    pi = Permutation.parse(text)
    if pi.n != n:
        raise BraidParseError(f"permutation is not on {n} points", text)
    return pi


def _cmd_front_build(args: argparse.Namespace) -> Outcome:
    if args.kind == "nn":
        pi, kappa = _perm(args.pi, args.strands), _perm(args.kappa, args.strands)
        f = closure_two_perms(pi, kappa)
    else:
        f = closure_pos_braid(_braid(args), _perm(args.pi, args.strands))
    return str(f), FrontResult(front=str(f), events=[str(e) for e in f.events])


def _cmd_front_stats(args: argparse.Namespace) -> Outcome:
    f, text = _front(args)
    stats = validate_and_orient(f)
    model = FrontStatsResult(
        front=text,
        C=stats.C,
        w=stats.w,
        tb=stats.tb,
        crossing_signs=list(stats.crossing_signs),
        components=stats.components,
    )
    signs = " ".join("+" if s > 0 else "-" for s in stats.crossing_signs)
    return f"C={stats.C} w={stats.w} tb={stats.tb} signs=[{signs}]", model


def _cmd_front_ruling(args: argparse.Namespace) -> Outcome:
    f, text = _front(args)
    rulings = enumerate_rulings(f)
    model = RulingResult(
        front=text,
        polynomial=PolynomialModel.of(rulings.polynomial),
        rulings=[
            RulingModel(switches=list(r.switches), theta=r.theta)
            for r in rulings.rulings
        ],
    )
    return rulings.polynomial.render(), model


def _cmd_front_svg(args: argparse.Namespace) -> Outcome:
    f, _ = _front(args)
    out = write_svg(f, args.out)
    return f"wrote {out}", None


Handler = Callable[[argparse.Namespace], Outcome]

_HANDLERS: dict[str, Handler] = {
    "homfly": _cmd_homfly,
    "framed-homfly": _cmd_homfly,
    "oracle-homfly": _cmd_homfly,
    "trace": _cmd_trace,
    "mfw": _cmd_mfw,
    "inner": _cmd_inner,
    "gram": _cmd_gram,
    "expand": _cmd_expand,
    "mfw-sharp": _cmd_mfw_sharp,
    "front-build": _cmd_front_build,
    "front-stats": _cmd_front_stats,
    "front-ruling": _cmd_front_ruling,
    "front-svg": _cmd_front_svg,
}


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidforms",
        description="Homfly polynomials, Hecke inner products and Legendrian rulings",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Log debug output to stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    braid = argparse.ArgumentParser(add_help=False)
    braid.add_argument(
        "--braid", required=True, help='Signed generators, e.g. "1 -2 1"'
    )
    braid.add_argument("--strands", type=_positive, required=True)

    front = argparse.ArgumentParser(add_help=False)
    source = front.add_mutually_exclusive_group(required=True)
    source.add_argument("--front", help='Event word, e.g. "B1 B2 X3 D2 D1"')
    source.add_argument("--file", help="Path to a front file")

    for name, help_text in (
        ("homfly", "Oriented Homfly polynomial P(v, z)"),
        ("framed-homfly", "Framed Homfly polynomial H(v, z)"),
        ("oracle-homfly", "Homfly polynomial by skein resolution"),
        ("trace", "Ocneanu trace in Z[z, T]"),
        ("mfw", "MFW window, extremal columns and braid-index bound"),
        ("expand", "Coefficients in the negative permutation-braid basis"),
    ):
        sub.add_parser(name, parents=[common, braid], help=help_text)

    sharp = sub.add_parser(
        "mfw-sharp", parents=[common, braid], help="Is the MFW bound sharp on a side"
    )
    sharp.add_argument("--side", choices=("lower", "upper", "L", "R"), required=True)

    inner_p = sub.add_parser(
        "inner", parents=[common], help="Left or right inner product"
    )
    inner_p.add_argument("--a", required=True)
    inner_p.add_argument("--b", required=True)
    inner_p.add_argument("--strands", type=_positive, required=True)
    inner_p.add_argument("--side", choices=("L", "R"), required=True)

    gram_p = sub.add_parser("gram", parents=[common], help="Gram matrix of a basis")
    gram_p.add_argument("--n", type=_positive, required=True)
    gram_p.add_argument("--basis", choices=("pos", "neg"), required=True)
    gram_p.add_argument("--side", choices=("L", "R"), required=True)
    gram_p.add_argument("--det", action="store_true", help="Also print the determinant")

    build = sub.add_parser("front-build", parents=[common], help="Construct a front")
    build.add_argument("kind", choices=("nn", "pos"))
    build.add_argument("--strands", type=_positive, required=True)
    build.add_argument("--pi", required=True, help='Permutation, e.g. "[2,1]"')
    build.add_argument("--kappa", help="Second permutation (nn)")
    build.add_argument("--braid", help="Positive braid word (pos)")

    sub.add_parser("front-stats", parents=[common, front], help="C, writhe and tb")
    sub.add_parser("front-ruling", parents=[common, front], help="Ruling polynomial")
    svg = sub.add_parser("front-svg", parents=[front], help="Render a front as SVG")
    svg.add_argument("-o", "--out", required=True)

    check = sub.add_parser("selfcheck", parents=[common], help="Run the theorem suites")
    check.add_argument("--level", choices=LEVELS, default="quick")
    check.add_argument("--seed", type=int, default=0)

    sub.add_parser("schema", help="Print the JSON schema of every output")
    return parser


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "front-build":
        needed = "kappa" if args.kind == "nn" else "braid"
        if getattr(args, needed) is None:
            parser.error(f"front-build {args.kind} requires --{needed}")
    return args


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else get_settings().log_level.upper()
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )


def _run_selfcheck(args: argparse.Namespace) -> int:
    report = run_selfcheck(level=args.level, seed=args.seed)
    if args.format == "json":
        print(report.model_dump_json(indent=2))
    else:
        for suite in report.suites:
            if suite.passed:
                print(f"  {GREEN}PASS{RESET}: {suite.name} ({suite.cases} cases)")
            else:
                print(f"  {RED}FAIL{RESET}: {suite.name}: {suite.detail}")
        passed = sum(1 for s in report.suites if s.passed)
        failed = len(report.suites) - passed
        print("=" * 50)
        print(f"Results: {GREEN}{passed} passed{RESET}, {RED}{failed} failed{RESET}")
    return EXIT_OK if report.passed else EXIT_SELFCHECK


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, dispatch, print, and return the exit code."""
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        _configure_logging(args.verbose)
        if args.command == "schema":
            print(json.dumps(shipped_schema(), indent=2, sort_keys=True))
            return EXIT_OK
        if args.command == "selfcheck":
            return _run_selfcheck(args)
        text, model = _HANDLERS[args.command](args)
    except _USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BraidformsError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COMPUTATION

    if getattr(args, "format", "text") == "json" and model is not None:
        print(model.model_dump_json(indent=2))
    else:
        print(text)
    return EXIT_OK


def main() -> None:
    try:
        code = run()
    except KeyboardInterrupt:
        sys.exit(1)
    sys.exit(code)

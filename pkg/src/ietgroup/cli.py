"""Command line interface: ``ietgroup <subcommand> ...``.

Exit status is 0 on success, 2 for usage errors, 3 for malformed input files
or scalars, 4 when a computation exceeds its capacity limit.  Failures print
a single ``error: <kind>: <message>`` line on stderr.
"""

from __future__ import annotations

import argparse
import re
import sys
import warnings
from pathlib import Path

from . import flows, golden, metric, textio
from .growth import CapacityError, growth
from .iet import compose, delta, fix_set, invert
from .plot import segments_tsv
from .scalar import FieldMismatchError, ScalarParseError, format_scalar, parse_scalar

EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_CAPACITY = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let negative scalars such as -1/3+1/3*sqrt(2) through as values
        self._negative_number_matcher = re.compile(r"^-\d")

    def error(self, message):
        raise UsageError(message)


def _scalar(text):
    try:
        return parse_scalar(text)
    except ScalarParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _emit_iet(f, out) -> None:
    _emit(textio.format_iet(f), out)


def cmd_compose(args):
    _emit_iet(compose(textio.read_iet(args.A), textio.read_iet(args.B)), args.output)


def cmd_invert(args):
    _emit_iet(invert(textio.read_iet(args.A)), args.output)


def cmd_apply(args):
    f = textio.read_iet(args.A)
    try:
        y = f(args.x)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(format_scalar(y))


def cmd_dist(args):
    print(format_scalar(metric.distance(textio.read_iet(args.A), textio.read_iet(args.B))))


def cmd_sup(args):
    print(format_scalar(metric.sup_displacement(textio.read_iet(args.A), textio.read_iet(args.B))))


def cmd_koopman(args):
    f, g = textio.read_iet(args.A), textio.read_iet(args.B)
    print(format_scalar(metric.koopman_l2_sq(f, g, textio.read_stepfn(args.PHI))))


def cmd_delta(args):
    print(delta(textio.read_iet(args.A)))


def cmd_fixset(args):
    print(fix_set(textio.read_iet(args.A)))


def cmd_torus(args):
    try:
        f = flows.torus_element(args.len, args.alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit_iet(f, args.output)


def cmd_flow(args):
    spec = textio.read_flow(args.SPEC)
    if args.fixset:
        print(flows.flow_fixed_set(spec))
        return
    if args.t is None:
        raise UsageError("flow needs --t or --fixset")
    _emit_iet(flows.flow_at(spec, args.t), args.output)


def cmd_decompose(args):
    result = flows.decompose_standard(textio.read_iet(args.A))
    if isinstance(result, flows.NotStandard):
        u, v = result.block
        shifts = " ".join(format_scalar(w) for w in result.translations)
        print(f"not-standard\t[{format_scalar(u)}, {format_scalar(v)})\t{shifts}")
        return
    print("u\tv\trotation\talpha")
    for (u, v, rho), a in zip(result.blocks, result.alphas()):
        print("\t".join(format_scalar(x) for x in (u, v, rho, a)))


def cmd_verify(args):
    try:
        verdict = flows.verify_rotation_family(textio.read_samples(args.DIR))
    except ValueError as exc:
        raise textio.FormatError(args.DIR, str(exc)) from None
    if isinstance(verdict, flows.ConsistentWithRotation):
        print(f"consistent-with-rotation\tmax_delta={verdict.max_delta}")
        for lo, hi, rate in verdict.rates:
            shown = "-" if rate is None else format_scalar(rate)
            print(f"{format_scalar(lo)}\t{format_scalar(hi)}\t{shown}")
    elif isinstance(verdict, flows.NotRotation):
        print(f"not-rotation\t{verdict.check}\t{_witness_text(verdict.witness)}")
    else:
        print(f"inconclusive\t{verdict.reason}")


def _witness_text(w) -> str:
    if isinstance(w, tuple):
        return " ".join(_witness_text(x) for x in w)
    if isinstance(w, int):
        return str(w)
    return format_scalar(w)


def cmd_growth(args):
    if (args.map is None) == (args.rt is None):
        raise UsageError("growth needs exactly one of --map H or --rt s --rr s delta")
    if args.map is not None:
        h = textio.read_iet(args.map)
    else:
        if args.rr is None:
            raise UsageError("--rt needs --rr s delta")
        s, d = args.rr
        try:
            h = compose(flows.restricted_rotation(args.rt, 1), flows.restricted_rotation(s, d))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    report = growth(h, args.N, max_pieces=args.max_pieces)
    if args.tsv is not None:
        Path(args.tsv).write_text(report.to_tsv())
    D = report.values
    print(f"N\t{args.N}")
    print(f"delta_first\t{D[0]}")
    print(f"delta_last\t{D[-1]}")
    tail = report.eventually_constant_difference
    print("constant_difference\t" + ("-" if tail is None else f"{tail[0]} from n={tail[1]}"))
    print("slope\t" + ("-" if report.slope_estimate is None else str(report.slope_estimate)))


def cmd_golden(args):
    maker = golden.golden_fn if args.which == "fn" else golden.golden_gn
    try:
        f = maker(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit_iet(f, args.output)


def cmd_plot(args):
    _emit(segments_tsv(textio.read_iet(args.A)), args.tsv)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ietgroup", description="Exact computations in the group of interval exchanges.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("compose", cmd_compose, "write A o B (B applied first)")
    sp.add_argument("A")
    sp.add_argument("B")
    sp.add_argument("-o", "--output")

    sp = add("invert", cmd_invert, "write the inverse of A")
    sp.add_argument("A")
    sp.add_argument("-o", "--output")

    sp = add("apply", cmd_apply, "evaluate A at a point")
    sp.add_argument("A")
    sp.add_argument("x", type=_scalar)

    for name, func, text in (("dist", cmd_dist, "integral metric"), ("sup", cmd_sup, "sup displacement")):
        sp = add(name, func, text + " between A and B")
        sp.add_argument("A")
        sp.add_argument("B")

    sp = add("koopman", cmd_koopman, "squared L2 distance of Koopman images of a step function")
    sp.add_argument("A")
    sp.add_argument("B")
    sp.add_argument("PHI")

    sp = add("delta", cmd_delta, "number of discontinuities of A, counting 0")
    sp.add_argument("A")

    sp = add("fixset", cmd_fixset, "fixed set of A")
    sp.add_argument("A")

    sp = add("torus", cmd_torus, "standard torus element for block lengths and torus point")
    sp.add_argument("--len", nargs="+", type=_scalar, required=True)
    sp.add_argument("--alpha", nargs="+", type=_scalar, required=True)
    sp.add_argument("-o", "--output")

    sp = add("flow", cmd_flow, "evaluate a flow file at a time")
    sp.add_argument("SPEC")
    sp.add_argument("--t", type=_scalar)
    sp.add_argument("--fixset", action="store_true", help="print the global fixed set instead")
    sp.add_argument("-o", "--output")

    sp = add("decompose", cmd_decompose, "recognise A as a standard torus element")
    sp.add_argument("A")

    sp = add("verify-rotation", cmd_verify, "check a directory of t=<scalar>.iet samples")
    sp.add_argument("DIR")

    sp = add("growth", cmd_growth, "discontinuity growth of the powers of a map")
    sp.add_argument("--map")
    sp.add_argument("--rt", type=_scalar, help="rotation amount t of h = r_t o r_(s,delta)")
    sp.add_argument("--rr", nargs=2, type=_scalar, metavar=("S", "DELTA"))
    sp.add_argument("-N", type=int, required=True)
    sp.add_argument("--tsv")
    sp.add_argument("--max-pieces", type=int)

    sp = add("golden", cmd_golden, "write a member of a reference sequence")
    sp.add_argument("which", choices=("fn", "gn"))
    sp.add_argument("n", type=int)
    sp.add_argument("-o", "--output")

    sp = add("plot", cmd_plot, "graph segments of A as TSV")
    sp.add_argument("A")
    sp.add_argument("--tsv")
    return p


def _fail(kind: str, message: str, code: int) -> int:
    message = " ".join(str(message).split())
    sys.stderr.write(f"error: {kind}: {message}\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", textio.NonCanonicalInputWarning)
        try:
            args = parser.parse_args(argv)
            if args.command is None:
                raise UsageError("missing subcommand")
            args.func(args)
            code = 0
        except UsageError as exc:
            code = _fail("usage", exc, EXIT_USAGE)
        except (textio.FormatError, ScalarParseError, FieldMismatchError) as exc:
            code = _fail("format", exc, EXIT_FORMAT)
        except FileNotFoundError as exc:
            code = _fail("format", f"{exc.filename}: file not found", EXIT_FORMAT)
        except CapacityError as exc:
            code = _fail("capacity", exc, EXIT_CAPACITY)
    for w in caught:
        sys.stderr.write(f"warning: {w.message}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 when routes or checks disagree.
"""

import argparse
import json
import sys

from . import constants, lattice, puzzles
from .partitions import DomainError, Partition
from .polyalg import InconsistencyError, format_unipoly

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text):
    try:
        return Partition.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _routes(text):
    if text == "all":
        return constants.ALL_ROUTES
    try:
        return tuple(constants.Route(t.strip()) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown route in {text!r}") from None


def _add_triple(p, required=True):
    p.add_argument("--lambda", dest="lam", type=_partition, required=required, metavar="PARTS")
    p.add_argument("--mu", type=_partition, required=required, metavar="PARTS")
    p.add_argument("--nu", type=_partition, required=required, metavar="PARTS")


def build_parser():
    parser = _Parser(prog="hallpuzzle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, helptext in (("hall", "Hall polynomial: coefficient of P_lambda in P_mu P_nu"),
                           ("inv-kostka", "coefficient of s_lambda in s_mu P_nu"),
                           ("lr", "Littlewood-Richardson coefficient")):
        p = sub.add_parser(name, help=helptext)
        _add_triple(p)
        p.add_argument("--route", type=_routes, default=constants.ALL_ROUTES,
                       help="puzzle, ct, divdiff, oracle, a comma list, or all (default)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--series-bound", type=int, default=None,
                       help="truncation order of the constant-term kernel")
        p.add_argument("--trace", action="store_true", help="also list the witnessing puzzles")

    p = sub.add_parser("puzzles", help="enumerate and render puzzles")
    p.add_argument("--variant", choices=("hall", "kostka", "rt", "kt"), required=True)
    _add_triple(p)
    p.add_argument("--target", action="store_true",
                   help="read --lambda/--mu/--nu as the target triple and build the frame")
    p.add_argument("--render", choices=("ascii", "json"), default="ascii")
    p.add_argument("--literal", action="store_true",
                   help="drop the rearrangement multiplicity from dipole puzzle weights")
    p.add_argument("--trace", action="store_true", help="also print the lattice configurations")

    p = sub.add_parser("validate", help="cross-validate all routes over a sweep")
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--kind", choices=("hall", "inv-kostka", "lr", "all"), default="hall")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check-models", help="finite checks of the lattice model identities")
    p.add_argument("--cutoff", type=int, default=2)
    return parser


def _cmd_constant(args, out):
    fn = {"hall": constants.hall, "inv-kostka": constants.inv_kostka, "lr": constants.lr}[args.command]
    kwargs = {"trace": True} if args.command == "lr" and args.trace else {}
    result = fn(args.lam, args.mu, args.nu, args.route, args.series_bound, **kwargs)
    if args.format == "json":
        print(json.dumps(result.to_json_dict(), sort_keys=True), file=out)
    elif result.agree:
        value = result.value
        print(format_unipoly(value) if not isinstance(value, int) else value, file=out)
    else:
        for route, value in result.values.items():
            shown = format_unipoly(value) if not isinstance(value, int) else value
            print(f"{route.value}: {shown}", file=out)
    if args.format == "text":
        for note in result.notes:
            print(f"# {note}", file=out)
    if args.trace:
        _trace_constant(args, result, out)
    return EXIT_OK if result.agree else EXIT_DISAGREE


def _trace_constant(args, result, out):
    if args.command == "lr":
        for p in result.witnesses:
            print(puzzles.render(p), file=out)
            print(file=out)
        return
    if args.command == "hall":
        frame = constants.hall_frame_data(args.lam, args.mu, args.nu)
        found = puzzles.enumerate_hall_puzzles(frame[1], frame[0], frame[2])
    else:
        frame = constants.kostka_frame_data(args.lam, args.mu, args.nu)
        found = puzzles.enumerate_kostka_puzzles(frame[1], frame[0], frame[2])
    print(f"# frame lambda={frame[0]} mu={frame[1]} nu={frame[2]}: {len(found)} puzzles, "
          f"signed sum {format_unipoly(puzzles.signed_weight_sum(found))}", file=out)
    for p in found:
        print(puzzles.render(p), file=out)
        print(file=out)


def _cmd_puzzles(args, out):
    lam, mu, nu = args.lam, args.mu, args.nu
    weighting = "literal" if args.literal else "orbit"
    if args.variant in ("hall", "kostka"):
        if args.target:
            build = constants.hall_frame_data if args.variant == "hall" else constants.kostka_frame_data
            lam, mu, nu = build(lam, mu, nu)
        enum = puzzles.enumerate_hall_puzzles if args.variant == "hall" else puzzles.enumerate_kostka_puzzles
        found = enum(mu, lam, nu, weighting)
        summary = {"count": len(found), "signed_sum": format_unipoly(puzzles.signed_weight_sum(found))}
        configs = None
        if args.trace:
            frame = (lattice.hall_frame if args.variant == "hall" else lattice.kostka_frame)(lam, mu, nu)
            configs = lattice.enumerate_configurations(frame.model, frame.colors, frame.top, frame.bottom)
    else:
        found = puzzles.enumerate_rt_puzzles(lam, mu, nu)
        if args.variant == "kt":
            found = [puzzles.rt_to_kt(p) for p in found]
        summary = {"count": len(found)}
        configs = puzzles.lr_configurations(lam, mu, nu) if args.trace else None
    if args.render == "json":
        payload = {"summary": summary, "puzzles": [puzzles.to_json_dict(p) for p in found]}
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print(f"# {args.variant} frame lambda={lam} mu={mu} nu={nu}: "
              + ", ".join(f"{k} {v}" for k, v in summary.items()), file=out)
        for i, p in enumerate(found, 1):
            print(f"## puzzle {i}", file=out)
            print(puzzles.render(p), file=out)
    if configs is not None:
        for i, c in enumerate(configs, 1):
            print(f"## lattice configuration {i}", file=out)
            print(lattice.render_configuration(c), file=out)
    return EXIT_OK


def _cmd_validate(args, out):
    kinds = [constants.Kind(k) for k in ("hall", "inv-kostka", "lr")] if args.kind == "all" \
        else [constants.Kind(args.kind)]
    report = constants.cross_validate(args.max_weight, kinds, jobs=args.jobs)
    if args.format == "json":
        payload = {
            "max_weight": args.max_weight,
            "results": [r.to_json_dict() for rs in report.results.values() for r in rs],
            "checks": {k: [[list(p) for p in item] for item in v] for k, v in report.checks.items()},
            "ok": report.ok,
        }
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        for line in report.summary_lines():
            print(line, file=out)
        for r in report.disagreements:
            print(json.dumps(r.to_json_dict(), sort_keys=True), file=out)
    return EXIT_OK if report.ok else EXIT_DISAGREE


def _cmd_check_models(args, out):
    ok = True
    for model in (lattice.Model.TBOSON, lattice.Model.BB, lattice.Model.FB):
        passed, msg = lattice.check_intertwining(model, args.cutoff)
        ok &= passed
        print(f"intertwining {model.name} cutoff {args.cutoff}: {'ok' if passed else msg}", file=out)
    for model in (lattice.Model.BB, lattice.Model.FB):
        passed, msg = lattice.check_commutation(model)
        ok &= passed
        print(f"commutation {model.name}: {'ok' if passed else msg}", file=out)
    bad = lattice.check_trivial_actions()
    ok &= not bad
    print(f"trivial action: {'ok' if not bad else f'{len(bad)} failures'}", file=out)
    return EXIT_OK if ok else EXIT_DISAGREE


def run(argv=None, out=None):
    """Parse ``argv`` and execute; returns the exit status."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    handlers = {"hall": _cmd_constant, "inv-kostka": _cmd_constant, "lr": _cmd_constant,
                "puzzles": _cmd_puzzles, "validate": _cmd_validate, "check-models": _cmd_check_models}
    try:
        return handlers[args.command](args, out)
    except (DomainError, puzzles.PuzzleError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


def main():
    sys.exit(run())

"""Command line front end.

    gitfan validate FILE
    gitfan weight-cone FILE
    gitfan orbit-cones FILE [--subset-cap K]
    gitfan gitfan FILE
    gitfan classify FILE --pair 2,1 1,2 [--bound 12] [--with-oracle]
    gitfan oracle FILE --pair 2,1 1,2 [--bound 12]
    gitfan plot FILE --out fan.svg

Structured output is JSON with sorted keys on stdout; diagnostics go to
stderr as one line ``gitfan: error: <reason>: <message>``.
"""

import argparse
import json
import sys

from .classify import DEFAULT_ORACLE_BOUND, full_report
from .fan import FanAxiomError, FanDimensionError, OutsideWeightConeError, enumerate_gitfan
from .fibers import RelationsPresentError, UnboundedFibersError, oracle_scan
from .orbits import DEFAULT_SUBSET_CAP, SubsetCapError, cone_to_dict, enumerate_orbit_cones
from .plot import fan_svg
from .presentation import PresentationError, load_presentation, validate, weight_cone

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INVALID = 4
EXIT_DIMENSION = 5
EXIT_UNBOUNDED = 6
EXIT_SUBSET_CAP = 7
EXIT_OUTSIDE = 8
EXIT_INTERNAL = 9
EXIT_RELATIONS = 10

COMMANDS = ("validate", "weight-cone", "orbit-cones", "gitfan", "classify", "oracle", "plot")


class CLIError(Exception):
    def __init__(self, code, reason, message):
        self.code, self.reason = code, reason
        super().__init__(message)


def _vector(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer vector")


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser():
    parser = argparse.ArgumentParser(prog="gitfan", description="GIT-fans and generating weight pairs")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", help="presentation document (YAML or JSON)")
    parser.add_argument("--pair", nargs=2, type=_vector, metavar=("U", "V"))
    parser.add_argument("--bound", type=_positive, default=DEFAULT_ORACLE_BOUND)
    parser.add_argument("--subset-cap", type=_positive, default=DEFAULT_SUBSET_CAP)
    parser.add_argument("--format", choices=("structured", "pretty"), default="structured")
    parser.add_argument("--out", help="write the document here instead of stdout")
    parser.add_argument("--with-oracle", action="store_true",
                        help="classify: attach the oracle scan even when the fan decides")
    return parser


def _table(header, rows):
    rows = [[str(x) for x in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    out = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    out.extend(fmt.format(*r) for r in rows)
    return "\n".join(out)


def _cone_rows(cones):
    return [[c["dim"], c["rays"], c.get("lineality", [])] for c in cones]


def render_pretty(command, doc) -> str:
    if command == "orbit-cones":
        rows = [[c["dim"], c["rays"], c.get("lineality", []), c["witnesses"]] for c in doc["orbit_cones"]]
        return _table(["dim", "rays", "lineality", "subsets"], rows)
    if command == "gitfan":
        rows = [[c["index"], c["dim"], c["rays"], "yes" if c["maximal"] else "", c["faces"]]
                for c in doc["cones"]]
        return _table(["#", "dim", "rays", "maximal", "faces"], rows)
    if command in ("oracle", "classify"):
        parts = []
        if command == "classify":
            cls = doc["classification"]
            parts.append(f"verdict: {cls['verdict']}")
            if cls["common_cone"] is not None:
                parts.append(f"common cone rays: {cls['common_cone']['rays']}")
                parts.append(f"relative interior: u={cls['interior']['u']} v={cls['interior']['v']}")
            else:
                parts.append("failing orbit cones: "
                             + ", ".join(str(c["rays"]) for c in cls["failing_orbit_cones"]))
            if "oracle_note" in doc:
                parts.append(doc["oracle_note"])
            doc = doc.get("oracle")
        if doc is not None:
            rows = [[o["n"], "yes" if o["surjective"] else "no", o["witness"] or "",
                     o["fiber_u"], o["fiber_v"], o["target"]] for o in doc["degrees"]]
            parts.append(_table(["n", "onto", "witness", "|u|", "|v|", "|u+v|"], rows))
            parts.append(doc["annotation"])
        return "\n".join(parts)
    if command == "weight-cone":
        return "\n".join([f"rays: {doc['rays']}", f"lineality: {doc.get('lineality', [])}",
                          f"inequalities: {doc['inequalities']}", f"equations: {doc['equations']}"])
    return "\n".join(f"{k}: {v}" for k, v in sorted(doc.items()))


def run(args) -> tuple[str, str]:
    """Execute one invocation; returns ``(text, kind)`` with kind 'json', 'text' or 'svg'."""
    if args.command in ("classify", "oracle") and args.pair is None:
        raise CLIError(EXIT_USAGE, "missing-pair", f"{args.command} needs --pair U V")
    try:
        p = load_presentation(args.input)
    except OSError as exc:
        raise CLIError(EXIT_PARSE, "unreadable-input", str(exc))
    except PresentationError as exc:
        raise CLIError(EXIT_PARSE, "parse-error", str(exc))
    try:
        report = validate(p)
    except PresentationError as exc:
        raise CLIError(EXIT_INVALID, "invalid-presentation", str(exc))
    if args.pair is not None:
        for w in args.pair:
            if len(w) != p.d:
                raise CLIError(EXIT_USAGE, "bad-pair", f"weight {w} must have length {p.d}")

    cmd = args.command
    try:
        if cmd == "validate":
            doc = report.to_dict()
        elif cmd == "weight-cone":
            doc = cone_to_dict(weight_cone(p))
        elif cmd == "orbit-cones":
            doc = enumerate_orbit_cones(p, args.subset_cap).to_dict()
        elif cmd in ("gitfan", "plot"):
            if cmd == "plot" and p.d != 2:
                raise CLIError(EXIT_DIMENSION, "dimension", f"plot needs lattice rank 2, got {p.d}")
            fan = enumerate_gitfan(enumerate_orbit_cones(p, args.subset_cap))
            if cmd == "plot":
                return fan_svg(fan), "svg"
            doc = fan.to_dict()
        elif cmd == "classify":
            oc = enumerate_orbit_cones(p, args.subset_cap)
            doc = full_report(*args.pair, p, args.bound, args.with_oracle, oc).to_dict()
        else:
            oc = enumerate_orbit_cones(p, args.subset_cap)
            for w in args.pair:
                if not oc.weight_cone.contains(w):
                    raise OutsideWeightConeError(w)
            doc = oracle_scan(*args.pair, args.bound, p).to_dict()
    except FanDimensionError as exc:
        raise CLIError(EXIT_DIMENSION, "dimension", str(exc))
    except SubsetCapError as exc:
        raise CLIError(EXIT_SUBSET_CAP, "subset-cap", str(exc))
    except OutsideWeightConeError as exc:
        raise CLIError(EXIT_OUTSIDE, "outside-weight-cone", str(exc))
    except UnboundedFibersError as exc:
        raise CLIError(EXIT_UNBOUNDED, "unbounded-fibers", str(exc))
    except RelationsPresentError as exc:
        raise CLIError(EXIT_RELATIONS, "relations-present", str(exc))
    except FanAxiomError as exc:
        raise CLIError(EXIT_INTERNAL, "fan-axiom-violation", str(exc))

    if args.format == "pretty":
        return render_pretty(cmd, doc) + "\n", "text"
    return json.dumps(doc, indent=2, sort_keys=True) + "\n", "json"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, _ = run(args)
    except CLIError as exc:
        print(f"gitfan: error: {exc.reason}: {exc}", file=sys.stderr)
        return exc.code
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

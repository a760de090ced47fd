"""Command-line interface: transform, classify, compose, verify, diagram.

Exit codes: 0 success, 1 identity verification failure, 2 input error,
3 degenerate rendering (empty window / out-of-window event).  Every error
path prints a single ``error: ...`` line to stderr.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import verify
from .core import (
    STANDARD_METRIC,
    SWAPPED_METRIC,
    DomainError,
    NotDecomposableError,
    Transform,
    TwoVector,
    apply,
    classify_geometric,
    compose,
    make_l,
    make_lambda,
    make_lambda_infinite_limit,
    refit,
)
from .diagram import (
    DiagramStyle,
    EmptyWindowError,
    OutOfWindowError,
    annotate_events,
    render_pair,
)
from .scenario_io import load_scenario
from .worldlines import build_fig2_scenario, build_fig3_scenario, build_fig4_scenario

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RENDER_DEGENERATE = 3

_BUILTIN_SCENARIOS = {
    "fig2": build_fig2_scenario,
    "fig3": build_fig3_scenario,
    "fig4": build_fig4_scenario,
}


def _parse_vec(text: str) -> TwoVector:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated numbers, got {text!r}")
    return TwoVector(float(parts[0]), float(parts[1]))


def _build_transform(branch: str, tau: int, k: float, vel_text: str) -> Transform:
    v = float(vel_text)  # also accepts "inf"/"infinity"
    if math.isinf(v):
        if branch != "lambda":
            raise DomainError('infinite velocity is only defined for the "lambda" branch')
        if v < 0:
            raise DomainError("negative infinite velocity is not supported")
        return make_lambda_infinite_limit(tau, k)
    if branch == "lambda":
        return make_lambda(tau, k, v)
    return make_l(tau, k, v)


def _parse_transform_spec(spec: str) -> Transform:
    parts = spec.split(",")
    if len(parts) != 4:
        raise ValueError(f"transform spec must be branch,tau,k,vel, got {spec!r}")
    branch = parts[0].strip()
    if branch not in ("lambda", "l"):
        raise ValueError(f'branch must be "lambda" or "l", got {branch!r}')
    return _build_transform(branch, int(parts[1]), float(parts[2]), parts[3])


def _cmd_transform(args) -> int:
    t = _build_transform(args.branch, args.tau, args.k, args.vel)
    r = apply(t, _parse_vec(args.vec))
    print(f"{r.c1!r},{r.c2!r}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    metric = STANDARD_METRIC if args.metric == "standard" else SWAPPED_METRIC
    report = classify_geometric(_parse_vec(args.vec), metric)
    print(f"coord_speed: {report.coord_speed.value!r}")
    print(f"coord_superluminal: {'true' if report.coord_superluminal else 'false'}")
    print(f"interval_sq: {report.interval_sq!r}")
    print(f"causal_class: {report.causal_class.value}")
    return EXIT_OK


def _cmd_compose(args) -> int:
    product = compose(_parse_transform_spec(args.first),
                      _parse_transform_spec(args.second))
    (a, b), (c, d) = product.m
    print(f"row1: {a!r} {b!r}")
    print(f"row2: {c!r} {d!r}")
    try:
        fitted = refit(product, k=1.0)
        print(f"fit: branch={fitted.branch.value} tau={fitted.tau} "
              f"k={fitted.k!r} vel={fitted.vel!r}")
    except NotDecomposableError:
        print("fit: none (no k=1 family form matches)")
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = verify.run_verification(trials=args.trials, seed=args.seed)
    print(verify.format_report(report))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _cmd_diagram(args) -> int:
    if args.builtin is not None:
        scenario = _BUILTIN_SCENARIOS[args.builtin]()
    else:
        scenario = load_scenario(args.scenario)
    style = DiagramStyle(width_px=args.width, height_px=args.height,
                         decimal_places=args.decimals)
    original, transformed = render_pair(scenario, style)
    if scenario.events:
        original = annotate_events(original, scenario.events)
        moved = tuple((apply(scenario.transform, at), label)
                      for at, label in scenario.events)
        transformed = annotate_events(transformed, moved)
    out_original = Path(f"{args.out}-original.svg")
    out_transformed = Path(f"{args.out}-transformed.svg")
    out_original.write_text(original.to_svg(), encoding="utf-8", newline="\n")
    out_transformed.write_text(transformed.to_svg(), encoding="utf-8", newline="\n")
    print(f"wrote {out_original} and {out_transformed}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bilorentz",
        description="Generalized 1+1D boost transformations: apply, classify, "
                    "verify identities, and draw Minkowski diagram pairs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply a family transform to a vector")
    p.add_argument("--branch", choices=("lambda", "l"), required=True)
    p.add_argument("--tau", type=int, choices=(1, -1), required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--vel", required=True,
                   help='velocity in units of c, or "infinity" (lambda, k<0 only)')
    p.add_argument("--vec", required=True, help="vector as c1,c2 (use --vec=-1,2 for negatives)")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("classify", help="classify a displacement")
    p.add_argument("--vec", required=True, help="displacement as c1,c2")
    p.add_argument("--metric", choices=("standard", "swapped"), default="standard",
                   help="standard = diag(1,-1), swapped = diag(-1,1)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("compose", help="multiply two family transforms")
    p.add_argument("first", help="transform spec branch,tau,k,vel")
    p.add_argument("second", help="transform spec branch,tau,k,vel")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("verify", help="check all transformation identities")
    p.add_argument("--trials", type=int, default=100_000,
                   help="fuzz population size (default 100000)")
    p.add_argument("--seed", type=int, default=0, help="fuzz seed (default 0)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("diagram", help="render a scenario to an SVG pair")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--builtin", choices=tuple(_BUILTIN_SCENARIOS))
    source.add_argument("--scenario", help="path to a scenario JSON file")
    p.add_argument("--out", required=True, help="output path prefix")
    p.add_argument("--width", type=int, default=480)
    p.add_argument("--height", type=int, default=480)
    p.add_argument("--decimals", type=int, default=6)
    p.set_defaults(func=_cmd_diagram)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (EmptyWindowError, OutOfWindowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RENDER_DEGENERATE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

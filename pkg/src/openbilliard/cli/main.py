import argparse
import contextlib
import io
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any

import matplotlib.pyplot as plt

import openbilliard as ob
from openbilliard.constants import build_domain, compute_constants
from openbilliard.dimension import DimensionReport, estimate_dimension
from openbilliard.dynamics import PhasePoint, simulate
from openbilliard.geometry import no_eclipse_check
from openbilliard.orbits import (
    SymbolSequence,
    all_closest_pairs,
    find_periodic_orbit,
    hull_H,
    test_hull_conjecture,
)
from openbilliard.plot import BilliardPlot, DomainPlot

from .config import BilliardConfig, load_config
from .report import RunReport, format_table

_logger = logging.getLogger(__name__)

_VARIANTS = {
    "eq1": "two_sided_eq1",
    "eq2": "alpha_scaled_eq2",
    "eq7": "general_eq7",
}

_DOMAIN_FAILURES = (
    ob.EclipseViolationError,
    ob.DegenerateHullError,
    ob.InadmissibleSequenceError,
    ob.InvalidValueError,
    ob.UnsupportedError,
)
_NUMERICAL_FAILURES = (
    ob.NoConvergenceError,
    ob.TangentRayError,
    ob.GrazingCollisionError,
    ob.DegeneratePointError,
)


class _Outcome:
    """Collects the text summary, the results and the exit code of one command."""

    def __init__(self) -> None:
        self.lines: list[str] = []
        self.results: dict[str, Any] = {}
        self.exit_code = 0


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _point(point) -> str:
    return "(" + ", ".join(_fmt(float(x)) for x in point) + ")"


def cmd_validate(config: BilliardConfig, args: argparse.Namespace, outcome: _Outcome) -> None:
    billiard = config.billiard()
    report = no_eclipse_check(billiard, config.tolerances)

    rows = [("obstacle", "hull of", "margin", "status")]
    checks = []
    for check in report.checks:
        i, j = check.hull_of
        status = "pass" if check.passed else "FAIL"
        hull_label = f"K{i + 1} K{j + 1}"
        rows.append((f"K{check.obstacle + 1}", hull_label, _fmt(check.margin), status))
        checks.append(
            {
                "obstacle": check.obstacle + 1,
                "hull_of": [i + 1, j + 1],
                "margin": check.margin,
                "passed": check.passed,
            }
        )

    outcome.lines += format_table(rows)
    verdict = "satisfied" if report.passed else "violated"
    outcome.lines.append(f"no-eclipse condition: {verdict}")
    outcome.results = {"passed": report.passed, "checks": checks}
    if not report.passed:
        outcome.exit_code = 1


def _bounds_result(report: DimensionReport, variants: list[str]) -> dict[str, Any]:
    result = report.as_dict()
    for pair in result["constants"]["pairs"]:
        pair["i"] += 1
        pair["j"] += 1
    result["bounds"] = {
        name: bound for name, bound in result["bounds"].items() if name in variants
    }
    return result


def cmd_bounds(config: BilliardConfig, args: argparse.Namespace, outcome: _Outcome) -> None:
    billiard = config.billiard()
    modes = ["natural", "adjusted"] if args.mode == "both" else [args.mode]
    variants = list(_VARIANTS.values()) if args.variant == "all" else [_VARIANTS[args.variant]]

    for mode in modes:
        report = estimate_dimension(billiard, mode, config.tolerances, config.options)
        constants = report.constants
        clamped = " (clamped)" if report.alpha_clamped else ""
        outcome.lines += [
            f"[{mode}]",
            *format_table(
                [
                    ("d_min", _fmt(constants.d_min)),
                    ("d_max", _fmt(constants.d_max)),
                    ("cos φ⁺", _fmt(constants.cos_phi_plus)),
                    ("κ⁻, κ⁺", f"{_fmt(constants.kappa_minus)}, {_fmt(constants.kappa_plus)}"),
                    ("g_min", _fmt(report.extrema.g_min)),
                    ("g_max", _fmt(report.extrema.g_max)),
                    ("λ₁", _fmt(report.chain.lambda1)),
                    ("μ₁", _fmt(report.chain.mu1)),
                    ("α", _fmt(report.alpha_raw) + clamped),
                    ("pinching", str(report.pinching_satisfied)),
                ]
            ),
        ]
        for name in variants:
            if name not in report.bounds:
                outcome.lines.append(f"{name}: not applicable, α > 1")
                continue
            bound = report.bounds[name]
            outcome.lines.append(f"{name}: [{_fmt(bound.lower)}, {_fmt(bound.upper)}]")
        outcome.results[mode] = _bounds_result(report, variants)

    if args.test_conjecture:
        _conjecture(billiard, config, args, outcome)


def _conjecture(billiard, config: BilliardConfig, args: argparse.Namespace, outcome: _Outcome):
    report = test_hull_conjecture(
        billiard, args.max_period, args.samples, args.seed, config.tolerances
    )
    result = report.as_dict()
    if result["worst_sequence"] is not None:
        result["worst_sequence"] = [s + 1 for s in result["worst_sequence"]]
    worst = "-" if report.worst_sequence is None else report.worst_sequence.one_based()

    outcome.lines += [
        "[hull conjecture]",
        *format_table(
            [
                ("orbits tested", str(report.orbits_tested)),
                ("failures", str(report.failures)),
                ("sampled", str(report.sequences_sampled)),
                ("max signed distance", _fmt(report.max_signed_distance)),
                ("max violation", _fmt(report.max_violation)),
                ("worst sequence", worst),
            ]
        ),
    ]
    outcome.results["hull_conjecture"] = result


def cmd_orbit(config: BilliardConfig, args: argparse.Namespace, outcome: _Outcome) -> None:
    billiard = config.billiard()
    sequence = SymbolSequence.parse(args.sequence)
    orbit = find_periodic_orbit(billiard, sequence, config.tolerances, args.max_iter)

    rows = [("step", "obstacle", "point")]
    for step, (index, point) in enumerate(zip(orbit.sequence, orbit.points)):
        rows.append((str(step + 1), f"K{index + 1}", _point(point)))
    outcome.lines += format_table(rows)
    outcome.lines += [
        f"length F = {_fmt(orbit.length)}",
        f"residual = {orbit.residual:.3g}",
        f"sweeps = {orbit.sweeps}",
    ]
    outcome.results = {
        "sequence": [index + 1 for index in orbit.sequence],
        "points": orbit.points,
        "length": orbit.length,
        "residual": orbit.residual,
        "sweeps": orbit.sweeps,
    }


def cmd_hull(config: BilliardConfig, args: argparse.Namespace, outcome: _Outcome) -> None:
    billiard = config.billiard()
    pairs = all_closest_pairs(billiard, config.tolerances)

    rows = [("point", "coordinates")]
    points = []
    for i in range(billiard.size):
        for j in range(billiard.size):
            if i != j:
                point = pairs.point(i, j)
                rows.append((f"p{i + 1}{j + 1}", _point(point)))
                points.append({"i": i + 1, "j": j + 1, "point": point})
    outcome.lines += format_table(rows)

    hull = hull_H(billiard, pairs, config.tolerances)
    outcome.lines.append(
        f"hull: {len(hull.vertices)} vertices, affine dimension {hull.affine_dimension}"
    )
    outcome.results = {
        "points": points,
        "vertices": hull.vertices,
        "affine_dimension": hull.affine_dimension,
        "degenerate": hull.is_degenerate,
    }

    if args.test_conjecture:
        _conjecture(billiard, config, args, outcome)


def _parse_vector(text: str, dimension: int, name: str) -> list[float]:
    try:
        values = [float(item) for item in text.split(",")]
    except ValueError:
        raise ob.InvalidValueError(f"Cannot parse {name} '{text}'.")
    if len(values) != dimension:
        raise ob.InvalidValueError(f"{name} needs {dimension} components, got {len(values)}.")
    return values


def cmd_simulate(config: BilliardConfig, args: argparse.Namespace, outcome: _Outcome) -> None:
    billiard = config.billiard()
    x0 = PhasePoint.create(
        _parse_vector(args.q, billiard.dimension, "--q"),
        _parse_vector(args.v, billiard.dimension, "--v"),
    )
    trajectory = simulate(
        x0, billiard, args.steps, tolerances=config.tolerances, options=config.options
    )

    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        for step in range(len(trajectory)):
            ob.log(step, trajectory)
    outcome.lines += buffer.getvalue().splitlines()
    if trajectory.escaped:
        outcome.lines.append(f"escaped after {len(trajectory)} collisions")

    fronts = trajectory.fronts
    outcome.results = {
        "escaped": trajectory.escaped,
        "collisions": [
            {
                "obstacle": event.obstacle + 1,
                "point": event.point,
                "flight": event.flight,
                "angle": event.angle,
                "curvature": fronts[step + 1].directional_curvature(
                    trajectory.directions[step + 1]
                ),
                "delta": trajectory.deltas[step],
                "delta_product": trajectory.delta_products[step],
            }
            for step, event in enumerate(trajectory.events)
        ],
    }


def cmd_plot(config: BilliardConfig, args: argparse.Namespace, outcome: _Outcome) -> None:
    billiard = config.billiard()

    if args.what == "domain":
        natural = compute_constants(billiard, "natural", config.tolerances, config.options)
        adjusted = compute_constants(billiard, "adjusted", config.tolerances, config.options)
        plot = DomainPlot(
            build_domain(natural, billiard.dimension),
            build_domain(adjusted, billiard.dimension),
        )
        plot.plot()
    else:
        if billiard.dimension != 2:
            raise ob.UnsupportedError(
                f"Cannot plot a billiard of dimension {billiard.dimension}."
            )
        orbit = None
        if args.what == "orbit":
            orbit = find_periodic_orbit(
                billiard, SymbolSequence.parse(args.sequence), config.tolerances
            )
        constants = compute_constants(billiard, args.mode, config.tolerances, config.options)
        plot = BilliardPlot(billiard, constants, show_hull=args.what != "billiard")
        plot.plot(orbit)

    try:
        plot.save(args.out)
    finally:
        plt.close(plot.figure)
    outcome.lines.append(f"wrote {args.out}")
    outcome.results = {"what": args.what, "out": str(args.out)}


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="JSON billiard configuration")
    common.add_argument(
        "--tolerance-profile",
        default="default",
        choices=sorted(ob.config.PROFILES),
        help="named tolerance set",
    )
    common.add_argument("--json", metavar="OUT", help="write the JSON report to this file")
    common.add_argument("--seed", type=int, default=0, help="seed for random sampling")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def _conjecture_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--test-conjecture", action="store_true")
    parser.add_argument("--max-period", type=int, default=4)
    parser.add_argument("--samples", type=int, default=200)


def build_parser() -> argparse.ArgumentParser:
    common = _common_arguments()
    parser = argparse.ArgumentParser(
        prog="openbilliard", description="Dimension estimates for open billiards."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the no-eclipse condition")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser(
        "bounds",
        parents=[common],
        help="estimate the Hausdorff dimension",
        epilog=(
            "The bundled three-disk example doc/configs/three_disks.json uses one radius "
            "assignment: r=1 at the apex (0,10), r=2 at (4,0) and r=3 at (-4,0). Other "
            "assignments are estimated from their own configuration files."
        ),
    )
    p.add_argument("--mode", choices=["natural", "adjusted", "both"], default="both")
    p.add_argument("--variant", choices=["eq1", "eq2", "eq7", "all"], default="all")
    _conjecture_arguments(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("orbit", parents=[common], help="find a periodic orbit")
    p.add_argument("--sequence", required=True, help='obstacle sequence such as "1,2,3"')
    p.add_argument("--max-iter", type=int, default=None, help="maximum number of sweeps")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("hull", parents=[common], help="closest-pair points and their hull")
    _conjecture_arguments(p)
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("simulate", parents=[common], help="follow a trajectory and its front")
    p.add_argument("--q", required=True, help="start position, comma-separated")
    p.add_argument("--v", required=True, help="start velocity, comma-separated")
    p.add_argument("--steps", type=int, default=20)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("plot", parents=[common], help="write an SVG figure")
    p.add_argument(
        "--what", choices=["billiard", "hull", "orbit", "domain"], default="billiard"
    )
    p.add_argument("--out", required=True, help="SVG output file")
    p.add_argument("--sequence", default="1,2,3", help="obstacle sequence of the orbit")
    p.add_argument("--mode", choices=["natural", "adjusted"], default="natural")
    p.set_defaults(func=cmd_plot)

    return parser


def _arguments(args: argparse.Namespace) -> dict[str, Any]:
    skipped = {"func", "config", "json", "verbose"}
    return {key: value for key, value in sorted(vars(args).items()) if key not in skipped}


def main(argv: Sequence[str] | None = None) -> int:
    """
    Runs the command line interface.

    Returns
    -------
    int
        The exit code: 0 on success, 1 if a domain condition fails, 2 for an invalid
        configuration, 3 if a numerical procedure does not converge.
    """
    args = build_parser().parse_args(argv)
    levels = [logging.WARNING, logging.INFO, logging.DEBUG]
    logging.basicConfig(
        level=levels[min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
    )
    command: Callable[[BilliardConfig, argparse.Namespace, _Outcome], None] = args.func

    outcome = _Outcome()
    try:
        config = load_config(args.config, args.tolerance_profile)
        command(config, args, outcome)
    except ob.ConfigParseError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except _DOMAIN_FAILURES as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    except _NUMERICAL_FAILURES as error:
        print(f"error: {error}", file=sys.stderr)
        return 3

    print("\n".join(outcome.lines))
    if args.json:
        RunReport(args.command, config, outcome.results, _arguments(args)).write(args.json)
        _logger.info("report written to %s", args.json)
    return outcome.exit_code

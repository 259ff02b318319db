"""Command line: eval, solve, simulate, factor, verify.

Exit codes: 0 ok, 1 a verification check failed, 2 input error,
3 infeasible schedule, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from fcmj.config import DEFAULT_LIMITS
from fcmj.model import (
    InfeasibleSchedule,
    InstanceError,
    TriggerMode,
    format_rational,
    load_instance,
    loads_schedule,
    require_valid,
)
from fcmj.numtheory import lcm
from fcmj.objective import PeriodCapExceeded, SubsetCapExceeded, cost_rate, simulated_cost
from fcmj.reduction import ReductionError, factorize, verify_reduction
from fcmj.solver import BudgetExceeded, solve_exact

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def show(x: Fraction) -> str:
    return f"{format_rational(x)} (≈{float(x):.4f})"


def emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print("\n".join(lines))


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _load_instance(args):
    try:
        instance = load_instance(args.instance)
        if args.trigger_mode is not None:
            instance = instance.with_trigger_mode(args.trigger_mode)
        require_valid(instance)
    except OSError as exc:
        raise CliError(f"cannot read instance: {exc}", EXIT_INPUT)
    except InstanceError as exc:
        raise CliError(str(exc), EXIT_INPUT)
    return instance


def _load_schedule(text: str) -> dict[str, int]:
    try:
        if text.lstrip().startswith("{"):
            return loads_schedule(text)
        return loads_schedule(Path(text).read_text())
    except OSError as exc:
        raise CliError(f"cannot read schedule: {exc}", EXIT_INPUT)
    except InstanceError as exc:
        raise CliError(str(exc), EXIT_INPUT)


def cmd_eval(args) -> int:
    instance = _load_instance(args)
    schedule = _load_schedule(args.schedule)
    br = cost_rate(instance, schedule, subset_cap=args.subset_cap)
    lines = [f"component {c}: {show(v)}" for c, v in br.per_component.items()]
    lines += [f"module {m}: {show(v)}" for m, v in br.per_module.items()]
    lines.append(f"total = {show(br.total)}")
    emit(args, br.to_dict(), lines)
    return EXIT_OK


def cmd_solve(args) -> int:
    instance = _load_instance(args)
    report = solve_exact(instance, budget=args.budget, subset_cap=args.subset_cap)
    ids = list(report.optimal_schedule)
    names = ",".join(f"q{c}" for c in ids)
    values = ",".join(str(report.optimal_schedule[c]) for c in ids)
    lines = [
        f"({names})=({values}), value {format_rational(report.optimal_value)}",
        f"≈{float(report.optimal_value):.4f}; evaluations {report.evaluations}, pruned {report.pruned}",
    ]
    emit(args, report.to_dict(), lines)
    return EXIT_OK


def cmd_simulate(args) -> int:
    instance = _load_instance(args)
    schedule = _load_schedule(args.schedule)
    horizon = args.horizon
    if horizon is None:
        horizon = lcm(schedule.values()) if schedule else 1
    value = simulated_cost(instance, schedule, horizon)
    emit(
        args,
        {"horizon": horizon, "average_cost": format_rational(value)},
        [f"average cost over horizon {horizon} = {show(value)}"],
    )
    return EXIT_OK


def cmd_factor(args) -> int:
    try:
        n = int(args.n)
    except ValueError:
        raise CliError(f"expected a decimal integer, got {args.n!r}", EXIT_INPUT)
    if n < 1:
        raise CliError(f"expected a positive integer, got {n}", EXIT_INPUT)
    factors, trace = factorize(n)
    trace_dict = trace.to_dict() if trace is not None else None
    if n == 1:
        line = "1 = (empty product)"
    elif factors == [n]:
        line = f"{n} is prime"
    else:
        line = f"{n} = " + " · ".join(map(str, factors))
    payload = {"n": n, "factors": factors}
    if args.trace:
        payload["trace"] = trace_dict
    lines = [line]
    if args.trace:
        lines.append(json.dumps(trace_dict, indent=2))
    emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        m = int(args.M)
    except ValueError:
        raise CliError(f"expected a decimal integer, got {args.M!r}", EXIT_INPUT)
    try:
        report = verify_reduction(m)
    except ReductionError as exc:
        raise CliError(str(exc), EXIT_INPUT)
    low, inc = report.step1_margin
    mark = {True: "pass", False: "FAIL", None: "n/a"}
    lines = [
        f"M = {m}" + (" (prime)" if report.prime else ""),
        f"step 1: {mark[report.step1_ok]}  min U over q1<M = {show(low)} (>= {m * m}); "
        f"U at q1=M = {show(inc)} (<= {m * m - m + 1})",
    ]
    if report.prime:
        lines.append(f"lemma: prime input, not applicable; min V = {format_rational(report.coprime_min_V)}")
    else:
        cmv = format_rational(report.coprime_min_V) if report.coprime_min_V is not None else "none"
        lines.append(f"lemma: {mark[report.lemma_ok]}  min V over coprime q2 = {cmv} (> 1/{m})")
        lines.append(
            f"divisor: {mark[report.divisor_ok]}  q2 = {report.optimal_q2}, V = "
            f"{format_rational(report.optimal_V)}, gcd = {report.divisor}"
        )
    emit(args, report.to_dict(), lines)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--budget", type=_positive_int, default=argparse.SUPPRESS,
                        help=f"solver evaluation budget (default {DEFAULT_LIMITS.budget})")
    common.add_argument("--trigger-mode", choices=[m.value for m in TriggerMode], default=argparse.SUPPRESS,
                        help="override the instance's trigger mode")
    common.add_argument("--subset-cap", type=_positive_int, default=argparse.SUPPRESS,
                        help=f"max distinct cycle times per module (default {DEFAULT_LIMITS.subset_cap})")

    parser = argparse.ArgumentParser(prog="fcmj", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="cost rate of a schedule")
    p.add_argument("instance")
    p.add_argument("schedule", help="schedule file or inline JSON object")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("solve", parents=[common], help="exact optimum of an instance")
    p.add_argument("instance")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("simulate", parents=[common], help="replay a schedule over a horizon")
    p.add_argument("instance")
    p.add_argument("schedule", help="schedule file or inline JSON object")
    p.add_argument("--horizon", type=_positive_int, default=None,
                   help="periods to replay (default: lcm of the cycle times)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("factor", parents=[common], help="factor an integer through FCMJ_M")
    p.add_argument("n")
    p.add_argument("--trace", action="store_true", help="dump the split tree as JSON")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("verify", parents=[common], help="exhaustively check the reduction for M")
    p.add_argument("M")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("budget", DEFAULT_LIMITS.budget),
                          ("trigger_mode", None), ("subset_cap", DEFAULT_LIMITS.subset_cap)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InfeasibleSchedule as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.incumbent is not None:
            print(f"best incumbent: {json.dumps(exc.incumbent.to_dict())}", file=sys.stderr)
        return EXIT_BUDGET
    except (SubsetCapExceeded, PeriodCapExceeded, InstanceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

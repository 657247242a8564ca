"""Batch front door: load or generate a scenario, then check, force, extend, or certify.

Exit codes: 0 completed, 1 usage/load error, 2 scenario has no coherent
extension, 3 oracle mismatch.  Machine-readable reports (--json) carry no
timing and are byte-identical across reruns with identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import oracle, scenarios, solver
from .closure import is_consistent, novel_pairs, saturate, seed
from .dot import extension_to_dot
from .model import Scenario, ScenarioError, load_scenario, save_scenario
from .solver import Verdict

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSAT = 2
EXIT_MISMATCH = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _parse_gen_spec(spec: str, seed_override: int | None) -> Scenario:
    family, _, params_str = spec.partition(":")
    if family not in scenarios.GEN_FAMILIES:
        raise CliError(f"unknown generator family {family!r}; choose from {sorted(scenarios.GEN_FAMILIES)}")
    kwargs: dict = {}
    if params_str:
        for item in params_str.split(","):
            key, sep, value = item.partition("=")
            if not sep or not key:
                raise CliError(f"bad generator parameter {item!r}; expected key=value")
            if key == "density":
                kwargs[key] = float(value)
            elif key in ("total", "commutative"):
                kwargs[key] = value.lower() in ("1", "true", "yes")
            else:
                kwargs[key] = int(value)
    if seed_override is not None and family == "random":
        kwargs["seed"] = seed_override
    try:
        return scenarios.GEN_FAMILIES[family](**kwargs)
    except TypeError as exc:
        raise CliError(f"bad parameters for family {family!r}: {exc}") from exc
    except (ValueError, ScenarioError) as exc:
        raise CliError(str(exc)) from exc


def _resolve_scenario(args) -> Scenario:
    if bool(args.scenario) == bool(args.gen):
        raise CliError("exactly one of --scenario and --gen is required")
    if args.scenario:
        try:
            s = load_scenario(args.scenario)
        except OSError as exc:
            raise CliError(f"cannot read {args.scenario}: {exc}") from exc
        except ScenarioError as exc:
            raise CliError(f"invalid scenario: {exc}") from exc
    else:
        s = _parse_gen_spec(args.gen, args.seed)
    if args.dump:
        save_scenario(s, args.dump)
    return s


def _resolve_strong(s: Scenario, mode: str) -> bool:
    if mode == "on":
        if not s.commutative:
            raise CliError("--strong on requires a (verified) commutative scenario")
        return True
    if mode == "off":
        return False
    return s.commutative


def _scenario_summary(s: Scenario, strong: bool) -> dict:
    return {
        "name": s.name,
        "description": s.description,
        "n": s.n,
        "generators": [g.name for g in s.generators],
        "commutative": s.commutative,
        "strong_rules": strong,
        "seed_weak": len(s.base_weak),
        "seed_strict": len(s.base_strict),
    }


def _pair_entry(s: Scenario, v: solver.PairVerdict) -> dict:
    entry = {
        "pair": [s.label_of(v.pair[0]), s.label_of(v.pair[1])],
        "status": v.status.value,
    }
    if v.status is Verdict.FREE:
        entry["status"] = "free-within-window"
    if v.winner is not None:
        entry["winner"] = [s.label_of(v.winner[0]), s.label_of(v.winner[1])]
    return entry


def _emit(report: dict, args, elapsed: float) -> None:
    print(f"== {report['command']} : {report['scenario']['name']} ==")
    _print_text(report)
    print(f"elapsed: {elapsed:.3f}s")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _print_text(report: dict, prefix: str = "") -> None:
    for key, value in report.items():
        if key == "command":
            continue
        if isinstance(value, dict):
            print(f"{prefix}{key}:")
            _print_text(value, prefix + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{prefix}{key}: ({len(value)} entries)")
            for item in value:
                print(f"{prefix}  {json.dumps(item, sort_keys=True)}")
        else:
            print(f"{prefix}{key}: {value}")


def cmd_check(args) -> tuple[dict, int]:
    s = _resolve_scenario(args)
    strong = _resolve_strong(s, args.strong)
    from .model import check_commutativity

    violations = check_commutativity(s)
    state = saturate(seed(s), s, strong)
    consistent = is_consistent(state)
    report = {
        "command": "check",
        "scenario": _scenario_summary(s, strong),
        "commutativity_violations": [
            {"generators": [g, h], "at": s.label_of(x)} for g, h, x in violations
        ],
        "consistent": consistent,
        "counts": {
            "forced_weak": int(state.W.sum()) - s.n,
            "forced_strict": int(state.D.sum()),
        },
    }
    return report, EXIT_OK


def cmd_forced(args) -> tuple[dict, int]:
    s = _resolve_scenario(args)
    strong = _resolve_strong(s, args.strong)
    try:
        verdicts = solver.forced_set_exact(s, strong)
    except solver.UnsatScenarioError as exc:
        raise CliError(str(exc), code=EXIT_UNSAT) from exc
    full = solver.forced_state(s, verdicts, strong)
    novel = novel_pairs(full, s, strong)
    closure_state = saturate(seed(s), s, strong)
    forced = {p: v for p, v in verdicts.items() if v.status is not Verdict.FREE}
    report = {
        "command": "forced",
        "scenario": _scenario_summary(s, strong),
        "counts": {
            "seed_pairs": len(s.base_weak) + len(s.base_strict),
            "closure_forced_weak": int(closure_state.W.sum()) - s.n,
            "closure_forced_strict": int(closure_state.D.sum()),
            "exactly_forced_pairs": len(forced),
            "novel_pairs": len(novel),
        },
        "pairs": [_pair_entry(s, verdicts[p]) for p in sorted(verdicts)],
        "novel": [
            [s.label_of(x), s.label_of(y)] for x, y in sorted(novel)
        ],
    }
    code = EXIT_OK
    if args.oracle:
        mismatches = _diff_against_oracle(s, strong, verdicts, sat=True, cap=args.cap)
        report["oracle"] = {"mismatches": mismatches}
        if mismatches:
            code = EXIT_MISMATCH
    return report, code


def cmd_extend(args) -> tuple[dict, int]:
    s = _resolve_scenario(args)
    strong = _resolve_strong(s, args.strong)
    result = solver.complete_extension(s, strong)
    report = {
        "command": "extend",
        "scenario": _scenario_summary(s, strong),
        "sat": result.sat,
    }
    if result.sat:
        audit = solver.verify_extension(s, result.state)
        from .dot import indifference_classes

        report["verified"] = audit.ok
        report["verification_failures"] = audit.failures()
        report["classes"] = [
            [s.label_of(m) for m in cls] for cls in indifference_classes(result.state)
        ]
        if args.dot:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(extension_to_dot(s, result.state))
        return report, EXIT_OK
    report["certificate"] = [
        [s.label_of(x), s.label_of(y)] for x, y in sorted(result.dead_pairs)
    ]
    return report, EXIT_UNSAT


def _verdict_key(v: solver.PairVerdict) -> tuple:
    return (v.status.value, v.winner)


def _diff_against_oracle(s, strong, verdicts, sat, cap) -> list[dict]:
    try:
        oracle_verdicts = oracle.oracle_forced_set(s, cap)
        oracle_sat = True
    except oracle.NoExtensionError:
        oracle_verdicts = {}
        oracle_sat = False
    except oracle.CapExceededError as exc:
        raise CliError(str(exc)) from exc
    mismatches = []
    if oracle_sat != sat:
        mismatches.append({"kind": "existence", "solver": sat, "oracle": oracle_sat})
        return mismatches
    for pair in sorted(verdicts):
        sv, ov = verdicts[pair], oracle_verdicts.get(pair)
        if ov is None or _verdict_key(sv) != _verdict_key(ov):
            mismatches.append(
                {
                    "kind": "pair",
                    "pair": [s.label_of(pair[0]), s.label_of(pair[1])],
                    "solver": sv.status.value,
                    "oracle": "missing" if ov is None else ov.status.value,
                }
            )
    return mismatches


def cmd_oracle(args) -> tuple[dict, int]:
    s = _resolve_scenario(args)
    strong = _resolve_strong(s, args.strong)
    try:
        survivors = oracle.oracle_extensions(s, args.cap)
    except oracle.CapExceededError as exc:
        raise CliError(str(exc)) from exc
    result = solver.complete_extension(s, strong)
    report = {
        "command": "oracle",
        "scenario": _scenario_summary(s, strong),
        "oracle_extensions": len(survivors),
        "solver_sat": result.sat,
    }
    mismatches = []
    if bool(survivors) != result.sat:
        mismatches.append({"kind": "existence", "solver": result.sat, "oracle": bool(survivors)})
    elif survivors:
        verdicts = solver.forced_set_exact(s, strong)
        mismatches = _diff_against_oracle(s, strong, verdicts, sat=True, cap=args.cap)
    report["mismatches"] = mismatches
    return report, (EXIT_MISMATCH if mismatches else EXIT_OK)


_COMMANDS = {
    "check": cmd_check,
    "forced": cmd_forced,
    "extend": cmd_extend,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohext",
        description="Invariant weak-order extension solver and forced-prediction reporter",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("check", "validate, check commutativity, saturate, report consistency"),
        ("forced", "compute exactly forced pairs and novel predictions"),
        ("extend", "search for a complete coherent extension"),
        ("oracle", "brute-force certification against exhaustive enumeration"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--scenario", help="path to a scenario JSON document")
        p.add_argument("--gen", help="generator spec, e.g. two_track:N=5 or random:n=5,k=2,density=0.3,seed=1")
        p.add_argument("--strong", choices=("auto", "on", "off"), default="auto",
                       help="backward coherency rule: auto gates on commutativity")
        p.add_argument("--json", help="write the machine-readable report here")
        p.add_argument("--seed", type=int, help="override the seed of a random generator spec")
        p.add_argument("--dump", help="write the (loaded or generated) scenario document here")
        p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="oracle enumeration cap")
        if name == "forced":
            p.add_argument("--oracle", action="store_true", help="cross-check verdicts against the oracle")
        if name == "extend":
            p.add_argument("--dot", help="write a Hasse diagram of the extension here")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        report, code = _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    _emit(report, args, time.perf_counter() - started)
    return code


def entry() -> None:  # console-script shim
    sys.exit(main())


if __name__ == "__main__":
    entry()

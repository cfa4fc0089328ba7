"""Command-line front end: solve | justify | explain | epistemic.

All reports are byte-deterministic for identical inputs and flags.  Exit
codes: 0 success, 1 domain outcome (indeterminate situation, empty solution
set), 2 usage or file errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import core
from .aba import Aaf, render_argument
from .agentfile import load_agent
from .core import VdaAgent
from .errors import (
    AgentFileError,
    IndeterminateSituationError,
    ResourceCapError,
    SchemaError,
    SelfComparisonError,
    UnknownNameError,
    VdaError,
)
from .explain import explain_action, explain_situation
from .frameworks import (
    EpistemicResult,
    PracticalResult,
    analyze_epistemic,
    analyze_practical,
    epistemic_framework,
)
from .oracle import RandomVdaSpec, brute_force_extensions, brute_force_solutions, random_aaf, random_vda
from .semantics import SEMANTICS, AcceptanceReport, acceptance_status, extensions_for
from .aba import compute_attacks, derive_arguments, to_aaf

_PRINTABLE_SEMANTICS = sorted(SEMANTICS)


def _argument_lines(aaf: Aaf, order) -> list[str]:
    return [f"  {arg.id}: {render_argument(arg, order)}" for arg in aaf.arguments]


def _attack_lines(aaf: Aaf) -> list[str]:
    index = {arg_id: i for i, arg_id in enumerate(aaf.ids)}
    pairs = sorted(aaf.attacks, key=lambda p: (index[p[0]], index[p[1]]))
    return [f"  {src} → {dst}" for src, dst in pairs]


def _extension_lines(report: AcceptanceReport, aaf: Aaf) -> list[str]:
    index = {arg_id: i for i, arg_id in enumerate(aaf.ids)}
    lines = []
    for label, ext in report.labelled():
        members = ", ".join(sorted(ext.members, key=index.__getitem__))
        lines.append(f"  {label}: {{{members}}}")
    return lines


def _sorted_attack_list(aaf: Aaf) -> list[list[str]]:
    index = {arg_id: i for i, arg_id in enumerate(aaf.ids)}
    return [list(p) for p in sorted(aaf.attacks, key=lambda p: (index[p[0]], index[p[1]]))]


def _extensions_list(report: AcceptanceReport, aaf: Aaf) -> list[list[str]]:
    index = {arg_id: i for i, arg_id in enumerate(aaf.ids)}
    return [sorted(ext.members, key=index.__getitem__) for ext in report.extensions]


def _dot(aaf: Aaf, order) -> str:
    lines = ["digraph aaf {", "  rankdir=LR;"]
    for arg in aaf.arguments:
        label = f"{arg.id}: {render_argument(arg, order)}"
        lines.append(f'  {arg.id} [label="{label}"];')
    index = {arg_id: i for i, arg_id in enumerate(aaf.ids)}
    for src, dst in sorted(aaf.attacks, key=lambda p: (index[p[0]], index[p[1]])):
        lines.append(f"  {src} -> {dst};")
    lines.append("}")
    return "\n".join(lines)


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _load(path: str) -> VdaAgent:
    return load_agent(path)


def cmd_solve(args: argparse.Namespace) -> int:
    agent = _load(args.file)
    report = core.solution_report(agent, args.situation)
    actions = agent.language.actions
    solutions = [a for a in actions if a in report.actions]
    ordering = core.ethical_ordering(agent, args.situation)

    if args.format == "json":
        payload = {
            "situation": args.situation,
            "solutions": solutions,
            "cycle": list(report.cycle) if report.cycle else None,
            "ordering": [
                {"action": step.action, "disjuncts_to_next": list(step.to_next)}
                for step in ordering.steps
            ],
            "stuck": list(ordering.stuck) if ordering.stuck else None,
        }
        _emit(json.dumps(payload, indent=2, ensure_ascii=False))
        return 0 if solutions else 1

    lines = [f"situation: {args.situation}"]
    lines.append("solutions: " + (", ".join(solutions) if solutions else "(none)"))
    if report.cycle:
        lines.append("strict-preference cycle: " + " → ".join(report.cycle + (report.cycle[0],)))
    if ordering.steps:
        chain = []
        for i, step in enumerate(ordering.steps):
            chain.append(step.action)
            if i + 1 < len(ordering.steps):
                chain.append(f"≥[{', '.join(step.to_next)}]")
        lines.append("ordering: " + " ".join(chain))
    if ordering.stuck:
        lines.append("ordering stuck at: " + ", ".join(ordering.stuck))
    _emit("\n".join(lines))
    return 0 if solutions else 1


def _rule_lines(framework, rule_info) -> list[str]:
    lines = []
    for rule in framework.rules:
        body = ", ".join(rule.body)
        lines.append(f"  {rule.id}: {rule.head} ← {body}")
    return lines


def _practical_report_text(result: PracticalResult) -> str:
    build = result.build
    agent = build.agent
    lines = [f"situation: {build.situation_id}", f"semantics: {result.semantics}"]
    lines.append("rules:")
    lines.extend(_rule_lines(build.framework, build.rule_info))
    lines.append("arguments:")
    lines.extend(_argument_lines(result.aaf, build.display_order))
    lines.append("attacks:")
    lines.extend(_attack_lines(result.aaf))
    lines.append("extensions:")
    lines.extend(_extension_lines(result.report, result.aaf))
    if result.report.diagnostic:
        lines.append(f"diagnostic: {result.report.diagnostic}")
    lines.append("action status:")
    for action in agent.language.actions:
        lines.append(f"  {action}: {result.action_status[action]}")
    justified = [a for a in agent.language.actions if a in result.justified_actions]
    credulous = [a for a in agent.language.actions if a in result.credulous_actions]
    lines.append("skeptically justified actions: " + (", ".join(justified) or "(none)"))
    lines.append("credulously accepted actions: " + (", ".join(credulous) or "(none)"))
    return "\n".join(lines)


def _practical_report_json(result: PracticalResult) -> dict:
    build = result.build
    agent = build.agent
    return {
        "situation": build.situation_id,
        "semantics": result.semantics,
        "rules": [
            {
                "id": rule.id,
                "head": rule.head,
                "body": list(rule.body),
                **asdict(build.rule_info[rule.id]),
            }
            for rule in build.framework.rules
        ],
        "arguments": [
            {
                "id": arg.id,
                "premises": sorted(arg.premises, key=lambda s: build.display_order.get(s, 0)),
                "support": sorted(arg.support, key=lambda s: build.display_order.get(s, 0)),
                "conclusion": arg.conclusion,
            }
            for arg in result.aaf.arguments
        ],
        "attacks": _sorted_attack_list(result.aaf),
        "extensions": _extensions_list(result.report, result.aaf),
        "statuses": {
            arg_id: {
                "status": st.status,
                "in_all": st.in_all,
                "in_some": st.in_some,
            }
            for arg_id, st in result.report.statuses.items()
        },
        "diagnostic": result.report.diagnostic,
        "actions": {a: result.action_status[a] for a in agent.language.actions},
        "justified": [a for a in agent.language.actions if a in result.justified_actions],
        "credulous": [a for a in agent.language.actions if a in result.credulous_actions],
        "solutions": [a for a in agent.language.actions if a in result.solutions],
    }


def cmd_justify(args: argparse.Namespace) -> int:
    agent = _load(args.file)
    if args.situation is not None:
        result = analyze_practical(agent, args.situation, args.semantics)
        if args.dot:
            _emit(_dot(result.aaf, result.build.display_order))
            return 0
        if args.format == "json":
            _emit(json.dumps(_practical_report_json(result), indent=2, ensure_ascii=False))
            return 0
        _emit(_practical_report_text(result))
        return 0

    # Without a situation, justify the epistemic framework on its own.
    if agent.epistemic is None or not agent.epistemic.assumptions:
        raise SchemaError("no situation given and the file has no epistemic section")
    build = epistemic_framework(agent.epistemic, extra_facts=())
    arguments = derive_arguments(build.framework, label="Y", keep_conclusions=build.relevant)
    attacks = compute_attacks(arguments, build.framework)
    aaf = to_aaf(arguments, attacks)
    report = acceptance_status(aaf, args.semantics)
    if args.dot:
        _emit(_dot(aaf, build.display_order))
        return 0
    trivial = {
        arg.conclusion: arg.id for arg in arguments
        if not arg.rules_used and len(arg.support) == 1
    }
    if args.format == "json":
        payload = {
            "framework": "epistemic",
            "semantics": args.semantics,
            "rules": [
                {"id": r.id, "head": r.head, "body": list(r.body)}
                for r in build.framework.rules
            ],
            "arguments": [
                {
                    "id": arg.id,
                    "premises": sorted(arg.premises),
                    "conclusion": arg.conclusion,
                }
                for arg in aaf.arguments
            ],
            "attacks": _sorted_attack_list(aaf),
            "extensions": _extensions_list(report, aaf),
            "diagnostic": report.diagnostic,
            "assumptions": {
                str(lit): report.statuses[trivial[str(lit)]].status
                for lit in agent.epistemic.assumptions
            },
        }
        _emit(json.dumps(payload, indent=2, ensure_ascii=False))
        return 0
    lines = ["framework: epistemic", f"semantics: {args.semantics}"]
    lines.append("rules:")
    lines.extend(_rule_lines(build.framework, build.rule_info))
    lines.append("arguments:")
    lines.extend(_argument_lines(aaf, build.display_order))
    lines.append("attacks:")
    lines.extend(_attack_lines(aaf))
    lines.append("extensions:")
    lines.extend(_extension_lines(report, aaf))
    if report.diagnostic:
        lines.append(f"diagnostic: {report.diagnostic}")
    lines.append("assumption status:")
    for lit in agent.epistemic.assumptions:
        lines.append(f"  {lit}: {report.statuses[trivial[str(lit)]].status}")
    _emit("\n".join(lines))
    return 0


def cmd_explain(args: argparse.Namespace) -> int:
    agent = _load(args.file)
    if args.situation_mode == (args.action is not None):
        raise SchemaError("give either an action to explain or --situation, not both")

    if args.situation_mode:
        if agent.epistemic is None:
            raise SchemaError("the file has no epistemic section")
        perceptions = sorted(agent.situation(args.situation).positives)
        result = analyze_epistemic(agent.epistemic, perceptions, args.semantics)
        explanations = explain_situation(result)
        if args.format == "json":
            _emit(json.dumps([asdict(e) for e in explanations], indent=2, ensure_ascii=False))
            return 0
        blocks = []
        for e in explanations:
            blocks.append(_explanation_text(e))
        _emit("\n".join(blocks))
        return 0

    result = analyze_practical(agent, args.situation, args.semantics)
    explanation = explain_action(result, args.action)
    if args.format == "json":
        _emit(json.dumps(asdict(explanation), indent=2, ensure_ascii=False))
        return 0
    _emit(_explanation_text(explanation))
    return 0


def _explanation_text(e) -> str:
    lines = [f"subject: {e.subject}"]
    lines.append(f"verdict: {e.verdict}")
    if e.argument_id:
        lines.append(f"argument: {e.argument_id}")
    if e.premises:
        lines.append("premises: " + ", ".join(e.premises))
    if e.extensions:
        lines.append("extensions: " + ", ".join(e.extensions))
    if e.attackers:
        lines.append("attackers:")
        for att in e.attackers:
            where = ", ".join(att.extensions) or "(no extension)"
            counters = ", ".join(att.counter_attackers) or "(none)"
            lines.append(
                f"  {att.argument_id} in {where}: premises {', '.join(att.premises) or '(none)'}; "
                f"counter-attackers: {counters}"
            )
    if e.defenders:
        lines.append("defenders: " + ", ".join(e.defenders))
    lines.append(f"text: {e.text}")
    return "\n".join(lines)


def _epistemic_report_text(agent: VdaAgent, result: EpistemicResult) -> str:
    lines = ["perceptions: " + ", ".join(result.perceptions)]
    if result.aaf is None:
        lines.append("assumptions: (none)")
    else:
        lines.append("arguments:")
        lines.extend(_argument_lines(result.aaf, result.build.display_order))
        lines.append("attacks:")
        lines.extend(_attack_lines(result.aaf))
        lines.append("extensions:")
        lines.extend(_extension_lines(result.report, result.aaf))
        if result.report.diagnostic:
            lines.append(f"diagnostic: {result.report.diagnostic}")
        lines.append("assumptions:")
        for verdict in result.verdicts:
            if verdict.status == "justified":
                detail = "defended by " + (", ".join(verdict.defenders) or "no one; unattacked")
            elif verdict.status == "rejected":
                detail = f"attacked by {verdict.rejecting_attacker}"
            else:
                detail = "undecided"
            lines.append(f"  {verdict.literal}: {verdict.status} ({detail})")
    atoms = result.spec.atoms
    pj = [str(lit) for lit in _ordered_literals(result.justified_perceptions, atoms)]
    lines.append("P^J: " + (", ".join(pj) or "(empty)"))
    if result.situation is not None:
        sj = ", ".join(str(lit) for lit in result.situation.ordered(atoms))
        lines.append(f"S^J: {sj}")
    else:
        undecided = ", ".join(str(lit) for lit in result.undecided)
        lines.append(f"S^J: indeterminate (undecided assumptions: {undecided})")
    return "\n".join(lines)


def _ordered_literals(literals, atoms):
    order = {a: i for i, a in enumerate(atoms)}
    return sorted(literals, key=lambda lit: (not lit.positive, order.get(lit.atom, len(order))))


def _epistemic_report_json(result: EpistemicResult) -> dict:
    atoms = result.spec.atoms
    payload: dict = {
        "perceptions": list(result.perceptions),
        "semantics": result.semantics,
        "justified_perceptions": [
            lit.token for lit in _ordered_literals(result.justified_perceptions, atoms)
        ],
        "situation": (
            [lit.token for lit in result.situation.ordered(atoms)]
            if result.situation is not None
            else None
        ),
        "undecided": [lit.token for lit in result.undecided],
    }
    if result.aaf is not None:
        payload["arguments"] = [
            {"id": arg.id, "premises": sorted(arg.premises), "conclusion": arg.conclusion}
            for arg in result.aaf.arguments
        ]
        payload["attacks"] = _sorted_attack_list(result.aaf)
        payload["extensions"] = _extensions_list(result.report, result.aaf)
        payload["assumptions"] = [
            {
                "literal": v.literal.token,
                "argument": v.argument_id,
                "status": v.status,
                "attackers": list(v.attackers),
                "defenders": list(v.defenders),
            }
            for v in result.verdicts
        ]
    return payload


def cmd_epistemic(args: argparse.Namespace) -> int:
    agent = _load(args.file)
    if agent.epistemic is None:
        raise SchemaError("the file has no epistemic section")
    if (args.situation is None) == (args.perceptions is None):
        raise SchemaError("give a situation name or --perceptions, not both")
    if args.situation is not None:
        perceptions = sorted(agent.situation(args.situation).positives)
    else:
        perceptions = [p for p in args.perceptions.split(",") if p]
    result = analyze_epistemic(agent.epistemic, perceptions, args.semantics)
    if args.format == "json":
        _emit(json.dumps(_epistemic_report_json(result), indent=2, ensure_ascii=False))
    else:
        _emit(_epistemic_report_text(agent, result))
    return 1 if result.undecided else 0


def cmd_oracle_check(args: argparse.Namespace) -> int:
    mismatches = 0
    for i in range(args.instances):
        spec = RandomVdaSpec(seed=args.seed + i)
        agent, sid = random_vda(spec)
        if core.solutions(agent, sid) != brute_force_solutions(agent, sid):
            mismatches += 1
    for i in range(args.aafs):
        aaf = random_aaf(args.seed + i)
        for semantics in SEMANTICS:
            solver = {e.members for e in extensions_for(aaf, semantics)}
            if solver != brute_force_extensions(aaf, semantics):
                mismatches += 1
    _emit(f"oracle-check: instances={args.instances} aafs={args.aafs} mismatches={mismatches}")
    return 1 if mismatches else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vdarg",
        description="Decide, justify, and explain value-driven agent behaviour.",
    )
    sub = parser.add_subparsers(
        dest="command", metavar="{solve,justify,explain,epistemic}", required=True
    )

    def common(p: argparse.ArgumentParser, semantics: bool = True) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        if semantics:
            p.add_argument("--semantics", choices=SEMANTICS, default="grounded")

    p_solve = sub.add_parser("solve", help="solutions and the annotated ethical ordering")
    p_solve.add_argument("file")
    p_solve.add_argument("situation")
    common(p_solve, semantics=False)
    p_solve.set_defaults(func=cmd_solve)

    p_justify = sub.add_parser("justify", help="rules, arguments, attacks, extensions, statuses")
    p_justify.add_argument("file")
    p_justify.add_argument("situation", nargs="?")
    p_justify.add_argument("--dot", action="store_true", help="emit the attack graph as DOT text")
    common(p_justify)
    p_justify.set_defaults(func=cmd_justify)

    p_explain = sub.add_parser("explain", help="explain a justified or rejected action, or the situation")
    p_explain.add_argument("file")
    p_explain.add_argument("situation")
    p_explain.add_argument("action", nargs="?")
    p_explain.add_argument("--situation", dest="situation_mode", action="store_true",
                           help="explain the justified situation instead of an action")
    common(p_explain)
    p_explain.set_defaults(func=cmd_explain)

    p_epistemic = sub.add_parser("epistemic", help="adjudicate perceptions into a justified situation")
    p_epistemic.add_argument("file")
    p_epistemic.add_argument("situation", nargs="?")
    p_epistemic.add_argument("--perceptions", help="comma-separated true perceptions")
    common(p_epistemic)
    p_epistemic.set_defaults(func=cmd_epistemic)

    p_oracle = sub.add_parser("oracle-check")  # debugging aid, hidden from help
    p_oracle.add_argument("--seed", type=int, default=0)
    p_oracle.add_argument("--instances", type=int, default=25)
    p_oracle.add_argument("--aafs", type=int, default=25)
    common(p_oracle, semantics=False)
    p_oracle.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except IndeterminateSituationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AgentFileError, SchemaError, UnknownNameError, SelfComparisonError, ResourceCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VdaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

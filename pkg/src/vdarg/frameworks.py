"""Compile agents into argumentation frameworks and run the full pipelines.

Practical reasoning: a situation's action matrix and the principle become a
framework whose assumptions are the duty vectors that satisfy at least one
duty.  Each such vector gets an action rule (action <- vector), and every
ordered pair of actions where the source is weakly preferred to an
assumption target gets one principle rule (not-vector(target) <- disjunct,
vector(source)) citing the tightest qualifying disjunct.  Disjuncts are
axioms: accepted premises with no contrary.

Epistemic reasoning: perception literals are sentences, designated literals
are assumptions (contrary defaults to the complement), epistemic rules carry
over, and true perceptions that are not assumptions become empty-body fact
rules.  Adjudicating the assumptions yields the justified perceptions and,
when every assumption is settled, a justified situation to decide in.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from . import core
from .aba import AbaFramework, Aaf, Rule, compute_attacks, derive_arguments, to_aaf
from .core import (
    ActionMatrix,
    Disjunct,
    EpistemicSpec,
    Literal,
    Principle,
    Situation,
    VdaAgent,
)
from .errors import (
    IndeterminateSituationError,
    SchemaError,
    UnknownNameError,
)
from .semantics import AcceptanceReport, acceptance_status


def vector_sentence(situation_id: str, action: str) -> str:
    return f"v_{situation_id}({action})"


def negation_sentence(situation_id: str, action: str) -> str:
    return f"¬v_{situation_id}({action})"


@dataclass(frozen=True)
class RuleInfo:
    kind: str  # "action" | "principle" | "fact"
    action: str | None = None
    disjunct: str | None = None
    source: str | None = None
    target: str | None = None


@dataclass(frozen=True)
class PracticalBuild:
    agent: VdaAgent
    situation_id: str
    framework: AbaFramework
    rule_info: Mapping[str, RuleInfo]
    vector_of: Mapping[str, str]      # action -> vector sentence
    negation_of: Mapping[str, str]    # action -> negated vector sentence
    assumption_actions: tuple[str, ...]
    relevant: frozenset[str]
    display_order: Mapping[str, int]  # canonical sentence order for premise rendering


def _tightest(principle: Principle, disjunct_ids: Sequence[str]) -> Disjunct:
    """The qualifying disjunct with the greatest total lower bound; ties go to
    the earliest disjunct in principle order."""
    ranked = sorted(
        disjunct_ids,
        key=lambda uid: (-sum(principle.by_id(uid).bounds.values()), principle.index_of(uid)),
    )
    return principle.by_id(ranked[0])


def practical_framework(agent: VdaAgent, situation_id: str) -> PracticalBuild:
    """Build the practical-reasoning framework for one situation."""
    matrix = agent.matrix_for(situation_id)
    principle = agent.require_principle()
    actions = agent.language.actions

    qualifying = [a for a in actions if matrix.vector(a).satisfies_some_duty()]
    if not qualifying:
        # Nothing satisfies any duty: the least-violating action should still
        # win, so every vector becomes an assumption with an action rule.
        qualifying = list(actions)
    qualifying_set = set(qualifying)

    vector_of = {a: vector_sentence(situation_id, a) for a in actions}
    negation_of = {a: negation_sentence(situation_id, a) for a in actions}
    disjunct_ids = [u.id for u in principle]

    language_parts = (
        disjunct_ids,
        [vector_of[a] for a in actions],
        [negation_of[a] for a in actions],
        list(actions),
    )
    language = frozenset(s for part in language_parts for s in part)
    if len(language) != sum(len(part) for part in language_parts):
        raise SchemaError("sentence name collision between disjuncts, vectors, and actions")

    rules: list[Rule] = []
    rule_info: dict[str, RuleInfo] = {}

    def add_rule(head: str, body: tuple[str, ...], info: RuleInfo) -> None:
        rid = f"r{len(rules) + 1}"
        rules.append(Rule(rid, head, body))
        rule_info[rid] = info

    for a in actions:
        if a in qualifying_set:
            add_rule(a, (vector_of[a],), RuleInfo("action", action=a))

    for target in actions:
        if target not in qualifying_set:
            continue  # only assumptions have contraries to conclude
        for source in actions:
            if source == target:
                continue
            ids = core.prefers(matrix, principle, source, target)
            if not ids:
                continue
            chosen = _tightest(principle, ids)
            add_rule(
                negation_of[target],
                (chosen.id, vector_of[source]),
                RuleInfo("principle", disjunct=chosen.id, source=source, target=target),
            )

    assumptions = tuple(vector_of[a] for a in actions if a in qualifying_set)
    contraries = {vector_of[a]: negation_of[a] for a in actions if a in qualifying_set}
    framework = AbaFramework(
        language=language,
        rules=tuple(rules),
        assumptions=assumptions,
        contraries=contraries,
        axioms=frozenset(disjunct_ids),
    )
    relevant = frozenset(actions) | frozenset(contraries.values())
    ordered = (
        disjunct_ids
        + [vector_of[a] for a in actions]
        + [negation_of[a] for a in actions]
        + list(actions)
    )
    display_order = {s: i for i, s in enumerate(ordered)}
    return PracticalBuild(
        agent=agent,
        situation_id=situation_id,
        framework=framework,
        rule_info=rule_info,
        vector_of=vector_of,
        negation_of=negation_of,
        assumption_actions=tuple(a for a in actions if a in qualifying_set),
        relevant=relevant,
        display_order=display_order,
    )


@dataclass(frozen=True)
class PracticalResult:
    """Practical pipeline output: framework, AAF, acceptance, and action verdicts."""

    build: PracticalBuild
    semantics: str
    aaf: Aaf
    report: AcceptanceReport
    action_argument: Mapping[str, str]
    action_status: Mapping[str, str]
    justified_actions: frozenset[str]
    credulous_actions: frozenset[str]
    solutions: frozenset[str]
    solution_cycle: tuple[str, ...] | None


def analyze_practical(agent: VdaAgent, situation_id: str, semantics: str = "grounded") -> PracticalResult:
    build = practical_framework(agent, situation_id)
    arguments = derive_arguments(build.framework, label="X", keep_conclusions=build.relevant)
    attacks = compute_attacks(arguments, build.framework)
    aaf = to_aaf(arguments, attacks)
    report = acceptance_status(aaf, semantics)

    actions = agent.language.actions
    action_argument = {
        arg.conclusion: arg.id for arg in arguments if arg.conclusion in set(actions)
    }
    action_status: dict[str, str] = {}
    justified: set[str] = set()
    credulous: set[str] = set()
    for a in actions:
        arg_id = action_argument.get(a)
        if arg_id is None:
            action_status[a] = "rejected-a-priori"
            continue
        status = report.statuses[arg_id]
        action_status[a] = status.status
        if not report.vacuous:
            if status.in_all:
                justified.add(a)
            if status.in_some:
                credulous.add(a)

    sol = core.solution_report(agent, situation_id)
    return PracticalResult(
        build=build,
        semantics=semantics,
        aaf=aaf,
        report=report,
        action_argument=action_argument,
        action_status=action_status,
        justified_actions=frozenset(justified),
        credulous_actions=frozenset(credulous),
        solutions=sol.actions,
        solution_cycle=sol.cycle,
    )


@dataclass(frozen=True)
class EpistemicBuild:
    spec: EpistemicSpec
    framework: AbaFramework
    rule_info: Mapping[str, RuleInfo]
    fact_literals: tuple[Literal, ...]
    relevant: frozenset[str]
    display_order: Mapping[str, int]


def epistemic_framework(spec: EpistemicSpec, extra_facts: Iterable[Literal] = ()) -> EpistemicBuild:
    """Build the epistemic framework; extra_facts become empty-body rules."""
    if not spec.assumptions:
        raise SchemaError("epistemic reasoning needs at least one assumption literal")
    language = frozenset(
        str(Literal(atom, polarity)) for atom in spec.atoms for polarity in (True, False)
    )
    assumption_sentences = tuple(str(a) for a in spec.assumptions)
    contraries = {str(a): str(spec.contrary_of(a)) for a in spec.assumptions}

    rules: list[Rule] = []
    rule_info: dict[str, RuleInfo] = {}
    seen_shapes: set[tuple[str, tuple[str, ...]]] = set()
    for rule in spec.rules:
        shape = (str(rule.head), tuple(str(b) for b in rule.body))
        seen_shapes.add(shape)
        rules.append(Rule(rule.id, shape[0], shape[1]))
        rule_info[rule.id] = RuleInfo("rule" if rule.body else "fact")

    assumption_set = set(spec.assumptions)
    facts: list[Literal] = []
    for lit in tuple(spec.facts) + tuple(extra_facts):
        if lit in assumption_set or lit in facts:
            continue
        facts.append(lit)
    fact_count = 0
    for lit in facts:
        shape = (str(lit), ())
        if shape in seen_shapes:
            continue
        seen_shapes.add(shape)
        fact_count += 1
        rid = f"f{fact_count}"
        rules.append(Rule(rid, shape[0], ()))
        rule_info[rid] = RuleInfo("fact")

    framework = AbaFramework(
        language=language,
        rules=tuple(rules),
        assumptions=assumption_sentences,
        contraries=contraries,
        axioms=frozenset(),
    )
    relevant = frozenset(assumption_sentences) | frozenset(contraries.values())
    display_order = {s: i for i, s in enumerate(assumption_sentences)}
    return EpistemicBuild(
        spec=spec,
        framework=framework,
        rule_info=rule_info,
        fact_literals=tuple(facts),
        relevant=relevant,
        display_order=display_order,
    )


@dataclass(frozen=True)
class AssumptionVerdict:
    literal: Literal
    argument_id: str
    status: str  # "justified" | "rejected" | "undecided"
    attackers: tuple[str, ...]
    defenders: tuple[str, ...]
    rejecting_attacker: str | None


@dataclass(frozen=True)
class EpistemicResult:
    spec: EpistemicSpec
    semantics: str
    perceptions: tuple[str, ...]
    build: EpistemicBuild | None
    aaf: Aaf | None
    report: AcceptanceReport | None
    verdicts: tuple[AssumptionVerdict, ...]
    justified_perceptions: frozenset[Literal]
    situation: Situation | None
    undecided: tuple[Literal, ...]


def analyze_epistemic(
    spec: EpistemicSpec,
    perceptions: Sequence[str],
    semantics: str = "grounded",
) -> EpistemicResult:
    atom_set = set(spec.atoms)
    unknown = set(perceptions) - atom_set
    if unknown:
        raise SchemaError(f"perceptions outside the atom set: {sorted(unknown)}")
    ordered_p = tuple(a for a in spec.atoms if a in set(perceptions))

    if not spec.assumptions:
        # Identity stage: nothing to adjudicate.
        pj = frozenset(Literal(p) for p in ordered_p)
        situation = Situation.from_perceptions(spec.atoms, ordered_p)
        return EpistemicResult(
            spec, semantics, ordered_p, None, None, None, (), pj, situation, (),
        )

    assumption_set = set(spec.assumptions)
    auto_facts = tuple(Literal(p) for p in ordered_p if Literal(p) not in assumption_set)
    build = epistemic_framework(spec, extra_facts=auto_facts)
    arguments = derive_arguments(build.framework, label="Y", keep_conclusions=build.relevant)
    attacks = compute_attacks(arguments, build.framework)
    aaf = to_aaf(arguments, attacks)
    report = acceptance_status(aaf, semantics)

    arg_index = {arg.id: i for i, arg in enumerate(arguments)}
    attackers_of: dict[str, list[str]] = {arg.id: [] for arg in arguments}
    for src, dst in aaf.attacks:
        attackers_of[dst].append(src)
    for lst in attackers_of.values():
        lst.sort(key=arg_index.__getitem__)

    trivial = {
        (arg.conclusion, arg.support): arg.id
        for arg in arguments
        if not arg.rules_used and len(arg.support) == 1
    }

    verdicts: list[AssumptionVerdict] = []
    for lit in spec.assumptions:
        sentence = str(lit)
        arg_id = trivial[(sentence, frozenset({sentence}))]
        status = report.statuses[arg_id]
        atts = tuple(attackers_of[arg_id])
        defenders = sorted(
            {
                d
                for att in atts
                for d in attackers_of[att]
                if report.statuses[d].in_all
            },
            key=arg_index.__getitem__,
        )
        if not report.vacuous and status.in_all:
            verdicts.append(AssumptionVerdict(lit, arg_id, "justified", atts, tuple(defenders), None))
        else:
            rejecting = next(
                (a for a in atts if not report.vacuous and report.statuses[a].in_all), None
            )
            if rejecting is not None:
                verdicts.append(AssumptionVerdict(lit, arg_id, "rejected", atts, tuple(defenders), rejecting))
            else:
                verdicts.append(AssumptionVerdict(lit, arg_id, "undecided", atts, tuple(defenders), None))

    justified_literals = [v.literal for v in verdicts if v.status == "justified"]
    pj = frozenset(Literal(p) for p in ordered_p if Literal(p) not in assumption_set) | frozenset(
        justified_literals
    )
    undecided = tuple(v.literal for v in verdicts if v.status == "undecided")

    situation = None
    if not undecided:
        positive = {lit.atom for lit in pj if lit.positive}
        negative_conflicts = sorted(
            lit.atom for lit in pj if not lit.positive and lit.atom in positive
        )
        if negative_conflicts:
            raise SchemaError(
                f"justified perceptions are contradictory for atoms: {negative_conflicts}"
            )
        situation = Situation.from_perceptions(spec.atoms, sorted(positive))

    return EpistemicResult(
        spec, semantics, ordered_p, build, aaf, report,
        tuple(verdicts), pj, situation, undecided,
    )


@dataclass(frozen=True)
class JustifiedSituation:
    perceptions: frozenset[Literal]
    situation: Situation
    verdicts: tuple[AssumptionVerdict, ...]


def justified_situation(
    spec: EpistemicSpec,
    perceptions: Sequence[str],
    semantics: str = "grounded",
) -> JustifiedSituation:
    """Adjudicated perception set and the situation it determines.

    Raises IndeterminateSituationError when some assumption is neither
    skeptically justified nor skeptically rejected.
    """
    result = analyze_epistemic(spec, perceptions, semantics)
    if result.undecided:
        raise IndeterminateSituationError(str(lit) for lit in result.undecided)
    assert result.situation is not None
    return JustifiedSituation(result.justified_perceptions, result.situation, result.verdicts)


@dataclass(frozen=True)
class Decision:
    epistemic: EpistemicResult | None
    situation_id: str
    practical: PracticalResult


def end_to_end_decide(
    agent: VdaAgent,
    perceptions: Sequence[str],
    semantics: str = "grounded",
) -> Decision:
    """Justified situation, then practical reasoning on its registered matrix."""
    epistemic_result: EpistemicResult | None = None
    if agent.epistemic is not None and agent.epistemic.assumptions:
        epistemic_result = analyze_epistemic(agent.epistemic, perceptions, semantics)
        if epistemic_result.undecided:
            raise IndeterminateSituationError(str(lit) for lit in epistemic_result.undecided)
        situation = epistemic_result.situation
        assert situation is not None
    else:
        situation = Situation.from_perceptions(agent.language.atoms, perceptions)

    sid = agent.situation_matching(situation.literals)
    if sid is None:
        shown = ", ".join(str(lit) for lit in situation.ordered(agent.language.atoms))
        raise UnknownNameError(f"no declared situation matches the justified valuation {{{shown}}}")
    practical = analyze_practical(agent, sid, semantics)
    return Decision(epistemic_result, sid, practical)

"""Value-driven agent model and the ethical preference relation.

An agent carries a language (perception atoms, actions, duties), one total
valuation per named situation, an action matrix per situation assigning each
action an integer vector of duty satisfaction/violation degrees, and a
principle: an ordered collection of lower-bound vectors (disjuncts).

Action a is weakly preferred to action b under a disjunct when every
componentwise differential of their duty vectors meets that disjunct's lower
bound.  Strict preference holds when some disjunct covers the forward
differential and none covers the backward one.  Solutions are the actions
that can head a total ordering of the matrix with no strict-preference
inversion; with an acyclic strict relation these are exactly the
undominated actions.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from .errors import (
    SchemaError,
    SelfComparisonError,
    UnknownNameError,
)

DEFAULT_VALUE_RANGE = (-2, 2)


@dataclass(frozen=True)
class VdaLanguage:
    """Perception atoms, action names, and duty names, each in declaration order."""

    atoms: tuple[str, ...]
    actions: tuple[str, ...]
    duties: tuple[str, ...]

    def __post_init__(self):
        for label, names in (("atoms", self.atoms), ("actions", self.actions), ("duties", self.duties)):
            if len(set(names)) != len(names):
                raise SchemaError(f"duplicate names in {label}: {names}")
        overlap = set(self.actions) & set(self.duties)
        if overlap:
            raise SchemaError(f"actions and duties must be disjoint; shared: {sorted(overlap)}")


@dataclass(frozen=True, order=True)
class Literal:
    """A perception atom or its negation."""

    atom: str
    positive: bool = True

    @property
    def negated(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    @property
    def token(self) -> str:
        """File form: bare atom or '~atom'."""
        return self.atom if self.positive else f"~{self.atom}"

    def __str__(self) -> str:
        return self.atom if self.positive else f"¬{self.atom}"

    @classmethod
    def parse(cls, text: str) -> "Literal":
        text = text.strip()
        for prefix in ("~", "¬", "!"):
            if text.startswith(prefix):
                atom = text[len(prefix):].strip()
                if not atom:
                    raise SchemaError(f"empty literal: {text!r}")
                return cls(atom, False)
        if not text:
            raise SchemaError("empty literal")
        return cls(text, True)


@dataclass(frozen=True)
class Situation:
    """A total valuation: exactly one literal per atom."""

    literals: frozenset[Literal]

    @classmethod
    def from_perceptions(cls, atoms: Sequence[str], perceptions: Sequence[str]) -> "Situation":
        unknown = set(perceptions) - set(atoms)
        if unknown:
            raise SchemaError(f"perceptions outside the atom set: {sorted(unknown)}")
        true_set = set(perceptions)
        return cls(frozenset(Literal(a, a in true_set) for a in atoms))

    def check_total(self, atoms: Sequence[str]) -> None:
        seen = {lit.atom for lit in self.literals}
        if seen != set(atoms) or len(self.literals) != len(atoms):
            raise SchemaError("situation is not a total valuation over the atom set")

    @property
    def positives(self) -> frozenset[str]:
        return frozenset(lit.atom for lit in self.literals if lit.positive)

    def ordered(self, atoms: Sequence[str]) -> tuple[Literal, ...]:
        """Positive literals first, then negative, each in atom declaration order."""
        by_atom = {lit.atom: lit for lit in self.literals}
        pos = tuple(by_atom[a] for a in atoms if by_atom[a].positive)
        neg = tuple(by_atom[a] for a in atoms if not by_atom[a].positive)
        return pos + neg


@dataclass(frozen=True)
class DutyVector:
    """Duty satisfaction/violation degrees of one action in one situation."""

    action: str
    values: Mapping[str, int]

    def differential(self, other: "DutyVector") -> dict[str, int]:
        return duty_differential(self, other)

    def satisfies_some_duty(self) -> bool:
        return any(v >= 1 for v in self.values.values())

    def as_row(self, duties: Sequence[str]) -> tuple[int, ...]:
        return tuple(self.values[d] for d in duties)


@dataclass(frozen=True)
class ActionMatrix:
    """One duty vector per action for a single situation."""

    situation_id: str
    vectors: Mapping[str, DutyVector]

    def vector(self, action: str) -> DutyVector:
        try:
            return self.vectors[action]
        except KeyError:
            raise UnknownNameError(f"action {action!r} has no vector in matrix {self.situation_id!r}") from None


@dataclass(frozen=True)
class Disjunct:
    """A vector of lower bounds on duty differentials, one bound per duty."""

    id: str
    bounds: Mapping[str, int]


@dataclass(frozen=True)
class Principle:
    """Ordered, non-empty collection of disjuncts with unique ids."""

    disjuncts: tuple[Disjunct, ...]

    def __post_init__(self):
        if not self.disjuncts:
            raise SchemaError("a principle needs at least one disjunct")
        ids = [u.id for u in self.disjuncts]
        if len(set(ids)) != len(ids):
            raise SchemaError(f"duplicate disjunct ids: {ids}")

    def __iter__(self):
        return iter(self.disjuncts)

    def index_of(self, disjunct_id: str) -> int:
        for i, u in enumerate(self.disjuncts):
            if u.id == disjunct_id:
                return i
        raise UnknownNameError(f"unknown disjunct {disjunct_id!r}")

    def by_id(self, disjunct_id: str) -> Disjunct:
        return self.disjuncts[self.index_of(disjunct_id)]


@dataclass(frozen=True)
class EpistemicRule:
    """head <- body over literals; an empty body makes the head a fact."""

    id: str
    head: Literal
    body: tuple[Literal, ...] = ()


@dataclass(frozen=True)
class EpistemicSpec:
    """Assumption literals, contrary overrides, and epistemic rules.

    The contrary of an assumption defaults to its complement literal and may
    be overridden per assumption.
    """

    atoms: tuple[str, ...]
    assumptions: tuple[Literal, ...]
    rules: tuple[EpistemicRule, ...] = ()
    contraries: Mapping[Literal, Literal] = field(default_factory=dict)
    facts: tuple[Literal, ...] = ()

    def contrary_of(self, assumption: Literal) -> Literal:
        return self.contraries.get(assumption, assumption.negated)


@dataclass(frozen=True)
class VdaAgent:
    """Language, situations, per-situation matrices, principle, optional epistemic spec."""

    language: VdaLanguage
    situations: Mapping[str, Situation]
    matrices: Mapping[str, ActionMatrix]
    principle: Principle | None
    epistemic: EpistemicSpec | None = None
    value_range: tuple[int, int] = DEFAULT_VALUE_RANGE
    duty_names: Mapping[str, str] = field(default_factory=dict)

    def situation(self, situation_id: str) -> Situation:
        try:
            return self.situations[situation_id]
        except KeyError:
            raise UnknownNameError(f"unknown situation {situation_id!r}") from None

    def matrix_for(self, situation_id: str) -> ActionMatrix:
        if situation_id not in self.situations:
            raise UnknownNameError(f"unknown situation {situation_id!r}")
        try:
            return self.matrices[situation_id]
        except KeyError:
            raise UnknownNameError(f"situation {situation_id!r} has no action matrix") from None

    def situation_matching(self, literals: frozenset[Literal]) -> str | None:
        for sid, situation in self.situations.items():
            if situation.literals == literals:
                return sid
        return None

    def require_principle(self) -> Principle:
        if self.principle is None:
            raise SchemaError("agent declares no principle; practical reasoning is unavailable")
        return self.principle


def validate_agent(agent: VdaAgent) -> VdaAgent:
    """Check referential integrity, totality of situations, and vector shapes."""
    lang = agent.language
    duties = lang.duties
    lo, hi = agent.value_range
    if lo > hi:
        raise SchemaError(f"empty value range: {agent.value_range}")
    for sid, situation in agent.situations.items():
        situation.check_total(lang.atoms)
    for sid, matrix in agent.matrices.items():
        if sid not in agent.situations:
            raise SchemaError(f"matrix {sid!r} references an undeclared situation")
        if set(matrix.vectors) != set(lang.actions):
            raise SchemaError(f"matrix {sid!r} must have exactly one vector per action")
        for action, vec in matrix.vectors.items():
            if vec.action != action:
                raise SchemaError(f"matrix {sid!r}: vector keyed {action!r} names {vec.action!r}")
            if tuple(vec.values.keys()) != duties:
                raise SchemaError(f"matrix {sid!r}, action {action!r}: duty list mismatch")
            for d, v in vec.values.items():
                if not (lo <= v <= hi):
                    raise SchemaError(
                        f"matrix {sid!r}, action {action!r}: degree {v} for {d} outside [{lo}, {hi}]"
                    )
    if agent.principle is not None:
        for u in agent.principle:
            if tuple(u.bounds.keys()) != duties:
                raise SchemaError(f"disjunct {u.id!r}: duty list mismatch")
    if agent.epistemic is not None:
        spec = agent.epistemic
        atom_set = set(spec.atoms)
        if set(lang.atoms) - atom_set:
            raise SchemaError("epistemic spec must cover all language atoms")
        mentioned = list(spec.assumptions) + list(spec.facts) + list(spec.contraries.values())
        for rule in spec.rules:
            mentioned.append(rule.head)
            mentioned.extend(rule.body)
        for lit in mentioned:
            if lit.atom not in atom_set:
                raise SchemaError(f"epistemic literal {lit} references an undeclared atom")
        assumption_set = set(spec.assumptions)
        if len(assumption_set) != len(spec.assumptions):
            raise SchemaError("duplicate epistemic assumptions")
        for key in spec.contraries:
            if key not in assumption_set:
                raise SchemaError(f"contrary override for non-assumption {key}")
    return agent


def duty_differential(a: DutyVector, b: DutyVector) -> dict[str, int]:
    """Componentwise a - b over a shared, identically ordered duty list."""
    if tuple(a.values.keys()) != tuple(b.values.keys()):
        raise SchemaError(
            f"duty list mismatch between vectors for {a.action!r} and {b.action!r}"
        )
    return {d: a.values[d] - b.values[d] for d in a.values}


def meets_lower_bounds(differential: Mapping[str, int], disjunct: Disjunct) -> bool:
    """True iff every component of the differential meets the disjunct's bound."""
    if set(differential.keys()) != set(disjunct.bounds.keys()):
        raise SchemaError(f"duty list mismatch between differential and disjunct {disjunct.id!r}")
    return all(differential[d] >= bound for d, bound in disjunct.bounds.items())


def prefers(matrix: ActionMatrix, principle: Principle, alpha: str, beta: str) -> tuple[str, ...]:
    """Ids of every disjunct under which alpha is weakly preferred to beta."""
    w = duty_differential(matrix.vector(alpha), matrix.vector(beta))
    return tuple(u.id for u in principle if meets_lower_bounds(w, u))


def strictly_prefers(matrix: ActionMatrix, principle: Principle, alpha: str, beta: str) -> bool:
    """Weak preference holds forward under some disjunct and backward under none."""
    if alpha == beta:
        raise SelfComparisonError(f"strict preference is undefined for {alpha!r} against itself")
    return bool(prefers(matrix, principle, alpha, beta)) and not prefers(matrix, principle, beta, alpha)


def weak_preference_pairs(matrix: ActionMatrix, principle: Principle) -> dict[tuple[str, str], tuple[str, ...]]:
    """Map (alpha, beta) -> qualifying disjunct ids, over all ordered pairs of distinct actions."""
    actions = list(matrix.vectors.keys())
    out: dict[tuple[str, str], tuple[str, ...]] = {}
    for a in actions:
        for b in actions:
            if a == b:
                continue
            ids = prefers(matrix, principle, a, b)
            if ids:
                out[(a, b)] = ids
    return out


def strict_preference_graph(matrix: ActionMatrix, principle: Principle) -> dict[str, frozenset[str]]:
    """Map action -> set of actions it strictly dominates."""
    weak = weak_preference_pairs(matrix, principle)
    actions = list(matrix.vectors.keys())
    return {
        a: frozenset(b for b in actions if b != a and (a, b) in weak and (b, a) not in weak)
        for a in actions
    }


def _find_cycle(graph: Mapping[str, frozenset[str]]) -> tuple[str, ...] | None:
    WHITE, GREY, BLACK = 0, 1, 2
    color = {v: WHITE for v in graph}
    parent: dict[str, str] = {}
    for root in graph:
        if color[root] != WHITE:
            continue
        stack = [(root, iter(sorted(graph[root])))]
        color[root] = GREY
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == WHITE:
                    color[nxt] = GREY
                    parent[nxt] = node
                    stack.append((nxt, iter(sorted(graph[nxt]))))
                    advanced = True
                    break
                if color[nxt] == GREY:
                    cycle = [nxt, node]
                    cur = node
                    while cur != nxt:
                        cur = parent[cur]
                        cycle.append(cur)
                    cycle.reverse()
                    return tuple(cycle[:-1])
            if not advanced:
                color[node] = BLACK
                stack.pop()
    return None


@dataclass(frozen=True)
class SolutionReport:
    """Solution set plus a diagnostic when a strict-preference cycle blocks ordering."""

    actions: frozenset[str]
    cycle: tuple[str, ...] | None = None


def solution_report(agent: VdaAgent, situation_id: str) -> SolutionReport:
    matrix = agent.matrix_for(situation_id)
    principle = agent.require_principle()
    strict = strict_preference_graph(matrix, principle)
    cycle = _find_cycle(strict)
    if cycle is not None:
        # No total ordering avoids inverting a strict edge inside the cycle.
        return SolutionReport(frozenset(), cycle)
    dominated = {b for targets in strict.values() for b in targets}
    return SolutionReport(frozenset(a for a in matrix.vectors if a not in dominated))


def solutions(agent: VdaAgent, situation_id: str) -> frozenset[str]:
    """Actions that can head some ethical ordering of the situation's matrix."""
    return solution_report(agent, situation_id).actions


@dataclass(frozen=True)
class OrderingStep:
    action: str
    to_next: tuple[str, ...]  # disjunct ids relating this action to its successor


@dataclass(frozen=True)
class OrderingReport:
    steps: tuple[OrderingStep, ...]
    stuck: tuple[str, ...] | None = None  # remaining actions when a cycle blocks the greedy pick


def ethical_ordering(
    agent: VdaAgent,
    situation_id: str,
    tie_break: Sequence[str] | None = None,
) -> OrderingReport:
    """Greedy ordering by repeated selection of an undominated action.

    Display artifact only: solution computation never depends on it.  Ties are
    broken by the given priority sequence, lexicographically by default.
    """
    matrix = agent.matrix_for(situation_id)
    principle = agent.require_principle()
    actions = list(matrix.vectors.keys())
    if tie_break is None:
        priority = sorted(actions)
    else:
        priority = list(tie_break)
        if set(priority) != set(actions):
            raise SchemaError("tie_break must be a permutation of the matrix's actions")
    strict = strict_preference_graph(matrix, principle)

    remaining = set(actions)
    picked: list[str] = []
    while remaining:
        candidates = [
            a for a in remaining
            if not any(a in strict[b] for b in remaining if b != a)
        ]
        if not candidates:
            break
        choice = min(candidates, key=priority.index)
        picked.append(choice)
        remaining.discard(choice)

    steps = []
    for i, action in enumerate(picked):
        if i + 1 < len(picked):
            annotation = prefers(matrix, principle, action, picked[i + 1])
        else:
            annotation = ()
        steps.append(OrderingStep(action, annotation))
    stuck = tuple(sorted(remaining)) if remaining else None
    return OrderingReport(tuple(steps), stuck)

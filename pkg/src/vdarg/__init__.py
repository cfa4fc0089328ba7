"""Value-driven agents with argumentation-based justification and explanation.

The package models agents that rank actions by duty satisfaction vectors and
a learned principle of lower bounds, compiles their knowledge into
assumption-based argumentation frameworks for practical and epistemic
reasoning, evaluates them under grounded/complete/preferred/stable
semantics, and renders structured explanations for the verdicts.
"""

from .aba import (
    Aaf,
    AbaFramework,
    Argument,
    Rule,
    TreeNode,
    compute_attacks,
    derive_arguments,
    render_argument,
    to_aaf,
    validate_framework,
)
from .agentfile import agent_to_dict, dump_agent, load_agent, parse_agent, save_agent
from .core import (
    ActionMatrix,
    Disjunct,
    DutyVector,
    EpistemicRule,
    EpistemicSpec,
    Literal,
    OrderingReport,
    OrderingStep,
    Principle,
    Situation,
    SolutionReport,
    VdaAgent,
    VdaLanguage,
    duty_differential,
    ethical_ordering,
    meets_lower_bounds,
    prefers,
    solution_report,
    solutions,
    strict_preference_graph,
    strictly_prefers,
    validate_agent,
    weak_preference_pairs,
)
from .errors import (
    AgentFileError,
    FlatnessError,
    IndeterminateSituationError,
    ResourceCapError,
    SchemaError,
    SelfComparisonError,
    TotalityError,
    UnknownNameError,
    VdaError,
)
from .explain import AttackerCitation, Explanation, explain_action, explain_all_actions, explain_situation, render_text
from .frameworks import (
    AssumptionVerdict,
    Decision,
    EpistemicResult,
    JustifiedSituation,
    PracticalResult,
    analyze_epistemic,
    analyze_practical,
    end_to_end_decide,
    epistemic_framework,
    justified_situation,
    practical_framework,
)
from .semantics import (
    SEMANTICS,
    AcceptanceReport,
    ArgumentStatus,
    Extension,
    acceptance_status,
    complete,
    extensions_for,
    grounded,
    preferred,
    stable,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"

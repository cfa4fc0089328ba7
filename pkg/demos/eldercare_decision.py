"""Walk through a full practical-reasoning decision for the eldercare robot.

The robot has reminded the patient to take a medication and been refused
(situation S1).  We rank its actions by duty vectors and the learned
principle, compile the same knowledge into an argumentation framework, and
check that the argumentative verdict agrees with the ranking.

Run:  python3 demos/eldercare_decision.py
"""

from pathlib import Path

from vdarg import (
    analyze_practical,
    ethical_ordering,
    explain_action,
    load_agent,
    prefers,
    render_argument,
    solutions,
)

scenario = Path(__file__).resolve().parent.parent / "scenarios" / "eldercare.json"
agent = load_agent(scenario)
matrix = agent.matrices["S1"]

print("Duty vectors in situation S1 (duties:", ", ".join(agent.language.duties) + "):")
for action in agent.language.actions:
    print(f"  {action:>9}: {matrix.vector(action).as_row(agent.language.duties)}")

print("\nPairwise ethical preference is decided by the principle's disjuncts.")
print("warn vs notify is justified by:", prefers(matrix, agent.principle, "warn", "notify"))
print("notify vs warn is justified by:", prefers(matrix, agent.principle, "notify", "warn") or "nothing")

report = ethical_ordering(agent, "S1")
chain = []
for i, step in enumerate(report.steps):
    chain.append(step.action)
    if i + 1 < len(report.steps):
        chain.append(f">=[{','.join(step.to_next)}]")
print("\nGreedy ethical ordering:", " ".join(chain))
print("Solutions (actions that can head an ordering):", sorted(solutions(agent, "S1")))

print("\nNow the same knowledge as an argumentation framework:")
result = analyze_practical(agent, "S1", "grounded")
for rule in result.build.framework.rules:
    print(f"  {rule.id}: {rule.head} <- {', '.join(rule.body)}")
print("Arguments:")
for arg in result.aaf.arguments:
    print(f"  {arg.id}: {render_argument(arg, result.build.display_order)}")
print("Grounded extension:", sorted(result.report.extensions[0].members))
print("Justified actions:", sorted(result.justified_actions))

print("\nWhy warn, and why not charge?")
print(" ", explain_action(result, "warn").text)
print(" ", explain_action(result, "charge").text)
print(" ", explain_action(result, "remind").text)

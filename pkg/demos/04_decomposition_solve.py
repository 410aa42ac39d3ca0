"""Watching the solver reduce a CNF clause by clause.

Each clause becomes a symbolic factor.  The solver freezes the first
factor, builds a projection that keeps its ON-set and aims everything
else at the next factor's OFF-set, and rewrites the remaining factors
through that map.  The product of the remaining factors never changes,
so the last factor ends up canonically equal to the whole conjunction:
satisfiability, witnesses, and solution counts drop out of it directly.
"""

from projsat import parse_dimacs
from projsat.solver import SolveConfig, SolveStatus, solve

SAT_TEXT = """\
p cnf 4 3
-1 2 4 0
-2 3 -4 0
1 3 -4 0
"""

UNSAT_TEXT = """\
p cnf 2 4
1 2 0
1 -2 0
-1 2 0
-1 -2 0
"""


def show(name, text):
    print(f"== {name} ==")
    formula = parse_dimacs(text)
    result = solve(formula, SolveConfig(trace=True))
    for i, step in enumerate(result.chain, start=1):
        line = f"f{i} = {step.func.format_expr(max_terms=12)}"
        if step.projection is not None:
            off = "".join(str(b) for b in step.projection.off_point)
            line += f"   (next projection lands on {off})"
        print(" ", line)
    print("  verdict:", result.status.value)
    if result.status is SolveStatus.SAT:
        print("  witness:", result.witness)
    for record in result.steps:
        print(f"  step {record.factor_index}: factor size "
              f"{record.factor_size}, remaining factors "
              f"{record.remaining_before} -> {record.remaining_after} nodes")
    print()


show("three clauses over four variables", SAT_TEXT)
show("all four clauses over two variables", UNSAT_TEXT)

"""SAT by chained projective-cofactor reduction.

The solver keeps one symbolic factor per clause.  At step i the
current factor is frozen, a projection pinning its ON-set and
targeting the OFF-set of the next remaining factor (as it currently
stands, after earlier reductions) is built, and every remaining
factor is composed with that projection (independently, so in
parallel if asked).  Because the product of the remaining factors is
always bounded by the chosen target, each step preserves that product
exactly; the final factor therefore equals the conjunction of the
whole formula and hands out witnesses and solution sets directly.

Targeting the factor as already reduced matters: aiming at the
original clause instead lets a later factor drift above its clause,
after which the product is no longer preserved and the verdict can be
wrong.  See tests/test_solver.py for a four-clause instance that
trips the original-clause variant.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from .cnf import CnfFormula, clause_to_func
from .engine import DEFAULT_ENUM_CAP, BoolFunc, BoolSpace
from .oracle import tt_equal, tt_of_formula, tt_of_func
from .projections import Projection, projection_for, verify_projection


class SolveStatus(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"


@dataclass
class SolveConfig:
    """Solver knobs; the defaults give the sequential input-order run."""

    factor_order: str = "input"  # "input" or "size" (ascending clause width)
    threads: int = 1
    trace: bool = False
    enumerate_all: bool = False
    oracle_check: bool = False
    enum_cap: int = DEFAULT_ENUM_CAP

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.factor_order not in ("input", "size"):
            raise ValueError("factor_order must be 'input' or 'size'")


@dataclass
class StepRecord:
    """Statistics for one outer-loop step (indices are 0-based)."""

    factor_index: int
    factor_size: int
    remaining_before: int
    remaining_after: int
    off_point: Optional[tuple[int, ...]]


@dataclass
class ChainStep:
    """One frozen factor plus the projection chosen at that step."""

    func: BoolFunc
    projection: Optional[Projection]
    size: int


@dataclass
class SolveResult:
    """Verdict, witness, optional solution set, and per-step records."""

    status: SolveStatus
    witness: Optional[tuple[int, ...]]
    all_solutions: Optional[list[tuple[int, ...]]]
    steps: list[StepRecord]
    chain: Optional[list[ChainStep]]
    var_count: int

    def to_json_dict(self) -> dict:
        """Plain-data mirror used by the CLI's JSON output."""
        data = {
            "status": self.status.value,
            "var_count": self.var_count,
            "witness": list(self.witness) if self.witness is not None else None,
            "all_solutions": ([list(p) for p in self.all_solutions]
                              if self.all_solutions is not None else None),
            "steps": [
                {
                    "factor_index": s.factor_index,
                    "factor_size": s.factor_size,
                    "remaining_before": s.remaining_before,
                    "remaining_after": s.remaining_after,
                    "off_point": list(s.off_point) if s.off_point is not None else None,
                }
                for s in self.steps
            ],
        }
        if self.chain is not None:
            data["chain"] = [
                {
                    "size": step.size,
                    "formula": step.func.format_expr(max_terms=32),
                    "off_point": (list(step.projection.off_point)
                                  if step.projection is not None
                                  and step.projection.off_point is not None
                                  else None),
                    "projection": (step.projection.dump()
                                   if step.projection is not None else None),
                }
                for step in self.chain
            ]
        else:
            data["chain"] = None
        return data


def projective_cofactor(func: BoolFunc, fixed: BoolFunc, proj: Projection, *,
                        verify: bool = False) -> BoolFunc:
    """Compose func with the projection's substitution.

    The result agrees with func everywhere fixed is 1 (so it is a
    cofactor of func on that region) and lies between func & fixed and
    func | ~fixed.  With verify=True the projection's requirements are
    re-checked first, against its recorded provenance target when
    present, else against func itself.
    """
    if verify:
        reference = proj.target if proj.target is not None else func
        if not verify_projection(proj, fixed, reference):
            raise ValueError("projection does not pin the given region")
    return func.compose(proj.subst)


def check_sat_preservation(fixed: BoolFunc, other: BoolFunc,
                           proj: Projection) -> bool:
    """True when fixed & other and the projective cofactor coincide.

    This is the exact property that lets the solver replace a
    conjunction with a single composed factor without changing its
    solution set.
    """
    return (fixed & other) == projective_cofactor(other, fixed, proj)


def _total_size(working: list[BoolFunc], start: int) -> int:
    return sum(func.node_count() for func in working[start:])


def solve(formula: CnfFormula, config: Optional[SolveConfig] = None) -> SolveResult:
    """Decide a CNF by chained projective reduction.

    Tautological clauses are dropped up front; an empty clause is an
    immediate UNSAT.  The remaining factors are reduced left to right,
    and the final factor's on-set is the formula's full solution set.
    """
    cfg = config if config is not None else SolveConfig()
    n = formula.var_count
    space = BoolSpace(n)

    live = [c for c in formula.clauses if not c.is_tautology]
    if any(not c.literals for c in live):
        tail = [ChainStep(space.false, None, space.false.node_count())]
        return _finalize(formula, cfg, SolveStatus.UNSAT, space.false, [], tail, n)
    if cfg.factor_order == "size":
        live = sorted(live, key=len)

    working = [clause_to_func(c, space) for c in live]
    k = len(working)
    if k == 0:
        tail = [ChainStep(space.true, None, space.true.node_count())]
        return _finalize(formula, cfg, SolveStatus.SAT, space.true, [], tail, n)

    steps: list[StepRecord] = []
    chain: list[ChainStep] = []
    status = SolveStatus.SAT
    final: Optional[BoolFunc] = None
    executor = ThreadPoolExecutor(max_workers=cfg.threads) if cfg.threads > 1 else None
    try:
        for i in range(k):
            current = working[i]
            entry = ChainStep(current, None, current.node_count())
            chain.append(entry)
            if not current.is_sat():
                status = SolveStatus.UNSAT
                final = current
                break
            if i == k - 1:
                final = current
                break
            if current == space.true:
                size = _total_size(working, i + 1)
                steps.append(StepRecord(i, 0, size, size, None))
                continue
            target = next((working[j] for j in range(i + 1, k)
                           if working[j] != space.true), None)
            if target is None:
                final = current
                break
            proj = projection_for(current, target)
            entry.projection = proj
            before = _total_size(working, i + 1)
            rest = range(i + 1, k)
            if executor is not None:
                updated = list(executor.map(
                    lambda j: working[j].compose(proj.subst), rest))
            else:
                updated = [working[j].compose(proj.subst) for j in rest]
            for j, func in zip(rest, updated):
                working[j] = func
            steps.append(StepRecord(i, current.node_count(), before,
                                    _total_size(working, i + 1), proj.off_point))
    finally:
        if executor is not None:
            executor.shutdown()

    return _finalize(formula, cfg, status, final, steps, chain, n)


def _finalize(formula: CnfFormula, cfg: SolveConfig, status: SolveStatus,
              final: Optional[BoolFunc], steps: list[StepRecord],
              chain: list[ChainStep], var_count: int) -> SolveResult:
    if final is not None and not final.is_sat():
        status = SolveStatus.UNSAT
    witness = None
    if status is SolveStatus.SAT and final is not None:
        witness = final.any_on_point()
    solutions = None
    if cfg.enumerate_all:
        if status is SolveStatus.SAT and final is not None:
            solutions = final.enumerate_on_set(cfg.enum_cap)
        else:
            solutions = []
    if cfg.oracle_check:
        _oracle_check(formula, status, final)
    return SolveResult(status, witness, solutions, steps,
                       chain if cfg.trace else None, var_count)


def _oracle_check(formula: CnfFormula, status: SolveStatus,
                  final: Optional[BoolFunc]) -> None:
    table = tt_of_formula(formula)
    if final is not None:
        ok = tt_equal(table, tt_of_func(final))
    else:
        ok = table.count() == 0
    if not ok:
        raise RuntimeError("final factor disagrees with the exhaustive oracle")


def solve_chain_trace(formula: CnfFormula,
                      config: Optional[SolveConfig] = None) -> list[ChainStep]:
    """Run the solver and return the frozen-factor chain.

    Entry i holds the factor as it stood when the outer loop froze it,
    together with the projection built from it (None for the last
    factor and for skipped tautologies).
    """
    cfg = replace(config, trace=True) if config is not None else SolveConfig(trace=True)
    result = solve(formula, cfg)
    assert result.chain is not None
    return result.chain

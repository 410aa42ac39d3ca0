"""Exhaustive truth-table oracle.

Tables are filled straight from clause data with numpy index
arithmetic, touching none of the engine's code, so agreement between
the two paths is evidence rather than tautology.  The only bridge back
is tt_of_func, which evaluates an engine function point by point.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np

from .cnf import CnfFormula

#: Largest variable count an exhaustive table will be built for.
MAX_TABLE_VARS = 24


def index_to_point(index: int, var_count: int) -> tuple[int, ...]:
    """Decode a table index into its point (bit i weighs 2^(n-1-i))."""
    return tuple((index >> (var_count - 1 - i)) & 1 for i in range(var_count))


def point_to_index(point: Sequence[int]) -> int:
    """Lexicographic rank of a point; inverse of index_to_point."""
    index = 0
    for bit in point:
        index = (index << 1) | (1 if bit else 0)
    return index


class TruthTable:
    """Bit vector over all 2**n points, in lexicographic point order."""

    __slots__ = ("var_count", "bits")

    def __init__(self, var_count: int, bits):
        if var_count > MAX_TABLE_VARS:
            raise ValueError(
                f"{var_count} variables exceed the table cap of {MAX_TABLE_VARS}")
        array = np.asarray(bits, dtype=bool)
        if array.shape != (1 << var_count,):
            raise ValueError("bit vector length must be exactly 2**var_count")
        self.var_count = var_count
        self.bits = array

    def count(self) -> int:
        """Number of satisfying points."""
        return int(self.bits.sum())

    def value_at(self, point: Sequence[int]) -> int:
        return int(self.bits[point_to_index(point)])

    def satisfying_points(self) -> list[tuple[int, ...]]:
        """All points mapped to 1, in lexicographic order."""
        return [index_to_point(int(i), self.var_count)
                for i in np.nonzero(self.bits)[0]]

    def __repr__(self) -> str:
        return f"TruthTable(vars={self.var_count}, on={self.count()})"


def tt_of_formula(formula: CnfFormula) -> TruthTable:
    """Evaluate a CNF clause by clause over every point."""
    n = formula.var_count
    if n > MAX_TABLE_VARS:
        raise ValueError(f"{n} variables exceed the table cap of {MAX_TABLE_VARS}")
    size = 1 << n
    indices = np.arange(size, dtype=np.uint32)
    acc = np.ones(size, dtype=bool)
    for clause in formula.clauses:
        value = np.zeros(size, dtype=bool)
        for lit in clause.literals:
            bit = (indices >> (n - 1 - lit.var)) & 1
            value |= (bit == 0) if lit.negated else (bit == 1)
        acc &= value
    return TruthTable(n, acc)


def tt_of_func(func) -> TruthTable:
    """Bridge from the engine: evaluate a BoolFunc at every point."""
    n = func.space.var_count
    if n > MAX_TABLE_VARS:
        raise ValueError(f"{n} variables exceed the table cap of {MAX_TABLE_VARS}")
    bits = np.fromiter((func(p) for p in product((0, 1), repeat=n)),
                       dtype=bool, count=1 << n)
    return TruthTable(n, bits)


def tt_equal(first: TruthTable, second: TruthTable) -> bool:
    """Exact comparison of two tables of the same width."""
    if first.var_count != second.var_count:
        raise ValueError("tables have different variable counts")
    return bool(np.array_equal(first.bits, second.bits))


def formula_satisfied(formula: CnfFormula, point: Sequence[int]) -> bool:
    """Direct clause-by-clause check that a point satisfies the formula."""
    if len(point) != formula.var_count:
        raise ValueError("point length does not match variable count")
    return all(clause.satisfied_by(point) for clause in formula.clauses)

"""Shared construction helpers for the test suite.

Random functions are built in tandem: every engine-side operation is
mirrored on a numpy truth table computed with plain index arithmetic.
Tests that compare the two sides therefore exercise two independent
code paths end to end.
"""

import random

import numpy as np

from projsat import BoolSpace, Clause, CnfFormula, Literal

TWO_VAR_UNSAT = "p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n"
FOUR_VAR_SAT = "p cnf 4 3\n-1 2 4 0\n-2 3 -4 0\n1 3 -4 0\n"


def bit_columns(n):
    """Column i of the lexicographic point matrix (bit i weighs 2^(n-1-i))."""
    idx = np.arange(1 << n, dtype=np.uint32)
    return [((idx >> (n - 1 - i)) & 1).astype(bool) for i in range(n)]


def random_func(space: BoolSpace, rng: random.Random, depth: int = 4):
    """A random function as (engine value, independent numpy table)."""
    n = space.var_count
    cols = bit_columns(n)

    def build(d):
        if d == 0 or rng.random() < 0.25:
            roll = rng.random()
            if roll < 0.08:
                bit = rng.randint(0, 1)
                table = np.full(1 << n, bool(bit))
                return space.const(bit), table
            i = rng.randrange(n)
            return space.var(i), cols[i].copy()
        op = rng.choice("&&||^~")
        if op == "~":
            f, t = build(d - 1)
            return ~f, ~t
        f, tf = build(d - 1)
        g, tg = build(d - 1)
        if op == "&":
            return f & g, tf & tg
        if op == "|":
            return f | g, tf | tg
        return f ^ g, tf ^ tg

    return build(depth)


def random_clause(n: int, rng: random.Random, max_width: int = 3) -> Clause:
    """A random non-tautological clause without duplicate variables."""
    width = rng.randint(1, min(max_width, n))
    vars_ = rng.sample(range(n), width)
    return Clause(tuple(Literal(v, rng.random() < 0.5) for v in vars_))


def random_cnf(rng: random.Random, max_vars: int = 10, max_clauses: int = 25,
               min_vars: int = 2) -> CnfFormula:
    n = rng.randint(min_vars, max_vars)
    m = rng.randint(1, max_clauses)
    return CnfFormula(n, [random_clause(n, rng) for _ in range(m)])


def clause_func(space: BoolSpace, clause: Clause):
    """Engine-side disjunction built literal by literal, bypassing cnf.py."""
    acc = space.false
    for lit in clause.literals:
        term = space.var(lit.var)
        acc = acc | (~term if lit.negated else term)
    return acc

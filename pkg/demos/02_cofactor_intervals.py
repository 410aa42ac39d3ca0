"""Cofactors as an interval of interchangeable functions.

A cofactor of f with respect to a region g is any function that agrees
with f wherever g is 1; off the region it is unconstrained.  The set of
all such functions is exactly the interval [f & g, f | ~g], and every
member is reachable by choosing a filler for the off-region behavior.
"""

from projsat import BoolSpace
from projsat.cofactors import (cofactor_interval, expand, general_cofactor,
                               is_cofactor)

space = BoolSpace(["x1", "x2", "x3"])
x1, x2, x3 = (space.var(i) for i in range(3))

f = (~x1 & x2) | (x2 & x3) | (x1 & ~x3)
g = ~x1 | x3
print("f =", f.format_expr())
print("g =", g.format_expr())

print()
print("== the interval ==")
interval = cofactor_interval(f, g)
print("lower  f & g  =", interval.lower.format_expr())
print("upper  f | ~g =", interval.upper.format_expr())

print()
print("== sweeping members with fillers ==")
for filler in (space.false, space.true, x2, ~x2 & x1):
    member = general_cofactor(f, g, filler)
    inside = member in interval
    print(f"filler {filler.format_expr():>10}  ->  {member.format_expr():<28}"
          f" member={is_cofactor(member, f, g)} in_interval={inside}")

print()
print("== membership is agreement on the region ==")
candidate = x2
print("candidate      =", candidate.format_expr())
print("is a cofactor  =", is_cofactor(candidate, f, g))
print("agrees on g:     candidate & g == f & g:",
      (candidate & g) == (f & g))

print()
print("== expansion over a cover ==")
# f restated as a union of per-region cofactors, here the two branches
# of the variable x1, each simplified by an arbitrary filler
regions = [~x1, x1]
parts = [general_cofactor(f, r, space.false) for r in regions]
for region, part in zip(regions, parts):
    print(f"over {region.format_expr():>3}: {part.format_expr()}")
rebuilt = expand(f, regions, parts)
print("recombining the branches returns f exactly:", rebuilt == f)

"""Tour of the canonical Boolean function engine.

Functions built in one BoolSpace are hash-consed: two expressions
denote the same function exactly when they compare equal, so algebraic
identities can be checked with == instead of truth tables.
"""

from projsat import BoolSpace

space = BoolSpace(["x", "y", "z"])
x, y, z = (space.named(n) for n in "xyz")

print("== building and printing ==")
f = (x & y) | (~x & z)
print("f           =", f.format_expr())
print("node count  =", f.node_count())
print("support     =", sorted(space.var_names[i] for i in f.support()))

print()
print("== canonical equality ==")
# same function, three different shapes
g = (x & y) | (~x & z) | (y & z)
h = space.ite(x, y, z)
print("consensus form equals f:", g == f)
print("if-then-else form equals f:", h == f)
print("absorption, x | (x & y) == x:", (x | (x & y)) == x)
print("de morgan, ~(x & y) == ~x | ~y:", ~(x & y) == (~x | ~y))

print()
print("== evaluation ==")
for point in [(0, 0, 0), (0, 1, 1), (1, 1, 0)]:
    print(f"f{point} = {f(point)}")

print()
print("== implication and extremal points ==")
print("x & y <= x | y:", (x & y) <= (x | y))
print("first satisfying point of f:", f.any_on_point())
print("first falsifying point of f:", f.any_off_point())
print("all satisfying points of x ^ y:", (x ^ y).enumerate_on_set())

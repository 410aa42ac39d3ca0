"""Projections: remaps of the cube that freeze one region.

A projection for (g, h) rewrites every variable so that points where
g holds stay exactly where they are, while points where g fails land
somewhere h fails.  Composing any function with such a map yields a
cofactor of it with respect to g; composing h itself collapses it to
g & h, which is what the solver exploits step by step.
"""

from projsat import BoolSpace
from projsat.cofactors import is_cofactor
from projsat.projections import (compose_projections, point_projection,
                                 projection_for, verify_projection)

space = BoolSpace(["x", "y", "z", "w"])
x, y, z, w = (space.var(i) for i in range(4))

g = ~x | y | w        # region to freeze (a single clause)
h = ~y | z | ~w       # target whose off-set absorbs the rest
print("g =", g.format_expr())
print("h =", h.format_expr())

print()
print("== a point projection ==")
# lexicographically first point with h = 0, used as the landing spot
proj = projection_for(g, h)
print("chosen off-point of h:", proj.off_point)
print("variable images:")
for line in proj.dump():
    print("  ", line)

print()
print("== the two defining requirements ==")
print("meets them (checked symbolically):",
      verify_projection(proj, g, h))
on_point = g.any_on_point()
off_point = (~g).any_on_point()
print(f"point on g  {on_point} -> {proj.apply_to_point(on_point)} (unmoved)")
image = proj.apply_to_point(off_point)
print(f"point off g {off_point} -> {image} (h there = {h(image)})")

print()
print("== composition gives cofactors ==")
f = (x & z) | (y & ~w)
zeta = f.compose(proj.subst)
print("f               =", f.format_expr())
print("f after the map =", zeta.format_expr())
print("cofactor of f on g:", is_cofactor(zeta, f, g))
print("h collapses to g & h:", h.compose(proj.subst) == (g & h))

print()
print("== stacking projections ==")
g2 = x | ~z
other = point_projection(g2, h, off_point=h.any_off_point())
stacked = compose_projections(proj, other)
print("second region g2 =", g2.format_expr())
print("stack freezes g & g2:", verify_projection(stacked, g & g2, h))

"""Arcs, the shift, Serre duality and the AR quiver of the stable category."""

# %%
from collections import Counter

from zgon import Gon, arc, arcs, hom_dim, phi, shift, spherical_profile, tau, thick_closure
from zgon.rep import Interval
from zgon.core import Point
from zgon.stable import almost_split_triangle, ar_quiver, component_count
from zgon.figures import gon_svg, quiver_dot

a = arc(3, 0)
print("a =", a, " Sigma a =", shift(a), " tau a =", tau(a))
print("phi(0, 2; 0) =", phi(Interval(Point(1, 0), Point(1, 2), 0)))

# %% Serre duality, counted over a window
g = Gon(2)
pool = arcs(g, 4)
tally = Counter((hom_dim(x, y), hom_dim(y, shift(x, -1))) for x in pool for y in pool)
print(tally)

# %% the spherical object of Z_1 and what it generates
print(spherical_profile(arc(1, 0), -4, 4))
print(len(thick_closure(arc(1, 0), 4)), "of", len(arcs(Gon(1), 4)), "arcs reached")

# %% AR quiver
for m in (1, 2, 3):
    print(m, component_count(ar_quiver(Gon(m), 4)), "components")
t = almost_split_triangle(a)
print("triangle:", t.left, "->", " + ".join(map(str, t.middle)), "->", t.right, "->", t.shift_of_left)

# %% figures (written next to this script)
with open("quiver_m2.dot", "w") as fh:
    fh.write(quiver_dot(ar_quiver(g, 3)))
with open("arc_hammocks.svg", "w") as fh:
    fh.write(gon_svg(Gon(1), [arc(1, 0)], hammocks=True, triangle=True))

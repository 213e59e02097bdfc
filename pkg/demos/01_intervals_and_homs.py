"""Intervals on Z_1, their Hom spaces and where those Homs come from.

Run with ``python3 demos/01_intervals_and_homs.py``.
"""

# %%
from zgon import Gon, Interval, Point, derived, hom_report, intervals
from zgon.rep import almost_split_sequence, composition_factors, middle_terms

g = Gon(1)
z = lambda n: Point(1, n)

U = Interval(z(0), z(2), 0)
print("U =", U)
for name, X in derived(U)._asdict().items():
    print(f"  {name:9s} {X}")

# %% Hom out of U, sorted by hammock
pool = intervals(g, 3)
by_hammock = {}
for V in pool:
    r = hom_report(U, V)
    by_hammock.setdefault(r.hammock, []).append(V)
for label in ("Hplus", "Hminus", "P"):
    print(label, len(by_hammock.get(label, [])), [str(V) for V in by_hammock.get(label, [])[:4]])

# the projective P_0 has a two dimensional endomorphism ring, all of it factoring
print(hom_report(Interval(z(0), z(1), 1), Interval(z(0), z(1), 1)))

# %% exact sequences
s = almost_split_sequence(U)
print("AR sequence:", s.left, "->", " + ".join(map(str, s.middle)), "->", s.right)
mt = middle_terms(U, Interval(z(-2), z(1), 0))
print("middle terms:", mt.I, mt.J, "winding", mt.l)

# %% composition series, socle first
print([str(S) for S in composition_factors(Interval(z(0), z(4), 0), 10).factors])
print([str(S) for S in composition_factors(Interval(z(0), z(1), 1), 5).factors], "...")

"""Recompute Hom spaces from scratch and compare with the closed forms.

The oracle builds each string as a matrix representation on a finite chain of
sample angles and solves the naturality equations exactly.
"""

# %%
import random
import time

import numpy as np

from zgon import Gon, Interval, Point, hom_dim_rep, intervals, proj_factor_dim
from zgon.linalg import PRIME, Field
from zgon.oracle import default_chain, hom_dim_circle_oracle, proj_factor_dim_oracle, realize

g = Gon(2)
chain = default_chain(g, 3)
print(len(chain), "samples,", len(chain.circle), "per turn")

# %% one interval module on the line
M = realize(Interval(Point(1, 0), Point(2, -1), 0), 0, chain)
dims = np.array([M.dim(i) for i in range(len(chain))])
print("support:", M.lo, "to", M.hi, " total dim", dims.sum())

# %% random pairs, both fields
rng = random.Random(1)
pool = intervals(g, 3)
pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(300)]
t = time.perf_counter()
agree = sum(hom_dim_circle_oracle(U, V, chain) == hom_dim_rep(U, V) for U, V in pairs)
print(f"Hom: {agree}/{len(pairs)} agree ({time.perf_counter() - t:.2f}s)")
gf = Field(PRIME)
agree = sum(hom_dim_circle_oracle(U, V, chain, gf) == hom_dim_rep(U, V) for U, V in pairs)
print(f"Hom over GF({PRIME}): {agree}/{len(pairs)} agree")

# %% projective factoring
sub = pairs[:80]
agree = sum(proj_factor_dim_oracle(U, V, chain) == proj_factor_dim(U, V) for U, V in sub)
print(f"projective factoring: {agree}/{len(sub)} agree")

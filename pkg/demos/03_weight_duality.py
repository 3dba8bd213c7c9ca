"""The duality involution on Laurent-polynomial weight functions.

D sums each face's weights over the faces above it, with signs; applied
twice it is the identity, and the g-weights of a face are an eigenvector
with eigenvalue (-y)^(-dim).
"""

import random

from wehrhart import (
    LaurentPoly,
    all_ones,
    build,
    delta_weight,
    dualize,
    g_weight_function,
    random_weight_function,
    scale,
    substitute_inverse,
)
from wehrhart.algebra import neg_y_power

seg = build("segment")
f = delta_weight(seg, seg.top_id)
print("segment, weight 1 on the edge only:")
for fid, p in dualize(f).values.items():
    print(f"  D(f) on face {fid}: {p}")
print("applying D twice returns the original:", dualize(dualize(f)) == f)

print()
pyr = build("pyramid")
g = g_weight_function(pyr, pyr.top_id)
eigen = scale(neg_y_power(-3), g)
print("pyramid g-weights transform by (-y)^-3:", dualize(g) == eigen)

print()
rng = random.Random(2024)
w = random_weight_function(pyr, rng)
p = LaurentPoly({-1: 2, 1: 3})
lhs = dualize(scale(p, w))
rhs = scale(substitute_inverse(p), dualize(w))
print("module property D(p(y) f) = p(1/y) D(f):", lhs == rhs)
print("involution on a random weight function:", dualize(dualize(w)) == w)

ones = all_ones(pyr)
print("all-ones is generally not an eigenvector:",
      dualize(ones) != scale(neg_y_power(-3), ones))

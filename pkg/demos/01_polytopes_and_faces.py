"""Face lattices of the bundled polytopes.

Builds each corpus member from its vertices, prints the facet
presentation and f-vector, and partitions the lattice points of a
dilate by the face whose relative interior contains them.
"""

from wehrhart import build, names, points_by_face

for name in names():
    lattice = build(name)
    P = lattice.polytope
    print(f"{name}: dim {P.n}, {len(P.vertices)} vertices, "
          f"{len(P.facets)} facets, f-vector {lattice.f_vector}")

print()
print("square pyramid in detail")
pyr = build("pyramid")
for u, a in pyr.polytope.facets:
    print(f"  <m, {u}> >= {-a}")

print()
print("lattice points of 2P, grouped by carrier face")
parts = points_by_face(pyr, 2)
for fid, pts in parts.items():
    if not pts:
        continue
    face = pyr.faces[fid]
    print(f"  face {fid} (dim {face.dim}): {len(pts)} interior point(s)")

total = sum(len(p) for p in parts.values())
print(f"  total: {total} points in 2P")

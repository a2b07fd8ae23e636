"""Walk through the 7-region partition a triangle induces on the plane.

Each extra point lands in exactly one region: the interior, one of three
corner (beta) regions beyond a vertex, or one of three edge (gamma) regions
across an edge.  The region determines the type of the 4-subset formed with
the triangle: gamma gives a convex quadrilateral, interior and beta give a
triangle with an interior point.
"""

from convexcount import (
    Placement,
    RegionKind,
    canonical_triangle,
    classify4,
    classify_region,
    cross,
    region_counts,
    region_table,
)

triangle = [(0, 0), (60, 0), (0, 60)]
probes = [
    (20, 18),    # inside
    (70, 75),    # across the long edge
    (-9, 31),    # across the left edge
    (33, -8),    # across the bottom edge
    (-14, -11),  # beyond the right-angle corner
    (88, -13),   # beyond the bottom-right corner
    (-12, 90),   # beyond the top corner
]
p = Placement.from_points(triangle + probes)
tri = canonical_triangle(p, 0, 1, 2)
a, b, c = p[tri.v1], p[tri.v2], p[tri.v3]

print(f"triangle {tuple(a)} {tuple(b)} {tuple(c)} "
      "(counterclockwise, anchored at lowest index)\n")
print(f"{'point':>12}  {'signs':>21}  {'region':<12} 4-subset type")
for x in range(3, p.n):
    pt = p[x]
    signs = (cross(b, c, pt), cross(c, a, pt), cross(a, b, pt))
    label = classify_region(p, tri, x)
    quad_type = classify4(p, (tri.v1, tri.v2, tri.v3, x))
    name = label.kind.name.lower()
    if label.slot is not None:
        name += f"({label.slot})"
    print(f"{str(tuple(pt)):>12}  {str(signs):>21}  {name:<12} {quad_type.value}")

rc = region_counts(p, tri)
print(f"\nregion totals for this triangle: interior={rc.interior} "
      f"beta={rc.beta} gamma={rc.gamma}")
assert rc.interior + rc.beta_total + rc.gamma_total == p.n - 3
print(f"partition check: {rc.interior} + {rc.beta_total} + {rc.gamma_total} "
      f"= {p.n - 3} = n - 3")

# every triangle of the placement at once
table = region_table(p)
busiest = max(table, key=lambda row: row[1].gamma_total)
ref, counts = busiest
print(f"\nacross all {len(table)} triangles, the one with the most edge-region "
      f"points is {ref.indices}: gamma_total={counts.gamma_total}")

interior_points = [
    x for x in range(3, p.n)
    if classify_region(p, tri, x).kind is RegionKind.INTERIOR
]
print(f"points interior to the base triangle: "
      f"{[tuple(p[i]) for i in interior_points]}")

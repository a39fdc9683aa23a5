"""Cube symmetries and the translation from sponges to graph-directed systems.

A sponge whose pieces carry rotations or reflections is not self-similar in
the plain sense, but the family of all its symmetry images closes up under
the subdivision maps.  That family is the graph-directed system every
decision runs on.
"""

from gridifs import (
    SpongeSpec,
    Symmetry,
    compose,
    digit_action,
    enumerate_group,
    pair_system,
    sponge_to_gds,
    decide_intersection,
)

print("-- The symmetry group of the square --")
group = enumerate_group(2)
print(f"{len(group)} elements (axis permutation + per-axis flip):")
for k, sym in enumerate(group, start=1):
    corners = {v: sym.transform_digit(v, 2) for v in ((0, 0), (1, 0), (1, 1), (0, 1))}
    action = ", ".join(f"{a}->{b}" for a, b in corners.items())
    print(f"  #{k}: perm={sym.perm} signs={sym.signs} order={sym.order()}  {action}")

rot90 = Symmetry((1, 0), (-1, 1))
flip_x = Symmetry((0, 1), (-1, 1))
print("\nquarter turn twice is the half turn:",
      compose(rot90, rot90) == Symmetry((0, 1), (-1, -1)))
print("mirror then quarter turn:", compose(rot90, flip_x))

print("\n-- Digit actions on a 3x3 grid --")
for dig in ((0, 0), (2, 1), (1, 1)):
    print(f"quarter turn moves cell {dig} to {digit_action(rot90, dig, 3)}")

print("\n-- A sponge as a graph-directed system --")
sponge = SpongeSpec(d=2, N=2, digits=((0, 0), (1, 0), (0, 1)),
                    symmetries=(Symmetry.identity(2), rot90, flip_x))
system, identity_vertex = sponge_to_gds(sponge)
print(f"{system.n} vertices (one per symmetry image), {len(system.edges)} edges")
print(f"the sponge itself is vertex {identity_vertex}; its subdivision edges:")
for e in system.edges:
    if e.source == identity_vertex:
        print(f"  -> image #{e.target} shifted by {e.translation}")

print("\n-- Asking whether two placed pieces meet --")
augmented, (v1, v2) = pair_system(sponge, (1, 0), (0, 1))
print(f"two query vertices added: {v1} and {v2}")
decision = decide_intersection(augmented, v1, v2)
print("pieces at (1,0) and (0,1) intersect:", decision.outcome)

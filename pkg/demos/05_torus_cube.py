#!/usr/bin/env python3
"""The two-torus: lattice keys, a height-2 filtration, and its cube.

Closed subgroups of a torus are annihilators of integer lattices; the
Hermite normal form of the lattice is the canonical key.  Heights equal
dimensions, the strata are the 0-, 1-, and 2-dimensional subgroups, and
reassembly is scheduled by a punctured cube on three levels whose node
shapes come from the isomax dimension formula.
"""

from prism import (
    DispersionCandidate,
    Torus,
    build_decomposition,
    cube_to_dot,
    flagged_snapshot,
    isomax_table,
    recollement_schedule,
    snapshot_keys,
    strata,
    thomason_heights,
)

t2 = Torus(2)
space = flagged_snapshot(t2, 2)
heights = thomason_heights(space)

print("== keys and heights (bound 2) ==")
for name, key in sorted(snapshot_keys(t2, 2).items()):
    print("  %-12s lattice rank %d  height %d"
          % (name, len(key.rows), heights.heights[name]))

print()
print("== strata of the height filtration ==")
candidate = DispersionCandidate({**heights.heights, **heights.family_heights})
for level in (0, 1, 2):
    report = strata(space, candidate, level)
    print("  level %d: %d points, %d whole families"
          % (level, len(report.at_level.concrete), len(report.at_level.portions)))

print()
print("== splicing schedule ==")
for step in recollement_schedule(2):
    print("  stratum %d -> residual %s via %s"
          % (step.stratum, step.residual, step.label))

print()
print("== isomax shapes on three levels ==")
print(isomax_table(2))

diagram = build_decomposition(t2, 2)
print("== the punctured cube (%d nodes) ==" % len(diagram.nodes))
for phi in sorted(diagram.nodes):
    node = diagram.nodes[phi]
    print("  phi=%-4s dim %d  stratum %d  (%d factors)"
          % ("".join(map(str, phi)), node.cube_dim, node.stratum,
             len(node.factor_labels)))

print()
print("DOT output, first lines:")
print("\n".join(cube_to_dot(diagram).splitlines()[:6]))

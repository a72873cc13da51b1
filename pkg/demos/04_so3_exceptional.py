#!/usr/bin/env python3
"""SO(3): fusion, exceptional classes, and their Weyl groups.

Compared with O(2), three things change: reflections fuse with order-2
rotations, the Klein four-group becomes exceptional with Weyl group S3,
and the polyhedral classes appear as isolated height-0 points.  The full
group itself sits at height 0 because its identity component is
semisimple: nothing can accumulate at it.
"""

from prism import (
    Dih,
    KleinKey,
    SO3,
    component_decompositions,
    flagged_snapshot,
    key_name,
    parse_key,
    thomason_heights,
    weyl_data,
)

print("== fusion of small dihedral classes ==")
print("  D(2) is the class of", key_name(SO3(), Dih(1)))
print("  D(4) is the class of", key_name(SO3(), Dih(2)))
print("  D(6) stays", key_name(SO3(), Dih(3)))

print()
print("== heights at bound 4 ==")
space = flagged_snapshot(SO3(), 4)
heights = thomason_heights(space)
for name in sorted(space.concrete):
    print("  %-5s height %d" % (name, heights.heights[name]))

print()
print("== Weyl groups ==")
for name in ("C(1)", "C(5)", "D(6)", "SO2", "O2", "A4", "S4", "A5", "V4", "G"):
    w = weyl_data(SO3(), parse_key(SO3(), name))
    print("  %-5s identity %-6s components %s (order %d)"
          % (name, w.identity_component, w.component_name, w.component_order))
print("  the Klein class has the nonabelian Weyl group of order 6:",
      weyl_data(SO3(), KleinKey()).component_order == 6)

print()
print("== the model splits into seven pieces ==")
for label, diagram in component_decompositions(SO3(), 4):
    shape = "cospan" if diagram.n == 1 else "single node"
    print("  %-9s %s" % (label, shape))

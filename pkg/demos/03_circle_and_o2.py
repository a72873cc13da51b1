#!/usr/bin/env python3
"""Subgroup spaces of the circle and of O(2).

The circle's subgroup space is the arithmetic picture: finite cyclic
subgroups at height 0 under the full group at height 1, and its closed
down-sets behave like the spectrum of a principal ideal domain.  O(2)
adds a dihedral sequence converging to the full group *without* any
cotoral relation; that single difference destroys Noetherianness while
leaving every generalization closure tame.
"""

from prism import (
    Circle,
    O2,
    clopen_down_sets,
    flagged_snapshot,
    gen_closure,
    is_generically_noetherian,
    is_noetherian,
    snapshot_parts,
    thomason_heights,
    weakly_visible,
)

print("== circle ==")
circle = flagged_snapshot(Circle(), 4)
heights = thomason_heights(circle)
for name in sorted(circle.concrete):
    print("  %-6s height %d" % (name, heights.heights[name]))
print("  noetherian:", is_noetherian(circle))
print("  clopen down-set classes:")
for cls in clopen_down_sets(circle):
    print("   ", cls.describe())

print()
print("== O(2) ==")
o2 = flagged_snapshot(O2(), 4)
heights = thomason_heights(o2)
level1 = sorted(n for n in o2.concrete if heights.heights[n] == 1)
print("  height-1 points:", level1)
print("  noetherian:", is_noetherian(o2))
print("  generically noetherian:", is_generically_noetherian(o2))
print("  gen closure of D(6):", sorted(gen_closure(o2, "D(6)").concrete))
print("  gen closure of C(3):", sorted(gen_closure(o2, "C(3)").concrete))

print()
print("  weak visibility witnesses:")
for p in ("C(2)", "SO2", "G"):
    print("   %-4s ->" % p, weakly_visible(o2, p).describe())

print()
print("  the prism splits into catalog pieces:")
for label, piece in snapshot_parts(O2(), 4):
    print("   %-9s %s + %d families"
          % (label, sorted(piece.concrete), len(piece.families)))

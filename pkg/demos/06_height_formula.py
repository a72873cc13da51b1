#!/usr/bin/env python3
"""The representation-theoretic height and the normalizer criterion.

A subgroup's height is the number of simple summands of its component
group acting on the first rational homology of its central torus.  In
dimension at most three the count reduces to sign-character eigenspaces
plus at most one higher-dimensional simple piece.  The same integer
actions decide which full subgroups of a toral extension have finite
Weyl groups, and where their normalizers grow.
"""

from prism import (
    FullKey,
    IntegerAction,
    NSU3T,
    O2,
    SO3,
    Torus,
    count_simple_summands,
    finite_weyl_criterion,
    flagged_snapshot,
    group_rank,
    height_rep,
    normalizer_directions,
    snapshot_keys,
    thomason_heights,
)

print("== simple summand counts ==")
actions = [
    ("trivial action on Z^2", IntegerAction(2, ())),
    ("negation on Z^1", IntegerAction(1, (((-1,),),))),
    ("coordinate swap on Z^2", IntegerAction(2, (((0, 1), (1, 0)),))),
    ("S3 on the A2 lattice", IntegerAction(2, NSU3T.generators)),
]
for label, action in actions:
    print("  %-26s -> %d" % (label, count_simple_summands(action)))

print()
print("== the headline example ==")
print("  rank of N_SU(3)(T):", group_rank(NSU3T))
print("  height of the full group:", height_rep(NSU3T, FullKey()))
print("  (a two-dimensional torus contributing a single simple summand)")

print()
print("== the formula agrees with the filtration ==")
for group, bound in ((O2(), 3), (SO3(), 3), (Torus(2), 2)):
    space = flagged_snapshot(group, bound)
    heights = thomason_heights(space)
    agree = all(
        heights.heights[name] == height_rep(group, key)
        for name, key in snapshot_keys(group, bound).items()
    )
    print("  %-10s heights match height_rep: %s" % (type(group).__name__, agree))

print()
print("== finite Weyl groups inside a toral extension ==")
swap = IntegerAction(2, (((0, 1), (1, 0)),))
diag = [(1, 1)]
anti = [(1, -1)]
print("  subtorus along (1,1):  finite Weyl?", finite_weyl_criterion(swap, diag))
print("  subtorus along (1,-1): finite Weyl?", finite_weyl_criterion(swap, anti))
print("  normalizer directions of the (1,-1) line:",
      len(normalizer_directions(swap, anti)), "dimensional")

#!/usr/bin/env python3
"""One Stone space, four spectral orders, four different filtrations.

The underlying space is always a sequence of isolated points converging
to a single limit.  Heights are computed by repeatedly deleting the
isolated minimal points; whether that process exhausts the space depends
entirely on where the order puts the limit.
"""

from prism import (
    RELATIONS,
    cb_heights,
    convergent_sequence_space,
    height_of_space,
    is_dispersible,
    thomason_derivative,
    thomason_heights,
)

for relation in RELATIONS:
    space = convergent_sequence_space(relation)
    print("== order: %s ==" % relation)
    heights = thomason_heights(space)
    print("  point heights: ", dict(sorted(heights.heights.items())))
    print("  member heights:", heights.family_heights)
    print("  dispersible:", is_dispersible(space), " height:", height_of_space(space))
    cb = cb_heights(space)
    agree = cb.heights == heights.heights and cb.family_heights == heights.family_heights
    print("  Cantor-Bendixson agrees:", agree)
    step = thomason_derivative(space)
    print("  after one derivative: %d points, %d families"
          % (len(step.concrete), len(step.families)))
    print()

print("The two orders that put the limit on top are dispersible of height 1;")
print("a limit underneath its members can never become isolated, so no")
print("dispersion exists, even though the bare topology always has one.")

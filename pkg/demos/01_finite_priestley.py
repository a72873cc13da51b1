#!/usr/bin/env python3
"""Finite spectral spaces and their Priestley presentations.

On a finite set, a topology and its specialization order determine each
other: opens are exactly the up-sets of the order.  This script walks the
correspondence in both directions and enumerates the down-set lattice
(the thick-ideal lattice of the associated spectrum).
"""

from prism import (
    FinitePriestley,
    FiniteTopSpace,
    down_sets,
    inverse,
    priestley_of_spectral,
    specialization_order,
    spectral_of_priestley,
)

print("== Sierpinski space ==")
sierpinski = FiniteTopSpace(
    frozenset("ab"), [frozenset(), frozenset("a"), frozenset("ab")]
)
order = specialization_order(sierpinski)
print("specialization pairs:", sorted((a, b) for a, b in order if a != b))

print()
print("== a truncated arithmetic spectrum: two closed points, one generic ==")
pts = frozenset(["g", "p", "q"])
opens = [frozenset()] + [frozenset(s) | {"g"} for s in [set(), {"p"}, {"q"}, {"p", "q"}]]
space = FiniteTopSpace(pts, opens)
vee = priestley_of_spectral(space)
print("order:", sorted((a, b) for a, b in vee.order if a != b))

back = spectral_of_priestley(vee)
print("round trip recovers the opens:", back.opens == space.opens)

print()
print("== the down-set lattice ==")
family = down_sets(vee)
for s in family:
    print("  down-set:", sorted(s) or "(empty)")
print("total:", len(family))

print()
print("== order reversal is an involution ==")
flipped = inverse(vee)
print("minimal points after reversal:", sorted(flipped.minimal_points()))
print("involution:", inverse(flipped) == vee)

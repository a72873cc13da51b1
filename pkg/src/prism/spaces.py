"""Ready-made flagged models of a convergent sequence with one limit point.

These are the standard one-point-compactification pictures: countably
many isolated points accumulating at a single limit, with four choices of
spectral order on top of the same Stone space.  They make handy fixtures
and demonstrate how order and topology interact independently:

with the limit above the members the space is the familiar
Zariski-spectrum-of-a-PID picture (dispersible, Noetherian); with no
order it is still dispersible but glues differently; with the limit below
(or below an infinite descending chain) there are no isolated minimal
points at all and no dispersion exists.
"""

from .priestley import (
    ANTICHAIN,
    DESCENDING,
    AccumulationFamily,
    FlaggedPriestley,
)

UNRELATED = "unrelated"
LIMIT_ABOVE = "limit-above"
DESCENDING_TO_LIMIT = "descending-chain"
LIMIT_BELOW = "limit-below"

RELATIONS = (UNRELATED, LIMIT_ABOVE, DESCENDING_TO_LIMIT, LIMIT_BELOW)


def convergent_sequence_space(relation, named=4, limit="inf"):
    """A sequence of isolated points converging to ``limit``.

    ``relation`` picks the order: ``unrelated`` (trivial order),
    ``limit-above`` (every member below the limit), ``descending-chain``
    (members form an infinite descending chain, limit underneath), or
    ``limit-below`` (an antichain of members, limit underneath).  For the
    two antichain variants ``named`` members are materialized as concrete
    points; the chain variants keep all members anonymous.
    """
    if relation not in RELATIONS:
        raise ValueError("unknown relation %r" % (relation,))
    if relation == DESCENDING_TO_LIMIT:
        fam = AccumulationFamily(
            id="tail",
            limit=limit,
            member_order=DESCENDING,
            member_gt=frozenset({limit}),
            samples=("0", "1", "2"),
        )
        return FlaggedPriestley(frozenset({limit}), (), (fam,))
    if relation == LIMIT_BELOW:
        fam = AccumulationFamily(
            id="tail",
            limit=limit,
            member_order=ANTICHAIN,
            member_gt=frozenset({limit}),
            samples=("0", "1", "2"),
        )
        return FlaggedPriestley(frozenset({limit}), (), (fam,))
    names = [str(i) for i in range(named)]
    samples = tuple(str(named + i) for i in range(3))
    member_lt = frozenset({limit}) if relation == LIMIT_ABOVE else frozenset()
    fam = AccumulationFamily(
        id="tail", limit=limit, member_lt=member_lt, samples=samples
    )
    order = [(n, limit) for n in names] if relation == LIMIT_ABOVE else []
    return FlaggedPriestley(frozenset(names) | {limit}, order, (fam,))


def guiding_examples(named=4):
    """The four orders on one convergent sequence, in the canonical order."""
    return tuple(convergent_sequence_space(r, named=named) for r in RELATIONS)

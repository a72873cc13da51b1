"""Thomason derivatives, heights, and dispersion checks on flagged spaces.

Heights live in the naturals plus ``math.inf``.  The Thomason height is
the least fixed point of

    h(p)      = max(0, h(q)+1 for concrete q < p,
                       fam(f)+1 for families with limit p,
                       fam(f)+1 for families whose members lie below p)
    fam(f)    = infinity                       for descending chains,
                max(0, h(c)+1 for c in member_gt(f), declared hint)
                                               for antichain families,

computed by saturating chaotic iteration: any value that reaches the cap
(concrete points + families + declared hints + 1) cannot be a finite
height, so it is reported as infinity.  A member height hint enters the
fixed point as a floor; a hint strictly below the structurally forced
value is rejected as inconsistent.

The derivative mirrors the same bookkeeping step by step so that k
applications remove exactly the material of height < k: a family whose
structural blockers are gone but whose hint is still positive survives
with the hint decremented (its phantom substructure is being consumed).
"""

from dataclasses import dataclass
from math import inf

from .errors import ChecksFailed, InconsistentHint
from .priestley import (
    ALL,
    ANTICHAIN,
    COFINITE,
    DESCENDING,
    EMPTY,
    AccumulationFamily,
    FinitePriestley,
    FlaggedPriestley,
    SymbolicSet,
    thomason_points,
    is_noetherian,
    up_closure_symbolic,
)


@dataclass(frozen=True)
class HeightAssignment:
    """Heights of the concrete points and the common member heights."""

    heights: dict
    family_heights: dict

    def __getitem__(self, name):
        if name in self.heights:
            return self.heights[name]
        return self.family_heights[name]

    def all_finite(self):
        return all(v != inf for v in self.heights.values()) and all(
            v != inf for v in self.family_heights.values()
        )

    def max_height(self):
        values = list(self.heights.values()) + list(self.family_heights.values())
        return max(values) if values else 0


@dataclass(frozen=True)
class DispersionCandidate:
    """A candidate dispersion: natural values on points and family ids."""

    values: dict

    def __getitem__(self, name):
        return self.values[name]


# ---------------------------------------------------------------------------
# derivative and heights


def _as_flagged(space):
    if isinstance(space, FinitePriestley):
        return FlaggedPriestley(space.points, space.order, ())
    return space


def thomason_derivative(space):
    """Remove the isolated minimal material (one filtration step).

    Finite posets lose their minimal points.  Flagged spaces lose the
    Thomason concrete points and the families whose members are currently
    minimal and unhinted; surviving families see removed points dropped
    from their bounds and positive hints decremented.
    """
    if isinstance(space, FinitePriestley):
        gone = space.minimal_points()
        keep = space.points - gone
        return FinitePriestley(
            keep, frozenset((a, b) for (a, b) in space.order if a in keep and b in keep)
        )
    tp = thomason_points(space)
    keep = space.concrete - tp.concrete
    consumed = {fid for fid, tag in tp.portions}
    families = []
    for f in space.families:
        if f.id in consumed:
            continue
        hint = f.member_height_hint
        if hint:
            hint = hint - 1
        families.append(
            AccumulationFamily(
                id=f.id,
                limit=f.limit,
                member_order=f.member_order,
                member_lt=f.member_lt & keep,
                member_gt=f.member_gt & keep,
                samples=f.samples,
                member_height_hint=hint,
            )
        )
    order = frozenset((a, b) for (a, b) in space.order if a in keep and b in keep)
    return FlaggedPriestley(keep, order, tuple(families))


def _structural_floor(space, f, heights):
    floor = 0
    for c in f.member_gt:
        floor = max(floor, heights[c] + 1)
    return floor


def thomason_heights(space):
    """Least fixed point heights; infinite values mean not dispersible there."""
    if isinstance(space, FinitePriestley):
        space = FlaggedPriestley(space.points, space.order, ())
    cap = (
        len(space.concrete)
        + len(space.families)
        + sum(f.member_height_hint or 0 for f in space.families)
        + 1
    )
    h = {p: 0 for p in space.concrete}
    fam = {f.id: 0 for f in space.families}
    below = {p: [q for q in space.concrete if space.le(q, p) and q != p] for p in space.concrete}
    changed = True
    while changed:
        changed = False
        for f in space.families:
            if f.member_order == DESCENDING:
                value = cap
            else:
                value = _structural_floor(space, f, h)
                if f.member_height_hint is not None:
                    value = max(value, f.member_height_hint)
            value = min(value, cap)
            if value != fam[f.id]:
                fam[f.id] = value
                changed = True
        for p in space.concrete:
            value = 0
            for q in below[p]:
                value = max(value, h[q] + 1)
            for f in space.families:
                if f.limit == p or p in f.member_lt:
                    value = max(value, fam[f.id] + 1)
            value = min(value, cap)
            if value != h[p]:
                h[p] = value
                changed = True
    heights = {p: (inf if v >= cap else v) for p, v in h.items()}
    fam_heights = {fid: (inf if v >= cap else v) for fid, v in fam.items()}
    for f in space.families:
        if f.member_height_hint is None:
            continue
        if f.member_order == DESCENDING:
            raise InconsistentHint(
                "family %s declares a finite member height on a chain" % f.id
            )
        floor = _structural_floor(space, f, heights)
        if f.member_height_hint < floor:
            raise InconsistentHint(
                "family %s declares member height %d below the forced %s"
                % (f.id, f.member_height_hint, floor)
            )
    return HeightAssignment(heights, fam_heights)


def trivialize(space):
    """Forget the order but keep the convergence data (for CB heights)."""
    return FlaggedPriestley(
        space.concrete,
        frozenset(),
        tuple(
            AccumulationFamily(
                id=f.id,
                limit=f.limit,
                member_order=ANTICHAIN,
                member_lt=frozenset(),
                member_gt=frozenset(),
                samples=f.samples,
                member_height_hint=f.member_height_hint,
            )
            for f in space.families
        ),
    )


def cb_heights(space):
    """Cantor-Bendixson heights: Thomason heights of the trivialized space."""
    if isinstance(space, FinitePriestley):
        return HeightAssignment({p: 0 for p in space.points}, {})
    return thomason_heights(trivialize(space))


def is_dispersible(space):
    return thomason_heights(space).all_finite()


def height_of_space(space):
    ha = thomason_heights(space)
    return ha.max_height() if ha.all_finite() else inf


# ---------------------------------------------------------------------------
# dispersion candidates


def is_dispersion(space, candidate):
    """Check the two dispersion axioms; returns (ok, witness).

    Axiom one is strict monotonicity along the order, member/limit bounds
    included.  Axiom two is checked on the flagged surrogate: the limit of
    every family must sit strictly above the common member value (the
    members witness accumulation inside every closed set containing a
    tail).  The witness names the first violated comparison.
    """
    values = candidate.values
    for p in space.concrete:
        if p not in values:
            raise ValueError("candidate is not total: missing %r" % (p,))
    for f in space.families:
        if f.id not in values:
            raise ValueError("candidate is not total: missing family %r" % (f.id,))
    for name, v in values.items():
        if not isinstance(v, int) or v < 0:
            raise ValueError("candidate value for %r is not a natural" % (name,))
    for p, q in sorted(space.order):
        if p != q and not values[p] < values[q]:
            return False, ("order", p, q)
    for f in space.families:
        for c in sorted(f.member_lt):
            if not values[f.id] < values[c]:
                return False, ("family-order", f.id, c)
        for c in sorted(f.member_gt):
            if not values[c] < values[f.id]:
                return False, ("family-order", c, f.id)
    for f in space.families:
        if not values[f.id] < values[f.limit]:
            return False, ("family-limit", f.id, f.limit)
    return True, None


# ---------------------------------------------------------------------------
# strata


@dataclass(frozen=True)
class StrataReport:
    at_level: SymbolicSet
    below: SymbolicSet
    at_or_above: SymbolicSet


def strata(space, candidate, level):
    """The slice (P_level, P_below, P_at_or_above) with structural checks.

    Verifies that the lower part is an open down-set, the upper part a
    closed up-set, and the slice isolated and minimal inside the upper
    part; any failure raises ChecksFailed naming the clause.
    """
    ok, witness = is_dispersion(space, candidate)
    if not ok:
        raise ChecksFailed("candidate is not a dispersion: %r" % (witness,))
    values = candidate.values

    def sym(pred):
        return SymbolicSet(
            frozenset(p for p in space.concrete if pred(values[p])),
            {f.id: (ALL if pred(values[f.id]) else EMPTY) for f in space.families},
        )

    at = sym(lambda v: v == level)
    lo = sym(lambda v: v < level)
    hi = sym(lambda v: v >= level)
    if not (lo.is_open(space) and lo.is_down_set(space)):
        raise ChecksFailed("P_<%d is not an open down-set" % level)
    if not (hi.is_closed(space) and hi.is_up_set(space)):
        raise ChecksFailed("P_>=%d is not a closed up-set" % level)
    # the slice must be isolated and minimal inside the upper part
    hi_pts = hi.concrete
    for p in sorted(at.concrete):
        for q in hi_pts:
            if q != p and space.le(q, p):
                raise ChecksFailed("%s is not minimal in P_>=%d" % (p, level))
        for f in space.families:
            if hi.portion(f.id) != EMPTY and p in f.member_lt:
                raise ChecksFailed("%s is not minimal in P_>=%d" % (p, level))
            if hi.portion(f.id) != EMPTY and f.limit == p:
                raise ChecksFailed("%s is not isolated in P_>=%d" % (p, level))
    for f in space.families:
        if at.portion(f.id) != EMPTY and f.member_gt & hi_pts:
            raise ChecksFailed(
                "members of %s are not minimal in P_>=%d" % (f.id, level)
            )
    return StrataReport(at, lo, hi)


# ---------------------------------------------------------------------------
# weak visibility


def weakly_visible(space, point):
    """Witness that {point} = (up-closure) & (clopen down-set), or None.

    Grows the minimal clopen down-set containing the point: the down
    closure is forced, a family whose limit lands inside must contribute
    at least a cofinite tail, and tails drag in their lower bounds.  Every
    growth step is forced for any clopen down-set containing the point, so
    failure of the minimal candidate settles non-visibility.
    """
    space = _as_flagged(space)
    up = up_closure_symbolic(space, point)
    concrete = set(space.down_closure(point))
    tags = {}
    changed = True
    while changed:
        changed = False
        for f in space.families:
            if f.member_lt & concrete and tags.get(f.id) != ALL:
                tags[f.id] = ALL
                changed = True
            if f.limit in concrete and f.id not in tags:
                tags[f.id] = COFINITE
                changed = True
            if tags.get(f.id) is not None:
                # closedness forces the limit in, down-closure its cone
                forced = f.member_gt | {f.limit}
                if not forced <= concrete:
                    for g in forced:
                        concrete |= space.down_closure(g)
                    changed = True
    witness = SymbolicSet(frozenset(concrete), tags)
    if not (witness.is_clopen(space) and witness.is_down_set(space)):
        return None
    # intersection with the up-closure must be exactly the point
    if (witness.concrete & up.concrete) != {point}:
        return None
    for f in space.families:
        if witness.portion(f.id) != EMPTY and up.portion(f.id) != EMPTY:
            return None
    return witness


# ---------------------------------------------------------------------------
# generalization closures


def gen_closure(space, point):
    """Subspace of everything the point generalizes to (cotorally above it).

    Families are inherited only when their members genuinely lie above the
    point, i.e. the point is one of their declared lower bounds; the
    result carries the induced order.
    """
    up = up_closure_symbolic(space, point)
    pts = up.concrete
    order = frozenset((a, b) for (a, b) in space.order if a in pts and b in pts)
    fams = tuple(
        AccumulationFamily(
            id=f.id,
            limit=f.limit,
            member_order=f.member_order,
            member_lt=f.member_lt & pts,
            member_gt=f.member_gt & pts,
            samples=f.samples,
            member_height_hint=f.member_height_hint,
        )
        for f in space.families
        if f.limit in pts and point in f.member_gt
    )
    return FlaggedPriestley(pts, order, fams)


def is_generically_noetherian(space):
    """Every generalization closure satisfies the descending chain condition."""
    return all(is_noetherian(gen_closure(space, p)) for p in space.concrete)

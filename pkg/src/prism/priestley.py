"""Finite spectral/Priestley spaces and finitely presented flagged models.

Two kinds of spaces live here.

``FinitePriestley`` is an honest finite poset: on a finite set the Stone
topology is discrete, so a finite Priestley space carries no topological
data beyond its order.  ``FiniteTopSpace`` holds a finite topology so the
two directions of the finite Priestley correspondence can be computed
(specialization order one way, up-set topology the other).

``FlaggedPriestley`` is a finite presentation of a countable Priestley
space: finitely many concrete points with a partial order, plus
"accumulation families".  A family stands for an infinite sequence of
pairwise order-homogeneous members converging to a unique concrete limit
(one-point-compactification behaviour: every infinite set of members
accumulates exactly at the limit).  A member's order relations to the
concrete points are declared wholesale: every point of ``member_lt`` sits
strictly above every member, every point of ``member_gt`` strictly below.
Members of distinct families are incomparable by convention.

Symbolic subsets of a flagged space record, besides an explicit concrete
part, one portion tag per family: ``empty``, ``finite`` (a nonempty finite
set of members), ``cofinite`` (all but a nonempty finite set), or ``all``.
Homogeneity makes every predicate we need (closed, open, down-set, up-set)
depend only on this granularity.  A symbolic set is closed exactly when
any family with infinitely many members inside has its limit inside; this
finite rule is the decidable surrogate for closure in the modelled space.

For families with ``member_order == "descendingChain"`` the members form a
strictly descending chain (samples are listed top down).  Portions then
read as: ``finite`` is a prefix (an up-closed piece), ``cofinite`` a tail.
The portion algebra is tied to the declared orientation; ``inverse`` keeps
the tag and swaps the bounds, so chain families are fully faithful only in
their declared orientation.
"""

from dataclasses import dataclass
from itertools import combinations
import json

from .errors import NotT0


ANTICHAIN = "antichain"
DESCENDING = "descendingChain"

# portion tags for family members inside a symbolic set
EMPTY = "empty"
FINITE = "finite"
COFINITE = "cofinite"
ALL = "all"

_INFINITE = (COFINITE, ALL)


def _transitive_closure(points, pairs):
    succ = {p: set() for p in points}
    for (a, b) in pairs:
        if a not in succ or b not in succ:
            raise ValueError("order mentions unknown point in %r" % ((a, b),))
        if a != b:
            succ[a].add(b)
    le = set()
    for p in points:
        seen = {p}
        stack = [p]
        while stack:
            for q in succ[stack.pop()]:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        le.update((p, q) for q in seen)
    return frozenset(le)


# ---------------------------------------------------------------------------
# finite topological spaces


@dataclass(frozen=True)
class FiniteTopSpace:
    """A finite topology given by its full family of open sets."""

    points: frozenset
    opens: frozenset

    def __post_init__(self):
        points = frozenset(self.points)
        opens = frozenset(frozenset(u) for u in self.opens)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "opens", opens)
        if frozenset() not in opens or points not in opens:
            raise ValueError("opens must contain the empty set and the whole set")
        for u in opens:
            if not u <= points:
                raise ValueError("open set %r is not a subset of the points" % (set(u),))
        for u in opens:
            for v in opens:
                if u | v not in opens or u & v not in opens:
                    raise ValueError("opens are not closed under union/intersection")

    def closure(self, subset):
        """Smallest closed set containing ``subset``."""
        result = self.points
        for u in self.opens:
            c = self.points - u
            if subset <= c:
                result = result & c
        return result


def specialization_order(space):
    """Specialization order of a finite T0 space: y <= x iff y in cl{x}.

    Raises NotT0 when two distinct points have identical closures (the
    relation is a partial order exactly for T0 spaces).
    """
    closures = {x: space.closure(frozenset([x])) for x in space.points}
    pts = sorted(space.points)
    for a, b in combinations(pts, 2):
        if closures[a] == closures[b]:
            raise NotT0("points %r and %r have the same closure" % (a, b))
    return frozenset(
        (y, x) for x in space.points for y in closures[x]
    )


# ---------------------------------------------------------------------------
# finite Priestley spaces


@dataclass(frozen=True)
class FinitePriestley:
    """A finite poset; the Priestley topology on it is discrete.

    ``order`` may be given as any relation; it is reflexively and
    transitively closed on construction and checked for antisymmetry.
    """

    points: frozenset
    order: frozenset

    def __post_init__(self):
        points = frozenset(self.points)
        le = _transitive_closure(points, set(map(tuple, self.order)))
        for (a, b) in le:
            if a != b and (b, a) in le:
                raise ValueError("order is not antisymmetric on %r, %r" % (a, b))
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "order", le)

    def le(self, p, q):
        return (p, q) in self.order

    def down_closure(self, p):
        return frozenset(q for q in self.points if self.le(q, p))

    def up_closure(self, p):
        return frozenset(q for q in self.points if self.le(p, q))

    def minimal_points(self):
        return frozenset(
            p for p in self.points
            if all(not self.le(q, p) for q in self.points if q != p)
        )

    def is_down_set(self, subset):
        return all(q in subset for p in subset for q in self.down_closure(p))

    def is_up_set(self, subset):
        return all(q in subset for p in subset for q in self.up_closure(p))


def priestley_of_spectral(space):
    """Finite Priestley space of a finite T0 (hence sober) space."""
    return FinitePriestley(space.points, specialization_order(space))


def spectral_of_priestley(p):
    """The spectral space of a finite Priestley space: opens are the up-sets."""
    pts = sorted(p.points)
    opens = set()
    for k in range(len(pts) + 1):
        for combo in combinations(pts, k):
            s = frozenset(combo)
            if p.is_up_set(s):
                opens.add(s)
    return FiniteTopSpace(p.points, frozenset(opens))


def down_sets(p):
    """All down-sets of a finite poset: the thick-ideal lattice of its prism.

    Generated as unions of principal down-sets (every down-set is the
    union of the principal down-sets of its elements); the exhaustive
    subset filter serves as the independent oracle in the tests.
    """
    principal = {q: p.down_closure(q) for q in p.points}
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        s = frontier.pop()
        for q in p.points:
            t = s | principal[q]
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return DownSetFamily(tuple(sorted(seen, key=lambda s: (len(s), sorted(s)))))


@dataclass(frozen=True)
class DownSetFamily:
    sets: tuple

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s):
        return frozenset(s) in set(self.sets)


# ---------------------------------------------------------------------------
# flagged spaces


@dataclass(frozen=True)
class AccumulationFamily:
    """An infinite homogeneous sequence of members converging to ``limit``.

    ``member_height_hint`` asserts the common height of the members; it
    models substructure (sub-families accumulating at each member) that
    the finite presentation drops.
    """

    id: str
    limit: str
    member_order: str = ANTICHAIN
    member_lt: frozenset = frozenset()
    member_gt: frozenset = frozenset()
    samples: tuple = ()
    member_height_hint: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "member_lt", frozenset(self.member_lt))
        object.__setattr__(self, "member_gt", frozenset(self.member_gt))
        object.__setattr__(self, "samples", tuple(self.samples))
        if self.member_order not in (ANTICHAIN, DESCENDING):
            raise ValueError("unknown member order %r" % (self.member_order,))
        if self.member_lt & self.member_gt:
            raise ValueError("member_lt and member_gt must be disjoint")
        if self.member_height_hint is not None and self.member_height_hint < 0:
            raise ValueError("height hint must be a natural number")


@dataclass(frozen=True)
class FlaggedPriestley:
    """Finitely presented countable Priestley space: points plus families."""

    concrete: frozenset
    order: frozenset
    families: tuple = ()

    def __post_init__(self):
        pts = frozenset(self.concrete)
        le = _transitive_closure(pts, set(map(tuple, self.order)))
        for (a, b) in le:
            if a != b and (b, a) in le:
                raise ValueError("order is not antisymmetric on %r, %r" % (a, b))
        fams = tuple(sorted(self.families, key=lambda f: f.id))
        ids = [f.id for f in fams]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate family ids")
        if set(ids) & set(pts):
            raise ValueError("family ids must not collide with point names")
        for f in fams:
            if f.limit not in pts:
                raise ValueError("family %s has unknown limit %r" % (f.id, f.limit))
            if not (f.member_lt <= pts and f.member_gt <= pts):
                raise ValueError("family %s bounds mention unknown points" % f.id)
            for g in f.member_gt:
                for l in f.member_lt:
                    if (l, g) in le:
                        raise ValueError(
                            "family %s would create a cycle: %r <= %r" % (f.id, l, g)
                        )
        object.__setattr__(self, "concrete", pts)
        object.__setattr__(self, "order", le)
        object.__setattr__(self, "families", fams)

    def le(self, p, q):
        return (p, q) in self.order

    def family(self, fid):
        for f in self.families:
            if f.id == fid:
                return f
        raise KeyError(fid)

    def family_ids(self):
        return tuple(f.id for f in self.families)

    def down_closure(self, p):
        return frozenset(q for q in self.concrete if self.le(q, p))

    def up_closure(self, p):
        return frozenset(q for q in self.concrete if self.le(p, q))

    def minimal_concrete(self):
        """Concrete points with nothing below them, members included."""
        blocked = set()
        for f in self.families:
            blocked |= f.member_lt
        return frozenset(
            p for p in self.concrete
            if p not in blocked
            and all(not self.le(q, p) for q in self.concrete if q != p)
        )


# ---------------------------------------------------------------------------
# symbolic subsets of a flagged space


@dataclass(frozen=True)
class SymbolicSet:
    """A subset of a flagged space: explicit points plus a portion per family."""

    concrete: frozenset
    portions: tuple = ()  # sorted (family id, tag) pairs; omitted means empty

    def __post_init__(self):
        object.__setattr__(self, "concrete", frozenset(self.concrete))
        if isinstance(self.portions, dict):
            items = self.portions.items()
        else:
            items = self.portions
        cleaned = tuple(sorted((fid, tag) for fid, tag in items if tag != EMPTY))
        for _, tag in cleaned:
            if tag not in (FINITE, COFINITE, ALL):
                raise ValueError("unknown portion tag %r" % (tag,))
        object.__setattr__(self, "portions", cleaned)

    def portion(self, fid):
        for f, tag in self.portions:
            if f == fid:
                return tag
        return EMPTY

    def complement(self, space):
        flip = {EMPTY: ALL, FINITE: COFINITE, COFINITE: FINITE, ALL: EMPTY}
        return SymbolicSet(
            space.concrete - self.concrete,
            {f.id: flip[self.portion(f.id)] for f in space.families},
        )

    def is_closed(self, space):
        """Infinitely many members inside force the limit inside."""
        return all(
            f.limit in self.concrete
            for f in space.families
            if self.portion(f.id) in _INFINITE
        )

    def is_open(self, space):
        return self.complement(space).is_closed(space)

    def is_clopen(self, space):
        return self.is_closed(space) and self.is_open(space)

    def is_down_set(self, space):
        for p in self.concrete:
            if not space.down_closure(p) <= self.concrete:
                return False
        for f in space.families:
            tag = self.portion(f.id)
            if tag != EMPTY and not f.member_gt <= self.concrete:
                return False
            if f.member_lt & self.concrete and tag != ALL:
                return False
            if f.member_order == DESCENDING and tag == FINITE:
                return False  # nonempty finite pieces of a chain are not down-closed
        return True

    def is_up_set(self, space):
        for p in self.concrete:
            if not space.up_closure(p) <= self.concrete:
                return False
        for f in space.families:
            tag = self.portion(f.id)
            if tag != EMPTY and not f.member_lt <= self.concrete:
                return False
            if f.member_gt & self.concrete and tag != ALL:
                return False
            if f.member_order == DESCENDING and tag == COFINITE:
                return False  # tails of a chain are not up-closed
        return True

    def describe(self):
        parts = "{%s}" % ", ".join(sorted(self.concrete))
        fams = ", ".join("%s: %s" % (f, t) for f, t in self.portions)
        return parts + (" / members: {%s}" % fams if fams else "")


def down_closure_symbolic(space, p):
    """Everything below ``p``, member-mediated relations included."""
    concrete = set(space.down_closure(p))
    tags = {}
    changed = True
    while changed:
        changed = False
        for f in space.families:
            if f.member_lt & concrete and tags.get(f.id) != ALL:
                tags[f.id] = ALL
                changed = True
            if tags.get(f.id) == ALL and not f.member_gt <= concrete:
                for g in f.member_gt:
                    concrete |= space.down_closure(g)
                changed = True
    return SymbolicSet(frozenset(concrete), tags)


def up_closure_symbolic(space, p):
    """Everything above ``p``, member-mediated relations included."""
    concrete = set(space.up_closure(p))
    tags = {}
    changed = True
    while changed:
        changed = False
        for f in space.families:
            if f.member_gt & concrete and tags.get(f.id) != ALL:
                tags[f.id] = ALL
                changed = True
            if tags.get(f.id) == ALL and not f.member_lt <= concrete:
                for l in f.member_lt:
                    concrete |= space.up_closure(l)
                changed = True
    return SymbolicSet(frozenset(concrete), tags)


# ---------------------------------------------------------------------------
# operations shared by both kinds


def inverse(space):
    """Order reversal; an involution on both kinds of spaces."""
    if isinstance(space, FinitePriestley):
        return FinitePriestley(space.points, frozenset((b, a) for (a, b) in space.order))
    return FlaggedPriestley(
        space.concrete,
        frozenset((b, a) for (a, b) in space.order),
        tuple(
            AccumulationFamily(
                id=f.id,
                limit=f.limit,
                member_order=f.member_order,
                member_lt=f.member_gt,
                member_gt=f.member_lt,
                samples=f.samples,
                member_height_hint=f.member_height_hint,
            )
            for f in space.families
        ),
    )


def thomason_points(space):
    """Isolated minimal points: height-zero material of the Thomason filtration.

    For a finite poset these are just the minimal points.  For a flagged
    space the result is symbolic: minimal concrete points that are not the
    limit of any family, together with every family whose members are
    minimal (nothing declared below them, no height hint pretending
    otherwise).  Chain members are never minimal.
    """
    if isinstance(space, FinitePriestley):
        return space.minimal_points()
    limits = {f.limit for f in space.families}
    concrete = frozenset(p for p in space.minimal_concrete() if p not in limits)
    tags = {
        f.id: ALL
        for f in space.families
        if f.member_order == ANTICHAIN
        and not f.member_gt
        and not f.member_height_hint
    }
    return SymbolicSet(concrete, tags)


def is_noetherian(space):
    """Descending chain condition on closed down-sets of the modelled space.

    A family whose limit does not dominate its members leaves infinitely
    many pairwise-incomparable maximal points in the closure of any tail,
    which yields an infinite strictly descending chain of closed down-sets;
    conversely when every limit dominates, closed down-sets are determined
    by finitely much data.  Finite posets always satisfy DCC.
    """
    if isinstance(space, FinitePriestley):
        return True
    return all(f.limit in f.member_lt for f in space.families)


# ---------------------------------------------------------------------------
# clopen down-set classes


@dataclass(frozen=True)
class ClopenDownClass:
    """A shape class of clopen down-sets of a flagged space.

    A realization picks ``required`` plus any subset of ``optional`` that
    stays down-closed, with family members per tag: ``finite`` allows any
    finite member set (the empty one included; nonempty choices need the
    family's lower bounds realized), ``cofinite`` all but finitely many,
    ``all`` every member.  ``realize`` builds a SymbolicSet and validates.
    """

    family_tags: tuple
    required: frozenset
    optional: frozenset

    def tag(self, fid):
        for f, t in self.family_tags:
            if f == fid:
                return t
        return EMPTY

    def realize(self, space, extra=frozenset(), portion_overrides=None):
        tags = {}
        for f in space.families:
            t = self.tag(f.id)
            if portion_overrides and f.id in portion_overrides:
                t = portion_overrides[f.id]
            if t == FINITE and portion_overrides is None:
                t = EMPTY  # default: take no members on the finite side
            tags[f.id] = t
        s = SymbolicSet(self.required | frozenset(extra), tags)
        if not (s.is_clopen(space) and s.is_down_set(space)):
            raise ValueError("realization is not a clopen down-set")
        return s

    def describe(self):
        fams = ", ".join("%s: %s" % (f, t) for f, t in sorted(self.family_tags))
        return "required={%s} optional={%s} members={%s}" % (
            ", ".join(sorted(self.required)),
            ", ".join(sorted(self.optional)),
            fams,
        )


def clopen_down_sets(space):
    """All shape classes of clopen down-sets of a flagged space.

    Enumerates the finite/infinite member profile over the families
    (2^families cases) and propagates the forced consequences: an infinite
    portion pulls in the limit and the lower bounds, a finite portion
    expels the limit, a point above members of a finitely-tagged family is
    expelled, and expulsion propagates upward as inclusion propagates
    downward.  Classes whose constraints clash are dropped.
    """
    if not isinstance(space, FlaggedPriestley):
        raise TypeError("clopen_down_sets expects a flagged space")
    fams = space.families
    out = []
    for profile in range(1 << len(fams)):
        infinite = {f.id for i, f in enumerate(fams) if profile >> i & 1}
        required = set()
        excluded = set()
        for f in fams:
            if f.id in infinite:
                required.add(f.limit)
                required |= f.member_gt
            else:
                excluded.add(f.limit)
                excluded |= f.member_lt  # a point above members would force "all"
        # inclusions close downward, exclusions close upward; clashes kill
        # the profile (e.g. a finite-side limit forced in from below)
        for p in list(required):
            required |= space.down_closure(p)
        for p in list(excluded):
            excluded |= space.up_closure(p)
        if required & excluded:
            continue
        tags = {}
        for f in fams:
            if f.id in infinite:
                tags[f.id] = ALL if f.member_lt & required else COFINITE
            else:
                nonempty_possible = (
                    f.member_order == ANTICHAIN and not (f.member_gt & excluded)
                )
                tags[f.id] = FINITE if nonempty_possible else EMPTY
        optional = frozenset(space.concrete) - required - excluded
        out.append(
            ClopenDownClass(
                tuple(sorted(tags.items())), frozenset(required), optional
            )
        )
    return tuple(out)


def restrict(space, points, family_ids):
    """Flagged subspace on the given points and families.

    Family bounds are intersected with the surviving points; the caller is
    responsible for the subset being meaningful (e.g. a clopen piece).
    """
    pts = frozenset(points)
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
        if f.id in set(family_ids) and f.limit in pts
    )
    return FlaggedPriestley(pts, order, fams)


def instantiate(space, depth):
    """Finite truncation of a flagged space with ``depth`` explicit members.

    Members of family ``f`` are named ``f#0 .. f#<depth-1>`` and inserted
    between the family's bounds; chain members additionally descend in
    index order.  Used by the oracle tests.
    """
    points = set(space.concrete)
    order = set(space.order)
    for f in space.families:
        names = ["%s#%d" % (f.id, i) for i in range(depth)]
        points.update(names)
        for i, m in enumerate(names):
            for l in f.member_lt:
                order.add((m, l))
            for g in f.member_gt:
                order.add((g, m))
            if f.member_order == DESCENDING and i + 1 < depth:
                order.add((names[i + 1], m))
    return FinitePriestley(frozenset(points), frozenset(order))


def realize_in_truncation(space, sym, depth):
    """Concrete subset of ``instantiate(space, depth)`` denoted by ``sym``.

    Finite portions take one member, cofinite portions all but one; for
    chain families the choices respect the chain (prefix/tail).
    """
    out = set(sym.concrete)
    for f in space.families:
        names = ["%s#%d" % (f.id, i) for i in range(depth)]
        tag = sym.portion(f.id)
        if tag == ALL:
            out.update(names)
        elif tag == COFINITE:
            out.update(names[1:])  # drop the first member: a tail for chains
        elif tag == FINITE:
            if f.member_order == DESCENDING:
                out.add(names[0])  # a prefix
            else:
                out.add(names[0])
    return frozenset(out)


# ---------------------------------------------------------------------------
# JSON (schema flagged-priestley/v1)

_FAMILY_FIELDS = {
    "id", "limit", "memberOrder", "memberLt", "memberGt", "samples", "heightHint",
}
_TOP_FIELDS = {"points", "order", "families"}


def flagged_from_json(text):
    """Parse the flagged-priestley/v1 schema; unknown fields are rejected."""
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    unknown = set(data) - _TOP_FIELDS
    if unknown:
        raise ValueError("unknown fields: %s" % ", ".join(sorted(unknown)))
    points = data.get("points", [])
    order = [tuple(pair) for pair in data.get("order", [])]
    families = []
    for fam in data.get("families", []):
        bad = set(fam) - _FAMILY_FIELDS
        if bad:
            raise ValueError("unknown family fields: %s" % ", ".join(sorted(bad)))
        families.append(
            AccumulationFamily(
                id=fam["id"],
                limit=fam["limit"],
                member_order=fam.get("memberOrder", ANTICHAIN),
                member_lt=frozenset(fam.get("memberLt", [])),
                member_gt=frozenset(fam.get("memberGt", [])),
                samples=tuple(fam.get("samples", [])),
                member_height_hint=fam.get("heightHint"),
            )
        )
    return FlaggedPriestley(frozenset(points), frozenset(order), tuple(families))


def flagged_to_json(space):
    strict = sorted((a, b) for (a, b) in space.order if a != b)
    return json.dumps(
        {
            "points": sorted(space.concrete),
            "order": [list(p) for p in strict],
            "families": [
                {
                    "id": f.id,
                    "limit": f.limit,
                    "memberOrder": f.member_order,
                    "memberLt": sorted(f.member_lt),
                    "memberGt": sorted(f.member_gt),
                    "samples": list(f.samples),
                    "heightHint": f.member_height_hint,
                }
                for f in space.families
            ],
        },
        indent=2,
        sort_keys=True,
    )

"""Finite and flagged Priestley spaces: operations and their invariants."""

from itertools import combinations

import pytest

from prism import (
    ALL,
    COFINITE,
    EMPTY,
    FINITE,
    AccumulationFamily,
    FinitePriestley,
    FiniteTopSpace,
    FlaggedPriestley,
    NotT0,
    SymbolicSet,
    clopen_down_sets,
    convergent_sequence_space,
    down_sets,
    flagged_from_json,
    flagged_to_json,
    instantiate,
    inverse,
    is_noetherian,
    priestley_of_spectral,
    specialization_order,
    spectral_of_priestley,
    thomason_points,
)
from prism.priestley import realize_in_truncation


def sierpinski():
    return FiniteTopSpace(frozenset("ab"), [frozenset(), frozenset("a"), frozenset("ab")])


def vee():
    """Two closed points under one generic point."""
    return FinitePriestley(frozenset(["g", "c1", "c2"]), [("c1", "g"), ("c2", "g")])


def circle_model(bound=3):
    names = ["C(%d)" % n for n in range(1, bound + 1)]
    fam = AccumulationFamily(
        id="cyclic", limit="G", member_lt=frozenset({"G"}),
        samples=("C(%d)" % (bound + 1),),
    )
    return FlaggedPriestley(
        frozenset(names) | {"G"}, [(n, "G") for n in names], (fam,)
    )


def dihedral_model(bound=2):
    names = ["D(%d)" % (2 * n) for n in range(1, bound + 1)]
    fam = AccumulationFamily(id="dihedral", limit="O2", samples=("D(6)",))
    return FlaggedPriestley(frozenset(names) | {"O2"}, [], (fam,))


# ---------------------------------------------------------------------------
# specialization order


def test_specialization_sierpinski():
    order = specialization_order(sierpinski())
    assert ("b", "a") in order and ("a", "b") not in order


def test_specialization_discrete():
    disc = FiniteTopSpace(
        frozenset("ab"),
        [frozenset(), frozenset("a"), frozenset("b"), frozenset("ab")],
    )
    assert specialization_order(disc) == frozenset({("a", "a"), ("b", "b")})


def test_specialization_two_closed_under_generic():
    pts = frozenset(["g", "c1", "c2"])
    opens = [frozenset()] + [frozenset(s) | {"g"} for s in [set(), {"c1"}, {"c2"}, {"c1", "c2"}]]
    order = specialization_order(FiniteTopSpace(pts, opens))
    assert ("c1", "g") in order and ("c2", "g") in order
    assert ("c1", "c2") not in order and ("c2", "c1") not in order


def test_not_t0():
    with pytest.raises(NotT0):
        specialization_order(FiniteTopSpace(frozenset("ab"), [frozenset(), frozenset("ab")]))


# ---------------------------------------------------------------------------
# the finite correspondence


def test_priestley_of_spectral_examples():
    p = priestley_of_spectral(sierpinski())
    assert p.le("b", "a")
    disc = FiniteTopSpace(
        frozenset("abc"),
        [frozenset(s) for s in ["", "a", "b", "c", "ab", "ac", "bc", "abc"]],
    )
    assert priestley_of_spectral(disc).minimal_points() == frozenset("abc")


def test_spectral_of_priestley_examples():
    chain = FinitePriestley(frozenset("ab"), [("b", "a")])
    assert spectral_of_priestley(chain).opens == frozenset(
        [frozenset(), frozenset("a"), frozenset("ab")]
    )
    anti = FinitePriestley(frozenset("ab"), [])
    assert len(spectral_of_priestley(anti).opens) == 4
    assert spectral_of_priestley(vee()).opens == frozenset(
        frozenset(s) for s in [set(), {"g"}, {"g", "c1"}, {"g", "c2"}, {"g", "c1", "c2"}]
    )


def test_round_trip():
    for p in [vee(), FinitePriestley(frozenset("abcd"), [("a", "b"), ("b", "c")])]:
        assert priestley_of_spectral(spectral_of_priestley(p)) == p


def all_topologies(points):
    """Every family of subsets closed under union/intersection with 0 and 1."""
    pts = sorted(points)
    subsets = [frozenset(c) for k in range(len(pts) + 1) for c in combinations(pts, k)]
    full = frozenset(pts)
    out = []
    for mask in range(1 << len(subsets)):
        fam = {s for i, s in enumerate(subsets) if mask >> i & 1}
        if frozenset() not in fam or full not in fam:
            continue
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            out.append(frozenset(fam))
    return out


def test_round_trip_all_small_spectral_spaces():
    # every finite T0 topology is spectral; the up-set topology of its
    # specialization order recovers it exactly
    for opens in all_topologies("abc"):
        space = FiniteTopSpace(frozenset("abc"), opens)
        try:
            p = priestley_of_spectral(space)
        except NotT0:
            continue
        assert spectral_of_priestley(p).opens == space.opens


# ---------------------------------------------------------------------------
# inverse


def test_inverse_examples():
    chain = FinitePriestley(frozenset("ab"), [("b", "a")])
    assert inverse(chain).le("a", "b")
    anti = FinitePriestley(frozenset("ab"), [])
    assert inverse(anti) == anti
    lim_above = convergent_sequence_space("limit-above")
    inv = inverse(lim_above)
    # the inverse puts the limit underneath everything, with no isolated
    # minimal points: the shape of the fourth guiding order
    fam = inv.family("tail")
    assert fam.member_gt == frozenset({"inf"}) and not fam.member_lt
    assert ("inf", "0") in inv.order
    assert thomason_points(inv).concrete == frozenset()
    assert not thomason_points(inv).portions


def test_inverse_is_involution():
    for space in [vee(), circle_model(), dihedral_model()]:
        assert inverse(inverse(space)) == space


# ---------------------------------------------------------------------------
# down-sets


def exhaustive_down_sets(p):
    pts = sorted(p.points)
    out = set()
    for mask in range(1 << len(pts)):
        s = frozenset(q for i, q in enumerate(pts) if mask >> i & 1)
        if p.is_down_set(s):
            out.add(s)
    return out


def test_down_sets_examples():
    chain = FinitePriestley(frozenset("ab"), [("b", "a")])
    assert len(down_sets(chain)) == 3
    anti = FinitePriestley(frozenset("ab"), [])
    assert len(down_sets(anti)) == 4
    # frozen from the exhaustive subset filter: the V poset has exactly
    # five down-sets (empty, each closed point, both, everything)
    assert len(down_sets(vee())) == 5
    assert set(down_sets(vee()).sets) == exhaustive_down_sets(vee())


def test_down_sets_closed_under_union_and_intersection():
    from prism.oracles import sample_posets

    posets = [vee(), FinitePriestley(frozenset("abcde"), [("a", "b"), ("c", "b"), ("d", "e")])]
    posets += sample_posets(max_size=12)
    for p in posets:
        family = set(down_sets(p).sets)
        for a in family:
            for b in family:
                assert a | b in family
                assert a & b in family


# ---------------------------------------------------------------------------
# clopen down-set classes


def test_clopen_classes_circle():
    classes = clopen_down_sets(circle_model())
    assert len(classes) == 2
    finite_side = next(c for c in classes if c.tag("cyclic") == FINITE)
    assert finite_side.required == frozenset() and "G" not in finite_side.optional
    whole = next(c for c in classes if c.tag("cyclic") == ALL)
    assert whole.required == circle_model().concrete


def test_clopen_classes_dihedral():
    classes = clopen_down_sets(dihedral_model())
    tags = sorted(c.tag("dihedral") for c in classes)
    assert tags == [COFINITE, FINITE]
    cof = next(c for c in classes if c.tag("dihedral") == COFINITE)
    assert cof.required == frozenset({"O2"})
    assert cof.optional == frozenset({"D(2)", "D(4)"})


def test_clopen_classes_no_families():
    space = FlaggedPriestley(frozenset("abc"), [("a", "b")], ())
    classes = clopen_down_sets(space)
    assert len(classes) == 1
    assert classes[0].required == frozenset()
    assert classes[0].optional == space.concrete


def test_clopen_class_realizations_are_clopen_down_sets():
    for space in [circle_model(), dihedral_model()]:
        for cls in clopen_down_sets(space):
            s = cls.realize(space)
            assert s.is_clopen(space)
            assert s.is_down_set(space)
            # symbolic complement is closed, i.e. the set is open
            assert s.complement(space).is_closed(space)
            # instantiated at finite depth it is a down-set of the truncation
            truncated = instantiate(space, 3)
            concrete = realize_in_truncation(space, s, 3)
            assert truncated.is_down_set(concrete)


# ---------------------------------------------------------------------------
# thomason points and noetherianness


def test_thomason_points_guiding_models():
    lim_above = convergent_sequence_space("limit-above")
    tp = thomason_points(lim_above)
    assert tp.concrete == frozenset({"0", "1", "2", "3"})
    assert tp.portion("tail") == ALL  # all of the sequence, named or not
    chain = convergent_sequence_space("descending-chain")
    tp3 = thomason_points(chain)
    assert tp3.concrete == frozenset() and not tp3.portions
    below = convergent_sequence_space("limit-below")
    tp4 = thomason_points(below)
    assert tp4.concrete == frozenset() and not tp4.portions


def test_thomason_points_subset_of_minimal():
    for space in [circle_model(), dihedral_model(), convergent_sequence_space("unrelated")]:
        tp = thomason_points(space)
        assert tp.concrete <= space.minimal_concrete()


def test_is_noetherian():
    assert is_noetherian(circle_model())
    assert not is_noetherian(dihedral_model())
    assert is_noetherian(vee())
    assert is_noetherian(FinitePriestley(frozenset("abc"), []))


# ---------------------------------------------------------------------------
# symbolic sets


def test_symbolic_set_predicates():
    space = circle_model()
    whole = SymbolicSet(space.concrete, {"cyclic": ALL})
    assert whole.is_clopen(space) and whole.is_down_set(space) and whole.is_up_set(space)
    just_g = SymbolicSet(frozenset({"G"}), {"cyclic": EMPTY})
    assert not just_g.is_open(space)  # a neighbourhood of the limit needs a tail
    assert just_g.is_up_set(space)  # G is maximal
    assert not SymbolicSet(frozenset({"C(1)"})).is_up_set(space)
    # members without their upper bound realized cannot be up-closed
    assert not SymbolicSet(frozenset(), {"cyclic": FINITE}).is_up_set(space)
    tail_and_g = SymbolicSet(frozenset({"G"}), {"cyclic": COFINITE})
    assert tail_and_g.is_clopen(space)
    assert not tail_and_g.is_down_set(space)  # missing members below G
    assert tail_and_g.complement(space).portion("cyclic") == FINITE


# ---------------------------------------------------------------------------
# JSON


def test_json_round_trip():
    space = circle_model()
    assert flagged_from_json(flagged_to_json(space)) == space


def test_json_rejects_unknown_fields():
    with pytest.raises(ValueError):
        flagged_from_json('{"points": [], "order": [], "bogus": 1}')
    with pytest.raises(ValueError):
        flagged_from_json(
            '{"points": ["a"], "order": [], "families":'
            ' [{"id": "f", "limit": "a", "color": "red"}]}'
        )


def test_validation_errors():
    with pytest.raises(ValueError):
        FlaggedPriestley(frozenset("a"), [("a", "b")], ())
    with pytest.raises(ValueError):
        # declared cycle: a family member would sit between l and g with l <= g
        FlaggedPriestley(
            frozenset("ab"),
            [("a", "b")],
            (AccumulationFamily(id="f", limit="a", member_lt=frozenset("a"),
                                member_gt=frozenset("b")),),
        )
    with pytest.raises(ValueError):
        FiniteTopSpace(frozenset("ab"), [frozenset(), frozenset("a"), frozenset("b")])

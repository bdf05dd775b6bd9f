import itertools
import json
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigidkit import grouptuple as gt


def test_perm_basics():
    g, h = (1, 2, 0), (1, 0, 2)
    assert gt.compose(g, h) == (2, 1, 0)  # g after h
    assert gt.compose(g, gt.inverse(g)) == (0, 1, 2)
    assert gt.cycle_type((1, 0, 3, 4, 2)) == (3, 2)
    assert gt.perm_order((1, 0, 3, 4, 2)) == 6
    assert gt.perm_power(g, -1) == gt.inverse(g)


@pytest.mark.parametrize(
    "group,order,sizes",
    [
        (gt.symmetric_group(3), 6, [1, 3, 2]),
        (gt.symmetric_group(4), 24, [1, 3, 6, 8, 6]),
        (gt.alternating_group(4), 12, [1, 3, 4, 4]),
        (gt.alternating_group(5), 60, [1, 15, 20, 12, 12]),
        (gt.dihedral_group(4), 8, [1, 1, 2, 2, 2]),
    ],
)
def test_class_sizes(group, order, sizes):
    assert group.order == order
    classes = gt.conjugacy_classes(group)
    assert sorted(c.size for c in classes) == sorted(sizes)
    assert sum(c.size for c in classes) == order
    for c in classes:
        assert order % c.size == 0


def test_labels():
    classes = gt.conjugacy_classes(gt.alternating_group(5))
    assert gt.class_labels(classes) == ["1A", "2A", "3A", "5A", "5B"]
    assert gt.canonical_labels(classes)[3:] == ["o5-s12-0", "o5-s12-1"]
    assert gt.find_class(classes, "o3-s20-0") is gt.find_class(classes, "3A")
    assert gt.find_class(classes, "2") is classes[2]
    with pytest.raises(gt.GroupError):
        gt.find_class(classes, "7A")


def test_group_json_and_caps():
    H = gt.PermGroup.from_json(json.dumps({"degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}))
    assert H.order == 6
    with pytest.raises(gt.GroupError):
        gt.build_group(3, [[0, 0, 1]])
    with pytest.raises(gt.CapExceeded):
        gt.build_group(6, [[1, 2, 3, 4, 5, 0], [1, 0, 2, 3, 4, 5]], cap=100)


def test_center():
    assert not gt.has_trivial_center(gt.dihedral_group(4))
    assert gt.has_trivial_center(gt.symmetric_group(3))
    D4 = gt.dihedral_group(4)
    cl = gt.conjugacy_classes(D4)
    with pytest.warns(UserWarning):
        gt.is_rigid_tuple(D4, [cl[1], cl[1], cl[0]])


def test_rigid_triples():
    S3 = gt.symmetric_group(3)
    cl = gt.conjugacy_classes(S3)
    rep = gt.is_rigid_tuple(S3, [gt.find_class(cl, x) for x in ("2A", "2A", "3A")])
    assert (rep.solution_count, rep.orbit_count, rep.rigid) == (6, 1, True)
    rep = gt.is_rigid_tuple(S3, [gt.find_class(cl, "3A")] * 3)
    assert rep.solution_count == 2 and not rep.all_generate and not rep.rigid

    A5 = gt.alternating_group(5)
    cl = gt.conjugacy_classes(A5)
    rep = gt.is_rigid_tuple(A5, [gt.find_class(cl, x) for x in ("2A", "3A", "5A")])
    assert (rep.solution_count, rep.orbit_count, rep.all_generate, rep.rigid) == (60, 1, True, True)
    assert rep.rational == (True, True, False)

    A4 = gt.alternating_group(4)
    cl = gt.conjugacy_classes(A4)
    rep = gt.is_rigid_tuple(A4, [gt.find_class(cl, "2A")] * 3)
    # the solutions generate only the Klein four-group; A4/V4 permutes them freely
    assert (rep.solution_count, rep.orbit_count, rep.all_generate, rep.rigid) == (6, 2, False, False)


def test_rationality():
    A5 = gt.alternating_group(5)
    rational = {lab: gt.is_rational_class(A5, c) for lab, c in zip(gt.class_labels(gt.conjugacy_classes(A5)), gt.conjugacy_classes(A5))}
    assert rational == {"1A": True, "2A": True, "3A": True, "5A": False, "5B": False}
    # every class of a symmetric group is rational
    S4 = gt.symmetric_group(4)
    assert all(gt.is_rational_class(S4, c) for c in gt.conjugacy_classes(S4))
    A4 = gt.alternating_group(4)
    assert [gt.is_rational_class(A4, c) for c in gt.conjugacy_classes(A4)].count(False) == 2


@pytest.mark.parametrize("name,H", [("S3", gt.symmetric_group(3)), ("S4", gt.symmetric_group(4)), ("A4", gt.alternating_group(4))])
def test_class_algebra_matches_brute_force(name, H):
    cl = gt.conjugacy_classes(H)
    for triple in itertools.product(cl, repeat=3):
        assert gt.class_algebra_count(H, triple) == gt.count_solutions(H, triple)


def test_orbit_count_burnside():
    # Burnside: orbits = average number of fixed solutions under conjugation
    S4 = gt.symmetric_group(4)
    cl = gt.conjugacy_classes(S4)
    for triple in itertools.combinations_with_replacement(cl[1:], 3):
        sols = gt.solutions(S4, triple)
        fixed = 0
        for h in S4.elements:
            hi = gt.inverse(h)
            fixed += sum(all(gt.compose(gt.compose(h, g), hi) == g for g in s) for s in sols)
        assert fixed % S4.order == 0
        assert gt.orbit_count(S4, triple) == fixed // S4.order


@settings(max_examples=30, deadline=None)
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=3))
def test_closure_order_divides(gens):
    gens = [tuple(g) for g in gens]
    n = gt.closure_order(5, gens)
    assert 120 % n == 0
    assert gt.generates(gt.symmetric_group(5), gens) == (n == 120)

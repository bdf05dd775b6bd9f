"""Root systems against a Euclidean realisation and the degree formula."""
import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigidkit.rootsys import (
    Coweight,
    RootSystemError,
    RootSystemType,
    build_root_system,
    cartan_matrix,
    dim_gr,
    dominant_representative,
    reflect,
    reflect_coweight,
)


def e(n, *pairs):
    v = [0] * n
    for i, c in pairs:
        v[i] += c
    return tuple(v)


def euclidean(family, n):
    """Simple roots and the full root set for the classical types."""
    if family == "A":
        dim = n + 1
        simple = [e(dim, (i, 1), (i + 1, -1)) for i in range(n)]
        roots = {e(dim, (i, 1), (j, -1)) for i in range(dim) for j in range(dim) if i != j}
        return simple, roots
    dim = n
    simple = [e(dim, (i, 1), (i + 1, -1)) for i in range(n - 1)]
    pm = {e(dim, (i, s), (j, t)) for i, j in itertools.combinations(range(n), 2) for s in (1, -1) for t in (1, -1)}
    if family == "B":
        simple.append(e(dim, (n - 1, 1)))
        roots = pm | {e(dim, (i, s)) for i in range(n) for s in (1, -1)}
    elif family == "C":
        simple.append(e(dim, (n - 1, 2)))
        roots = pm | {e(dim, (i, 2 * s)) for i in range(n) for s in (1, -1)}
    else:
        simple.append(e(dim, (n - 2, 1), (n - 1, 1)))
        roots = pm
    return simple, roots


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


CLASSICAL = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 6)] + [
    ("C", n) for n in range(2, 6)
] + [("D", n) for n in range(4, 7)]


@pytest.mark.parametrize("family,n", CLASSICAL)
def test_classical_matches_euclidean(family, n):
    simple, roots = euclidean(family, n)
    expected = tuple(
        tuple(Fraction(2 * dot(simple[j], simple[i]), dot(simple[i], simple[i])) for j in range(n)) for i in range(n)
    )
    assert cartan_matrix(RootSystemType(family, n)) == expected
    rs = build_root_system(f"{family}{n}")
    images = {tuple(sum(c * s[k] for c, s in zip(r, simple)) for k in range(len(simple[0]))) for r in rs.roots}
    assert images == roots


DEGREES = {
    "G2": (2, 6),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "A4": (2, 3, 4, 5),
    "B3": (2, 4, 6),
    "C4": (2, 4, 6, 8),
    "D5": (2, 4, 6, 8, 5),
}


@pytest.mark.parametrize("name", sorted(DEGREES))
def test_weyl_order_and_root_count_from_degrees(name):
    degs = DEGREES[name]
    rs = build_root_system(name)
    assert rs.weyl_order == math.prod(degs)
    # |Phi| = rank * Coxeter number
    assert len(rs.roots) == len(degs) * max(degs)
    assert rs.dim == len(rs.roots) + rs.rank


def test_g2_conventions():
    rs = build_root_system("G2")
    assert rs.cartan == ((2, -3), (-1, 2))
    assert rs.highest_root == (3, 2)
    # alpha_1 is short
    assert rs.norm((1, 0)) < rs.norm((0, 1))


def test_highest_root_is_dominant():
    for name in ["A3", "B4", "C3", "D6", "E6", "E7", "E8", "F4", "G2"]:
        rs = build_root_system(name)
        assert all(rs.coroot_pairing(rs.highest_root, i) >= 0 for i in range(rs.rank))
        assert sum(rs.highest_root) == max(sum(r) for r in rs.roots)


@pytest.mark.parametrize("bad", ["", "H3", "A0", "B1", "D2", "E9", "G3", "F5", "X2"])
def test_parse_rejects(bad):
    with pytest.raises(RootSystemError):
        RootSystemType.parse(bad)


def test_d3_is_a3():
    assert build_root_system("D3").weyl_order == build_root_system("A3").weyl_order == 24


def test_reflect_is_an_involution_on_roots():
    rs = build_root_system("F4")
    for r in rs.roots:
        for i in range(rs.rank):
            s = reflect(rs, i, r)
            assert rs.is_root(s)
            assert reflect(rs, i, s) == r
    with pytest.raises(RootSystemError):
        reflect(rs, 0, (1, 1, 1, 5))


def test_dim_gr():
    a1 = build_root_system("A1")
    assert dim_gr(a1, Coweight((1,))) == 1
    assert dim_gr(a1, a1.coroot_to_coweight((1,))) == 2
    a2 = build_root_system("A2")
    assert dim_gr(a2, Coweight((1, 1))) == 4
    with pytest.raises(RootSystemError):
        dim_gr(a2, Coweight((-1, 2)))


def test_coroot_to_coweight_pairs_like_coroot():
    rs = build_root_system("B3")
    for r in rs.roots:
        lam = rs.coroot_to_coweight(rs.coroot(r))
        assert lam.pairings[0] == rs.pairing(rs.simple_root(0), r)


@st.composite
def coweight_and_word(draw, name):
    rs = build_root_system(name)
    lam = draw(st.lists(st.integers(-5, 5), min_size=rs.rank, max_size=rs.rank))
    word = draw(st.lists(st.integers(0, rs.rank - 1), max_size=12))
    return rs, Coweight(tuple(lam)), word


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A3", "B3", "C3", "G2", "D4", "F4"]).flatmap(coweight_and_word))
def test_dominant_representative_is_orbit_invariant(data):
    rs, lam, word = data
    moved = lam
    for i in word:
        moved = reflect_coweight(rs, i, moved)
    dom = dominant_representative(rs, lam)
    assert dom.is_dominant
    assert dominant_representative(rs, moved) == dom
    # the pairing with 2 rho only grows on the way to the dominant chamber
    assert dim_gr(rs, dom) >= sum(a * b for a, b in zip(lam.pairings, rs.rho2))

"""Parahoric types, Levi subsystems, Moy-Prasad gradings and the rigidity search.

A parahoric type is a proper subset ``J`` of the nodes ``{0, ..., r}`` of the
extended Dynkin diagram (node 0 is affine): the nodes that are kept and form
the Dynkin diagram of the Levi quotient.  ``J = {1..r}`` is ``G(O)`` and
``J = {}`` is the Iwahori.

Period of the filtration.  ``m`` is the sum of the marks over the nodes NOT
in ``J``.  With that choice the Iwahori has ``m`` equal to the Coxeter number,
``G(O)`` has ``m = 1`` and the barycenter pairs with ``-theta + 1`` to
``1/m`` exactly when node 0 is removed.  The sum over kept nodes is also
reported (``m_kept``) for comparison; it vanishes for the Iwahori.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .rootsys import RootSystem, RootSystemType, Vector, build_root_system

__all__ = [
    "ParahoricError",
    "SearchCapExceeded",
    "root_system",
    "relative_dimension_by_count",
    "ExtendedDynkin",
    "ParahoricType",
    "MPGrading",
    "RigidityTuple",
    "extended_diagram",
    "levi_roots",
    "relative_dimension",
    "mp_grading",
    "mp_relative_dimension",
    "epipelagic_dim",
    "rigidity_search",
    "classify_subdiagram",
    "levi_type",
    "platonic_check",
    "format_levi",
]


class ParahoricError(ValueError):
    pass


@lru_cache(maxsize=None)
def root_system(name: str) -> RootSystem:
    return build_root_system(RootSystemType.parse(name))


@dataclass(frozen=True, eq=False)
class ExtendedDynkin:
    base: RootSystem
    marks: tuple[int, ...]
    cartan: tuple[tuple[int, ...], ...]  # (r+1) x (r+1), node 0 affine

    @property
    def node_count(self) -> int:
        return len(self.marks)

    @property
    def rank(self) -> int:
        return self.base.rank

    @cached_property
    def bonds(self) -> dict[tuple[int, int], tuple[int, int | None]]:
        """(i, j) with i < j  ->  (multiplicity, node the arrow points at or None)."""
        out = {}
        a = self.cartan
        for i in range(self.node_count):
            for j in range(i + 1, self.node_count):
                if a[i][j] == 0:
                    continue
                mult = max(abs(a[i][j]), abs(a[j][i]))
                if abs(a[i][j]) == abs(a[j][i]):
                    arrow = None
                else:
                    # the larger entry sits in the row of the shorter root
                    arrow = i if abs(a[i][j]) > abs(a[j][i]) else j
                out[(i, j)] = (mult, arrow)
        return out

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(self.node_count) if j != i and self.cartan[i][j] != 0]

    @cached_property
    def automorphisms(self) -> list[tuple[int, ...]]:
        """Node permutations preserving the extended Cartan matrix."""
        g = nx.DiGraph()
        g.add_nodes_from(range(self.node_count))
        for i in range(self.node_count):
            for j in range(self.node_count):
                if i != j and self.cartan[i][j]:
                    g.add_edge(i, j, w=self.cartan[i][j])
        matcher = DiGraphMatcher(g, g, edge_match=lambda e1, e2: e1["w"] == e2["w"])
        perms = {tuple(m[i] for i in range(self.node_count)) for m in matcher.isomorphisms_iter()}
        return sorted(perms)


def extended_diagram(rs: RootSystem) -> ExtendedDynkin:
    r = rs.rank
    theta = rs.highest_root
    ext = [[0] * (r + 1) for _ in range(r + 1)]
    ext[0][0] = 2
    for i in range(r):
        for j in range(r):
            ext[i + 1][j + 1] = rs.cartan[i][j]
    neg_theta = tuple(-c for c in theta)
    for j in range(r):
        aj = rs.simple_root(j)
        ext[0][j + 1] = rs.pairing(aj, neg_theta)      # <alpha_j, alpha_0^vee>
        ext[j + 1][0] = rs.coroot_pairing(neg_theta, j)  # <alpha_0, alpha_j^vee>
    marks = (1,) + tuple(theta)
    d = ExtendedDynkin(base=rs, marks=marks, cartan=tuple(tuple(row) for row in ext))
    # the marks give the null vector of the affine Cartan matrix
    for i in range(r + 1):
        assert sum(d.cartan[i][j] * marks[j] for j in range(r + 1)) == 0
    return d


@dataclass(frozen=True, eq=False)
class ParahoricType:
    diagram: ExtendedDynkin
    J: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "J", frozenset(self.J))
        n = self.diagram.node_count
        if not self.J <= set(range(n)):
            raise ParahoricError(f"nodes {sorted(self.J)} outside 0..{n - 1}")
        if len(self.J) == n:
            raise ParahoricError("J must be a proper subset of the extended diagram nodes")

    @classmethod
    def of(cls, rs: RootSystem | str, keep: Iterable[int]) -> "ParahoricType":
        if isinstance(rs, str):
            rs = root_system(rs)
        return cls(extended_diagram(rs), frozenset(keep))

    @classmethod
    def removing(cls, rs: RootSystem | str, removed: Iterable[int]) -> "ParahoricType":
        if isinstance(rs, str):
            rs = root_system(rs)
        d = extended_diagram(rs)
        return cls(d, frozenset(range(d.node_count)) - set(removed))

    @property
    def removed(self) -> frozenset[int]:
        return frozenset(range(self.diagram.node_count)) - self.J

    @property
    def is_hyperspecial(self) -> bool:
        return self.J == frozenset(range(1, self.diagram.node_count))

    @property
    def is_iwahori(self) -> bool:
        return not self.J

    def __repr__(self):
        return f"ParahoricType({self.diagram.base.rtype}, J={sorted(self.J)})"


@dataclass(frozen=True)
class MPGrading:
    m: int
    m_kept: int
    barycenter: tuple[Fraction, ...]
    steps: dict[int, tuple[int, tuple]]  # i -> (dim V_{i/m}, affine roots (gradient, level))
    affine_node_value: Fraction           # 1 - <theta, x_P>

    def dim(self, i: int) -> int:
        """dim V_{i/m} for any integer i >= 0 (the grading is m-periodic)."""
        return self.steps[i % self.m][0]

    @property
    def total(self) -> int:
        return sum(d for d, _ in self.steps.values())


def _barycenter(pt: ParahoricType, m: int) -> tuple[Fraction, ...]:
    return tuple(
        Fraction(0) if i in pt.J else Fraction(1, m) for i in range(1, pt.diagram.node_count)
    )


def _value(root: Vector, x: tuple[Fraction, ...]) -> Fraction:
    return sum((c * xi for c, xi in zip(root, x)), Fraction(0))


def mp_grading(pt: ParahoricType) -> MPGrading:
    d = pt.diagram
    rs = d.base
    m = sum(d.marks[i] for i in pt.removed)
    m_kept = sum(d.marks[i] for i in pt.J)
    x = _barycenter(pt, m)
    steps: dict[int, list] = {i: [] for i in range(m)}
    zero = (0,) * rs.rank
    steps[0].extend((zero, 0) for _ in range(rs.rank))
    for root in rs.roots:
        v = _value(root, x)
        # the unique level n with v + n in [0, 1)
        n = -math.floor(v)
        i = (v + n) * m
        assert i.denominator == 1
        steps[int(i)].append((root, n))
    grading = MPGrading(
        m=m,
        m_kept=m_kept,
        barycenter=x,
        steps={i: (len(v), tuple(v)) for i, v in steps.items()},
        affine_node_value=1 - _value(rs.highest_root, x),
    )
    expected = Fraction(0) if 0 in pt.J else Fraction(1, m)
    assert grading.affine_node_value == expected, (pt, grading.affine_node_value)
    assert grading.total == rs.dim
    return grading


def levi_roots(pt: ParahoricType) -> set[Vector]:
    """Gradients of the affine roots at Moy-Prasad value 0."""
    g = mp_grading(pt)
    return {root for root, _ in g.steps[0][1] if any(root)}


def relative_dimension(pt: ParahoricType) -> int:
    rs = pt.diagram.base
    diff = len(rs.roots) - len(levi_roots(pt))
    assert diff % 2 == 0
    return diff // 2


def relative_dimension_by_count(pt: ParahoricType) -> int:
    """Positive roots whose barycenter value is strictly between 0 and 1."""
    rs = pt.diagram.base
    m = sum(pt.diagram.marks[i] for i in pt.removed)
    x = _barycenter(pt, m)
    return sum(1 for r in rs.positive_roots if 0 < _value(r, x) < 1)


def mp_relative_dimension(pt: ParahoricType, depth: int) -> int:
    """[g(O) : Lie P_{>= depth/m}], the relative dimension of a filtration step.

    ``depth = 0`` is the parahoric itself; each further step removes one
    graded piece.
    """
    if depth < 0:
        raise ParahoricError("depth must be non-negative")
    g = mp_grading(pt)
    return relative_dimension(pt) + sum(g.dim(i) for i in range(depth))


def epipelagic_dim(pt: ParahoricType) -> tuple[int, bool]:
    """dim V_{1/m} and whether ``pt`` is hyperspecial (then V is the first congruence quotient)."""
    return mp_grading(pt).dim(1), pt.is_hyperspecial


# ---------------------------------------------------------------------------
# classification of subdiagrams


def _components(cartan, nodes) -> list[list[int]]:
    nodes = sorted(nodes)
    left = set(nodes)
    comps = []
    while left:
        start = min(left)
        comp, stack = {start}, [start]
        while stack:
            i = stack.pop()
            for j in nodes:
                if j not in comp and cartan[i][j] != 0:
                    comp.add(j)
                    stack.append(j)
        left -= comp
        comps.append(sorted(comp))
    return comps


def _identify(cartan, comp: list[int]) -> tuple[str, int]:
    k = len(comp)
    if k == 1:
        return ("A", 1)
    adj = {i: [j for j in comp if j != i and cartan[i][j]] for i in comp}
    edges = [(i, j) for i in comp for j in adj[i] if i < j]
    if len(edges) != k - 1:
        raise ParahoricError(f"subdiagram on {comp} is not a tree")
    mult = {(i, j): cartan[i][j] * cartan[j][i] for i, j in edges}
    if any(v > 3 for v in mult.values()):
        raise ParahoricError(f"subdiagram on {comp} has a bond of multiplicity > 3")
    degrees = {i: len(adj[i]) for i in comp}
    if any(v == 3 for v in mult.values()):
        if k == 2:
            return ("G", 2)
        raise ParahoricError(f"triple bond inside a component of size {k}")
    doubles = [e for e, v in mult.items() if v == 2]
    if doubles:
        if len(doubles) > 1 or max(degrees.values()) > 2:
            raise ParahoricError(f"subdiagram on {comp} matches no Dynkin type")
        if k == 2:
            return ("B", 2)  # B2 = C2; reported as B2
        (i, j), = doubles
        ends = [v for v in comp if degrees[v] == 1]
        if i in ends or j in ends:
            end = i if i in ends else j
            other = j if end == i else i
            # the larger Cartan entry lies in the row of the shorter root
            end_short = abs(cartan[end][other]) > abs(cartan[other][end])
            return ("B", k) if end_short else ("C", k)
        if k == 4:
            return ("F", 4)
        raise ParahoricError(f"subdiagram on {comp} matches no Dynkin type")
    branch = [v for v in comp if degrees[v] >= 3]
    if not branch:
        return ("A", k)
    if len(branch) > 1 or degrees[branch[0]] > 3:
        raise ParahoricError(f"subdiagram on {comp} matches no Dynkin type")
    b = branch[0]
    legs = []
    for start in adj[b]:
        prev, cur, n = b, start, 1
        while degrees[cur] == 2:
            prev, cur = cur, next(v for v in adj[cur] if v != prev)
            n += 1
        legs.append(n)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return ("D", k)
    if legs[:2] == [1, 2] and legs[2] in (2, 3, 4):
        return ("E", k)
    raise ParahoricError(f"subdiagram on {comp} with legs {legs} matches no Dynkin type")


_FAMILY_ORDER = {f: n for n, f in enumerate("ABCDEFG")}


def classify_subdiagram(d: ExtendedDynkin, nodes: Iterable[int]) -> list[tuple[str, int]]:
    """Dynkin types of the connected components of the induced subdiagram.

    Sorted by decreasing rank, then family.  D3 is reported as A3 and D2
    as two A1 factors, because that is what the graph looks like.
    """
    nodes = set(nodes)
    if not nodes <= set(range(d.node_count)):
        raise ParahoricError(f"nodes {sorted(nodes)} outside 0..{d.node_count - 1}")
    types = [_identify(d.cartan, comp) for comp in _components(d.cartan, nodes)]
    return sorted(types, key=lambda t: (-t[1], _FAMILY_ORDER[t[0]]))


def levi_type(pt: ParahoricType) -> tuple[list[tuple[str, int]], int]:
    """Simple factors of the Levi and the rank of its central torus."""
    factors = classify_subdiagram(pt.diagram, pt.J)
    torus = pt.diagram.rank - sum(r for _, r in factors)
    return factors, torus


def format_levi(factors: list[tuple[str, int]], torus: int = 0) -> str:
    parts = [f"{f}{r}" for f, r in factors]
    if torus:
        parts.append("T1" if torus == 1 else f"T{torus}")
    return "x".join(parts) if parts else "T0"


# ---------------------------------------------------------------------------
# numerical rigidity


def platonic_check(pt: ParahoricType) -> int | None:
    """n with dim L_P * n = |Phi|, if such an integer exists."""
    rs = pt.diagram.base
    dim_levi = len(levi_roots(pt)) + rs.rank
    q, rem = divmod(len(rs.roots), dim_levi)
    return q if rem == 0 else None


@dataclass(frozen=True)
class RigidityTuple:
    place_types: tuple[ParahoricType, ...]
    reldims: tuple[int, ...]
    total: int
    levis: tuple[str, ...] = field(default=())

    @property
    def admissible(self) -> bool:
        return self.total == self.place_types[0].diagram.base.dim

    def as_dict(self) -> dict:
        return {
            "places": [sorted(pt.J) for pt in self.place_types],
            "removed": [sorted(pt.removed) for pt in self.place_types],
            "levis": list(self.levis),
            "reldims": list(self.reldims),
            "total": self.total,
        }


class SearchCapExceeded(ParahoricError):
    pass


def _canonical_subset(subset: frozenset[int], autos) -> tuple[int, ...]:
    return min(tuple(sorted(p[i] for i in subset)) for p in autos)


def rigidity_search(
    rs: RootSystem | str,
    num_places: int,
    *,
    dedupe: bool = True,
    max_places: int = 4,
    max_results: int = 1_000_000,
    jobs: int = 1,
) -> list[RigidityTuple]:
    """Tuples of parahoric types whose relative dimensions add up to dim G.

    Tuples are unordered (multisets of places).  With ``dedupe`` the types
    are taken up to automorphisms of the extended diagram, applied
    independently at each place.
    """
    if isinstance(rs, str):
        rs = root_system(rs)
    if not 1 <= num_places <= max_places:
        raise ParahoricError(f"num_places must be in 1..{max_places}, got {num_places}")
    d = extended_diagram(rs)
    n = d.node_count
    autos = d.automorphisms if dedupe else [tuple(range(n))]
    reps: dict[tuple[int, ...], ParahoricType] = {}
    for size in range(n):
        for sub in itertools.combinations(range(n), size):
            key = _canonical_subset(frozenset(sub), autos)
            if key not in reps:
                reps[key] = ParahoricType(d, frozenset(key))
    keys = sorted(reps, key=lambda k: (len(k), k))
    rd = {k: relative_dimension(reps[k]) for k in keys}
    target = rs.dim
    by_dim: dict[int, list] = defaultdict(list)
    for k in keys:
        by_dim[rd[k]].append(k)
    # count first so the cap is checked before materialising anything
    dims = sorted(by_dim)
    combos = [c for c in itertools.combinations_with_replacement(dims, num_places) if sum(c) == target]
    count = 0
    for c in combos:
        mult = Counter(c)
        cnt = 1
        for dv, e in mult.items():
            cnt *= math.comb(len(by_dim[dv]) + e - 1, e)
        count += cnt
    if count > max_results:
        raise SearchCapExceeded(f"{count} tuples exceed the result cap {max_results}")
    levi_cache = {k: format_levi(*levi_type(reps[k])) for k in keys}
    work = [(c, by_dim) for c in combos]
    if jobs > 1 and len(work) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(lambda w: _expand(*w), work))
    else:
        chunks = [_expand(*w) for w in work]
    out = []
    for chunk in chunks:
        for ks in chunk:
            out.append(
                RigidityTuple(
                    place_types=tuple(reps[k] for k in ks),
                    reldims=tuple(rd[k] for k in ks),
                    total=sum(rd[k] for k in ks),
                    levis=tuple(levi_cache[k] for k in ks),
                )
            )
    out.sort(key=lambda t: (t.reldims, tuple(sorted(p.J) for p in t.place_types)))
    for t in out:
        assert t.total == target
    return out


def _expand(combo, by_dim) -> list[tuple]:
    # one multiset of subsets per multiset of relative dimensions
    groups = []
    for dv, e in sorted(Counter(combo).items()):
        groups.append(list(itertools.combinations_with_replacement(by_dim[dv], e)))
    return [sum(parts, ()) for parts in itertools.product(*groups)]

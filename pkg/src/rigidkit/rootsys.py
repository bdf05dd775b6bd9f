"""Finite crystallographic root systems in exact integer arithmetic.

Everything is expressed in the basis of simple roots, numbered as in
Bourbaki's plates.  The Cartan matrix follows the convention
``cartan[i][j] = <alpha_j, alpha_i^vee>``, so that the pairing of a root
``r`` with the simple coroot ``alpha_i^vee`` is ``(cartan @ r)[i]``.

Coweights are stored by their pairings with the simple roots (coordinates
in the fundamental coweight basis); dominance is then a sign check and
pairing with a root is a dot product.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

__all__ = [
    "RootSystemError",
    "RootSystemType",
    "RootSystem",
    "Coweight",
    "cartan_matrix",
    "build_root_system",
    "reflect",
    "pair",
    "dim_gr",
    "dominant_representative",
]

Vector = tuple[int, ...]


class RootSystemError(ValueError):
    """Invalid root system data (bad type, rank, or a non-root argument)."""


_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in "ABCDEFG" or len(self.family) != 1:
            raise RootSystemError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise RootSystemError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family in _MIN_RANK:
            if self.rank < _MIN_RANK[self.family]:
                raise RootSystemError(
                    f"type {self.family} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}"
                )
        elif self.rank not in _FIXED_RANKS[self.family]:
            raise RootSystemError(f"type {self.family}{self.rank} does not exist")

    @classmethod
    def parse(cls, name: str) -> "RootSystemType":
        """Parse names such as ``"A2"``, ``"E8"`` or ``"g2"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", name)
        if not m:
            raise RootSystemError(f"cannot parse root system type {name!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _edges(rtype: RootSystemType) -> list[tuple[int, int]]:
    """Simply-laced skeleton of the Dynkin diagram, 0-based node indices."""
    n, fam = rtype.rank, rtype.family
    if fam == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if fam == "E":
        # Bourbaki: 1-3-4-5-...-n with 2 attached to 4.
        return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    return [(i, i + 1) for i in range(n - 1)]


def cartan_matrix(rtype: RootSystemType) -> tuple[Vector, ...]:
    n = rtype.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(rtype):
        a[i][j] = a[j][i] = -1
    fam = rtype.family
    # A -2 in row i means alpha_i is the shorter root of the bond.
    if fam == "B":
        a[n - 1][n - 2] = -2
    elif fam == "C":
        a[n - 2][n - 1] = -2
    elif fam == "F":
        a[2][1] = -2
    elif fam == "G":
        a[0][1] = -3
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan) -> tuple[Fraction, ...]:
    """Squared lengths d_i making d_i * a_ij symmetric; long roots get length 2."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp, stack = [start], [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    # d_i a_ij = d_j a_ji
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    comp.append(j)
                    stack.append(j)
        top = max(d[k] for k in comp)
        for k in comp:
            d[k] = 2 * d[k] / top
    return tuple(d)  # type: ignore[arg-type]


@dataclass(frozen=True)
class Coweight:
    """A cocharacter, recorded by its pairings with the simple roots."""

    pairings: Vector

    def __post_init__(self):
        object.__setattr__(self, "pairings", tuple(int(x) for x in self.pairings))

    @property
    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.pairings)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A based root system with its roots in simple-root coordinates.

    Build instances with :func:`build_root_system`.  Roots are sorted
    lexicographically so that every downstream enumeration is reproducible.
    """

    rtype: RootSystemType
    cartan: tuple[Vector, ...]
    roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    highest_root: Vector
    lengths: tuple[Fraction, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.rtype.rank

    @property
    def dim(self) -> int:
        """Dimension of the split group: number of roots plus the rank."""
        return len(self.roots) + self.rank

    @cached_property
    def index(self) -> dict[Vector, int]:
        return {r: k for k, r in enumerate(self.roots)}

    def simple_root(self, i: int) -> Vector:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def is_root(self, r) -> bool:
        return tuple(r) in self.index

    def coroot_pairing(self, r, i: int) -> int:
        """<r, alpha_i^vee> for an integer vector r in simple-root coordinates."""
        row = self.cartan[i]
        return sum(row[k] * r[k] for k in range(self.rank))

    def norm(self, r) -> Fraction:
        """The invariant form (r, r), long roots normalised to length 2."""
        return self.form(r, r)

    def form(self, r, s) -> Fraction:
        # (alpha_i, alpha_j) = d_i a_ij / 2
        total = Fraction(0)
        for i in range(self.rank):
            if r[i] == 0:
                continue
            for j in range(self.rank):
                if s[j]:
                    total += r[i] * s[j] * self.lengths[i] * self.cartan[i][j] / 2
        return total

    def coroot(self, r) -> Vector:
        """The coroot r^vee in simple-coroot coordinates."""
        nr = self.norm(r)
        out = []
        for k in range(self.rank):
            c = r[k] * self.lengths[k] / nr
            if c.denominator != 1:
                raise RootSystemError(f"{r} is not a root")
            out.append(int(c))
        return tuple(out)

    def pairing(self, r, s) -> int:
        """<r, s^vee> for roots r, s."""
        val = 2 * self.form(r, s) / self.norm(s)
        assert val.denominator == 1
        return int(val)

    def coroot_lattice_pairing(self, lam, r) -> int:
        """<lam, r> for lam in simple-coroot coordinates and r in root coordinates."""
        return sum(lam[i] * self.coroot_pairing(r, i) for i in range(self.rank) if lam[i])

    def coroot_to_coweight(self, lam) -> Coweight:
        """Convert a coroot-lattice vector to fundamental-coweight coordinates."""
        return Coweight(
            tuple(self.coroot_lattice_pairing(lam, self.simple_root(j)) for j in range(self.rank))
        )

    @cached_property
    def rho2(self) -> Vector:
        """2*rho, the sum of the positive roots."""
        return tuple(sum(r[k] for r in self.positive_roots) for k in range(self.rank))

    @cached_property
    def weyl_order(self) -> int:
        return _weyl_order(self.cartan, tuple(range(self.rank)))

    def __repr__(self):
        return f"RootSystem({self.rtype}, |roots|={len(self.roots)})"


def _reflect_vec(cartan, i: int, r) -> Vector:
    c = sum(cartan[i][k] * r[k] for k in range(len(r)))
    if c == 0:
        return tuple(r)
    out = list(r)
    out[i] -= c
    return tuple(out)


def _weight_orbit_size(cartan, nodes, start) -> int:
    """Size of the Weyl orbit of a weight given in fundamental-weight coordinates.

    Reflection on weights: s_i(mu) = mu - mu_i * alpha_i, and alpha_i has
    fundamental-weight coordinates given by column i of the Cartan matrix.
    """
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in nodes:
                if mu[i] == 0:
                    continue
                nu = tuple(mu[j] - mu[i] * cartan[j][i] if j in nodes else mu[j] for j in range(len(mu)))
                if nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return len(seen)


def _weyl_order(cartan, nodes: tuple[int, ...]) -> int:
    # |W| = |W . omega_k| * |Stab(omega_k)|, the stabiliser being the
    # parabolic subgroup on the remaining nodes.  Choose the node with the
    # smallest orbit among leaves of each component.
    if not nodes:
        return 1
    node_set = set(nodes)
    comp, stack = {nodes[0]}, [nodes[0]]
    while stack:
        i = stack.pop()
        for j in node_set:
            if j not in comp and cartan[i][j] != 0:
                comp.add(j)
                stack.append(j)
    rest = tuple(k for k in nodes if k not in comp)
    comp_t = tuple(sorted(comp))
    leaves = [i for i in comp_t if sum(1 for j in comp_t if j != i and cartan[i][j]) <= 1]
    n = len(cartan)
    best = None
    for k in leaves:
        omega = tuple(1 if j == k else 0 for j in range(n))
        size = _weight_orbit_size(cartan, comp_t, omega)
        if best is None or size < best[0]:
            best = (size, k)
    size, k = best
    sub = tuple(i for i in comp_t if i != k)
    return size * _weyl_order(cartan, sub) * _weyl_order(cartan, rest)


def build_root_system(rtype: RootSystemType | str) -> RootSystem:
    """Generate the root system of ``rtype`` by reflection closure."""
    if isinstance(rtype, str):
        rtype = RootSystemType.parse(rtype)
    cartan = cartan_matrix(rtype)
    n = rtype.rank
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                s = _reflect_vec(cartan, i, r)
                if s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    roots = tuple(sorted(found))
    positive = tuple(r for r in roots if all(c >= 0 for c in r))
    assert len(roots) == 2 * len(positive)
    assert all(all(c >= 0 for c in r) or all(c <= 0 for c in r) for r in roots)
    highest = max(positive, key=sum)
    if not all(all(h >= c for h, c in zip(highest, r)) for r in positive):
        raise AssertionError(f"no dominating highest root in {rtype}")
    return RootSystem(
        rtype=rtype,
        cartan=cartan,
        roots=roots,
        positive_roots=positive,
        highest_root=highest,
        lengths=_symmetrizer(cartan),
    )


def reflect(rs: RootSystem, i: int, r) -> Vector:
    """Simple reflection s_i applied to the root ``r``."""
    r = tuple(r)
    if not rs.is_root(r):
        raise RootSystemError(f"{r} is not a root of {rs.rtype}")
    if not 0 <= i < rs.rank:
        raise RootSystemError(f"simple index {i} out of range for {rs.rtype}")
    return _reflect_vec(rs.cartan, i, r)


def pair(rs: RootSystem, lam: Coweight, r) -> int:
    if len(lam.pairings) != rs.rank or len(r) != rs.rank:
        raise RootSystemError(
            f"dimension mismatch: rank {rs.rank}, coweight {len(lam.pairings)}, root {len(r)}"
        )
    return sum(a * b for a, b in zip(lam.pairings, r))


def dim_gr(rs: RootSystem, lam: Coweight) -> int:
    """<2 rho, lam>: the dimension of the affine Grassmannian Schubert cell of lam."""
    if not lam.is_dominant:
        raise RootSystemError(f"coweight {lam.pairings} is not dominant")
    return pair(rs, lam, rs.rho2)


def reflect_coweight(rs: RootSystem, i: int, lam: Coweight) -> Coweight:
    # s_i(lam) = lam - <lam, alpha_i> alpha_i^vee; alpha_i^vee pairs with
    # alpha_j through cartan[i][j].
    c = lam.pairings[i]
    row = rs.cartan[i]
    return Coweight(tuple(x - c * row[j] for j, x in enumerate(lam.pairings)))


def dominant_representative(rs: RootSystem, lam: Coweight) -> Coweight:
    if len(lam.pairings) != rs.rank:
        raise RootSystemError(f"coweight of length {len(lam.pairings)} for rank {rs.rank}")
    while True:
        for i, x in enumerate(lam.pairings):
            if x < 0:
                lam = reflect_coweight(rs, i, lam)
                break
        else:
            return lam

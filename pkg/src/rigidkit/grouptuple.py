"""Finite permutation groups and rigid tuples of conjugacy classes.

Permutations are tuples of images of 0..degree-1; ``compose(g, h)`` is
``g`` after ``h``.  Groups are enumerated completely, so everything here is
meant for groups of a few hundred thousand elements at most.

A class tuple (C_1, ..., C_n) is rigid when the solutions of
g_1 ... g_n = 1 with g_i in C_i form a single orbit under simultaneous
conjugation and every solution generates the group.  A class is rational
when it is closed under all power maps g -> g^k with k prime to ord(g); by
a classical argument this is equivalent to every irreducible character
taking rational values on it, which is the form used in the rigidity
criterion over Q.
"""
from __future__ import annotations

import json
import math
import re
import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "GroupError",
    "CapExceeded",
    "Perm",
    "PermGroup",
    "ConjClass",
    "TupleReport",
    "compose",
    "inverse",
    "perm_order",
    "cycle_type",
    "build_group",
    "conjugacy_classes",
    "class_labels",
    "find_class",
    "has_trivial_center",
    "solutions",
    "count_solutions",
    "orbit_count",
    "generates",
    "is_rigid_tuple",
    "is_rational_class",
    "class_algebra_count",
    "symmetric_group",
    "alternating_group",
    "dihedral_group",
    "cyclic_group",
]

Perm = tuple[int, ...]
DEFAULT_ELEMENT_CAP = 200_000
DEFAULT_WORK_CAP = 10**7


class GroupError(ValueError):
    pass


class CapExceeded(GroupError):
    pass


def compose(g: Perm, h: Perm) -> Perm:
    """g o h: first h, then g."""
    return tuple(g[i] for i in h)


def inverse(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, j in enumerate(g):
        out[j] = i
    return tuple(out)


def cycle_type(g: Perm) -> tuple[int, ...]:
    seen = [False] * len(g)
    lengths = []
    for i in range(len(g)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = g[j]
                n += 1
            lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def perm_order(g: Perm) -> int:
    return math.lcm(*cycle_type(g)) if g else 1


def perm_power(g: Perm, k: int) -> Perm:
    k %= perm_order(g)
    out = tuple(range(len(g)))
    base = g
    while k:
        if k & 1:
            out = compose(out, base)
        base = compose(base, base)
        k >>= 1
    return out


def _check_perm(g: Sequence[int], degree: int) -> Perm:
    g = tuple(int(x) for x in g)
    if len(g) != degree or sorted(g) != list(range(degree)):
        raise GroupError(f"{list(g)} is not a permutation of 0..{degree - 1}")
    return g


@dataclass(eq=False)
class PermGroup:
    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...] = field(repr=False)

    def __post_init__(self):
        self._index = {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return tuple(range(self.degree))

    def __contains__(self, g) -> bool:
        return tuple(g) in self._index

    def index(self, g: Perm) -> int:
        return self._index[g]

    @classmethod
    def from_json(cls, data: dict | str, cap: int = DEFAULT_ELEMENT_CAP) -> "PermGroup":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return build_group(int(data["degree"]), data["generators"], cap=cap)
        except (KeyError, TypeError) as exc:
            raise GroupError(f"malformed group file: {exc}") from exc


def build_group(degree: int, generators: Iterable[Sequence[int]], cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Enumerate the group generated by ``generators`` (BFS closure)."""
    if degree < 1:
        raise GroupError("degree must be positive")
    gens = tuple(_check_perm(g, degree) for g in generators)
    e = tuple(range(degree))
    seen = {e}
    order = [e]
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                order.append(y)
                if len(order) > cap:
                    raise CapExceeded(f"group has more than {cap} elements")
                queue.append(y)
    elements = tuple(sorted(order))
    # closed under the generators and finite, hence a group
    return PermGroup(degree, gens, elements)


@dataclass(frozen=True)
class ConjClass:
    representative: Perm
    members: tuple[Perm, ...]
    order: int

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, g) -> bool:
        return g in self._set

    @property
    def _set(self) -> frozenset:
        s = self.__dict__.get("_memberset")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_memberset", s)
        return s


def conjugacy_classes(H: PermGroup) -> list[ConjClass]:
    """Classes ordered by element order, then size, then smallest member."""
    gens = H.generators
    gen_inv = [inverse(g) for g in gens]
    left = set(H.elements)
    classes = []
    while left:
        x = min(left)
        orbit = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g, gi in zip(gens, gen_inv):
                z = compose(compose(g, y), gi)
                if z not in orbit:
                    orbit.add(z)
                    stack.append(z)
        left -= orbit
        members = tuple(sorted(orbit))
        classes.append(ConjClass(members[0], members, perm_order(members[0])))
    classes.sort(key=lambda c: (c.order, c.size, c.representative))
    return classes


def class_labels(classes: Sequence[ConjClass]) -> list[str]:
    """ATLAS-style names: element order followed by A, B, ... in class order."""
    counters: dict[int, int] = {}
    out = []
    for c in classes:
        k = counters.get(c.order, 0)
        counters[c.order] = k + 1
        out.append(f"{c.order}{_letters(k)}")
    return out


def canonical_labels(classes: Sequence[ConjClass]) -> list[str]:
    """Labels of the form o<order>-s<size>-<index>."""
    counters: dict[tuple[int, int], int] = {}
    out = []
    for c in classes:
        key = (c.order, c.size)
        k = counters.get(key, 0)
        counters[key] = k + 1
        out.append(f"o{c.order}-s{c.size}-{k}")
    return out


def _letters(k: int) -> str:
    s = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        s = chr(ord("A") + r) + s
    return s


def find_class(classes: Sequence[ConjClass], label: str) -> ConjClass:
    label = label.strip()
    for names in (class_labels(classes), canonical_labels(classes)):
        if label in names:
            return classes[names.index(label)]
    if re.fullmatch(r"\d+", label):
        k = int(label)
        if 0 <= k < len(classes):
            return classes[k]
    raise GroupError(f"unknown class label {label!r}")


def has_trivial_center(H: PermGroup) -> bool:
    e = H.identity
    for z in H.elements:
        if z != e and all(compose(z, g) == compose(g, z) for g in H.generators):
            return False
    return True


def _check_work(classes: Sequence[ConjClass], cap: int) -> None:
    work = math.prod(c.size for c in classes[:-1])
    if work > cap:
        raise CapExceeded(f"{work} candidate tuples exceed the work cap {cap}")


def solutions(H: PermGroup, classes: Sequence[ConjClass], cap: int = DEFAULT_WORK_CAP) -> list[tuple[Perm, ...]]:
    """All (g_1, ..., g_n) with g_i in C_i and g_1 g_2 ... g_n = 1."""
    if not classes:
        raise GroupError("need at least one class")
    _check_work(classes, cap)
    e = H.identity
    *head, last = classes
    out = []
    for prefix in _products(head, e):
        tup, prod = prefix
        g_last = inverse(prod)
        if g_last in last:
            out.append(tup + (g_last,))
    return out


def _products(classes, e):
    # depth-first over C_1 x ... x C_k, tracking the running product g_1 ... g_k
    if not classes:
        yield (), e
        return
    first, *rest = classes
    for g in first.members:
        for tup, prod in _products(rest, e):
            yield (g,) + tup, compose(g, prod)


def count_solutions(H: PermGroup, classes: Sequence[ConjClass], cap: int = DEFAULT_WORK_CAP) -> int:
    return len(solutions(H, classes, cap))


def _orbits(H: PermGroup, sols: list[tuple[Perm, ...]]) -> list[int]:
    index = {s: i for i, s in enumerate(sols)}
    parent = list(range(len(sols)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in H.generators:
        gi = inverse(g)
        for i, s in enumerate(sols):
            t = tuple(compose(compose(g, x), gi) for x in s)
            a, b = find(i), find(index[t])
            if a != b:
                parent[a] = b
    return [find(i) for i in range(len(sols))]


def orbit_count(H: PermGroup, classes: Sequence[ConjClass], cap: int = DEFAULT_WORK_CAP) -> int:
    return len(set(_orbits(H, solutions(H, classes, cap))))


def closure_order(degree: int, gens: Iterable[Perm], cap: int = DEFAULT_ELEMENT_CAP) -> int:
    return build_group(degree, gens, cap).order


def generates(H: PermGroup, tup: Iterable[Perm]) -> bool:
    tup = [tuple(g) for g in tup]
    for g in tup:
        if g not in H:
            raise GroupError(f"{list(g)} is not an element of the group")
    return closure_order(H.degree, tup, cap=H.order) == H.order


@dataclass(frozen=True)
class TupleReport:
    solution_count: int
    orbit_count: int
    all_generate: bool
    rigid: bool
    rational: tuple[bool, ...]
    trivial_center: bool = True

    def as_dict(self) -> dict:
        return {
            "solution_count": self.solution_count,
            "orbit_count": self.orbit_count,
            "all_generate": self.all_generate,
            "rigid": self.rigid,
            "rational": list(self.rational),
            "trivial_center": self.trivial_center,
        }


def is_rigid_tuple(H: PermGroup, classes: Sequence[ConjClass], cap: int = DEFAULT_WORK_CAP) -> TupleReport:
    center_ok = has_trivial_center(H)
    if not center_ok:
        warnings.warn("the group has non-trivial center; rigidity is meant for center-free groups")
    sols = solutions(H, classes, cap)
    n_orbits = len(set(_orbits(H, sols)))
    # generation is constant on orbits, so one representative per orbit suffices
    reps = {}
    for s, root in zip(sols, _orbits(H, sols)):
        reps.setdefault(root, s)
    all_gen = all(generates(H, s) for s in reps.values())
    return TupleReport(
        solution_count=len(sols),
        orbit_count=n_orbits,
        all_generate=all_gen,
        rigid=n_orbits == 1 and all_gen,
        rational=tuple(is_rational_class(H, c) for c in classes),
        trivial_center=center_ok,
    )


def is_rational_class(H: PermGroup, C: ConjClass) -> bool:
    g = C.representative
    n = C.order
    return all(perm_power(g, k) in C for k in range(1, n + 1) if math.gcd(k, n) == 1)


def class_algebra_count(H: PermGroup, classes: Sequence[ConjClass]) -> int:
    """Number of solutions of g_1 ... g_n = 1, from class-sum products.

    Works in the centre of the group algebra with the basis of class sums:
    the coefficient of the class sum K_k in K_i K_j is the number of
    factorisations z = x y (x in C_i, y in C_j) of one fixed z in C_k.
    """
    if not classes:
        raise GroupError("need at least one class")
    all_classes = conjugacy_classes(H)
    pos = {c.representative: k for k, c in enumerate(all_classes)}
    where = {}
    for k, c in enumerate(all_classes):
        for g in c.members:
            where[g] = k
    idx = [pos[c.representative] for c in classes]

    def times(vec: list[int], j: int) -> list[int]:
        # (sum_i vec_i K_i) * K_j
        out = [0] * len(all_classes)
        cj = all_classes[j]
        for k, ck in enumerate(all_classes):
            z = ck.representative
            total = 0
            for y in cj.members:
                x = compose(z, inverse(y))
                if vec[where[x]]:
                    total += vec[where[x]]
            out[k] = total
        return out

    vec = [0] * len(all_classes)
    vec[idx[0]] = 1
    for j in idx[1:]:
        vec = times(vec, j)
    identity_class = where[H.identity]
    return vec[identity_class]


# ---------------------------------------------------------------------------
# standard groups


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return build_group(1, [])
    cyc = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return build_group(n, [cyc, swap])


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return build_group(n, [])
    gens = []
    for k in range(2, n):
        g = list(range(n))
        g[0], g[1], g[k] = 1, k, 0  # 3-cycle (0 1 k)
        gens.append(tuple(g))
    return build_group(n, gens)


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return build_group(n, [rot, ref])


def cyclic_group(n: int) -> PermGroup:
    return build_group(n, [tuple((i + 1) % n for i in range(n))])

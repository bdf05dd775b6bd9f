"""Affine roots and the affine Weyl group of the coroot lattice.

An affine root ``alpha + n`` is a pair (gradient, level).  The gradient is a
root in simple-root coordinates, or the zero vector (those only matter for
Moy-Prasad bookkeeping and are never sign-changed by the group).

An element ``(lam, w)`` of ``W_aff = Z Phi^vee x| W`` acts by

    alpha + n  |->  w(alpha) + n + <lam, w(alpha)>,

with product ``(l1, w1)(l2, w2) = (l1 + w1 l2, w1 w2)``.  The finite part is
stored as a permutation of ``rs.roots``; the translation in simple-coroot
coordinates.

Inversion sets.  ``w~^{-1}`` sends ``alpha + n`` to
``w^{-1} alpha + n - <lam, alpha>``.  A positive affine root with non-zero
gradient has ``n >= 0``; for its image to be negative we need
``n <= <lam, alpha>``.  So every inversion has ``0 <= n <= max |<lam, alpha>|``
and scanning levels ``|n| <= max |<lam, alpha>| + 1`` is exhaustive.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .rootsys import RootSystem, Vector

__all__ = [
    "AffineRoot",
    "AffineWeylElt",
    "AffineWeyl",
    "affine_weyl",
    "is_positive",
    "act",
    "inversion_set",
    "length",
    "simple_descent",
    "kloosterman_relevant",
]


@dataclass(frozen=True, order=True)
class AffineRoot:
    gradient: Vector
    level: int

    def __post_init__(self):
        object.__setattr__(self, "gradient", tuple(self.gradient))
        if not any(self.gradient) and self.level == 0:
            raise ValueError("0 + 0 is not an affine root")

    @property
    def is_imaginary(self) -> bool:
        return not any(self.gradient)

    def __str__(self):
        if self.is_imaginary:
            return f"0{self.level:+d}"
        return f"{list(self.gradient)}{self.level:+d}"


@dataclass(frozen=True)
class AffineWeylElt:
    translation: Vector
    finite: tuple[int, ...]


def is_positive(a: AffineRoot) -> bool:
    if a.level != 0:
        return a.level > 0
    return all(c >= 0 for c in a.gradient)


class AffineWeyl:
    """The affine Weyl group attached to a root system.

    Holds the permutation tables needed to compose elements exactly.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        r = rs.rank
        idx = rs.index
        self._simple_perms = tuple(
            tuple(idx[_reflect(rs, i, root)] for root in rs.roots) for i in range(r)
        )
        self._identity_perm = tuple(range(len(rs.roots)))
        self._coroots = tuple(rs.coroot(root) for root in rs.roots)
        self._simple_idx = tuple(idx[rs.simple_root(i)] for i in range(r))
        theta = rs.highest_root
        self.theta = theta
        # s_0 = reflection in -theta + 1 = (-theta^vee, s_theta)
        s_theta = tuple(
            idx[tuple(a - rs.pairing(root, theta) * t for a, t in zip(root, theta))]
            for root in rs.roots
        )
        self._s0 = AffineWeylElt(tuple(-c for c in rs.coroot(theta)), s_theta)

    @property
    def rank(self) -> int:
        return self.rs.rank

    def identity(self) -> AffineWeylElt:
        return AffineWeylElt((0,) * self.rank, self._identity_perm)

    def simple_reflection(self, i: int) -> AffineWeylElt:
        """s_i for i in 0..r; s_0 is the reflection in the affine simple root."""
        if i == 0:
            return self._s0
        if not 1 <= i <= self.rank:
            raise ValueError(f"affine simple index {i} out of range 0..{self.rank}")
        return AffineWeylElt((0,) * self.rank, self._simple_perms[i - 1])

    def simple_roots(self) -> list[AffineRoot]:
        """alpha_0 = -theta + 1 followed by alpha_1..alpha_r."""
        out = [AffineRoot(tuple(-c for c in self.theta), 1)]
        out += [AffineRoot(self.rs.simple_root(i), 0) for i in range(self.rank)]
        return out

    def translation(self, lam: Sequence[int]) -> AffineWeylElt:
        return AffineWeylElt(tuple(lam), self._identity_perm)

    def from_word(self, word: Iterable[int], translation: Sequence[int] | None = None) -> AffineWeylElt:
        """t^translation * s_{i1} s_{i2} ... s_{ik}."""
        elt = self.identity() if translation is None else self.translation(translation)
        for i in word:
            elt = self.mul(elt, self.simple_reflection(i))
        return elt

    def finite_from_word(self, word: Iterable[int]) -> tuple[int, ...]:
        perm = self._identity_perm
        for i in word:
            perm = _compose(perm, self._simple_perms[i - 1])
        return perm

    def apply_finite(self, perm: tuple[int, ...], lam: Sequence[int]) -> Vector:
        """Action of the finite Weyl element on a coroot-lattice vector."""
        out = [0] * self.rank
        for i, c in enumerate(lam):
            if c:
                img = self._coroots[perm[self._simple_idx[i]]]
                for k in range(self.rank):
                    out[k] += c * img[k]
        return tuple(out)

    def mul(self, u: AffineWeylElt, v: AffineWeylElt) -> AffineWeylElt:
        moved = self.apply_finite(u.finite, v.translation)
        return AffineWeylElt(
            tuple(a + b for a, b in zip(u.translation, moved)),
            _compose(u.finite, v.finite),
        )

    def inverse(self, u: AffineWeylElt) -> AffineWeylElt:
        winv = _invert(u.finite)
        moved = self.apply_finite(winv, u.translation)
        return AffineWeylElt(tuple(-c for c in moved), winv)

    def is_identity(self, u: AffineWeylElt) -> bool:
        return u == self.identity()

    def act(self, u: AffineWeylElt, a: AffineRoot) -> AffineRoot:
        if a.is_imaginary:
            return a
        wa = self.rs.roots[u.finite[self.rs.index[a.gradient]]]
        return AffineRoot(wa, a.level + self.rs.coroot_lattice_pairing(u.translation, wa))

    def inversion_set(self, u: AffineWeylElt) -> list[AffineRoot]:
        rs = self.rs
        bound = max((abs(rs.coroot_lattice_pairing(u.translation, r)) for r in rs.roots), default=0) + 1
        uinv = self.inverse(u)
        out = []
        for root in rs.roots:
            for n in range(-bound, bound + 1):
                a = AffineRoot(root, n)
                if is_positive(a) and not is_positive(self.act(uinv, a)):
                    out.append(a)
        return sorted(out)

    def length(self, u: AffineWeylElt) -> int:
        return len(self.inversion_set(u))

    def simple_descent(self, u: AffineWeylElt) -> int | None:
        """Smallest i with u^{-1}(alpha_i) < 0, or None for the identity."""
        uinv = self.inverse(u)
        for i, a in enumerate(self.simple_roots()):
            if not is_positive(self.act(uinv, a)):
                return i
        return None

    def ball(self, radius: int) -> dict[AffineWeylElt, int]:
        """All elements of word length <= radius, with their BFS word length."""
        dist = {self.identity(): 0}
        queue = deque([self.identity()])
        gens = [self.simple_reflection(i) for i in range(self.rank + 1)]
        while queue:
            u = queue.popleft()
            d = dist[u]
            if d == radius:
                continue
            for s in gens:
                v = self.mul(u, s)
                if v not in dist:
                    dist[v] = d + 1
                    queue.append(v)
        return dist


def _reflect(rs: RootSystem, i: int, r) -> Vector:
    c = rs.coroot_pairing(r, i)
    out = list(r)
    out[i] -= c
    return tuple(out)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p q)(k) = p(q(k))."""
    return tuple(p[j] for j in q)


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for k, j in enumerate(p):
        out[j] = k
    return tuple(out)


@lru_cache(maxsize=None)
def _group(rs: RootSystem) -> AffineWeyl:
    return AffineWeyl(rs)


def affine_weyl(rs: RootSystem) -> AffineWeyl:
    return _group(rs)


def act(rs: RootSystem, u: AffineWeylElt, a: AffineRoot) -> AffineRoot:
    return _group(rs).act(u, a)


def inversion_set(rs: RootSystem, u: AffineWeylElt) -> list[AffineRoot]:
    return _group(rs).inversion_set(u)


def length(rs: RootSystem, u: AffineWeylElt) -> int:
    return _group(rs).length(u)


def simple_descent(rs: RootSystem, u: AffineWeylElt) -> AffineRoot | None:
    g = _group(rs)
    i = g.simple_descent(u)
    return None if i is None else g.simple_roots()[i]


def kloosterman_relevant(rs: RootSystem, u: AffineWeylElt) -> tuple[bool, AffineRoot | None]:
    """Whether the point indexed by ``u`` can be relevant for the Kloosterman datum.

    Only the identity survives: any other element inverts some affine simple
    root, whose root subgroup then sits in the automorphism group and sees the
    additive character non-trivially.  The witnessing simple root is returned.
    """
    if not inversion_set(rs, u):
        return True, None
    witness = simple_descent(rs, u)
    assert witness is not None
    return False, witness

"""Swan and Artin conductors of slope profiles, and the numerical criterion
for cohomological rigidity.

A slope profile records only what the criterion consumes: the dimension of
the representation, the dimension of its inertia invariants, and the
multiset of slopes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "ConductorError",
    "SlopeProfile",
    "CohRigidityInstance",
    "swan",
    "artin",
    "coh_rigidity_check",
    "datum_parameter_match",
    "slopes_bound_level",
    "kl_standard_infinity",
    "kl_adjoint_zero",
    "kl_adjoint_infinity",
    "kloosterman_instance",
    "direct_sum",
]


class ConductorError(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True)
class SlopeProfile:
    dim: int
    inv_dim: int
    slopes: tuple[tuple[Fraction, int], ...]

    def __init__(self, dim: int, inv_dim: int, slopes: Iterable[tuple[object, int]]):
        merged: dict[Fraction, int] = {}
        for s, mult in slopes:
            s = _frac(s)
            if s < 0:
                raise ConductorError(f"negative slope {s}")
            if int(mult) < 0:
                raise ConductorError(f"negative multiplicity for slope {s}")
            if mult:
                merged[s] = merged.get(s, 0) + int(mult)
        if dim < 1:
            raise ConductorError("dim must be positive")
        if sum(merged.values()) != dim:
            raise ConductorError(f"multiplicities sum to {sum(merged.values())}, expected dim={dim}")
        if not 0 <= inv_dim <= merged.get(Fraction(0), 0):
            raise ConductorError(
                f"inv_dim={inv_dim} must lie between 0 and the multiplicity of slope 0"
            )
        total = sum(s * k for s, k in merged.items())
        if total.denominator != 1:
            raise ConductorError(f"Swan conductor {total} is not an integer")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "inv_dim", inv_dim)
        object.__setattr__(self, "slopes", tuple(sorted(merged.items())))

    @classmethod
    def from_json(cls, data: dict | str) -> "SlopeProfile":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["dim"]), int(data["inv"]), [(s, int(k)) for s, k in data["slopes"]])
        except (KeyError, TypeError) as exc:
            raise ConductorError(f"malformed slope profile: {exc}") from exc

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "inv": self.inv_dim,
            "slopes": [[str(s), k] for s, k in self.slopes],
        }

    @property
    def max_slope(self) -> Fraction:
        return max(s for s, _ in self.slopes)


def swan(s: SlopeProfile) -> int:
    return int(sum(slope * k for slope, k in s.slopes))


def artin(s: SlopeProfile) -> int:
    return (s.dim - s.inv_dim) + swan(s)


def direct_sum(*profiles: SlopeProfile) -> SlopeProfile:
    return SlopeProfile(
        sum(p.dim for p in profiles),
        sum(p.inv_dim for p in profiles),
        [pair for p in profiles for pair in p.slopes],
    )


@dataclass(frozen=True)
class CohRigidityInstance:
    genus: int
    dim_dual: int
    h0: int
    profiles: tuple[SlopeProfile, ...]

    def __post_init__(self):
        object.__setattr__(self, "profiles", tuple(self.profiles))
        if self.genus < 0 or self.h0 < 0 or self.dim_dual < 1:
            raise ConductorError("need genus >= 0, h0 >= 0 and dim_dual >= 1")
        for prof in self.profiles:
            if prof.dim != self.dim_dual:
                raise ConductorError(f"profile of dim {prof.dim} for a group of dim {self.dim_dual}")

    @classmethod
    def from_json(cls, data: dict | str) -> "CohRigidityInstance":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(
                int(data["genus"]),
                int(data["dim_dual"]),
                int(data.get("h0", 0)),
                tuple(SlopeProfile.from_json(p) for p in data["profiles"]),
            )
        except (KeyError, TypeError) as exc:
            raise ConductorError(f"malformed rigidity instance: {exc}") from exc

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "dim_dual": self.dim_dual,
            "h0": self.h0,
            "profiles": [p.to_json() for p in self.profiles],
        }


@dataclass(frozen=True)
class RigidityVerdict:
    rigid: bool
    deficit: Fraction  # (1/2) sum a_x - ((1 - g) dim - h0)
    half_artin_sum: Fraction
    expected: int

    def as_dict(self) -> dict:
        return {
            "rigid": self.rigid,
            "deficit": str(self.deficit),
            "half_artin_sum": str(self.half_artin_sum),
            "expected": self.expected,
        }


def coh_rigidity_check(inst: CohRigidityInstance) -> RigidityVerdict:
    lhs = Fraction(sum(artin(p) for p in inst.profiles), 2)
    rhs = (1 - inst.genus) * inst.dim_dual - inst.h0
    deficit = lhs - rhs
    return RigidityVerdict(deficit == 0, deficit, lhs, rhs)


@dataclass(frozen=True)
class MatchReport:
    artin: int
    reldim: int
    equal: bool
    doubled: bool

    def as_dict(self) -> dict:
        return {
            "artin": self.artin,
            "reldim": self.reldim,
            "a_equals_reldim": self.equal,
            "a_equals_2reldim": self.doubled,
        }


def datum_parameter_match(reldim: int, adjoint: SlopeProfile) -> MatchReport:
    """Compare a relative dimension with the Artin conductor of an adjoint profile.

    Both candidate identities a = reldim and a = 2 reldim are reported.
    """
    if reldim < 0:
        raise ConductorError("reldim must be non-negative")
    a = artin(adjoint)
    return MatchReport(a, reldim, a == reldim, a == 2 * reldim)


def slopes_bound_level(s: SlopeProfile) -> Fraction:
    """The largest slope: the Moy-Prasad depth a matching level group should reach."""
    return s.max_slope


# ---------------------------------------------------------------------------
# Kloosterman profiles


def kl_standard_infinity(n: int) -> SlopeProfile:
    """Kl_n at infinity: totally wild, n slopes 1/n."""
    if n < 1:
        raise ConductorError("n must be positive")
    return SlopeProfile(n, 0, [(Fraction(1, n), n)])


def kl_adjoint_zero(n: int) -> SlopeProfile:
    """Ad(Kl_n) at 0: tame, regular unipotent monodromy.

    The invariants of a principal unipotent in sl_n are its centraliser,
    of dimension n - 1.
    """
    if n < 2:
        raise ConductorError("n must be >= 2")
    d = n * n - 1
    return SlopeProfile(d, n - 1, [(0, d)])


def kl_adjoint_infinity(n: int) -> SlopeProfile:
    """Ad(Kl_n) at infinity, solved from two constraints.

    Slopes lie in {0, 1/n} and there are no invariants.  The multiplicity k
    of slope 1/n must make the Swan conductor integral and satisfy the
    rigidity identity together with the profile at 0 (genus 0, h0 = 0).
    The solution is asserted to be unique.
    """
    if n < 2:
        raise ConductorError("n must be >= 2")
    d = n * n - 1
    a0 = artin(kl_adjoint_zero(n))
    solutions = []
    for k in range(d + 1):
        if k % n:
            continue
        prof = SlopeProfile(d, 0, [(Fraction(1, n), k), (0, d - k)])
        if Fraction(a0 + artin(prof), 2) == d:
            solutions.append(prof)
    if len(solutions) != 1:
        raise ConductorError(f"expected a unique adjoint profile, found {len(solutions)}")
    return solutions[0]


def kloosterman_instance(n: int) -> CohRigidityInstance:
    return CohRigidityInstance(0, n * n - 1, 0, (kl_adjoint_zero(n), kl_adjoint_infinity(n)))

"""Exact character sums over prime fields.

Values of the additive character psi(x) = zeta^x live in Z[zeta_p], stored in
the power basis zeta^0, ..., zeta^{p-2}.  Multiplicative characters are never
evaluated: every condition needed here is a congruence on exponents with
respect to the smallest primitive root.

The 2x2 matrices over F_p[tau]/(tau^N) model the level groups at infinity of
the Kloosterman and Airy data, together with the additive maps used to build
their characters.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from sympy import isprime, primitive_root

__all__ = [
    "CharSumError",
    "WorkCapExceeded",
    "DEFAULT_WORK_CAP",
    "CycInt",
    "MultCharExponent",
    "TruncMat",
    "kloosterman",
    "kloosterman_via_moduli",
    "weil_check",
    "genericity_sl2",
    "central_char_condition",
    "kloosterman_projection",
    "airy_phi",
    "airy_readoff",
    "in_iplus",
    "in_airy_group",
    "WeilReport",
]

DEFAULT_WORK_CAP = 10**8


class CharSumError(ValueError):
    pass


class WorkCapExceeded(CharSumError):
    pass


def _check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise CharSumError(f"p must be an odd prime, got {p!r}")


class CycInt:
    """An element of Z[zeta_p] in canonical form.

    Arithmetic is exact; ``embed`` gives the complex value under
    zeta -> exp(2 pi i k / p).
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int]):
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) == p:
            # eliminate zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
            top = coeffs.pop()
            coeffs = [c - top for c in coeffs]
        if len(coeffs) != p - 1:
            raise CharSumError(f"expected {p - 1} or {p} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_exponent_counts(cls, p: int, counts: Sequence[int]) -> "CycInt":
        """sum_k counts[k] * zeta^k for k in 0..p-1."""
        return cls(p, counts)

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> "CycInt":
        counts = [0] * p
        counts[k % p] = 1
        return cls(p, counts)

    @classmethod
    def integer(cls, p: int, n: int) -> "CycInt":
        return cls(p, [n] + [0] * (p - 2))

    def _check(self, other: "CycInt") -> None:
        if not isinstance(other, CycInt):
            raise TypeError(f"cannot combine CycInt with {type(other).__name__}")
        if other.p != self.p:
            raise CharSumError(f"prime mismatch: {self.p} vs {other.p}")

    def _coerce(self, other):
        if isinstance(other, int):
            return CycInt.integer(self.p, other)
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return CycInt(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        p = self.p
        acc = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        acc[(i + j) % p] += a * b
        return CycInt(p, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise CharSumError("negative powers are not supported")
        out = CycInt.integer(self.p, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.integer(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def galois(self, t: int) -> "CycInt":
        """Image under the automorphism zeta -> zeta^t (t prime to p)."""
        if t % self.p == 0:
            raise CharSumError(f"{t} is not prime to {self.p}")
        counts = [0] * self.p
        for k, c in enumerate(self.coeffs):
            counts[(k * t) % self.p] += c
        return CycInt(self.p, counts)

    def embed(self, k: int = 1) -> complex:
        w = 2j * math.pi * k / self.p
        return sum((c * cmath.exp(w * i) for i, c in enumerate(self.coeffs) if c), 0j)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self):
        if not self.is_rational:
            raise CharSumError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def __str__(self):
        if self.is_rational:
            return str(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k and abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}" if k == 0 else f"{abs(c)}*{mono}"
            terms.append(("-" if c < 0 else "+", term))
        head_sign, head = terms[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, term in terms[1:]:
            s += f" {sign} {term}"
        return s

    def __repr__(self):
        return f"CycInt(p={self.p}, coeffs={list(self.coeffs)})"

    def to_json(self) -> dict:
        z = self.embed()
        return {
            "p": self.p,
            "coeffs": list(self.coeffs),
            "approx": [round(z.real, 6) + 0.0, round(z.imag, 6) + 0.0],
        }


def _check_work(amount: int, cap: int) -> None:
    if amount > cap:
        raise WorkCapExceeded(f"{amount} inner iterations exceed the work cap {cap}")


def kloosterman(n: int, p: int, a: int, *, cap: int = DEFAULT_WORK_CAP) -> CycInt:
    """Kl_n(p; a): the sum of psi(x_1 + ... + x_n) over x_1 ... x_n = a in F_p^x."""
    _check_odd_prime(p)
    if n < 1:
        raise CharSumError(f"n must be >= 1, got {n}")
    a %= p
    if a == 0:
        raise CharSumError("a must be a unit mod p")
    _check_work((p - 1) ** (n - 1), cap)
    inv = [0] + [pow(x, -1, p) for x in range(1, p)]
    counts = [0] * p
    units = range(1, p)
    for xs in itertools.product(units, repeat=n - 1):
        prod = 1
        s = 0
        for x in xs:
            prod = prod * x % p
            s += x
        last = a * inv[prod] % p
        counts[(s + last) % p] += 1
    return CycInt.from_exponent_counts(p, counts)


def kloosterman_via_moduli(n: int, p: int, a: int, *, cap: int = DEFAULT_WORK_CAP) -> CycInt:
    """The Frobenius-trace side of the Kloosterman identity.

    Runs over the whole family of companion-type matrices with parameters
    (a_0, ..., a_{n-1}) in (F_p^x)^n, keeps those whose determinant constant
    (-1)^n a_0 ... a_{n-1} equals ``a``, and sums psi(a_0 + ... + a_{n-1}).
    This equals ``kloosterman(n, p, (-1)^n a)``.
    """
    _check_odd_prime(p)
    if n < 1:
        raise CharSumError(f"n must be >= 1, got {n}")
    a %= p
    if a == 0:
        raise CharSumError("a must be a unit mod p")
    _check_work((p - 1) ** n, cap)
    sign = 1 if n % 2 == 0 else p - 1
    counts = [0] * p
    for params in itertools.product(range(1, p), repeat=n):
        if sign * math.prod(params) % p == a:
            counts[sum(params) % p] += 1
    return CycInt.from_exponent_counts(p, counts)


@dataclass(frozen=True)
class WeilReport:
    n: int
    p: int
    bound: float
    max_abs: float
    max_ratio: float
    passed: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "bound": round(self.bound, 6),
            "max_abs": round(self.max_abs, 6),
            "max_ratio": round(self.max_ratio, 6),
            "pass": self.passed,
        }


def weil_check(n: int, p: int, *, tol: float = 1e-6, cap: int = DEFAULT_WORK_CAP) -> WeilReport:
    """|Kl_n(p;a)| <= n p^{(n-1)/2} for every a and every complex embedding."""
    bound = n * p ** ((n - 1) / 2)
    worst = 0.0
    for a in range(1, p):
        s = kloosterman(n, p, a, cap=cap)
        for k in range(1, p):
            worst = max(worst, abs(s.embed(k)))
    return WeilReport(n, p, bound, worst, worst / bound, worst <= bound + tol)


@dataclass(frozen=True)
class MultCharExponent:
    """chi(g^k) = exp(2 pi i e k / (q - 1)) for g the smallest primitive root mod q."""

    q: int
    e: int

    def __post_init__(self):
        if not isprime(self.q):
            raise CharSumError(f"only prime fields are supported, got q={self.q}")
        object.__setattr__(self, "e", self.e % (self.q - 1))

    @property
    def generator(self) -> int:
        return int(primitive_root(self.q))

    @property
    def is_trivial(self) -> bool:
        return self.e == 0

    def value_exponent(self, x: int) -> int:
        """k/(q-1) such that chi(x) = exp(2 pi i k/(q-1)); returns k."""
        x %= self.q
        if x == 0:
            raise CharSumError("characters are evaluated on units only")
        g = self.generator
        k, y = 0, 1
        while y != x:
            y = y * g % self.q
            k += 1
        return self.e * k % (self.q - 1)


def _exponents(exponents: Iterable, q: int) -> list[int]:
    out = []
    for e in exponents:
        if isinstance(e, MultCharExponent):
            if e.q != q:
                raise CharSumError(f"exponent for q={e.q} mixed with q={q}")
            out.append(e.e)
        else:
            out.append(int(e) % (q - 1))
    return out


def genericity_sl2(exponents: Iterable, q: int) -> bool:
    """True iff every signed product of the characters is non-trivial."""
    if q % 2 == 0 or not isprime(q):
        raise CharSumError(f"q must be an odd prime, got {q}")
    es = _exponents(exponents, q)
    for signs in itertools.product((1, -1), repeat=len(es)):
        if sum(s * e for s, e in zip(signs, es)) % (q - 1) == 0:
            return False
    return True


def central_char_condition(exponents: Iterable, q: int) -> bool:
    """prod chi_x(-1) = 1; as -1 = g^{(q-1)/2}, this is the parity of the exponent sum."""
    if q % 2 == 0 or not isprime(q):
        raise CharSumError(f"q must be an odd prime, got {q}")
    es = _exponents(exponents, q)
    return sum(e * (q - 1) // 2 for e in es) % (q - 1) == 0


# ---------------------------------------------------------------------------
# truncated loop group


def _pmul(f, g, p, n):
    out = [0] * n
    for i, a in enumerate(f):
        if a:
            for j in range(n - i):
                out[i + j] = (out[i + j] + a * g[j]) % p
    return tuple(out)


def _padd(f, g, p):
    return tuple((a + b) % p for a, b in zip(f, g))


def _psub(f, g, p):
    return tuple((a - b) % p for a, b in zip(f, g))


def _pinv(f, p, n):
    """Inverse of a power series with unit constant term, mod tau^n."""
    c0 = pow(f[0], -1, p)
    out = [c0] + [0] * (n - 1)
    for k in range(1, n):
        out[k] = -c0 * sum(f[j] * out[k - j] for j in range(1, k + 1)) % p
    return tuple(out)


@dataclass(frozen=True)
class TruncMat:
    """[[a, b], [c, d]] with entries in F_p[tau]/(tau^N) and determinant 1."""

    p: int
    N: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self):
        if not isprime(self.p):
            raise CharSumError(f"p must be prime, got {self.p}")
        for name in "abcd":
            v = tuple(int(x) % self.p for x in getattr(self, name))
            if len(v) > self.N:
                raise CharSumError(f"entry {name} has degree >= N={self.N}")
            object.__setattr__(self, name, v + (0,) * (self.N - len(v)))
        det = _psub(_pmul(self.a, self.d, self.p, self.N), _pmul(self.b, self.c, self.p, self.N), self.p)
        if det != (1,) + (0,) * (self.N - 1):
            raise CharSumError(f"determinant {list(det)} is not 1 mod tau^{self.N}")

    @classmethod
    def identity(cls, p: int, N: int) -> "TruncMat":
        one = (1,) + (0,) * (N - 1)
        zero = (0,) * N
        return cls(p, N, one, zero, zero, one)

    @classmethod
    def solve_d(cls, p: int, N: int, a, b, c) -> "TruncMat":
        """Complete (a, b, c) with a(0) != 0 to a determinant-one matrix."""
        pad = lambda v: tuple(int(x) % p for x in v) + (0,) * (N - len(v))
        a, b, c = pad(a), pad(b), pad(c)
        one = (1,) + (0,) * (N - 1)
        d = _pmul(_padd(one, _pmul(b, c, p, N), p), _pinv(a, p, N), p, N)
        return cls(p, N, a, b, c, d)

    def __matmul__(self, other: "TruncMat") -> "TruncMat":
        if (self.p, self.N) != (other.p, other.N):
            raise CharSumError("matrices over different rings")
        p, n = self.p, self.N
        m = lambda f, g: _pmul(f, g, p, n)
        return TruncMat(
            p,
            n,
            _padd(m(self.a, other.a), m(self.b, other.c), p),
            _padd(m(self.a, other.b), m(self.b, other.d), p),
            _padd(m(self.c, other.a), m(self.d, other.c), p),
            _padd(m(self.c, other.b), m(self.d, other.d), p),
        )


def in_iplus(M: TruncMat) -> bool:
    """a, d = 1 mod tau and c = 0 mod tau: the pro-unipotent radical of the Iwahori."""
    return M.a[0] == 1 and M.d[0] == 1 and M.c[0] == 0


def in_airy_group(M: TruncMat) -> bool:
    """I^+ shape with additionally c = b(0) tau mod tau^2."""
    return in_iplus(M) and M.N >= 2 and M.c[1] == M.b[0]


def kloosterman_projection(M: TruncMat) -> tuple[int, int]:
    """(b mod tau, c/tau mod tau): the coordinates on U_{alpha_1} x U_{alpha_0}."""
    if M.N < 2:
        raise CharSumError("need N >= 2")
    if not in_iplus(M):
        raise CharSumError("matrix is not in I^+ (need a, d = 1 and c = 0 mod tau)")
    return M.b[0], M.c[1]


def airy_phi(M: TruncMat) -> int:
    """The additive character coordinate of the Airy level group.

    On the first congruence subgroup this is b_1 + c_2.  On the full group
    the naive read-off b_1 + c_2 picks up the cocycle b_0 b_0' (b_0 + b_0')
    under multiplication, so the cube b_0^3 / 3 is subtracted; the result is
    a homomorphism to F_p (p >= 5).
    """
    if M.N < 3:
        raise CharSumError("need N >= 3")
    if M.p < 5:
        raise CharSumError("the Airy character needs p >= 5")
    if not in_airy_group(M):
        raise CharSumError("matrix is not in the Airy subgroup (need c = b(0) tau mod tau^2)")
    p = M.p
    return (M.b[1] + M.c[2] - M.b[0] ** 3 * pow(3, -1, p)) % p


def airy_readoff(M: TruncMat) -> int:
    """The raw coordinate b_1 + c_2 (additive only where b_0 = 0)."""
    return (M.b[1] + M.c[2]) % M.p

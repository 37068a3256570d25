"""Residue systems, canonical reduction and CRT for quotients of Z[rho].

For a prime power gamma**n the complete residue system is one of four
explicit boxes (even prime to an even power, even prime to an odd power,
inert rational prime power, split prime power).  For an arbitrary nonzero
modulus eta the ideal (eta) is a sublattice of Z^2 in the {1, rho} basis;
its Hermite-form basis (d, 0), (e, f) gives a rectangular box of d*f =
N(eta) canonical representatives.  The two constructions agree on prime
powers, which the test suite checks exhaustively.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .core import (
    EInt,
    EisensteinError,
    ONE,
    ZERO,
    div_rem,
    ext_gcd,
    gcd,
)
from .primes import (
    Factorization,
    NotPrimeError,
    PrimeCategory,
    categorize_prime,
    factor,
)


class NonInvertibleError(EisensteinError):
    """The residue class has no multiplicative inverse."""


class NonCoprimeError(EisensteinError):
    """Moduli (or an element and a modulus) required to be coprime are not."""


@dataclass(frozen=True)
class BetaEven:
    """Even prime to the power 2m."""

    m: int


@dataclass(frozen=True)
class BetaOdd:
    """Even prime to the power 2m+1."""

    m: int


@dataclass(frozen=True)
class RationalPower:
    """Inert rational prime power p**n."""

    p: int
    n: int


@dataclass(frozen=True)
class SplitPower:
    """Split prime power psi**n with N(psi) = q."""

    psi: EInt
    q: int
    n: int


ResidueSystemKind = Union[BetaEven, BetaOdd, RationalPower, SplitPower]


def system_kind(gamma: EInt, n: int) -> ResidueSystemKind:
    """Classify the prime power gamma**n into its residue-system case."""
    if n < 1:
        raise ValueError(f"exponent must be positive, got {n}")
    category = categorize_prime(gamma)  # raises NotPrimeError if not prime
    if category is PrimeCategory.EVEN_PRIME:
        return BetaEven(n // 2) if n % 2 == 0 else BetaOdd(n // 2)
    if category is PrimeCategory.RATIONAL_INERT:
        return RationalPower(math.isqrt(gamma.norm()), n)
    return SplitPower(gamma, gamma.norm(), n)


def residue_system(gamma: EInt, n: int) -> Iterator[EInt]:
    """The complete residue system of Z[rho]/(gamma**n).

    Two-dimensional systems iterate in (b, a)-lexicographic order, the
    split case in ascending integer order.  The count is N(gamma**n).
    """
    kind = system_kind(gamma, n)
    if isinstance(kind, BetaEven):
        side = 3**kind.m
        for b in range(side):
            for a in range(side):
                yield EInt(a, b)
    elif isinstance(kind, BetaOdd):
        wide, tall = 3 ** (kind.m + 1), 3**kind.m
        for b in range(tall):
            for a in range(wide):
                yield EInt(a, b)
    elif isinstance(kind, RationalPower):
        side = kind.p**kind.n
        for b in range(side):
            for a in range(side):
                yield EInt(a, b)
    else:
        for a in range(kind.q**kind.n):
            yield EInt(a, 0)


def reduce(theta: EInt, gamma: EInt, n: int) -> EInt:
    """The unique representative of [theta] inside residue_system(gamma, n)."""
    kind = system_kind(gamma, n)
    if isinstance(kind, BetaEven):
        side = 3**kind.m
        return EInt(theta.a % side, theta.b % side)
    if isinstance(kind, BetaOdd):
        step = 3**kind.m
        wide = 3 * step
        a, b = theta.a % wide, theta.b % wide
        while b >= step:
            a = (a + step) % wide
            b -= step
        return EInt(a, b)
    if isinstance(kind, RationalPower):
        side = kind.p**kind.n
        return EInt(theta.a % side, theta.b % side)
    power = gamma**n  # x + y*rho with q not dividing y
    qn = kind.q**kind.n
    inv_y = pow(power.b % qn, -1, qn)
    c = (theta.a - theta.b * power.a * inv_y) % qn
    return EInt(c, 0)


def _int_ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class Modulus:
    """A nonzero modulus with cached factorization and reduction data.

    The quotient has exactly ``norm`` residue classes.  Reduction uses the
    Hermite basis (d, 0), (e, f) of the ideal lattice: representatives are
    the box 0 <= a < d, 0 <= b < f.  Immutable after construction.
    """

    __slots__ = ("eta", "norm", "factorization", "prime_powers", "_d", "_e", "_f")

    def __init__(self, eta: EInt) -> None:
        if eta.is_zero():
            raise ValueError("modulus must be nonzero")
        self.eta = eta
        self.norm = eta.norm()
        self.factorization: Factorization = factor(eta)
        self.prime_powers: tuple[tuple[EInt, int], ...] = self.factorization.factors
        a, b = eta.a, eta.b
        # The ideal lattice is spanned by eta = (a, b) and rho*eta = (-b, a-b);
        # f is the gcd of all attainable rho-coordinates.
        f, s, t = _int_ext_gcd(b, a - b)
        e = s * a + t * (-b)
        d = self.norm // f
        self._d, self._e, self._f = d, e % d, f

    def __repr__(self) -> str:
        return f"Modulus({self.eta!r})"

    def reduce(self, theta: EInt) -> EInt:
        """Canonical representative of [theta] in the Hermite box."""
        k, b = divmod(theta.b, self._f)
        return EInt((theta.a - k * self._e) % self._d, b)

    def residue_classes(self) -> Iterator[EInt]:
        """All canonical representatives, in (b, a)-lexicographic order."""
        for b in range(self._f):
            for a in range(self._d):
                yield EInt(a, b)

    def divides(self, x: EInt) -> bool:
        return div_rem(x, self.eta)[1].is_zero()


def classes_equal(x: EInt, y: EInt, modulus: Modulus) -> bool:
    """True iff the modulus divides x - y (exact division kernel)."""
    return div_rem(x - y, modulus.eta)[1].is_zero()


def is_unit_class(theta: EInt, gamma: EInt, n: int) -> bool:
    """Whether [theta] is invertible modulo gamma**n, by the per-case test."""
    kind = system_kind(gamma, n)
    if isinstance(kind, (BetaEven, BetaOdd)):
        return (theta.a + theta.b) % 3 != 0
    if isinstance(kind, RationalPower):
        return theta.a % kind.p != 0 or theta.b % kind.p != 0
    return reduce(theta, gamma, n).a % kind.q != 0


def unit_classes(modulus: Modulus) -> Iterator[EInt]:
    """Canonical representatives of the invertible classes.

    Prime-power moduli filter their residue system directly; composite
    moduli combine the per-prime-power unit classes through the CRT.  The
    count is the generalized totient of the modulus.
    """
    pps = modulus.prime_powers
    if not pps:  # unit modulus: the zero ring has a single (unit) class
        yield modulus.reduce(ONE)
        return
    per_power = [
        [r for r in residue_system(g, n) if is_unit_class(r, g, n)] for g, n in pps
    ]
    if len(pps) == 1:
        yield from per_power[0]
        return
    moduli = [g**n for g, n in pps]
    multipliers = []
    for i, m_i in enumerate(moduli):
        rest = ONE
        for j, m_j in enumerate(moduli):
            if j != i:
                rest = rest * m_j
        g, s, _ = ext_gcd(rest, m_i)
        assert g == ONE, "prime powers of one factorization must be coprime"
        multipliers.append(rest * s)
    for combo in itertools.product(*per_power):
        v = ZERO
        for r, e in zip(combo, multipliers):
            v = v + r * e
        yield modulus.reduce(v)


def inverse_mod(theta: EInt, modulus: Modulus) -> EInt:
    """Canonical representative of theta**-1 modulo the modulus."""
    g, s, _ = ext_gcd(theta, modulus.eta)
    if g != ONE:
        raise NonInvertibleError(
            f"{theta} is not invertible modulo {modulus.eta} (gcd {g})"
        )
    return modulus.reduce(s)


def pow_mod(theta: EInt, k: int, modulus: Modulus) -> EInt:
    """Canonical representative of theta**k (k >= 0) modulo the modulus."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    result = modulus.reduce(ONE)
    base = modulus.reduce(theta)
    while k:
        if k & 1:
            result = modulus.reduce(result * base)
        k >>= 1
        if k:
            base = modulus.reduce(base * base)
    return result


def crt_solve(congruences: Iterable[tuple[EInt, EInt]]) -> EInt:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli.

    Returns the canonical representative modulo the product of the moduli.
    """
    items = list(congruences)
    if not items:
        raise ValueError("need at least one congruence")
    acc_r, acc_m = items[0]
    if acc_m.is_zero():
        raise ValueError("moduli must be nonzero")
    acc_r = Modulus(acc_m).reduce(acc_r)
    for r, m in items[1:]:
        if m.is_zero():
            raise ValueError("moduli must be nonzero")
        g, s, t = ext_gcd(acc_m, m)
        if g != ONE:
            raise NonCoprimeError(f"moduli {acc_m} and {m} share the divisor {g}")
        # s*acc_m + t*m = 1, so t*m fixes the old residue and s*acc_m the new
        v = acc_r * t * m + r * s * acc_m
        acc_m = acc_m * m
        acc_r = Modulus(acc_m).reduce(v)
    return acc_r

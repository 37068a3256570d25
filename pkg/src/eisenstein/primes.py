"""Prime testing, categorization and unique factorization in Z[rho].

Up to associates every Eisenstein prime is one of three kinds: the even
prime 1-rho of norm 3, a rational prime p = 2 (mod 3) left inert, or one
member psi of a conjugate pair with N(psi) = q = 1 (mod 3).  Factorization
reports canonical-sector primes together with an explicit leading unit so
that recomposition is exact.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import (
    BETA,
    EInt,
    EisensteinError,
    Parity,
    Unit,
    canonical_associate,
    divides,
    exact_div,
    parity,
)

#: Trial-division cutoff; factoring beyond it fails loudly instead of stalling.
DEFAULT_TRIAL_BOUND = 10**6

#: Canonical-sector associate of the even prime 1-rho.
EVEN_PRIME = canonical_associate(BETA)[1]  # 2 + rho


class NotPrimeError(EisensteinError):
    """The argument was required to be an Eisenstein prime but is not."""


class CategoryError(EisensteinError):
    """The argument is prime but of the wrong category for the operation."""


class FactorBoundError(EisensteinError):
    """Trial division hit its bound before finishing a factorization."""


class PrimeCategory(enum.Enum):
    EVEN_PRIME = "even"
    RATIONAL_INERT = "inert"
    SPLIT_FACTOR = "split"


@dataclass(frozen=True)
class Factorization:
    """unit * product(prime**exponent), primes canonical and sorted.

    Primes are pairwise non-associate canonical-sector elements ordered by
    (norm, a, b); exponents are positive.  ``recompose`` rebuilds the exact
    original element.
    """

    unit: Unit
    factors: tuple[tuple[EInt, int], ...]

    def recompose(self) -> EInt:
        out = self.unit.to_eint()
        for prime, exponent in self.factors:
            out = out * prime**exponent
        return out


def norm_trial_factor(n: int, bound: int = DEFAULT_TRIAL_BOUND) -> list[tuple[int, int]]:
    """Factor a positive integer by ascending trial division.

    Raises FactorBoundError if a cofactor survives with no divisor <= bound
    and cannot be certified prime.
    """
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out: list[tuple[int, int]] = []
    d = 2
    while d * d <= n:
        if d > bound:
            raise FactorBoundError(
                f"cofactor {n} has no divisor <= {bound}; raise the bound"
            )
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_rational_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def is_prime(x: EInt) -> bool:
    """True iff x is a nonzero nonunit Eisenstein prime."""
    n = x.norm()
    if n <= 1:
        return False
    if n == 3:
        return True
    if n % 3 == 1 and is_rational_prime(n):
        return True
    p = math.isqrt(n)
    # Norm p^2 with p inert forces x to be an associate of p itself.
    return p * p == n and p % 3 == 2 and is_rational_prime(p)


def categorize_prime(x: EInt) -> PrimeCategory:
    if not is_prime(x):
        raise NotPrimeError(f"{x} is not an Eisenstein prime")
    n = x.norm()
    if n == 3:
        return PrimeCategory.EVEN_PRIME
    # A split factor has prime norm q = 1 (mod 3); an inert prime has norm p^2.
    if is_rational_prime(n):
        return PrimeCategory.SPLIT_FACTOR
    return PrimeCategory.RATIONAL_INERT


def split_rational_prime(q: int) -> tuple[EInt, EInt]:
    """Split a rational prime q = 1 (mod 3) as psi * conj(psi).

    Searches a ascending from 1 with 0 <= b <= a for a^2 - a*b + b^2 = q;
    the first hit is canonicalized.  Returns (psi, psi_bar), never
    associates of each other.
    """
    if not is_rational_prime(q) or q % 3 != 1:
        raise ValueError(f"{q} is not a rational prime congruent to 1 mod 3")
    limit = math.isqrt(4 * q // 3) + 1
    for a in range(1, limit + 1):
        for b in range(0, a + 1):
            if a * a - a * b + b * b == q:
                psi = canonical_associate(EInt(a, b))[1]
                psi_bar = canonical_associate(psi.conj())[1]
                return psi, psi_bar
    raise AssertionError(f"no norm-{q} element found below {limit}")


def factor(x: EInt, bound: int = DEFAULT_TRIAL_BOUND) -> Factorization:
    """Unique factorization of a nonzero x into canonical prime powers."""
    if x.is_zero():
        raise ValueError("cannot factor zero")
    factors: list[tuple[EInt, int]] = []
    y = x

    e = 0
    while parity(y) is Parity.EVEN:
        y = exact_div(y, EVEN_PRIME)
        e += 1
    if e:
        factors.append((EVEN_PRIME, e))

    content = math.gcd(y.a, y.b)
    if content > 1:
        for p, k in norm_trial_factor(content, bound):
            if p % 3 == 2:
                y = exact_div(y, EInt(p, 0) ** k)
                factors.append((EInt(p, 0), k))

    remaining = y.norm()
    if remaining > 1:
        for q, m in norm_trial_factor(remaining, bound):
            assert q % 3 == 1, f"unexpected residual prime {q}"
            psi, psi_bar = split_rational_prime(q)
            k1 = 0
            while k1 < m and divides(psi, y):
                y = exact_div(y, psi)
                k1 += 1
            k2 = m - k1
            if k2:
                y = exact_div(y, psi_bar**k2)
            if k1:
                factors.append((psi, k1))
            if k2:
                factors.append((psi_bar, k2))

    unit = Unit.from_eint(y)
    factors.sort(key=lambda f: (f[0].norm(), f[0].a, f[0].b))
    return Factorization(unit, tuple(factors))

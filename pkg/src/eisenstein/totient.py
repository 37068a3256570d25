"""The generalized Euler phi function on Z[rho].

phi of a nonzero eta is the number of invertible residue classes modulo
eta.  On prime powers it has closed forms (3**n - 3**(n-1) for the even
prime, p**(2n) - p**(2n-2) for an inert rational prime, q**n - q**(n-1)
for a split prime of norm q) and it is multiplicative, so a factorization
gives the general value.  phi is 1 exactly on units, 3 exactly on the
associates of 2, and even everywhere else.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import EInt, ONE, canonical_associate, canonical_elements, gcd
from .primes import PrimeCategory, categorize_prime, factor
from .residues import Modulus, NonCoprimeError, pow_mod


class PhiParity(enum.Enum):
    ONE = "one"
    THREE = "three"
    EVEN = "even"


@dataclass(frozen=True)
class PhiValue:
    """A totient value with its per-prime-power breakdown.

    ``breakdown`` holds (prime, exponent, contribution) triples in factor
    order; the product of the contributions is ``value``.
    """

    value: int
    breakdown: tuple[tuple[EInt, int, int], ...]

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class ScanResult:
    """Totient values attained on a norm range.

    ``attained`` maps each value to the canonical moduli producing it;
    ``missing_even`` lists the even values up to the largest attained one
    that never occur on the range.
    """

    max_norm: int
    attained: dict[int, list[EInt]]
    missing_even: list[int]


def phi_prime_power(gamma: EInt, n: int) -> int:
    """Closed-form count of unit classes modulo gamma**n."""
    if n < 1:
        raise ValueError(f"exponent must be positive, got {n}")
    category = categorize_prime(gamma)
    if category is PrimeCategory.EVEN_PRIME:
        return 3**n - 3 ** (n - 1)
    if category is PrimeCategory.RATIONAL_INERT:
        p = math.isqrt(gamma.norm())
        return p ** (2 * n) - p ** (2 * n - 2)
    q = gamma.norm()
    return q**n - q ** (n - 1)


def phi(eta: EInt) -> PhiValue:
    """The generalized totient of a nonzero eta, with breakdown."""
    if eta.is_zero():
        raise ValueError("phi is undefined at zero")
    breakdown = []
    value = 1
    for prime, exponent in factor(eta).factors:
        contribution = phi_prime_power(prime, exponent)
        breakdown.append((prime, exponent, contribution))
        value *= contribution
    return PhiValue(value, tuple(breakdown))


def euler_fermat_check(theta: EInt, eta: EInt) -> bool:
    """Whether theta**phi(eta) = 1 (mod eta); requires gcd(theta, eta) ~ 1."""
    if eta.is_zero():
        raise ValueError("modulus must be nonzero")
    if gcd(theta, eta) != ONE:
        raise NonCoprimeError(f"{theta} and {eta} are not coprime")
    modulus = Modulus(eta)
    return pow_mod(theta, phi(eta).value, modulus) == modulus.reduce(ONE)


def phi_parity(eta: EInt) -> PhiParity:
    """Where the totient value falls: 1 on units, 3 on associates of 2, else even."""
    if eta.is_zero():
        raise ValueError("phi is undefined at zero")
    if eta.is_unit():
        return PhiParity.ONE
    if canonical_associate(eta)[1] == EInt(2, 0):
        return PhiParity.THREE
    return PhiParity.EVEN


def totient_value_scan(max_norm: int) -> ScanResult:
    """Record every totient value attained by canonical moduli of norm <= max_norm.

    Each associate class is counted once (the totient is associate
    invariant).  Also reports the even values up to the largest attained
    one that are never hit on the range.
    """
    if max_norm < 1:
        raise ValueError(f"max_norm must be positive, got {max_norm}")
    attained: dict[int, list[EInt]] = {}
    for eta in canonical_elements(max_norm):
        attained.setdefault(phi(eta).value, []).append(eta)
    top = max(attained)
    missing = [v for v in range(2, top + 1, 2) if v not in attained]
    ordered = {v: attained[v] for v in sorted(attained)}
    return ScanResult(max_norm, ordered, missing)

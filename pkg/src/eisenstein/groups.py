"""Structure of the unit groups of quotients of Z[rho].

Element orders come from testing divisors of the group order; the
invariant-factor decomposition is recovered by matching the multiset of
element orders against the candidate abelian groups of that order, which
determines it uniquely.  Split prime powers give cyclic groups isomorphic
to the integers-mod-q**n unit group, a fact checked rather than assumed.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import reduce as _fold

from .core import EInt, EisensteinError, ONE, gcd
from .primes import CategoryError, PrimeCategory, categorize_prime, norm_trial_factor
from .residues import Modulus, NonInvertibleError, pow_mod, unit_classes
from .totient import phi

#: Moduli with norm above this enumerate too many classes to be useful.
DEFAULT_ENUMERATION_BOUND = 10_000


class EnumerationBoundError(EisensteinError):
    """The modulus norm exceeds the configured enumeration bound."""


@dataclass(frozen=True)
class GroupStructure:
    """Invariant-factor form d_1 | d_2 | ... | d_k of a finite abelian group."""

    order: int
    invariant_factors: tuple[int, ...]
    cyclic: bool

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "invariant_factors": list(self.invariant_factors),
            "cyclic": self.cyclic,
        }


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in norm_trial_factor(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _euler_phi_int(n: int) -> int:
    value = n
    for p, _ in norm_trial_factor(n):
        value -= value // p
    return value


def _partitions(n: int) -> list[tuple[int, ...]]:
    """All descending partitions of n."""
    if n == 0:
        return [()]
    out = []

    def extend(remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, cap), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(n, n, ())
    return out


def _abelian_types(order: int) -> list[tuple[int, ...]]:
    """Invariant-factor chains (ascending) of every abelian group of this order."""
    if order == 1:
        return [()]
    prime_partitions = [
        [(p, parts) for parts in _partitions(e)] for p, e in norm_trial_factor(order)
    ]
    types = []
    for combo in _product(prime_partitions):
        width = max(len(parts) for _, parts in combo)
        descending = []
        for i in range(width):
            d = 1
            for p, parts in combo:
                if i < len(parts):
                    d *= p ** parts[i]
            descending.append(d)
        types.append(tuple(reversed(descending)))
    return types


def _product(pools: list[list]) -> list[tuple]:
    out = [()]
    for pool in pools:
        out = [prefix + (item,) for prefix in out for item in pool]
    return out


def _order_multiset(invariant_factors: tuple[int, ...]) -> Counter:
    """Element-order multiset of the direct product of cyclic groups."""
    counts = Counter({1: 1})
    for d in invariant_factors:
        cyclic = {t: _euler_phi_int(t) for t in _divisors(d)}
        merged: Counter = Counter()
        for o1, c1 in counts.items():
            for o2, c2 in cyclic.items():
                merged[math.lcm(o1, o2)] += c1 * c2
        counts = merged
    return counts


def _order_in(modulus: Modulus, theta: EInt, group_order: int, one: EInt) -> int:
    for d in _divisors(group_order):
        if pow_mod(theta, d, modulus) == one:
            return d
    raise AssertionError(f"no order found for {theta} modulo {modulus.eta}")


def element_order(theta: EInt, eta: EInt) -> int:
    """Least n >= 1 with theta**n = 1 (mod eta); theta must be a unit class."""
    if eta.is_zero():
        raise ValueError("modulus must be nonzero")
    if gcd(theta, eta) != ONE:
        raise NonInvertibleError(f"{theta} is not a unit class modulo {eta}")
    modulus = Modulus(eta)
    return _order_in(modulus, theta, phi(eta).value, modulus.reduce(ONE))


def group_structure(eta: EInt, bound: int = DEFAULT_ENUMERATION_BOUND) -> GroupStructure:
    """Invariant-factor decomposition of the unit group modulo eta."""
    if eta.is_zero():
        raise ValueError("modulus must be nonzero")
    if eta.norm() > bound:
        raise EnumerationBoundError(
            f"norm {eta.norm()} exceeds the enumeration bound {bound}"
        )
    modulus = Modulus(eta)
    order = phi(eta).value
    one = modulus.reduce(ONE)
    observed = Counter(
        _order_in(modulus, u, order, one) for u in unit_classes(modulus)
    )
    assert sum(observed.values()) == order
    if order == 1:
        return GroupStructure(1, (), True)
    exponent = _fold(math.lcm, observed.keys(), 1)
    if exponent == order:
        return GroupStructure(order, (order,), True)
    matches = [
        t
        for t in _abelian_types(order)
        if t[-1] == exponent and _order_multiset(t) == observed
    ]
    assert len(matches) == 1, f"order multiset matched {len(matches)} candidates"
    return GroupStructure(order, matches[0], len(matches[0]) <= 1)


def primitive_roots(eta: EInt, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[EInt]:
    """All unit classes of maximal order; empty iff the group is not cyclic."""
    if eta.is_zero():
        raise ValueError("modulus must be nonzero")
    if eta.norm() > bound:
        raise EnumerationBoundError(
            f"norm {eta.norm()} exceeds the enumeration bound {bound}"
        )
    modulus = Modulus(eta)
    order = phi(eta).value
    one = modulus.reduce(ONE)
    return [
        u
        for u in unit_classes(modulus)
        if _order_in(modulus, u, order, one) == order
    ]


def split_power_cyclicity_check(psi: EInt, n: int) -> bool:
    """Whether the unit group modulo psi**n is cyclic of order q**n - q**(n-1)."""
    if categorize_prime(psi) is not PrimeCategory.SPLIT_FACTOR:
        raise CategoryError(f"{psi} is not a split prime")
    if n < 1:
        raise ValueError(f"exponent must be positive, got {n}")
    q = psi.norm()
    structure = group_structure(psi**n)
    return structure.cyclic and structure.order == q**n - q ** (n - 1)


def coprime_parts_check(psi: EInt, n: int) -> bool:
    """Whether psi**n = c + d*rho has gcd(c, d) = 1 in the integers."""
    if categorize_prime(psi) is not PrimeCategory.SPLIT_FACTOR:
        raise CategoryError(f"{psi} is not a split prime")
    if n < 1:
        raise ValueError(f"exponent must be positive, got {n}")
    power = psi**n
    return math.gcd(power.a, power.b) == 1

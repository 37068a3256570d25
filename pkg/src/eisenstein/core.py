"""Exact arithmetic in the Eisenstein integer ring Z[rho].

rho = e^(2*pi*i/3) is a primitive cube root of unity, so rho**2 = -1 - rho
and every element is a + b*rho with integer coordinates a (real part) and
b (rho part).  Coordinates are Python ints, hence arbitrary precision; no
overflow is possible.  Every value here is immutable and every operation is
a pure function, so everything is safe to share between threads.
"""

from __future__ import annotations

import enum
from math import isqrt
from typing import Iterator, Union


class EisensteinError(Exception):
    """Base class for the domain errors raised by this package."""


class ParseError(EisensteinError, ValueError):
    """Malformed Eisenstein literal; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (position {position})")
        self.position = position


class Parity(enum.Enum):
    """Coset of the even prime 1-rho: the residue of a+b mod 3."""

    EVEN = 0
    ODD1 = 1
    ODD2 = 2

    def __str__(self) -> str:
        return {0: "Even", 1: "Odd1", 2: "Odd2"}[self.value]


class EInt:
    """An Eisenstein integer a + b*rho with exact integer coordinates."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        self.a = int(a)
        self.b = int(b)

    def __repr__(self) -> str:
        return f"EInt({self.a}, {self.b})"

    def __str__(self) -> str:
        return format(self)

    @staticmethod
    def _coerce(other: Union["EInt", int]) -> "EInt | None":
        if isinstance(other, EInt):
            return other
        if isinstance(other, int):
            return EInt(other, 0)
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)  # type: ignore[arg-type]
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __add__(self, other: Union["EInt", int]) -> "EInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: Union["EInt", int]) -> "EInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: Union["EInt", int]) -> "EInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EInt(o.a - self.a, o.b - self.b)

    def __neg__(self) -> "EInt":
        return EInt(-self.a, -self.b)

    def __mul__(self, other: Union["EInt", int]) -> "EInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, o.a, o.b
        # (a+b*rho)(c+d*rho) = (ac-bd) + (ad+bc-bd)*rho  since rho^2 = -1-rho
        return EInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "EInt":
        if exponent < 0:
            raise ValueError("negative exponents are not supported")
        result = EInt(1, 0)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def conj(self) -> "EInt":
        """Complex conjugate: a + b*rho^2 = (a-b) - b*rho."""
        return EInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        """The multiplicative norm a^2 - a*b + b^2 >= 0."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_unit(self) -> bool:
        return self.norm() == 1


ZERO = EInt(0, 0)
ONE = EInt(1, 0)
RHO = EInt(0, 1)
#: The conventional even prime 1 - rho (norm 3).
BETA = EInt(1, -1)


class Unit(enum.Enum):
    """The six units, indexed by their exponent as a power of -rho^2.

    -rho^2 = 1 + rho generates the unit group, a cyclic group of order 6:
    its successive powers are 1, 1+rho, rho, -1, -1-rho, -rho.
    """

    ONE = 0
    MINUS_RHO_SQUARED = 1
    RHO = 2
    MINUS_ONE = 3
    RHO_SQUARED = 4
    MINUS_RHO = 5

    def to_eint(self) -> EInt:
        return UNIT_EINTS[self.value]

    @classmethod
    def from_eint(cls, x: EInt) -> "Unit":
        for k, u in enumerate(UNIT_EINTS):
            if x == u:
                return cls(k)
        raise ValueError(f"{x!r} is not a unit")

    def __mul__(self, other: "Unit") -> "Unit":
        return Unit((self.value + other.value) % 6)

    def inverse(self) -> "Unit":
        return Unit(-self.value % 6)

    def __str__(self) -> str:
        return format(self.to_eint())


#: Powers of -rho^2 in order: 1, 1+rho, rho, -1, -1-rho, -rho.
UNIT_EINTS: tuple[EInt, ...] = (
    EInt(1, 0),
    EInt(1, 1),
    EInt(0, 1),
    EInt(-1, 0),
    EInt(-1, -1),
    EInt(0, -1),
)


def parity(x: EInt) -> Parity:
    """Classify x as Even / Odd1 / Odd2 by the residue of a+b mod 3."""
    return Parity((x.a + x.b) % 3)


def associates(x: EInt) -> list[EInt]:
    """The six unit multiples of x, in the fixed unit order."""
    return [x * u for u in UNIT_EINTS]


def is_associate(x: EInt, y: EInt) -> bool:
    return any(y == c for c in associates(x))


def canonical_associate(x: EInt) -> tuple[Unit, EInt]:
    """Split x as (u, c) with x = u*c and c in the canonical sector.

    The canonical sector is b >= 0 and a > b, the half-open 60-degree wedge
    containing the positive real axis; exactly one associate of a nonzero x
    lies in it.  canonical_associate(0) = (Unit.ONE, 0).
    """
    if x.is_zero():
        return Unit.ONE, ZERO
    for k, u in enumerate(UNIT_EINTS):
        c = x * u
        if c.b >= 0 and c.a > c.b:
            return Unit(-k % 6), c
    raise AssertionError(f"no canonical associate found for {x!r}")


def _round_half_even(num: int, den: int) -> int:
    """Round num/den (den > 0) to the nearest integer, ties to even."""
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q % 2 == 1):
        return q + 1
    return q


def div_rem(x: EInt, d: EInt) -> tuple[EInt, EInt]:
    """Euclidean division x = q*d + r with 4*N(r) <= 3*N(d).

    The quotient is x/d computed exactly in the {1, rho} basis and rounded
    to the nearest integer per coordinate, ties to even.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero Eisenstein integer")
    n = x * d.conj()
    nd = d.norm()
    q = EInt(_round_half_even(n.a, nd), _round_half_even(n.b, nd))
    return q, x - q * d


def divides(d: EInt, x: EInt) -> bool:
    """True iff d != 0 divides x exactly."""
    return div_rem(x, d)[1].is_zero()


def exact_div(x: EInt, d: EInt) -> EInt:
    q, r = div_rem(x, d)
    if not r.is_zero():
        raise ValueError(f"{d} does not divide {x} exactly")
    return q


def gcd(x: EInt, y: EInt) -> EInt:
    """Greatest common divisor, normalized to the canonical sector.

    Unit-valued gcds come out as 1 and gcd(0, 0) = 0.
    """
    while not y.is_zero():
        x, y = y, div_rem(x, y)[1]
    return canonical_associate(x)[1]


def ext_gcd(x: EInt, y: EInt) -> tuple[EInt, EInt, EInt]:
    """Extended Euclid: returns (g, s, t) with g = gcd(x, y) = s*x + t*y."""
    r0, r1 = x, y
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while not r1.is_zero():
        q, r = div_rem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    u, g = canonical_associate(r0)
    w = u.inverse().to_eint()
    return g, s0 * w, t0 * w


def parse(text: str) -> EInt:
    """Parse an Eisenstein literal such as ``48-72p``, ``p``, ``-5``.

    Grammar: one or more signed terms, each either an integer or an
    optional integer followed by ``p`` (denoting rho).  No spaces.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty literal", 0)
    a = b = 0
    i = 0
    first = True
    while i < len(s):
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-', got {s[i]!r}", i)
        start = i
        while i < len(s) and "0" <= s[i] <= "9":
            i += 1
        digits = s[start:i]
        if i < len(s) and s[i] == "p":
            b += sign * (int(digits) if digits else 1)
            i += 1
        elif digits:
            a += sign * int(digits)
        else:
            got = repr(s[i]) if i < len(s) else "end of input"
            raise ParseError(f"expected digits or 'p', got {got}", i)
        first = False
    return EInt(a, b)


def format(x: EInt) -> str:
    """Canonical literal: ``a``, ``bp`` or ``a+bp``/``a-bp``, no spaces."""
    a, b = x.a, x.b
    if b == 0:
        return str(a)
    rho_part = "p" if abs(b) == 1 else f"{abs(b)}p"
    if a == 0:
        return ("-" if b < 0 else "") + rho_part
    return f"{a}{'+' if b > 0 else '-'}{rho_part}"


def canonical_elements(max_norm: int) -> list[EInt]:
    """All nonzero canonical-sector elements with norm <= max_norm.

    Sorted by (norm, a, b); one representative per associate class.
    """
    if max_norm < 1:
        return []
    out = []
    bound = isqrt(4 * max_norm // 3) + 1
    for a in range(1, bound + 1):
        for b in range(0, a):
            if a * a - a * b + b * b <= max_norm:
                out.append(EInt(a, b))
    out.sort(key=lambda x: (x.norm(), x.a, x.b))
    return out


def lattice_points(max_norm: int) -> list[EInt]:
    """All lattice points with norm <= max_norm, sorted by (b, a)."""
    if max_norm < 0:
        return []
    bound = isqrt(4 * max_norm // 3) + 1
    out = []
    for b in range(-bound, bound + 1):
        for a in range(-bound, bound + 1):
            if a * a - a * b + b * b <= max_norm:
                out.append(EInt(a, b))
    return out

"""Static SVG plots of the Eisenstein lattice.

Three figures: the bare triangular lattice, a parity-colored map (circles
for Even, squares for Odd1, triangles for Odd2) and a prime map coloring
each prime by category with one norm circle per attained prime norm.
Rendering is pure text generation; identical specs produce byte-identical
documents.  The only irrational constant used is sqrt(3)/2, the height of
a unit lattice triangle.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Mapping, Optional

from .core import EInt, Parity, associates, lattice_points, parity
from .primes import (
    PrimeCategory,
    categorize_prime,
    is_prime,
    is_rational_prime,
)

SQRT3_2 = math.sqrt(3.0) / 2.0

DEFAULT_COLORS: Mapping[str, str] = {
    "lattice": "#606060",
    "even": "orange",
    "odd1": "purple",
    "odd2": "olive",
    "prime-even": "orange",
    "prime-inert": "purple",
    "prime-split": "olive",
}

_PARITY_KEYS = {Parity.EVEN: "even", Parity.ODD1: "odd1", Parity.ODD2: "odd2"}
_CATEGORY_KEYS = {
    PrimeCategory.EVEN_PRIME: "prime-even",
    PrimeCategory.RATIONAL_INERT: "prime-inert",
    PrimeCategory.SPLIT_FACTOR: "prime-split",
}
_RING_DASH = {"prime-even": "none", "prime-inert": "8,5", "prime-split": "2,4"}


class PlotKind(enum.Enum):
    LATTICE = "lattice"
    PARITY = "parity"
    PRIMES = "primes"


@dataclass(frozen=True)
class PlotSpec:
    kind: PlotKind
    max_norm: int
    width: int = 640
    height: int = 640
    colors: Optional[Mapping[str, str]] = None

    def palette(self) -> dict[str, str]:
        merged = dict(DEFAULT_COLORS)
        if self.colors:
            merged.update(self.colors)
        return merged


def parity_points(max_norm: int) -> list[tuple[EInt, Parity]]:
    """Every lattice point of norm <= max_norm with its parity, (b, a)-sorted."""
    return [(x, parity(x)) for x in lattice_points(max_norm)]


def prime_points(max_norm: int) -> list[tuple[EInt, PrimeCategory]]:
    """Every prime in the plotted window with its category, (b, a)-sorted.

    The window holds all primes of norm <= max_norm plus the inert rational
    primes out to the lattice boundary of the drawn disc (their norm p**2
    may slightly exceed max_norm, matching how the prime family is usually
    pictured).
    """
    marked = {x: categorize_prime(x) for x in lattice_points(max_norm) if is_prime(x)}
    for p in range(2, math.isqrt(max_norm) + 2):
        if p % 3 == 2 and is_rational_prime(p) and p * p > max_norm:
            for x in associates(EInt(p, 0)):
                marked[x] = PrimeCategory.RATIONAL_INERT
    return sorted(marked.items(), key=lambda item: (item[0].b, item[0].a))


def _xy(x: EInt, scale: float, cx: float, cy: float) -> tuple[float, float]:
    px = x.a - x.b / 2.0
    py = x.b * SQRT3_2
    return cx + scale * px, cy - scale * py


def _fmt(v: float) -> str:
    return f"{v + 0.0:.3f}"  # +0.0 normalizes -0.0


def _marker(key: str, x: float, y: float, color: str) -> str:
    if key.startswith("odd1") or key == "prime-inert":
        side = 7.0
        return (
            f'<rect x="{_fmt(x - side / 2)}" y="{_fmt(y - side / 2)}" '
            f'width="{_fmt(side)}" height="{_fmt(side)}" fill="{color}"/>'
        )
    if key.startswith("odd2") or key == "prime-split":
        pts = [(x, y - 4.5), (x - 4.0, y + 3.0), (x + 4.0, y + 3.0)]
        joined = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in pts)
        return f'<polygon points="{joined}" fill="{color}"/>'
    return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.5" fill="{color}"/>'


def render_svg(spec: PlotSpec) -> str:
    """Render the figure described by the spec as an SVG 1.1 document."""
    if spec.max_norm < 1:
        raise ValueError(f"max_norm must be positive, got {spec.max_norm}")
    if spec.width <= 0 or spec.height <= 0:
        raise ValueError("width and height must be positive")
    palette = spec.palette()

    if spec.kind is PlotKind.PARITY:
        content = [(x, _PARITY_KEYS[p]) for x, p in parity_points(spec.max_norm)]
    elif spec.kind is PlotKind.PRIMES:
        content = [(x, _CATEGORY_KEYS[c]) for x, c in prime_points(spec.max_norm)]
    else:
        content = [(x, "lattice") for x in lattice_points(spec.max_norm)]

    reach = max(max(x.norm() for x, _ in content), 1)
    scale = (min(spec.width, spec.height) / 2.0 - 12.0) / math.sqrt(reach)
    cx, cy = spec.width / 2.0, spec.height / 2.0

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>',
    ]
    if spec.kind is PlotKind.PRIMES:
        rings: dict[int, str] = {}
        for x, key in content:
            rings.setdefault(x.norm(), key)
        for n in sorted(rings):
            key = rings[n]
            lines.append(
                f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                f'r="{_fmt(scale * math.sqrt(n))}" fill="none" '
                f'stroke="{palette[key]}" stroke-width="1.2" '
                f'stroke-dasharray="{_RING_DASH[key]}"/>'
            )
    for x, key in content:
        px, py = _xy(x, scale, cx, cy)
        lines.append(_marker(key, px, py, palette[key]))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

"""Exact arithmetic and multiplicative structure for the Eisenstein integers.

The ring Z[rho], rho a primitive cube root of unity, is a Euclidean domain
whose quotients have finite unit groups.  This package provides the exact
ring arithmetic, prime factorization, complete residue systems, the
generalized Euler phi function with its Euler-Fermat property, unit-group
structure analysis, and deterministic SVG lattice figures, all on plain
Python integers.
"""

from .core import (
    BETA,
    EInt,
    EisensteinError,
    ONE,
    ParseError,
    Parity,
    RHO,
    UNIT_EINTS,
    Unit,
    ZERO,
    associates,
    canonical_associate,
    canonical_elements,
    div_rem,
    divides,
    exact_div,
    ext_gcd,
    format,
    gcd,
    is_associate,
    lattice_points,
    parity,
    parse,
)
from .groups import (
    DEFAULT_ENUMERATION_BOUND,
    EnumerationBoundError,
    GroupStructure,
    coprime_parts_check,
    element_order,
    group_structure,
    primitive_roots,
    split_power_cyclicity_check,
)
from .primes import (
    EVEN_PRIME,
    CategoryError,
    Factorization,
    FactorBoundError,
    NotPrimeError,
    PrimeCategory,
    categorize_prime,
    factor,
    is_prime,
    is_rational_prime,
    norm_trial_factor,
    split_rational_prime,
)
from .render import PlotKind, PlotSpec, parity_points, prime_points, render_svg
from .residues import (
    BetaEven,
    BetaOdd,
    Modulus,
    NonCoprimeError,
    NonInvertibleError,
    RationalPower,
    ResidueSystemKind,
    SplitPower,
    classes_equal,
    crt_solve,
    inverse_mod,
    is_unit_class,
    pow_mod,
    reduce,
    residue_system,
    system_kind,
    unit_classes,
)
from .totient import (
    PhiParity,
    PhiValue,
    ScanResult,
    euler_fermat_check,
    phi,
    phi_parity,
    phi_prime_power,
    totient_value_scan,
)

__version__ = "0.1.0"

__all__ = [
    "BETA",
    "BetaEven",
    "BetaOdd",
    "CategoryError",
    "DEFAULT_ENUMERATION_BOUND",
    "EInt",
    "EVEN_PRIME",
    "EisensteinError",
    "EnumerationBoundError",
    "FactorBoundError",
    "Factorization",
    "GroupStructure",
    "Modulus",
    "NonCoprimeError",
    "NonInvertibleError",
    "NotPrimeError",
    "ONE",
    "ParseError",
    "Parity",
    "PhiParity",
    "PhiValue",
    "PlotKind",
    "PlotSpec",
    "PrimeCategory",
    "RHO",
    "RationalPower",
    "ResidueSystemKind",
    "ScanResult",
    "SplitPower",
    "UNIT_EINTS",
    "Unit",
    "ZERO",
    "associates",
    "canonical_associate",
    "canonical_elements",
    "categorize_prime",
    "classes_equal",
    "coprime_parts_check",
    "crt_solve",
    "div_rem",
    "divides",
    "element_order",
    "euler_fermat_check",
    "exact_div",
    "ext_gcd",
    "factor",
    "format",
    "gcd",
    "group_structure",
    "inverse_mod",
    "is_associate",
    "is_prime",
    "is_rational_prime",
    "is_unit_class",
    "lattice_points",
    "norm_trial_factor",
    "parity",
    "parity_points",
    "parse",
    "phi",
    "phi_parity",
    "phi_prime_power",
    "pow_mod",
    "prime_points",
    "primitive_roots",
    "reduce",
    "render_svg",
    "residue_system",
    "split_power_cyclicity_check",
    "split_rational_prime",
    "system_kind",
    "totient_value_scan",
    "unit_classes",
]

"""Command-line front end: one subcommand per library operation.

Exit codes: 0 on success, 1 on domain errors (non-invertible class, zero
modulus, ...), 2 on usage errors including malformed literals.  ``--json``
switches any subcommand to JSON output.  Literals with a leading minus
must be quoted (``"0-6p"``) or passed via ``--lit=-6p``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

from . import __version__
from .core import (
    BETA,
    EInt,
    EisensteinError,
    ParseError,
    Unit,
    div_rem,
    ext_gcd,
    format,
    gcd,
    parity,
    parse,
)
from .groups import (
    coprime_parts_check,
    element_order,
    group_structure,
    primitive_roots,
    split_power_cyclicity_check,
)
from .primes import EVEN_PRIME, Factorization, factor, is_prime, split_rational_prime
from .render import PlotKind, PlotSpec, render_svg
from .residues import Modulus, inverse_mod, pow_mod, residue_system, unit_classes
from .residues import crt_solve as _crt_solve  # noqa: F401  (library surface)
from .totient import euler_fermat_check, phi, totient_value_scan


class _UsageError(Exception):
    pass


def _operands(args: argparse.Namespace) -> list[str]:
    return list(args.operands) + list(args.lit or [])


def _lits(args: argparse.Namespace, count: int) -> list[EInt]:
    raw = _operands(args)
    if len(raw) != count:
        plural = "s" if count != 1 else ""
        raise _UsageError(f"expected {count} literal{plural}, got {len(raw)}")
    return [parse(text) for text in raw]


def _lit_and_int(args: argparse.Namespace) -> tuple[EInt, int]:
    raw = _operands(args)
    if len(raw) != 2:
        raise _UsageError(f"expected a literal and an integer, got {len(raw)} operands")
    try:
        n = int(raw[1])
    except ValueError:
        raise _UsageError(f"expected an integer, got {raw[1]!r}") from None
    return parse(raw[0]), n


def _mod(args: argparse.Namespace) -> Modulus:
    return Modulus(parse(args.mod))


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def _token(x: EInt) -> str:
    text = format(x)
    return text if text.isdigit() else f"({text})"


def _factorization_views(fact: Factorization, style: str) -> tuple[str, dict]:
    unit, factors = fact.unit, list(fact.factors)
    if style == "beta":
        adjusted = []
        for prime, e in factors:
            if prime == EVEN_PRIME:
                # 2+p = (1+p)(1-p); migrate the unit so recomposition is exact
                unit = Unit((unit.value + e) % 6)
                prime = BETA
            adjusted.append((prime, e))
        factors = adjusted
    parts = []
    if unit is not Unit.ONE or not factors:
        parts.append(_token(unit.to_eint()))
    for prime, e in factors:
        parts.append(_token(prime) if e == 1 else f"{_token(prime)}^{e}")
    data = {
        "unit": format(unit.to_eint()),
        "factors": [[format(prime), e] for prime, e in factors],
    }
    return " * ".join(parts), data


def _cmd_add(args):
    x, y = _lits(args, 2)
    r = x + y
    return format(r), {"result": format(r)}


def _cmd_mul(args):
    x, y = _lits(args, 2)
    r = x * y
    return format(r), {"result": format(r)}


def _cmd_conj(args):
    (x,) = _lits(args, 1)
    r = x.conj()
    return format(r), {"result": format(r)}


def _cmd_norm(args):
    (x,) = _lits(args, 1)
    return str(x.norm()), {"result": x.norm()}


def _cmd_parity(args):
    (x,) = _lits(args, 1)
    return str(parity(x)), {"result": str(parity(x))}


def _cmd_divrem(args):
    x, d = _lits(args, 2)
    q, r = div_rem(x, d)
    return f"{format(q)} {format(r)}", {"q": format(q), "r": format(r)}


def _cmd_gcd(args):
    x, y = _lits(args, 2)
    g = gcd(x, y)
    return format(g), {"result": format(g)}


def _cmd_extgcd(args):
    x, y = _lits(args, 2)
    g, s, t = ext_gcd(x, y)
    return (
        f"{format(g)} {format(s)} {format(t)}",
        {"g": format(g), "s": format(s), "t": format(t)},
    )


def _cmd_factor(args):
    (x,) = _lits(args, 1)
    return _factorization_views(factor(x), args.unit_style)


def _cmd_is_prime(args):
    (x,) = _lits(args, 1)
    result = is_prime(x)
    return _bool_text(result), {"result": result}


def _cmd_split_prime(args):
    try:
        q = int(args.q)
    except ValueError:
        raise _UsageError(f"expected an integer, got {args.q!r}") from None
    psi, psi_bar = split_rational_prime(q)
    text = f"{format(psi)} {parity(psi)}\n{format(psi_bar)} {parity(psi_bar)}"
    return text, {
        "q": q,
        "psi": format(psi),
        "psi_parity": str(parity(psi)),
        "psi_bar": format(psi_bar),
        "psi_bar_parity": str(parity(psi_bar)),
    }


def _cmd_residues(args):
    gamma, n = _lit_and_int(args)
    classes = [format(r) for r in residue_system(gamma, n)]
    return "\n".join(classes), classes


def _cmd_reduce(args):
    (theta,) = _lits(args, 1)
    r = _mod(args).reduce(theta)
    return format(r), {"result": format(r)}


def _cmd_units(args):
    (eta,) = _lits(args, 1)
    classes = [format(u) for u in unit_classes(Modulus(eta))]
    return "\n".join(classes), classes


def _cmd_inverse(args):
    (theta,) = _lits(args, 1)
    r = inverse_mod(theta, _mod(args))
    return format(r), {"result": format(r)}


def _cmd_powmod(args):
    theta, k = _lit_and_int(args)
    if k < 0:
        raise _UsageError("exponent must be nonnegative")
    r = pow_mod(theta, k, _mod(args))
    return format(r), {"result": format(r)}


def _cmd_phi(args):
    (eta,) = _lits(args, 1)
    value = phi(eta)
    return str(value.value), {
        "value": value.value,
        "breakdown": [[format(p), e, c] for p, e, c in value.breakdown],
    }


def _cmd_euler_fermat(args):
    (theta,) = _lits(args, 1)
    result = euler_fermat_check(theta, parse(args.mod))
    return _bool_text(result), {"result": result}


def _cmd_order(args):
    (theta,) = _lits(args, 1)
    n = element_order(theta, parse(args.mod))
    return str(n), {"result": n}


def _cmd_group(args):
    (eta,) = _lits(args, 1)
    structure = group_structure(eta, bound=args.bound)
    if structure.order == 1:
        text = "Z_1"
    else:
        text = " x ".join(f"Z_{d}" for d in structure.invariant_factors)
    return text, structure.to_json_dict()


def _cmd_primitive_roots(args):
    (eta,) = _lits(args, 1)
    roots = [format(r) for r in primitive_roots(eta, bound=args.bound)]
    return "\n".join(roots), roots


def _cmd_cyclicity(args):
    psi, n = _lit_and_int(args)
    result = split_power_cyclicity_check(psi, n)
    return _bool_text(result), {"result": result}


def _cmd_coprime_parts(args):
    psi, n = _lit_and_int(args)
    result = coprime_parts_check(psi, n)
    return _bool_text(result), {"result": result}


def _cmd_scan_phi(args):
    scan = totient_value_scan(args.max_norm)
    data = {
        "attained": {
            str(value): [format(e) for e in etas]
            for value, etas in scan.attained.items()
        },
        "missing_even": scan.missing_even,
    }
    return json.dumps(data, separators=(",", ":")), data


_PLOT_KINDS = {"parity": PlotKind.PARITY, "primes": PlotKind.PRIMES,
               "lattice": PlotKind.LATTICE}


def _cmd_plot(args):
    spec = PlotSpec(
        kind=_PLOT_KINDS[args.kind],
        max_norm=args.max_norm,
        width=args.width,
        height=args.height,
    )
    document = render_svg(spec)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(document)
    return args.out, {"out": args.out, "bytes": len(document.encode())}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisen",
        description="Exact Eisenstein-integer arithmetic, residue systems, "
        "the generalized totient, unit-group structure and lattice plots.",
    )
    parser.add_argument("--version", action="version", version=f"eisen {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON output")
    common.add_argument(
        "--lit",
        action="append",
        metavar="LITERAL",
        help="extra operand literal; use --lit=-6p for leading minus",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def register(
        name: str,
        handler: Callable,
        help_text: str,
        operands: str | None = "*",
        mod: bool = False,
        bound: bool = False,
    ) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        if operands:
            p.add_argument("operands", nargs=operands, metavar="OPERAND")
        if mod:
            p.add_argument("--mod", required=True, metavar="ETA", help="modulus literal")
        if bound:
            p.add_argument(
                "--bound", type=int, default=10_000,
                help="largest modulus norm to enumerate (default 10000)",
            )
        p.set_defaults(handler=handler)
        return p

    register("add", _cmd_add, "add two Eisenstein integers")
    register("mul", _cmd_mul, "multiply two Eisenstein integers")
    register("conj", _cmd_conj, "complex conjugate")
    register("norm", _cmd_norm, "multiplicative norm")
    register("parity", _cmd_parity, "Even / Odd1 / Odd2 classification")
    register("divrem", _cmd_divrem, "Euclidean quotient and remainder")
    register("gcd", _cmd_gcd, "greatest common divisor (canonical)")
    register("extgcd", _cmd_extgcd, "extended gcd with Bezout certificate")
    fact = register("factor", _cmd_factor, "unique factorization into prime powers")
    fact.add_argument(
        "--unit-style",
        choices=("canonical", "beta"),
        default="canonical",
        help="render the even prime as canonical 2+p or as 1-p",
    )
    register("is-prime", _cmd_is_prime, "Eisenstein primality test")
    split = sub.add_parser(
        "split-prime", parents=[common], help="split a rational prime q = 1 (mod 3)"
    )
    split.add_argument("q", metavar="Q")
    split.set_defaults(handler=_cmd_split_prime)
    register("residues", _cmd_residues, "complete residue system of a prime power")
    register("reduce", _cmd_reduce, "canonical representative modulo --mod", mod=True)
    register("units", _cmd_units, "unit classes of a modulus")
    register("inverse", _cmd_inverse, "modular inverse modulo --mod", mod=True)
    register("powmod", _cmd_powmod, "modular power modulo --mod", mod=True)
    register("phi", _cmd_phi, "generalized Euler phi")
    register(
        "euler-fermat", _cmd_euler_fermat,
        "check theta**phi(eta) = 1 modulo --mod", mod=True,
    )
    register("order", _cmd_order, "multiplicative order modulo --mod", mod=True)
    register("group", _cmd_group, "invariant factors of the unit group", bound=True)
    register(
        "primitive-roots", _cmd_primitive_roots,
        "unit classes of maximal order", bound=True,
    )
    register("cyclicity", _cmd_cyclicity, "cyclic split-power unit group check")
    register("coprime-parts", _cmd_coprime_parts, "gcd of the parts of psi**n")
    scan = sub.add_parser(
        "scan-phi", parents=[common], help="attained totient values on a norm range"
    )
    scan.add_argument("--max-norm", type=int, required=True)
    scan.set_defaults(handler=_cmd_scan_phi)
    plot = sub.add_parser("plot", parents=[common], help="write an SVG lattice figure")
    plot.add_argument("--kind", choices=sorted(_PLOT_KINDS), required=True)
    plot.add_argument("--max-norm", type=int, required=True)
    plot.add_argument("--out", required=True, metavar="FILE")
    plot.add_argument("--width", type=int, default=640)
    plot.add_argument("--height", type=int, default=640)
    plot.set_defaults(handler=_cmd_plot)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, data = args.handler(args)
    except (_UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (EisensteinError, ZeroDivisionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(data, separators=(",", ":")))
    else:
        print(text)
    return 0


def main() -> None:
    sys.exit(run())

"""Command-line front end with machine-readable output.

Every subcommand emits a single OutputDocument: JSON (default for piping),
CSV, or an aligned pretty table. Rationals are serialized as decimal-string
pairs {"num": ..., "den": ...} so exactness survives any JSON consumer.
Exit codes: 0 success / all checks passed, 1 verification failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import carries, eulerian, spectral, uniformsum
from .exactmath import ExactMatrix, char_poly
from .numeration import NumerationSystem
from .simulate import SimConfig, run_chain

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


def parse_rational(text: str) -> Fraction:
    """Parse 'K' or 'K/L' into an exact rational; floats are rejected."""
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(
            f"expected an integer or fraction like 5/3, got {text!r}") from exc


def parse_digit_set(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}") from exc


def rat_json(x: Fraction) -> dict[str, str]:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rat_text(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _jsonify(value):
    """Recursively convert Fractions (and matrices) for JSON emission."""
    if isinstance(value, Fraction):
        return rat_json(value)
    if isinstance(value, ExactMatrix):
        return [[rat_json(x) for x in row] for row in value.to_lists()]
    if isinstance(value, dict):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    return value


def render(doc: dict, fmt: str, stream) -> None:
    if fmt == "json":
        json.dump(_jsonify(doc), stream, indent=2)
        stream.write("\n")
        return
    payload = doc["payload"]
    if fmt == "csv":
        _render_csv(doc["command"], payload, stream)
    else:
        _render_pretty(doc["command"], payload, stream)


def _cell(value) -> str:
    if isinstance(value, Fraction):
        return rat_text(value)
    if isinstance(value, bool):
        return "pass" if value else "FAIL"
    return str(value)


def _render_csv(command: str, payload: dict, stream) -> None:
    import csv

    writer = csv.writer(stream, lineterminator="\n")
    for key, value in payload.items():
        if isinstance(value, ExactMatrix):
            value = value.to_lists()
        if (isinstance(value, list) and value
                and isinstance(value[0], (list, tuple))):
            writer.writerow([key])
            for row in value:
                writer.writerow([_cell(x) for x in row])
        elif isinstance(value, (list, tuple)):
            writer.writerow([key, *[_cell(x) for x in value]])
        elif isinstance(value, dict):
            writer.writerow([key, *[f"{k}={_cell(v)}" for k, v in value.items()]])
        else:
            writer.writerow([key, _cell(value)])


def _render_pretty(command: str, payload: dict, stream) -> None:
    stream.write(f"{command}\n")
    for key, value in payload.items():
        if isinstance(value, ExactMatrix):
            value = value.to_lists()
        if (isinstance(value, list) and value
                and isinstance(value[0], (list, tuple))):
            stream.write(f"{key}:\n")
            cells = [[_cell(x) for x in row] for row in value]
            widths = [max(len(row[j]) for row in cells if j < len(row))
                      for j in range(max(len(r) for r in cells))]
            for row in cells:
                stream.write("  " + "  ".join(
                    cell.rjust(widths[j]) for j, cell in enumerate(row)) + "\n")
        elif isinstance(value, (list, tuple)):
            stream.write(f"{key}: " + " ".join(_cell(x) for x in value) + "\n")
        elif isinstance(value, dict):
            stream.write(f"{key}:\n")
            for k, v in value.items():
                stream.write(f"  {k}: {_cell(v)}\n")
        else:
            stream.write(f"{key}: {_cell(value)}\n")


def _document(command: str, inputs: dict, payload: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "payload": payload,
    }


def _system_from_args(args) -> NumerationSystem:
    return NumerationSystem(base_magnitude=args.base, d=args.d,
                            negative=args.negative)


def cmd_triangle(args) -> tuple[dict, int]:
    rows = eulerian.triangle_recurrence(args.n_max, args.p)
    payload = {
        "p": args.p,
        "n_max": args.n_max,
        "rows": rows,
        "row_sums": [sum(row, Fraction(0)) for row in rows],
    }
    inputs = {"p": rat_text(args.p), "n_max": args.n_max}
    return _document("triangle", inputs, payload), EXIT_OK


def cmd_matrix(args) -> tuple[dict, int]:
    signed_base = -args.base if args.negative else args.base
    if args.digits is not None:
        states, P = carries.transition_matrix_bruteforce(
            signed_base, args.digits, args.n)
        p = None
        digits = sorted(args.digits)
    else:
        if args.d is None:
            raise ValueError("--d is required unless --digits is given")
        sys_ = _system_from_args(args)
        spec = carries.ChainSpec(sys_, args.n)
        states = carries.state_space(spec).states
        P = carries.transition_matrix(spec)
        p = carries.p_param(spec)
        digits = sys_.digits
    payload = {
        "base": signed_base,
        "digits": digits,
        "n": args.n,
        "states": states,
        "p": p,
        "matrix": P,
    }
    if args.char_poly:
        payload["char_poly_ascending"] = char_poly(P).coefficients
    inputs = {
        "base": args.base, "d": args.d, "n": args.n,
        "negative": args.negative,
        "digits": args.digits,
    }
    return _document("matrix", inputs, payload), EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    spec = carries.ChainSpec(_system_from_args(args), args.n)
    report = spectral.verify_diagonalization(spec)
    payload = {
        "base": spec.system.base,
        "d": args.d,
        "n": args.n,
        "states": report.states,
        "p": report.p,
        "spectrum": report.spectrum,
        "stationary": report.pi,
        "matrix": report.P,
        "eigen_matrix": report.V,
        "verdicts": {name: res.passed
                     for name, res in report.verdicts.items()},
        "diffs": {name: res.detail
                  for name, res in report.verdicts.items() if not res.passed},
        "verified": report.verified,
    }
    inputs = {"base": args.base, "d": args.d, "n": args.n,
              "negative": args.negative}
    code = EXIT_OK if report.verified else EXIT_VERIFICATION_FAILED
    return _document("verify", inputs, payload), code


def cmd_find_system(args) -> tuple[dict, int]:
    sys_ = carries.find_system(args.n, args.p)
    spec = carries.ChainSpec(sys_, args.n)
    payload = {
        "n": args.n,
        "p": args.p,
        "base": sys_.base,
        "d": sys_.d,
        "verified_p": carries.p_param(spec),
    }
    inputs = {"p": rat_text(args.p), "n": args.n}
    return _document("find-system", inputs, payload), EXIT_OK


def cmd_simulate(args) -> tuple[dict, int]:
    spec = carries.ChainSpec(_system_from_args(args), args.n)
    cfg = SimConfig(spec=spec, steps=args.steps, seed=args.seed,
                    burn_in=args.burn_in)
    exact = spectral.chain_stationary(spec)
    result = run_chain(cfg, exact=exact)
    payload = {
        "base": spec.system.base,
        "d": args.d,
        "n": args.n,
        "steps": args.steps,
        "seed": args.seed,
        "burn_in": args.burn_in,
        "generator": result.generator,
        "counts": {str(k): v for k, v in result.counts.items()},
        "empirical": {str(k): repr(v) for k, v in result.empirical.items()},
        "exact_stationary": exact,
        "tv_distance": repr(result.tv_distance),
    }
    inputs = {"base": args.base, "d": args.d, "n": args.n,
              "negative": args.negative, "steps": args.steps,
              "seed": args.seed, "burn_in": args.burn_in}
    return _document("simulate", inputs, payload), EXIT_OK


def cmd_uniform_sum(args) -> tuple[dict, int]:
    probs = [uniformsum.interval_prob(args.n, args.p, k)
             for k in range(args.n + 1)]
    total = Fraction(args.p) ** args.n * math.factorial(args.n)
    row = [eulerian.v_closed(args.n, args.p, 0, j) / total
           for j in range(args.n + 1)]
    payload = {
        "n": args.n,
        "p": args.p,
        "interval_probs": probs,
        "scaled_eulerian_row": row,
        "match": probs == row,
    }
    inputs = {"p": rat_text(args.p), "n": args.n}
    code = EXIT_OK if probs == row else EXIT_VERIFICATION_FAILED
    return _document("uniform-sum", inputs, payload), code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carrychain",
        description="Exact analysis of carry Markov chains and generalized "
                    "Eulerian triangles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("pretty", "csv", "json"),
                       default="json")

    def add_system(p, need_d=True):
        p.add_argument("--base", type=int, required=True,
                       help="base magnitude (>= 2)")
        p.add_argument("--d", type=int, required=need_d, default=None,
                       help="least digit (digit set {d, ..., d+base-1})")
        p.add_argument("--n", type=int, required=True,
                       help="number of summands")
        p.add_argument("--negative", action="store_true",
                       help="use base -B instead of B")

    p = sub.add_parser("triangle", help="generalized Eulerian triangle rows")
    p.add_argument("--p", type=parse_rational, required=True)
    p.add_argument("--n-max", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("matrix", help="exact transition matrix")
    add_system(p, need_d=False)
    p.add_argument("--digits", type=parse_digit_set, default=None,
                   help="explicit digit set (switches to the brute-force "
                        "path; spectral predictions do not apply)")
    p.add_argument("--char-poly", action="store_true",
                   help="include the characteristic polynomial")
    add_format(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="exact diagonalization checks")
    add_system(p)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("find-system",
                       help="positive-base system realizing a given p")
    p.add_argument("--p", type=parse_rational, required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_find_system)

    p = sub.add_parser("simulate", help="seeded Monte Carlo run")
    add_system(p)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--burn-in", type=int, default=1000)
    add_format(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("uniform-sum",
                       help="interval probabilities of sums of uniforms")
    p.add_argument("--p", type=parse_rational, required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_uniform_sum)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    render(doc, args.format, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())

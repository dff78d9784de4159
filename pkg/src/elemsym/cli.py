"""Command-line interface.

``java-compat`` reproduces, byte for byte, the stdin/stdout protocol of
the legacy Java table builder this library grew out of, including its
wrapping 64-bit arithmetic and its 0-based internal table addressing.
The remaining subcommands expose the library operations directly.

Exit codes: 0 success, 1 property/verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass

from elemsym import esp, symalg
from elemsym.polyzero import Poly1
from elemsym.properties import MAX_VERIFY_N, VerifyConfig, run_all
from elemsym.scalar import DEFAULT_TOLERANCE, parse_complex

PROMPT_COUNT = "Enter number of generating variables: "
PROMPT_VALUES = "Enter the values of the n generators as a white space separating list: "
PROMPT_QUERY = "Enter the values of n and k for the desired iteration: "

_INT_TOKEN = re.compile(r"[+-]?\d+$")
_I32_MIN, _I32_MAX = -(1 << 31), (1 << 31) - 1


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    mode: str = "exact"
    output: str = "text"
    tolerance: float = DEFAULT_TOLERANCE


def cmd_java_compat(args, stdin, stdout) -> int:
    """Replay the legacy prompt/read/print protocol on wrap64 arithmetic.

    Inputs are read as 32-bit integers into 64-bit storage; the value
    reported for a query (N, K) is the K-th symmetric value of the first
    N inputs.  Prompt text, blank-line placement and the result line are
    byte-identical to the original program.
    """
    cfg = CliConfig(mode="wrap64", output="text")
    tokens = iter(stdin.read().split())

    def next_i32():
        try:
            tok = next(tokens)
        except StopIteration:
            raise UsageError("input ended before all values were read") from None
        if not _INT_TOKEN.match(tok):
            raise UsageError(f"not an integer token: {tok!r}")
        v = int(tok)
        if not _I32_MIN <= v <= _I32_MAX:
            raise UsageError(f"integer token out of 32-bit range: {tok}")
        return v

    stdout.write(PROMPT_COUNT)
    n = next_i32()
    stdout.write("\n")
    stdout.write(PROMPT_VALUES)
    if n < 0:
        raise UsageError(f"negative generator count: {n}")
    pairs = [(next_i32(), next_i32()) for _ in range(n)]
    stdout.write("\n")
    if n == 0:
        raise UsageError("generator count must be at least 1")
    table = esp.build_table(esp.Assignment.from_pairs(pairs, mode=cfg.mode))
    stdout.write(PROMPT_QUERY)
    row = next_i32()
    col = next_i32()
    stdout.write("\n")
    # The original indexes its table 0-based and does not range-check;
    # out-of-range queries crash there and are usage errors here.
    if not 1 <= row <= n:
        raise UsageError(f"row {row} out of range 1..{n}")
    if not 1 <= col <= row:
        raise UsageError(f"column {col} out of range 1..{row}")
    value = table.query(row, col)
    stdout.write(f"epsilon[{row}][{col}] = ({value.re},{value.im})\n")
    return 0


def _parse_values(tokens, mode):
    values = []
    for tok in tokens:
        try:
            values.append(parse_complex(tok, mode))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return values


def cmd_eps(args, stdin, stdout) -> int:
    cfg = CliConfig(mode=args.mode, output="json" if args.json else "text")
    values = _parse_values(args.values, cfg.mode)
    table = esp.build_table(esp.Assignment(values))
    if cfg.output == "json":
        stdout.write(table.to_json_str() + "\n")
    else:
        for i in range(1, table.n + 1):
            entries = " ".join(str(v) for v in table.row(i))
            stdout.write(f"e[{i}]: {entries}\n")
    return 0


def _write_poly(p: Poly1, as_json: bool, stdout) -> None:
    if as_json:
        stdout.write(p.to_json_str() + "\n")
    else:
        stdout.write("coeffs: " + " ".join(str(c) for c in p.coeffs) + "\n")
        stdout.write("poly: " + p.pretty() + "\n")


def cmd_from_roots(args, stdin, stdout) -> int:
    roots = _parse_values(args.roots, args.mode)
    _write_poly(Poly1.from_roots(roots, mode=args.mode), args.json, stdout)
    return 0


def _split_commas(text):
    """Split on commas that are not inside a "(re,im)" literal."""
    parts, depth, start = [], 0, 0
    for idx, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:idx])
            start = idx + 1
    parts.append(text[start:])
    return [p for p in (s.strip() for s in parts) if p]


def cmd_insert_zero(args, stdin, stdout) -> int:
    coeffs = _parse_values(_split_commas(args.coeffs), args.mode)
    if not coeffs:
        raise UsageError("--coeffs needs at least one coefficient")
    p = Poly1(coeffs)
    if args.mul_linear:
        if args.x is None:
            raise UsageError("--mul-linear needs --x")
        result = p.mul_linear(_parse_values([args.x], args.mode)[0])
    else:
        if args.lam is None:
            raise UsageError("give --lambda, or --mul-linear with --x")
        if args.x is not None:
            raise UsageError("--x only applies with --mul-linear")
        result = p.insert_zero(_parse_values([args.lam], args.mode)[0])
    _write_poly(result, args.json, stdout)
    return 0


def cmd_verify(args, stdin, stdout) -> int:
    if args.max_n > MAX_VERIFY_N:
        raise UsageError(f"--max-n is capped at {MAX_VERIFY_N} (direct oracle cost)")
    if args.max_n < 1 or args.trials < 1:
        raise UsageError("--max-n and --trials must be positive")
    cfg = VerifyConfig(
        max_n=args.max_n, trials=args.trials, seed=args.seed, tolerance=args.tolerance
    )
    ok = run_all(cfg, emit=lambda line: stdout.write(line + "\n"))
    return 0 if ok else 1


def _parse_gp(text, n):
    try:
        return symalg.parse_genpoly(text, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_shift_u(args, stdin, stdout) -> int:
    stdout.write(str(symalg.shift_U(_parse_gp(args.expr, args.n))) + "\n")
    return 0


def cmd_alpha(args, stdin, stdout) -> int:
    try:
        gp = symalg.alpha_gen(args.k, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    stdout.write(str(gp) + "\n")
    return 0


def cmd_phi(args, stdin, stdout) -> int:
    stdout.write(str(symalg.phi(_parse_gp(args.expr, args.n))) + "\n")
    return 0


def _add_mode(sub):
    sub.add_argument(
        "--mode", choices=("exact", "wrap64", "float"), default="exact",
        help="arithmetic mode (default: exact)",
    )
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elemsym",
        description="Exact toolkit for elementary symmetric polynomial computation.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser(
        "java-compat",
        help="bit-exact replay of the legacy Java table builder (wrap64, stdin/stdout)",
    )
    sub.set_defaults(func=cmd_java_compat)

    sub = subs.add_parser("eps", help="build the full symmetric-value table")
    sub.add_argument("values", nargs="+", help='complex literals: a, bi, a+bi, "(a,b)"')
    _add_mode(sub)
    sub.set_defaults(func=cmd_eps)

    sub = subs.add_parser("from-roots", help="monic polynomial with the given zeroes")
    sub.add_argument("roots", nargs="*", help="complex literals")
    _add_mode(sub)
    sub.set_defaults(func=cmd_from_roots)

    sub = subs.add_parser("insert-zero", help="append a zero (or a factor z + x)")
    sub.add_argument("--coeffs", required=True, help="comma-separated coefficients, leading first")
    sub.add_argument("--lambda", dest="lam", default=None, help="zero to insert")
    sub.add_argument("--x", default=None, help="x for the (z + x) convention")
    sub.add_argument(
        "--mul-linear", action="store_true", help="multiply by (z + x) instead of (z - lambda)"
    )
    _add_mode(sub)
    sub.set_defaults(func=cmd_insert_zero)

    sub = subs.add_parser("verify", help="run the randomized property suites")
    sub.add_argument("--max-n", type=int, default=6, help="largest variable count (<= 12)")
    sub.add_argument("--trials", type=int, default=50, help="trials per property")
    sub.add_argument("--seed", type=int, default=1, help="RNG seed")
    sub.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                     help="float-mode comparison bound")
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("shift-u", help="apply the index shift to a generator polynomial")
    sub.add_argument("expr", help='generator polynomial, e.g. "e2*e3 + 5"')
    sub.add_argument("--n", type=int, default=None, help="ambient generator count")
    sub.set_defaults(func=cmd_shift_u)

    sub = subs.add_parser("alpha", help="image of a generator under one-variable extension")
    sub.add_argument("k", type=int, help="generator index")
    sub.add_argument("n", type=int, help="ambient generator count")
    sub.set_defaults(func=cmd_alpha)

    sub = subs.add_parser("phi", help="extend a generator polynomial by one variable")
    sub.add_argument("expr", help="generator polynomial")
    sub.add_argument("--n", type=int, default=None, help="ambient generator count")
    sub.set_defaults(func=cmd_phi)

    return parser


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, stdin, stdout)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Structured data travels as JSON on stdin/stdout so that commands pipe into
each other::

    twistgab code new --q 3 --n 4 --k 2 --r 3 --eta random-valid --seed 7 > spec.json
    echo '[[1,0,0,0],[0,1,0,0]]' | twistgab encode --spec spec.json \\
        | twistgab corrupt --spec spec.json --rank 1 --seed 42 \\
        | twistgab decode --spec spec.json

Exit codes: 0 success, 1 usage or parse error, 2 decode failure, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time

from . import __version__
from .exceptions import NotMRDError, SizeError
from .gf import ExtensionField
from .oracle import OracleBudget, oracle_min_distance, oracle_nearest
from .rank_metric import add_words, random_error, rank_distance
from .twisted import TwistedCode, load_code, norm_obstruction

PRNG_NAME = "MT19937 (Python random.Random seeded with a 64-bit unsigned integer)"
DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"

EXIT_OK, EXIT_USAGE, EXIT_DECODE_FAILURE, EXIT_BUDGET = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        lines = text.splitlines()
        context = lines[exc.lineno - 1] if 0 < exc.lineno <= len(lines) else ""
        raise CliError(
            f"parse error in {what} at line {exc.lineno}, column {exc.colno}: {exc.msg}\n  {context}"
        ) from None


def _read_spec(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read spec: {exc}") from None
    data = _parse_json(text, path)
    if not isinstance(data, dict):
        raise CliError(f"{path}: code spec must be a JSON object")
    try:
        return load_code(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"{path}: invalid code spec: {exc}") from None


def _read_vector(source, field, length: int | None, what: str):
    text = source.read().strip()
    if not text:
        raise CliError(f"empty {what} on input")
    try:
        if text.startswith("["):
            data = _parse_json(text, what)
            vec = [field.element(x) for x in data]
        else:
            vec = _unhex(text, field)
    except (TypeError, ValueError) as exc:
        raise CliError(f"invalid {what}: {exc}") from None
    if length is not None and len(vec) != length:
        raise CliError(f"{what} has {len(vec)} entries, expected {length}")
    return vec


def _unhex(text: str, field: ExtensionField):
    n = field.n
    if len(text) % n:
        raise ValueError(f"packed length {len(text)} is not a multiple of n={n}")
    digits = [DIGITS.index(ch) if ch in DIGITS else -1 for ch in text.lower()]
    if any(not 0 <= d < field.q for d in digits):
        raise ValueError(f"packed string contains a digit outside base {field.q}")
    return [field.element(digits[i : i + n]) for i in range(0, len(digits), n)]


def _emit(vec, hex_out: bool):
    if hex_out:
        if vec and vec[0].field.q > len(DIGITS):
            raise CliError(f"--hex supports q <= {len(DIGITS)}")
        print("".join(DIGITS[c] for x in vec for c in x.coeffs))
    else:
        print(json.dumps([x.to_list() for x in vec], separators=(",", ":")))


# -- subcommands --------------------------------------------------------------


def cmd_code_new(args) -> int:
    field = ExtensionField(args.q, args.n, args.modulus)
    rng = random.Random(args.seed)
    bad = norm_obstruction(field, args.k)
    if args.eta == "zero":
        eta = field.zero
    elif args.eta == "explicit":
        if args.eta_value is None:
            raise CliError("--eta explicit requires --eta-value")
        eta = field.element(args.eta_value)
    else:
        if field.q == 2:
            raise CliError(
                "no valid nonzero eta over F_2: the norm of every nonzero element of "
                f"F_2^{field.n} is 1 = (-1)^(nk), so the twisted code would not be MRD; use --eta zero"
            )
        while True:
            eta = field.random_element(rng)
            if eta and int(eta.norm()) != bad:
                break
    try:
        code = TwistedCode(field, args.k, eta, args.r)
    except NotMRDError as exc:
        raise CliError(str(exc)) from None
    spec = code.to_json()
    if args.seed is not None:
        spec["seed"] = args.seed
    print(json.dumps(spec, separators=(",", ":")))
    return EXIT_OK


def cmd_encode(args) -> int:
    code = _read_spec(args.spec)
    msg = _read_vector(args.input, code.field, code.k, "message")
    _emit(code.encode(msg), args.hex)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    code = _read_spec(args.spec)
    word = _read_vector(args.input, code.field, code.n, "word")
    error = random_error(code.field, args.rank, random.Random(args.seed))
    _emit(add_words(word, error), args.hex)
    return EXIT_OK


def cmd_decode(args) -> int:
    code = _read_spec(args.spec)
    word = _read_vector(args.input, code.field, code.n, "word")
    msg = code.decode(word)
    if msg is None:
        radius = (code.n - code.k) // 2
        print(f"decode failure: no codeword within rank distance {radius}", file=sys.stderr)
        return EXIT_DECODE_FAILURE
    _emit(msg, args.hex)
    return EXIT_OK


def cmd_oracle(args) -> int:
    code = _read_spec(args.spec)
    word = _read_vector(args.input, code.field, code.n, "word")
    result = oracle_nearest(code, word, OracleBudget(max_codewords=args.max_codewords))
    _emit(result.message, args.hex)
    print(json.dumps({"distance": result.distance, "unique": result.unique}), file=sys.stderr)
    return EXIT_OK


def cmd_verify_mrd(args) -> int:
    code = _read_spec(args.spec)
    d = oracle_min_distance(code, OracleBudget(max_codewords=args.max_codewords))
    bound = code.n - code.k + 1
    if d == bound:
        print(f"min distance {d} = n-k+1: MRD confirmed")
        return EXIT_OK
    print(f"min distance {d} < n-k+1 = {bound}: not MRD")
    return EXIT_USAGE


def cmd_bench(args) -> int:
    for path in args.spec:
        code = _read_spec(path)
        rng = random.Random(args.seed)
        t = (code.n - code.k) // 2 if args.rank is None else args.rank
        times = []
        failures = 0
        for _ in range(args.trials):
            msg = [code.field.random_element(rng) for _ in range(code.k)]
            word = add_words(code.encode(msg), random_error(code.field, t, rng))
            start = time.perf_counter()
            out = code.decode(word)
            times.append(time.perf_counter() - start)
            failures += out != msg
        report = {
            "q": code.field.q,
            "n": code.n,
            "k": code.k,
            "error_rank": t,
            "trials": args.trials,
            "failures": failures,
            "median_decode_seconds": round(statistics.median(times), 6),
        }
        print(json.dumps(report))
    return EXIT_OK


def cmd_selftest(args) -> int:
    checks = []

    f9 = ExtensionField(3, 2)
    b = f9.gen
    checks.append(("F_9 arithmetic", b * b == f9(2) and b.frobenius(1) == 2 * b and b.norm() == f9.one))

    field = ExtensionField(3, 4)
    eta = next(x for x in field.elements() if x and int(x.norm()) == 2)
    code = TwistedCode(field, 2, eta, 3)
    checks.append(("MRD q=3 n=4 k=2 r=3", oracle_min_distance(code) == 3))

    rng = random.Random(args.seed)
    ok = True
    for _ in range(20):
        msg = [field.random_element(rng) for _ in range(2)]
        word = add_words(code.encode(msg), random_error(field, 1, rng))
        out = code.decode(word)
        ok &= out == msg and rank_distance(code.encode(out), word) == 1
    checks.append(("twisted decode round trip (20 trials)", ok))

    for name, passed in checks:
        print(f"{'PASS' if passed else 'FAIL'} {name}")
    return EXIT_OK if all(p for _, p in checks) else EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twistgab", description="Twisted Gabidulin rank-metric codes")
    parser.add_argument("--version", action="version", version=f"twistgab {__version__}; PRNG {PRNG_NAME}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    code = sub.add_parser("code", help="code construction")
    code_sub = code.add_subparsers(dest="code_command", required=True, parser_class=_Parser)
    new = code_sub.add_parser("new", help="emit a validated code spec")
    new.add_argument("--q", type=int, required=True)
    new.add_argument("--n", type=int, required=True)
    new.add_argument("--k", type=int, required=True)
    new.add_argument("--r", type=int, default=0)
    new.add_argument("--eta", choices=["zero", "random-valid", "explicit"], default="zero")
    new.add_argument("--eta-value", type=json.loads, help="JSON digit list for --eta explicit")
    new.add_argument("--modulus", type=json.loads, help="JSON coefficient list, low degree first")
    new.add_argument("--seed", type=_seed)
    new.set_defaults(func=cmd_code_new)

    def io_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--spec", required=True, help="code spec JSON file")
        p.add_argument("--input", type=argparse.FileType("r"), default=sys.stdin, help="defaults to stdin")
        p.add_argument("--hex", action="store_true", help="write packed base-q digit strings")
        p.set_defaults(func=func)
        return p

    io_command("encode", cmd_encode, "encode a message read from input")
    corrupt = io_command("corrupt", cmd_corrupt, "add a random error of given rank")
    corrupt.add_argument("--rank", type=int, required=True)
    corrupt.add_argument("--seed", type=_seed, default=0)
    io_command("decode", cmd_decode, "decode a received word")
    oracle = io_command("oracle-decode", cmd_oracle, "exhaustive nearest-codeword decoding")
    oracle.add_argument("--max-codewords", type=int, default=OracleBudget().max_codewords)

    verify = sub.add_parser("verify-mrd", help="exhaustive minimum-distance check")
    verify.add_argument("--spec", required=True)
    verify.add_argument("--max-codewords", type=int, default=OracleBudget().max_codewords)
    verify.set_defaults(func=cmd_verify_mrd)

    bench = sub.add_parser("bench", help="median decode time over seeded trials")
    bench.add_argument("spec", nargs="+")
    bench.add_argument("--trials", type=int, default=20)
    bench.add_argument("--rank", type=int, help="error rank (default: decoding radius)")
    bench.add_argument("--seed", type=_seed, default=0)
    bench.set_defaults(func=cmd_bench)

    selftest = sub.add_parser("selftest", help="quick built-in consistency checks")
    selftest.add_argument("--seed", type=_seed, default=0)
    selftest.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SizeError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

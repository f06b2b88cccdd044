"""Command-line front-end: parse weights, dispatch, report, manage the cache.

Exit codes: 0 on success, 2 on input errors, 3 on internal-consistency
failures (oracle disagreement, non-integer division, negative coefficient).
Reports go to stdout, diagnostics to stderr, and nothing is printed until the
computation has finished.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters, schur
from .errors import ConsistencyError, DegreeMismatchError, SizeBoundError
from .internal_product import (
    GAMMA,
    SYM,
    WEDGE,
    CharTwoMode,
    ExpFunctor,
    exponential_tensor,
    gamma_tensor_gamma,
    jacobi_trudi,
    kronecker,
    weyl_tensor_gamma,
    weyl_tensor_wedge,
)
from .partitions import Composition, Partition
from .sweeps import SUITE_NAMES, run_suites

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_FAMILY_NAMES = {"gamma": GAMMA, "sym": SYM, "wedge": WEDGE}
_MODE_NAMES = {m.value: m for m in CharTwoMode}


class _InputError(ValueError):
    """Bad flag value; the message names the offending flag."""


def _ints_from_text(text: str, flag: str):
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise _InputError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def parse_partition(text: str, flag: str) -> Partition:
    try:
        return Partition(_ints_from_text(text, flag))
    except ValueError as exc:
        raise _InputError(f"{flag}: {exc}") from None


def parse_composition(text: str, flag: str) -> Composition:
    try:
        return Composition(_ints_from_text(text, flag))
    except ValueError as exc:
        raise _InputError(f"{flag}: {exc}") from None


def parse_mu(text: str, flag: str) -> Partition:
    """Partition flag that also accepts the shorthand hook:p,q."""
    if text.startswith("hook:"):
        body = _ints_from_text(text[len("hook:"):], flag)
        if len(body) != 2 or body[0] < 1 or body[1] < 1:
            raise _InputError(f"{flag}: hook shorthand needs hook:p,q with p,q >= 1")
        p, q = body
        return Partition([p] + [1] * q)
    return parse_partition(text, flag)


def parse_functor(text: str, flag: str) -> ExpFunctor:
    """An exponential functor written family:weight, e.g. gamma:2,1."""
    family, sep, weight = text.partition(":")
    if not sep or family.lower() not in _FAMILY_NAMES:
        raise _InputError(f"{flag}: expected gamma:WEIGHT, sym:WEIGHT or wedge:WEIGHT")
    return ExpFunctor(_FAMILY_NAMES[family.lower()], parse_composition(weight, flag))


def _flagged(flags: str, fn, *args, **kwargs):
    """Run a library call, naming the offending flags on degree/bound errors."""
    try:
        return fn(*args, **kwargs)
    except (DegreeMismatchError, SizeBoundError) as exc:
        raise _InputError(f"{flags}: {exc}") from None


def expansion_report(d: int, method: str, basis: str, pairs) -> dict:
    """Report dict with terms in descending lexicographic order."""
    ordered = sorted(pairs, key=lambda kv: tuple(kv[0]), reverse=True)
    return {
        "d": d,
        "method": method,
        "basis": basis,
        "expansion": [
            {"partition": list(part), "mult": mult} for part, mult in ordered if mult
        ],
    }


def render_report(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2)
    lines = [f"d={report['d']} method={report['method']} basis={report['basis']}"]
    if not report["expansion"]:
        lines.append("  (zero)")
    else:
        texts = [
            (",".join(str(x) for x in e["partition"]) or "0", e["mult"])
            for e in report["expansion"]
        ]
        width = max(len(t) for t, _ in texts)
        lines.extend(f"  {t.ljust(width)}  {m}" for t, m in texts)
    return "\n".join(lines)


def _schur_pairs(expansion):
    return [(p.parts, c) for p, c in expansion.items()]


def _multiset_pairs(weights):
    counts = {}
    for w in weights:
        counts[w.entries] = counts.get(w.entries, 0) + 1
    return list(counts.items())


def _cmd_kron(args) -> str:
    lam = parse_partition(args.lam, "--lambda")
    mu = parse_mu(args.mu, "--mu")
    expansion, method = _flagged("--lambda/--mu", kronecker, lam, mu, args.method)
    report = expansion_report(lam.size, method, "Weyl", _schur_pairs(expansion))
    return render_report(report, args.json)


def _cmd_gamma_tensor(args) -> str:
    mu = parse_composition(args.mu, "--mu")
    lam = parse_composition(args.lam, "--lambda")
    dec = _flagged("--mu/--lambda", gamma_tensor_gamma, mu, lam)
    report = expansion_report(
        mu.degree, "gamma-tensor", dec.family, _multiset_pairs(dec.summands)
    )
    return render_report(report, args.json)


def _cmd_exp_tensor(args) -> str:
    left = parse_functor(args.left, "--left")
    right = parse_functor(args.right, "--right")
    mode = _MODE_NAMES[args.char_two]
    dec = _flagged("--left/--right", exponential_tensor, left, right, mode)
    report = expansion_report(
        left.degree, "exp-tensor", dec.family, _multiset_pairs(dec.summands)
    )
    return render_report(report, args.json)


def _cmd_weyl_gamma(args) -> str:
    lam = parse_partition(args.lam, "--lambda")
    nu = parse_composition(args.nu, "--nu")
    expansion = _flagged("--lambda/--nu", weyl_tensor_gamma, lam, nu)
    report = expansion_report(lam.size, "weyl-gamma", "Weyl", _schur_pairs(expansion))
    return render_report(report, args.json)


def _cmd_weyl_wedge(args) -> str:
    lam = parse_partition(args.lam, "--lambda")
    nu = parse_composition(args.nu, "--nu")
    expansion = _flagged("--lambda/--nu", weyl_tensor_wedge, lam, nu)
    report = expansion_report(lam.size, "weyl-wedge", "DualWeyl", _schur_pairs(expansion))
    return render_report(report, args.json)


def _cmd_jacobi_trudi(args) -> str:
    mu = parse_mu(args.mu, "--mu")
    terms = _flagged("--mu", jacobi_trudi, mu)
    pairs = [(nu.entries, sign) for sign, nu in terms]
    report = expansion_report(mu.size, "jacobi-trudi", "Gamma", pairs)
    return render_report(report, args.json)


def _cmd_oracle_check(args):
    if args.max_d is not None and args.max_d > 8 and not args.force:
        raise _InputError("--max-d: values above 8 need --force")
    results = run_suites(args.suite, args.max_d)
    text = "\n".join(r.line() for r in results)
    code = EXIT_OK if all(r.ok for r in results) else EXIT_INTERNAL
    return text, code


def _key_text(parts) -> str:
    return ",".join(str(x) for x in parts) if parts else "0"


def _key_parts(text: str):
    return () if text in ("", "0") else tuple(int(x) for x in text.split(","))


def load_cache(path: str) -> None:
    """Seed the in-memory memo tables from a cache file, if it exists."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        return
    for key, val in data.get("lr", {}).items():
        outer, left, right = key.split("|")
        schur._LR_CACHE[(_key_parts(outer), _key_parts(left), _key_parts(right))] = int(val)
    for key, val in data.get("characters", {}).items():
        lam, rho = key.split("|")
        characters._MN_CACHE[(_key_parts(lam), _key_parts(rho))] = int(val)


def save_cache(path: str) -> None:
    """Persist the LR and character memo tables as a single JSON file."""
    data = {
        "lr": {
            "|".join(_key_text(p) for p in key): val
            for key, val in sorted(schur._LR_CACHE.items())
        },
        "characters": {
            f"{_key_text(lam)}|{_key_text(rho)}": val
            for (lam, rho), val in sorted(characters._MN_CACHE.items())
        },
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polykron",
        description="Exact internal-tensor-product decompositions and Kronecker coefficients.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a machine-readable report")
    common.add_argument("--cache", metavar="PATH", help="persist LR/character memo tables to PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kron", parents=[common], help="Kronecker product of two Specht/Weyl labels")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")
    p.add_argument("--mu", required=True, metavar="PARTITION", help="partition, or hook:p,q")
    p.add_argument(
        "--method",
        choices=["auto", "general", "two-row", "one-box", "hook"],
        default="auto",
    )
    p.set_defaults(func=_cmd_kron)

    p = sub.add_parser("gamma-tensor", parents=[common], help="product of two divided-power weights")
    p.add_argument("--mu", required=True, metavar="WEIGHT")
    p.add_argument("--lambda", dest="lam", required=True, metavar="WEIGHT")
    p.set_defaults(func=_cmd_gamma_tensor)

    p = sub.add_parser("exp-tensor", parents=[common], help="product of two exponential functors")
    p.add_argument("--left", required=True, metavar="FAMILY:WEIGHT")
    p.add_argument("--right", required=True, metavar="FAMILY:WEIGHT")
    p.add_argument("--char-two", choices=sorted(_MODE_NAMES), default="unit",
                   help="behaviour of 2 in the base ring")
    p.set_defaults(func=_cmd_exp_tensor)

    p = sub.add_parser("weyl-gamma", parents=[common], help="Weyl filtration of Weyl x Gamma weight")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")
    p.add_argument("--nu", required=True, metavar="WEIGHT")
    p.set_defaults(func=_cmd_weyl_gamma)

    p = sub.add_parser("weyl-wedge", parents=[common], help="dual Weyl filtration of Weyl x Wedge weight")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")
    p.add_argument("--nu", required=True, metavar="WEIGHT")
    p.set_defaults(func=_cmd_weyl_wedge)

    p = sub.add_parser("jacobi-trudi", parents=[common], help="signed divided-power resolution terms")
    p.add_argument("--mu", required=True, metavar="PARTITION")
    p.set_defaults(func=_cmd_jacobi_trudi)

    p = sub.add_parser("oracle-check", parents=[common], help="run verification sweeps")
    p.add_argument("--suite", default="all", choices=list(SUITE_NAMES) + ["all"])
    p.add_argument("--max-d", type=int, default=None, help="degree bound (guarded at 8)")
    p.add_argument("--force", action="store_true", help="allow --max-d above 8")
    p.set_defaults(func=_cmd_oracle_check)

    return parser


def run(argv) -> int:
    """Parse argv, dispatch, print the report; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    if args.cache:
        load_cache(args.cache)
    try:
        out = args.func(args)
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text, code = out if isinstance(out, tuple) else (out, EXIT_OK)
    print(text)
    if args.cache:
        save_cache(args.cache)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command-line entry point: ``rauzyveech <command> ...``.

Exit codes: 0 success, 1 a verified claim failed, 2 unreadable input,
3 invalid input, 4 a size or step budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import f2, gf2core, transvect
from .cache import Cache
from .errors import BudgetExceeded, Degenerate, NotIrreducible, RauzyVeechError
from .forms import component_label, omega, quadratic_form
from .perm import (
    Permutation,
    degeneracy_witness,
    format_permutation,
    is_irreducible,
    parse_permutation,
    rauzy_class,
    representatives,
)
from .verify import SUITES, Budget, run_suite

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3, 4


class ParseError(Exception):
    pass


def read_permutation(path: str) -> Permutation:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ParseError(f"expected two non-empty lines, got {len(lines)}")
    if len(lines[0]) != len(lines[1]):
        raise ParseError("rows have different lengths")
    return parse_permutation(text)


def validate(p: Permutation) -> Permutation:
    if not is_irreducible(p):
        raise NotIrreducible("irreducibility: a proper prefix of the top row matches the bottom row")
    w = degeneracy_witness(p)
    if w is not None:
        raise Degenerate(f"nondegeneracy: condition {w[0]} holds at j={w[1]}")
    return p


def load_input(args) -> Permutation:
    if args.family:
        if args.n is None:
            raise ParseError("--family needs --n")
        return representatives(args.family, args.n)
    if not args.input:
        raise ParseError("give a permutation file or --family/--n")
    return validate(read_permutation(args.input))


def parse_vector(text: str, d: int) -> tuple[int, ...]:
    try:
        v = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"bad vector {text!r}") from None
    if len(v) != d:
        raise ParseError(f"vector has {len(v)} entries, expected {d}")
    return v


def bits(v: int, d: int) -> str:
    return "".join(str(x) for x in f2.unvec(v, d))


# --- commands --------------------------------------------------------------


def cmd_stratum(args, cache: Cache):
    p = load_input(args)
    key = {"perm": list(map(list, p.rows()))}

    def compute():
        return component_label(p, args.max_class_size).to_json()

    result, hit = cache.fetch("stratum", key, compute)
    return EXIT_OK, dict(result, cached=hit), result["name"]


def cmd_class(args, cache: Cache):
    p = load_input(args)
    key = {"perm": list(map(list, p.rows())), "max": args.max_class_size}

    def compute():
        cls = rauzy_class(p, args.max_class_size)
        return {"size": len(cls), "vertices": [format_permutation(v).strip().split("\n") for v in cls]}

    result, hit = cache.fetch("class", key, compute)
    out = dict(result, cached=hit)
    if not args.list:
        out.pop("vertices")
    return EXIT_OK, out, f"{result['size']} vertices"


def cmd_closure(args, cache: Cache):
    p = load_input(args)
    key = {"perm": list(map(list, p.rows()))}

    def compute():
        q = quadratic_form(p)
        c = gf2core.q_closure([1 << a for a in range(p.d)], q)
        return {"letters": list(p.alphabet), "size": len(c), "vectors": [bits(v, p.d) for v in c]}

    result, hit = cache.fetch("closure", key, compute)
    text = "\n".join(result["vectors"]) + f"\n{result['size']} vectors"
    return EXIT_OK, dict(result, cached=hit), text


def cmd_certificate(args, cache: Cache):
    p = load_input(args)
    f = omega(p)
    target = parse_vector(args.target, p.d)
    via = [parse_vector(v, p.d) for v in args.via]
    key = {"perm": list(map(list, p.rows())), "target": target, "via": via, "bound": args.coeff_bound,
           "steps": args.step_bound}

    def compute():
        seeds = [p.unit(p.name(i)) for i in range(p.d)]
        c = transvect.omega_closure_search(seeds, f, target, coeff_bound=args.coeff_bound,
                                           step_bound=args.step_bound, via=via)
        if c is None:
            return {"found": False}
        return {"found": True, "steps": len(c.steps), "replayed": bool(transvect.verify_certificate(c, f)),
                "certificate": c.to_text()}

    result, hit = cache.fetch("certificate", key, compute)
    if not result["found"]:
        return EXIT_FAILED, dict(result, cached=hit), "not found within the bounds"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(result["certificate"])
    return EXIT_OK, dict(result, cached=hit), result["certificate"].rstrip()


def cmd_verify(args, cache: Cache):
    budget = Budget(args.max_class_size, args.coeff_bound, args.group_cap, args.seed)
    claims = run_suite(args.suite, budget)
    report = {"suite": args.suite, "claims": [c.to_json() for c in claims],
              "passed": sum(c.ok for c in claims), "failed": sum(not c.ok for c in claims)}
    text = "\n".join(f"{c.status:28s} {c.ref}" for c in claims)
    return (EXIT_OK if report["failed"] == 0 else EXIT_FAILED), report, text


COMMANDS = {"stratum": cmd_stratum, "class": cmd_class, "closure": cmd_closure,
            "certificate": cmd_certificate, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-class-size", type=int, default=10**6)
    common.add_argument("--coeff-bound", type=int, default=4)
    common.add_argument("--group-cap", type=int, default=10**8)
    common.add_argument("--cache-dir", default=None, help="defaults to $RAUZYVEECH_CACHE or ~/.cache/rauzyveech")
    common.add_argument("--json", action="store_true", help="print the JSON report")

    ap = argparse.ArgumentParser(prog="rauzyveech", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def with_input(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("input", nargs="?", help="two-line permutation file, or - for stdin")
        sp.add_argument("--family", choices=["tau-d", "sigma-d", "tau-minimal", "sigma-minimal",
                                             "tau-H2n", "sigma-H2n"])
        sp.add_argument("--n", type=int, help="parameter of --family (d or genus)")
        return sp

    with_input("stratum", "stratum and connected component")
    sp = with_input("class", "enumerate the Rauzy class")
    sp.add_argument("--list", action="store_true", help="include the vertices")
    with_input("closure", "Q-closure of the canonical vectors mod 2")
    sp = with_input("certificate", "search and replay a closure certificate")
    sp.add_argument("--target", required=True, help="integer coordinates in letter order")
    sp.add_argument("--via", action="append", default=[], help="intermediate vector (repeatable)")
    sp.add_argument("--step-bound", type=int, default=10**6)
    sp.add_argument("--out", help="write the certificate text here")
    sp = sub.add_parser("verify", parents=[common], help="run a claim suite")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--seed", type=int, default=0)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cache = Cache(args.cache_dir)
    try:
        code, report, text = COMMANDS[args.command](args, cache)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RauzyVeechError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return exc.exit_code
    print(json.dumps(report, indent=2, sort_keys=True) if args.json else text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``flagbott <subcommand> [flags]``.

Exit codes: 0 success, 2 bad input (one ``E_CODE: message`` line on
stderr), 3 when ``vanish`` finds no certificate.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from .bott import DimensionError, FlagShape, bott, bott_partial, grassmann_bott, lemma55, splitting
from .cohomology import flag_cohomology, grassmann_cohomology, table_dimensions
from .lr import lr_product
from .oracle import oracle_product
from .partitions import (
    Partition,
    PartitionError,
    chi,
    parse_generalized,
    parse_ints,
    parse_partition,
    partitions_of,
    transpose,
)
from .vanishing import VanishingQuery, audit_tensor, certify, parse_bundle, TensorMix

SCHEMA = "flagbott/1"

EXIT_OK, EXIT_ERROR, EXIT_NOT_CERTIFIED = 0, 2, 3


class UsageError(Exception):
    code = "E_USAGE"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def thread_count() -> int:
    raw = os.environ.get("FLAGBOTT_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


_NUMBER_LIST = re.compile(r"^-\d[\d,\s-]*(;.*)?$")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """``--a -1,2`` -> ``--a=-1,2`` so argparse does not read ``-1,2`` as a flag."""
    out: list[str] = []
    for tok in argv:
        if out and _NUMBER_LIST.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


# -- output ----------------------------------------------------------------


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}))
    else:
        print(text)


def _fmt(parts) -> str:
    return "(" + ",".join(map(str, parts)) + ")"


def _decomposition_text(dec) -> str:
    if not dec:
        return "0"
    width = max(len(str(m)) for _, m in dec)
    return "\n".join(f"{m:>{width}}  {_fmt(lam)}" for lam, m in dec)


def _table_text(table, dims_only: bool) -> str:
    if not table.entries:
        return "all cohomology vanishes"
    dims = table_dimensions(table)
    lines = []
    for (p, q), dec in table:
        if dims_only:
            lines.append(f"H^{p},{q}  dim {dims[(p, q)]}")
        else:
            lines.append(f"H^{p},{q}  dim {dims[(p, q)]}  =  {dec}")
    return "\n".join(lines)


# -- subcommands -----------------------------------------------------------


def cmd_lr(args) -> int:
    u = parse_generalized(args.u, args.r)
    v = parse_partition(args.v)
    dec = lr_product(u, v, args.r)
    _emit(args, dec.to_json(), _decomposition_text(dec))
    return EXIT_OK


def _bott_json(res) -> dict:
    return {"admissible": False} if res is None else res.to_json()


def cmd_bott(args) -> int:
    a = parse_ints(args.a)
    if args.s:
        res = bott_partial(FlagShape(args.d, parse_ints(args.s)), a)
    else:
        if len(a) != args.d:
            raise DimensionError(f"a has {len(a)} entries, expected d={args.d}")
        res = bott(a)
    text = "not admissible: all cohomology vanishes" if res is None else f"H^{res.i} = S_{_fmt(res.psi)} V"
    _emit(args, _bott_json(res), text)
    return EXIT_OK


def cmd_split(args) -> int:
    w = parse_generalized(args.w)
    u = parse_partition(args.u)
    r = len(w)
    d = args.d if args.d is not None else r + (u[0] if u else 0)
    if d < r:
        raise DimensionError(f"d={d} is smaller than r={r}")
    res = lemma55(w, u, d)
    if res is None:
        payload = {"admissible": False}
        _emit(args, payload, "not admissible: some alpha_i equals some beta_j")
        return EXIT_OK
    payload = {
        "admissible": True,
        "d": d,
        "r": r,
        "u_transpose": list(transpose(u)),
        "chi_u": list(chi(u.padded(r))),
        "alpha": list(res.alpha),
        "beta": list(res.beta),
        "gamma_rows": list(res.gamma_rows),
        "gamma_cols": list(res.gamma_cols),
        "s_plus": list(res.s_plus),
        "s_minus": list(res.s_minus),
        "i": res.i,
        "psi": list(res.psi),
    }
    try:
        split = splitting(w, u)
    except PartitionError:
        split = None  # w / chi(u) is not a skew diagram
    if split is not None:
        payload["card_plus"] = len(split.sigma_plus)
        payload["card_minus"] = len(split.sigma_minus)
    lines = [f"{k:<12} {v}" for k, v in payload.items() if k != "admissible"]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_grass(args) -> int:
    v = parse_generalized(args.v, args.r) if args.v else ()
    table = grassmann_cohomology(args.r, args.d, v)
    _emit(args, table.to_json(args.dims_only), _table_text(table, args.dims_only))
    return EXIT_OK


def cmd_flag(args) -> int:
    flag = FlagShape(args.d, parse_ints(args.s))
    table = flag_cohomology(flag, parse_ints(args.a), args.P)
    _emit(args, table.to_json(args.dims_only), _table_text(table, args.dims_only))
    return EXIT_OK


def cmd_hodge(args) -> int:
    table = grassmann_cohomology(args.r, args.d)
    dims = table_dimensions(table)
    size = table.dimension + 1
    grid = [[dims.get((p, q), 0) for q in range(size)] for p in range(size)]
    width = max(len(str(x)) for row in grid for x in row)
    text = "\n".join(" ".join(f"{x:>{width}}" for x in row) for row in grid)
    _emit(args, {"r": args.r, "d": args.d, "hodge": grid}, text)
    return EXIT_OK


def cmd_vanish(args) -> int:
    bundle = parse_bundle(args.bundle)
    cert = certify(VanishingQuery(args.n, args.d, args.p, args.q, bundle))
    payload = cert.to_json()
    if args.audit:
        if not isinstance(bundle, TensorMix):
            raise UsageError("--audit needs a tensor: bundle")
        payload["audit"] = audit_tensor(bundle.k, bundle.s, args.d)
    lines = [
        f"[{'yes' if v.satisfied else 'no '}] {v.theorem:<4} {v.condition}: {v.value} vs {v.threshold}"
        f"  (needs {v.hypothesis})"
        for v in cert.verdicts
    ]
    lines.append("vanishing certified" if cert.certified else "not certified")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if cert.certified else EXIT_NOT_CERTIFIED


def cmd_oracle_product(args) -> int:
    if not args.slow:
        raise UsageError("oracle-product is exponential; pass --slow to run it")
    dec = oracle_product(parse_partition(args.u), parse_partition(args.v), args.k)
    _emit(args, dec.to_json(), _decomposition_text(dec))
    return EXIT_OK


def _check_lr() -> tuple[str, int]:
    bad = 0
    for n in range(6):
        for nu in range(n + 1):
            for u in partitions_of(nu, max_len=3):
                for v in partitions_of(n - nu, max_len=3):
                    if lr_product(u, v, 3) != oracle_product(u, v, 3):
                        bad += 1
    return "lr_product vs Schur polynomials (k=3, |u|+|v| <= 5)", bad


def _check_split(seed: int) -> tuple[str, int]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(500):
        r = rng.randint(1, 4)
        d = rng.randint(r, 8)
        w = sorted((rng.randint(-5, 5) for _ in range(r)), reverse=True)
        ut = sorted((rng.randint(0, 5) for _ in range(d - r)), reverse=True)
        fast, slow = lemma55(w, transpose(ut), d), grassmann_bott(w, ut)
        if (fast is None) != (slow is None) or (fast and (fast.i, fast.psi) != (slow.i, slow.psi)):
            bad += 1
    return f"lemma55 vs Bott (500 random cases, seed {seed})", bad


def _check_hodge() -> tuple[str, int]:
    bad = 0
    for d in range(2, 6):
        for r in range(1, d):
            dims = table_dimensions(grassmann_cohomology(r, d))
            for (p, q), h in dims.items():
                expect = sum(1 for _ in partitions_of(p, max_part=d - r, max_len=r)) if p == q else 0
                bad += h != expect
    return "Grassmannian Hodge numbers (d <= 5)", bad


def cmd_selftest(args) -> int:
    seed = 0 if args.seed is None else args.seed
    start = time.perf_counter()
    checks = [_check_lr, lambda: _check_split(seed), _check_hodge]
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        results = list(pool.map(lambda f: f(), checks))
    elapsed = time.perf_counter() - start
    payload = {
        "checks": [{"name": name, "failures": bad, "ok": bad == 0} for name, bad in results],
        "ok": all(bad == 0 for _, bad in results),
    }
    # timing stays out of the JSON so repeated runs are byte-identical
    lines = [f"{'PASS' if bad == 0 else 'FAIL'}  {name}" for name, bad in results]
    lines.append(f"{elapsed:.2f} s")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if payload["ok"] else EXIT_ERROR


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of a table")
    common.add_argument("--dims-only", action="store_true", help="report dimensions only")
    common.add_argument("--seed", type=int, default=None)

    parser = _Parser(prog="flagbott", description="LR rule, Bott's theorem and vanishing certificates")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lr", parents=[common], help="decompose S_u V (x) S_v V")
    p.add_argument("--r", type=int, required=True, help="dim V")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("bott", parents=[common], help="Bott's theorem for Q^a")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--s", default=None, help="partial flag steps; a then has one entry per step")
    p.set_defaults(func=cmd_bott)

    p = sub.add_parser("split", parents=[common], help="alpha/beta split of (w, u~)")
    p.add_argument("--w", required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("grass", parents=[common], help="H^{p,q}(G_r(C^d), S_v Q)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--v", default="")
    p.set_defaults(func=cmd_grass)

    p = sub.add_parser("flag", parents=[common], help="H^{P,q} of Q^a on a partial flag variety")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--P", type=int, default=None)
    p.set_defaults(func=cmd_flag)

    p = sub.add_parser("hodge", parents=[common], help="Hodge numbers of G_r(C^d)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("vanish", parents=[common], help="vanishing certificate")
    for name in ("n", "d", "p", "q"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--bundle", required=True, help="schur:R | wedge:r | symdet:r | hook:a,k | schurdet:R@m | tensor:k=..;s=..")
    p.add_argument("--audit", action="store_true", help="list tensor summands and check optimality")
    p.set_defaults(func=cmd_vanish)

    p = sub.add_parser("oracle-product", parents=[common], help="Schur polynomial product (slow)")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--slow", action="store_true")
    p.set_defaults(func=cmd_oracle_product)

    p = sub.add_parser("selftest", parents=[common], help="cross-check engines against oracles")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_negative_values(argv))
        return args.func(args)
    except (UsageError, PartitionError, DimensionError) as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"E_VALUE: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

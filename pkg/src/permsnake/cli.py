"""Command-line front end.

Machine-readable results go to stdout as one JSON object or value per line;
human diagnostics go to stderr.  Exit codes: 0 success/valid, 1 a code failed
verification or a repro check failed, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction
from typing import Optional

from .bounds import (
    BoundsRow,
    bounds_table,
    even_push_upper,
    ksnake_density,
    linf_upper,
    trivial_upper,
)
from .code_model import (
    GrayCode,
    balance_gap,
    decode_code,
    encode_code,
    expand,
    verify_snake,
)
from .ksnake import (
    RECORDED_K5_CHECKPOINTS,
    build_ksnake,
    rank_k,
    successor_k,
    unrank_k,
)
from .linf_snake import (
    VARIANTS,
    build_linf_snake,
    rank_inf,
    successor_inf,
    unrank_inf,
)
from .perm_core import format_perm, parse_perm, sign
from .rmgc import build_rmgc
from .search import (
    RECORDED_OCTAL_CODES,
    SearchSpec,
    emit_octal_code,
    extend_to_complete,
    k5_witness_code,
    longest_snake,
    parse_octal_code,
)

# Searches at n >= 6 run budgeted unless --exhaustive is given explicitly.
DEFAULT_NODE_BUDGET = 2_000_000

REPRO_TARGETS = ("ksnake5", "witness", "octal", "bounds")


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permsnake",
        description="Construct, verify, enumerate, search, and bound "
        "snake-in-the-box codes over permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a constructed code as JSON")
    p.add_argument("family", choices=("ksnake", "linf", "rmgc"))
    p.add_argument("--n", type=int, required=True, help="permutation length")
    p.add_argument("--variant", choices=VARIANTS, default="odd-top",
                   help="linf only: which parity leads the blocks")

    for name, needs in (("next", "perm"), ("rank", "perm"), ("unrank", "rank")):
        p = sub.add_parser(name, help=f"{name} within a constructed family")
        p.add_argument("--family", choices=("ksnake", "linf"), required=True)
        p.add_argument("--n", type=int, required=True, help="permutation length")
        if needs == "perm":
            p.add_argument("--perm", required=True, help="codeword, e.g. [3,1,2,4,5]")
        else:
            p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("verify", help="verify JSON codes from a file or stdin")
    p.add_argument("file", nargs="?", default="-", help="path or - for stdin")
    p.add_argument("--metric", choices=("kendall", "linf"),
                   help="override the metric embedded in the JSON")
    p.add_argument("--force", action="store_true",
                   help="verify even when the pair count is large")

    p = sub.add_parser("search", help="depth-first search for a longest snake")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--metric", choices=("kendall", "linf"), required=True)
    p.add_argument("--cyclic", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--transitions", help="comma-separated indices, e.g. 3,5")
    p.add_argument("--budget", type=int, help="node budget (placements)")
    p.add_argument("--exhaustive", action="store_true",
                   help="run to exhaustion (n <= 6)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--start", help="start permutation (default identity)")

    p = sub.add_parser("bounds", help="bounds and construction sizes per n")
    p.add_argument("--n", type=int, help="single length")
    p.add_argument("--n-range", help="inclusive range, e.g. 4:10")

    p = sub.add_parser("repro", help="regenerate recorded artifacts and diff")
    p.add_argument("target", choices=REPRO_TARGETS)
    return parser


def _cmd_gen(args) -> int:
    if args.family == "ksnake":
        _emit_code_line(build_ksnake(args.n), "kendall")
    elif args.family == "linf":
        _emit_code_line(build_linf_snake(args.n, args.variant), "linf")
    else:
        _emit_code_line(build_rmgc(args.n).code, None)
    return 0


def _emit_code_line(code: GrayCode, metric: Optional[str]) -> None:
    print(encode_code(code, metric))
    _note(f"({code.n},{code.size}) {'complete code' if metric is None else metric + ' snake'}, "
          f"{'cyclic' if code.cyclic else 'non-cyclic'}")


def _family_perm(args):
    perm = parse_perm(args.perm)
    if len(perm) != args.n:
        raise ValueError(
            f"permutation has length {len(perm)}, --n says {args.n}"
        )
    return perm


def _require_odd(n: int) -> int:
    if n % 2 == 0 or n < 3:
        raise ValueError(f"the kendall family needs odd n >= 3, got {n}")
    return (n - 1) // 2


def _cmd_next(args) -> int:
    perm = _family_perm(args)
    if args.family == "ksnake":
        _emit(successor_k(_require_odd(args.n), perm))
    else:
        _emit(successor_inf(perm))
    return 0


def _cmd_rank(args) -> int:
    perm = _family_perm(args)
    if args.family == "ksnake":
        _require_odd(args.n)
        _emit(rank_k(perm))
    else:
        _emit(rank_inf(perm))
    return 0


def _cmd_unrank(args) -> int:
    if args.family == "ksnake":
        perm = unrank_k(_require_odd(args.n), args.rank)
    else:
        perm = unrank_inf(args.n, args.rank)
    print(format_perm(perm))
    return 0


def _cmd_verify(args) -> int:
    if args.file == "-":
        lines = sys.stdin.read().splitlines()
    else:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise ValueError(f"cannot read {args.file}: {exc}") from None
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise ValueError("no code JSON supplied")
    all_valid = True
    for ln in lines:
        code, embedded = decode_code(ln)
        metric = args.metric or embedded
        if metric is None:
            raise ValueError(
                "no metric: pass --metric or embed one in the code JSON"
            )
        report = verify_snake(code, metric, force=args.force)
        _emit(
            {
                "valid": report.valid,
                "metric": report.metric,
                "min_pairwise_distance": report.min_pairwise_distance,
                "witness": list(report.witness) if report.witness else None,
                "size": code.size,
            }
        )
        if report.valid:
            _note(f"valid ({code.n},{code.size}) {metric} snake")
        else:
            _note(
                f"INVALID: codewords {report.witness} at {metric} distance "
                f"{report.min_pairwise_distance}"
            )
            all_valid = False
    return 0 if all_valid else 1


def _cmd_search(args) -> int:
    transitions = None
    if args.transitions:
        try:
            transitions = tuple(int(part) for part in args.transitions.split(","))
        except ValueError:
            raise ValueError(
                f"--transitions must be comma-separated integers, got "
                f"{args.transitions!r}"
            ) from None
    if args.exhaustive and args.budget is not None:
        raise ValueError("--exhaustive and --budget are mutually exclusive")
    budget = args.budget
    if budget is None and not args.exhaustive and args.n >= 6:
        budget = DEFAULT_NODE_BUDGET
        _note(f"n >= 6: defaulting to node budget {budget} (use --exhaustive to override)")
    start = parse_perm(args.start) if args.start else None
    spec = SearchSpec(
        n=args.n,
        metric=args.metric,
        cyclic=args.cyclic,
        allowed_transitions=transitions,
        start=start,
        node_budget=budget,
    )
    result = longest_snake(spec, jobs=args.jobs)
    best = None
    if result.best is not None:
        best = json.loads(encode_code(result.best, args.metric))
    _emit(
        {
            "size": result.size,
            "proven_optimal": result.proven_optimal,
            "nodes": result.nodes,
            "best": best,
        }
    )
    _note(
        f"longest {args.metric} snake found: size {result.size} "
        f"({'proven optimal' if result.proven_optimal else 'not proven optimal'}), "
        f"{result.nodes} nodes"
    )
    return 0


def _row_json(row: BoundsRow) -> dict:
    return {
        "n": row.n,
        "trivial_upper": row.trivial_upper,
        "even_push_upper": row.even_push_upper,
        "linf_upper": row.linf_upper,
        "ksnake_size": row.ksnake_size,
        "ksnake_density": str(row.ksnake_density) if row.ksnake_density else None,
        "ksnake_rate": row.ksnake_rate,
        "linf_size": row.linf_size,
        "linf_rate": row.linf_rate,
    }


def _cmd_bounds(args) -> int:
    if (args.n is None) == (args.n_range is None):
        raise ValueError("pass exactly one of --n or --n-range")
    if args.n is not None:
        lo = hi = args.n
    else:
        parts = args.n_range.split(":")
        if len(parts) != 2:
            raise ValueError(f"--n-range must look like 4:10, got {args.n_range!r}")
        try:
            lo, hi = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"--n-range must be integers, got {args.n_range!r}") from None
    rows = bounds_table(lo, hi)
    header = (
        f"{'n':>3} {'trivial':>12} {'even_push':>12} {'linf_up':>12} "
        f"{'ksnake':>8} {'density':>10} {'linf':>6}"
    )
    _note(header)
    for row in rows:
        _emit(_row_json(row))
        _note(
            f"{row.n:>3} {row.trivial_upper:>12} {row.even_push_upper:>12} "
            f"{row.linf_upper:>12} "
            f"{row.ksnake_size if row.ksnake_size is not None else '-':>8} "
            f"{str(row.ksnake_density) if row.ksnake_density is not None else '-':>10} "
            f"{row.linf_size if row.linf_size is not None else '-':>6}"
        )
    return 0


class _Checks:
    def __init__(self) -> None:
        self.total = 0
        self.failed = 0

    def check(self, name: str, ok: bool) -> None:
        self.total += 1
        if not ok:
            self.failed += 1
        _note(f"{'ok  ' if ok else 'FAIL'} {name}")

    def summary(self, target: str) -> int:
        _emit(
            {
                "target": target,
                "checks": self.total,
                "failed": self.failed,
                "ok": self.failed == 0,
            }
        )
        return 0 if self.failed == 0 else 1


def _repro_ksnake5(c: _Checks) -> None:
    code = build_ksnake(5)
    words = expand(code)
    c.check("degree-5 code has 45 codewords", len(words) == 45)
    for r, perm in RECORDED_K5_CHECKPOINTS:
        c.check(f"rank {r} is {format_perm(perm)}", words[r] == perm)
    c.check(
        "segment stitches at ranks 14, 29, 44 use t_3",
        all(code.transitions[15 * k + 14] == 3 for k in range(3)),
    )
    c.check("kendall verification", verify_snake(code, "kendall").valid)
    c.check("balance gap <= 7", balance_gap(code) <= 7)


def _repro_witness(c: _Checks) -> None:
    code = k5_witness_code()
    words = expand(code)
    c.check("57 distinct codewords, cyclic", len(set(words)) == 57)
    c.check("all codewords even", all(sign(w) == 1 for w in words))
    report = verify_snake(code, "kendall")
    c.check("kendall verification", report.valid)
    evens = {p for p in itertools.permutations(range(1, 6)) if sign(p) == 1}
    complement = sorted(evens - set(words))
    c.check("complement has 3 permutations", len(complement) == 3)
    c.check(
        "complement agrees at coordinates 4 and 5",
        len({w[3] for w in complement}) == 1 and len({w[4] for w in complement}) == 1,
    )
    extended = extend_to_complete(code)
    ew = expand(extended)
    c.check("extension is non-cyclic with 60 codewords",
            not extended.cyclic and len(ew) == 60)
    c.check("extension covers the alternating group", set(ew) == evens)
    c.check("extension starts with t_3 t_3 t_5", extended.transitions[:3] == (3, 3, 5))


def _repro_octal(c: _Checks) -> None:
    for n, digits in sorted(RECORDED_OCTAL_CODES.items()):
        code = parse_octal_code(n, digits)
        c.check(f"n={n}: size {3 * len(digits)}", code.size == 3 * len(digits))
        c.check(f"n={n}: valid linf snake", verify_snake(code, "linf").valid)
        c.check(f"n={n}: octal round-trip", emit_octal_code(code) == digits)


def _repro_bounds(c: _Checks) -> None:
    c.check("even-push bound at 5/7/9 is 60/2519/181439",
            (even_push_upper(5), even_push_upper(7), even_push_upper(9))
            == (60, 2519, 181439))
    c.check("linf bound at 4..7 is 6/30/90/630",
            tuple(linf_upper(n) for n in range(4, 8)) == (6, 30, 90, 630))
    c.check("densities 1/2 and 3/8",
            (ksnake_density(3), ksnake_density(5))
            == (Fraction(1, 2), Fraction(3, 8)))
    c.check(
        "density ratio recursion up to degree 19",
        all(
            ksnake_density(2 * n + 1) / ksnake_density(2 * n - 1)
            == Fraction(2 * n - 1, 2 * n)
            for n in range(2, 10)
        ),
    )
    c.check("recorded 57 within the trivial degree-5 bound",
            57 <= trivial_upper(5) == 60)


def _cmd_repro(args) -> int:
    c = _Checks()
    {
        "ksnake5": _repro_ksnake5,
        "witness": _repro_witness,
        "octal": _repro_octal,
        "bounds": _repro_bounds,
    }[args.target](c)
    return c.summary(args.target)


_HANDLERS = {
    "gen": _cmd_gen,
    "next": _cmd_next,
    "rank": _cmd_rank,
    "unrank": _cmd_unrank,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "bounds": _cmd_bounds,
    "repro": _cmd_repro,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        _note(f"error: {exc}")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))

"""Command-line entry point: ``effectlaws {laws,demo,refine} ...``."""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from .array import (
    REFINEMENT_STORES,
    ArrayStore,
    check_iqsort_refines_slowsort,
    check_swap_rcons_suite,
    iqsort,
    plus_array,
    write_list,
)
from .core import NONE, Some, render
from .errors import EffectLawsError, UnknownCheck, UnknownDemo
from .laws import CheckConfig, render_json, render_text
from .nondet import POWERSET, qperm, refines, slowsort
from .suites import run_suite, suite_names
from .transformers import fastprod, product, work
from .typed_store import ML_BOOL, ML_NAT, TYPED_STORE, TypedStore, check_rtl_tl_self, cycle

__all__ = ["main", "DEMOS", "CHECKS"]


def parse_list(text: str) -> tuple:
    if not text.strip():
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _ok(flag: bool) -> str:
    return "OK" if flag else "FAILED"


def _as_ret(opt) -> str:
    return "fail" if opt is NONE else f"Ret {render(opt.value)}"


# -- demos ---------------------------------------------------------------------------


def demo_fastprod(args, out) -> bool:
    s = args.list
    result = fastprod(s)
    expected = Some(product(s))
    print(f"input:      {render(s)}", file=out)
    print(f"work s:     {_as_ret(work(s))}", file=out)
    print(f"fastprod s: {_as_ret(result)}", file=out)
    print(f"fastprod s = Ret (product s): {_ok(result == expected)}", file=out)
    return result == expected


def demo_qperm(args, out) -> bool:
    s = args.list
    perms = qperm(s)
    sorted_out = slowsort(s)
    print(f"input:      {render(s)}", file=out)
    print(f"qperm s:    {perms!r}  ({len(perms)} outcomes)", file=out)
    print(f"slowsort s: {sorted_out!r}", file=out)
    ok = sorted_out == POWERSET.ret(tuple(sorted(s)))
    print(f"slowsort s = ret (sort s): {_ok(ok)}", file=out)
    return ok


def demo_quicksort(args, out) -> bool:
    s, i = args.list, args.offset
    M = plus_array((ArrayStore(),))
    run = M.then(write_list(i, s, M), iqsort(i, len(s), M))
    finals = M.denote(run)[0][1]
    print(f"input:  {render(s)} at offset {i}", file=out)
    for _, store in finals.sorted():
        print(f"final:  {store!r}  segment {render(store.segment(i, len(s)))}", file=out)
    target = M.bind(slowsort(s, M), lambda ys: write_list(i, ys, M))
    ok = bool(refines(run, target, M))
    print(f"writeList i s >> iqsort (i, |s|) refines slowsort s >>= writeList i: {_ok(ok)}", file=out)
    return ok


def _ml_value(ty, text: str):
    if ty is ML_BOOL:
        if text not in ("true", "false"):
            raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")
        return text == "true"
    try:
        v = int(text)
    except ValueError:
        v = -1
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return v


def demo_cycle(args, out) -> bool:
    ty = {"bool": ML_BOOL, "nat": ML_NAT}[args.type]
    a, b = _ml_value(ty, args.a), _ml_value(ty, args.b)
    result = cycle(ty, a, b)(TypedStore())
    if result is NONE:
        print("cycle failed", file=out)
        return False
    loc, store = result.value
    print(f"cycle {ty!r} {render(a)} {render(b)} returns {loc!r}", file=out)
    print(store.table(), file=out)
    ok = check_rtl_tl_self(ty, a, b, TYPED_STORE.states)
    print(f"rtl_tl_self: {_ok(ok)}", file=out)
    return ok


DEMOS: dict[str, Callable] = {
    "fastprod": demo_fastprod,
    "qperm": demo_qperm,
    "quicksort": demo_quicksort,
    "cycle": demo_cycle,
}

# -- refinement checks -----------------------------------------------------------------


def _refine_iqsort(args):
    return check_iqsort_refines_slowsort(args.max_len, args.alphabet, range(args.offsets))


def _refine_swap_rcons(args):
    return check_swap_rcons_suite(args.max_len, args.alphabet, range(args.offsets))


CHECKS: dict[str, Callable] = {
    "iqsort-slowsort": _refine_iqsort,
    "swap-rcons": _refine_swap_rcons,
}

# -- commands ------------------------------------------------------------------------


def cmd_laws(args, out) -> int:
    cfg = CheckConfig(args.seed, args.exhaustive_bound, args.trials)
    reports = run_suite(args.suite, cfg, workers=args.workers)
    out.write(render_json(reports) if args.format == "json" else render_text(reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_demo(args, out) -> int:
    if args.name not in DEMOS:
        raise UnknownDemo(f"unknown demo {args.name!r}; choose from {', '.join(DEMOS)}")
    if args.name in ("fastprod", "qperm", "quicksort") and args.list is None:
        raise argparse.ArgumentTypeError(f"demo {args.name} needs --list")
    return 0 if DEMOS[args.name](args, out) else 1


def cmd_refine(args, out) -> int:
    if args.name not in CHECKS:
        raise UnknownCheck(f"unknown check {args.name!r}; choose from {', '.join(CHECKS)}")
    if min(args.max_len, args.alphabet, args.offsets) < 0:
        raise argparse.ArgumentTypeError("bounds must be non-negative")
    result = CHECKS[args.name](args)
    lists = sum(args.alphabet**n for n in range(args.max_len + 1))
    print(
        f"{args.name}: max_len={args.max_len} alphabet={args.alphabet} offsets={args.offsets} "
        f"stores={len(REFINEMENT_STORES)}",
        file=out,
    )
    print(f"lists per position: {lists}; instances checked: {result.instances}", file=out)
    if result.holds:
        print("refinement holds", file=out)
        return 0
    print(f"refinement FAILS; witness: {render(result.witness)}", file=out)
    return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="effectlaws", description="Check monad laws and effectful programs.")
    sub = p.add_subparsers(dest="command", required=True)

    laws = sub.add_parser("laws", help="run a law suite")
    laws.add_argument("--suite", required=True, help=f"one of: {', '.join(suite_names())}")
    laws.add_argument("--seed", type=int, default=0)
    laws.add_argument("--exhaustive-bound", type=int, default=4, help="enumerated items per parameter (default 4)")
    laws.add_argument("--trials", type=int, default=200, help="seeded random instances per law (default 200)")
    laws.add_argument("--format", choices=("text", "json"), default="text")
    laws.add_argument("--workers", type=int, default=1, help="threads for independent laws (default 1)")
    laws.set_defaults(run=cmd_laws)

    demo = sub.add_parser("demo", help="run a worked example")
    demo.add_argument("name", help=f"one of: {', '.join(DEMOS)}")
    demo.add_argument("--list", type=parse_list, help="comma-separated naturals, e.g. 3,1,2")
    demo.add_argument("--offset", type=int, default=0, help="array offset for quicksort (default 0)")
    demo.add_argument("--type", choices=("bool", "nat"), default="nat", help="element type for cycle")
    demo.add_argument("--a", default="1", help="first cycle element (default 1)")
    demo.add_argument("--b", default="2", help="second cycle element (default 2)")
    demo.set_defaults(run=cmd_demo)

    refine = sub.add_parser("refine", help="run a refinement check")
    refine.add_argument("name", help=f"one of: {', '.join(CHECKS)}")
    refine.add_argument("--max-len", type=int, default=4)
    refine.add_argument("--alphabet", type=int, default=3)
    refine.add_argument("--offsets", type=int, default=3, help="offsets 0..N-1 (default 3)")
    refine.set_defaults(run=cmd_refine)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args, out)
    except argparse.ArgumentTypeError as e:
        parser.error(str(e))
    except EffectLawsError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

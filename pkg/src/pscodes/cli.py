"""Command-line surface: params, encode, compose, corrupt, decode, verify.

Bits travel as ASCII '0'/'1' strings; field-valued messages (scheme c2) as
comma-separated integers.  Every output is canonically serialized, so reruns
with identical inputs are byte-identical.  Exit status is 0 only for
success / all-recovered; typed failures exit nonzero with a machine-readable
``error category=...`` line on stderr.
"""

from __future__ import annotations

import argparse
import sys

from .channel import ErrorPlan, corrupt, random_plan
from .compositions import CompositionMultiset
from .errors import DecodeFailure
from .oracle import Exhaustive, Randomized, sweep
from .results import Verdict
from .schemes import (
    ADAPTERS,
    SCHEME_IDS,
    build_params,
    c1_codebook,
    params_to_text,
    parse_params_text,
)


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(category: str, message: str, code: int = 1) -> int:
    print(f"error category={category}: {message}", file=sys.stderr)
    return code


def _load_params(path: str):
    return parse_params_text(_read(path))


def cmd_params(args) -> int:
    d = {"scheme": args.scheme}
    for key in ("p", "n", "n1", "n2", "t", "t1", "h", "k", "good_t"):
        value = getattr(args, key, None)
        if value is not None:
            d[key] = str(value)
    if args.dominant:
        d["dominant"] = args.dominant
    try:
        params = build_params(d)
    except (ValueError, KeyError) as exc:
        return _fail("invalid-params", str(exc), 2)
    text = params_to_text(args.scheme, params)
    if args.scheme == "c3":
        from .single_recon import c3_validate

        rep = c3_validate(params)
        print(f"syndrome fit: bch dimension {rep.fit[0]} >= packed {rep.fit[1]}")
        print(f"bch bound: 2t-1 = {rep.bch_bound[0]} <= {rep.bch_bound[1]}")
        for w in rep.warnings:
            print(f"warning: {w}")
    print(text, end="")
    if args.out:
        _write(args.out, text)
    return 0


def _parse_message(scheme: str, raw: str, params):
    if scheme == "c1":
        book = c1_codebook(params)
        index = int(raw)
        if not 0 <= index < len(book):
            raise ValueError(f"codeword index {index} outside 0..{len(book) - 1}")
        return book[index]
    if scheme == "c2":
        p = params.p
        return tuple(int(tok) % p for tok in raw.split(","))
    if scheme == "multi":
        return tuple(raw.split(","))
    return raw


def cmd_encode(args) -> int:
    scheme, params = _load_params(args.params)
    try:
        msg = _parse_message(scheme, args.message, params)
        strings = ADAPTERS[scheme].encode(params, msg)
    except (ValueError, KeyError) as exc:
        return _fail("invalid-message", str(exc), 2)
    _write(args.out, "".join(s + "\n" for s in strings))
    return 0


def cmd_compose(args) -> int:
    if args.bits:
        strings = args.bits.split(",")
    else:
        strings = [ln.strip() for ln in _read(getattr(args, "in")).splitlines() if ln.strip()]
    try:
        x = CompositionMultiset.of_strings(strings)
    except ValueError as exc:
        return _fail("invalid-bits", str(exc), 2)
    _write(args.out, x.to_text())
    return 0


def cmd_corrupt(args) -> int:
    try:
        x = CompositionMultiset.from_text(_read(args.multiset))
        plan = random_plan(x, args.budget, args.seed)
        y = corrupt(x, plan)
    except ValueError as exc:
        return _fail("invalid-plan", str(exc), 2)
    print(f"seed={args.seed}")
    print(f"events={len(plan)}")
    _write(args.out, y.to_text())
    plan_text = f"# seed={args.seed}\n" + plan.to_text()
    if args.plan_out:
        _write(args.plan_out, plan_text)
    return 0


def cmd_apply_plan(args) -> int:
    try:
        x = CompositionMultiset.from_text(_read(args.multiset))
        plan = ErrorPlan.from_text(_read(args.plan))
        y = corrupt(x, plan)
    except ValueError as exc:
        return _fail("invalid-plan", str(exc), 2)
    _write(args.out, y.to_text())
    return 0


def cmd_decode(args) -> int:
    scheme, params = _load_params(args.params)
    try:
        y = CompositionMultiset.from_text(_read(args.multiset))
    except ValueError as exc:
        return _fail("invalid-multiset", str(exc), 2)
    try:
        verdict, strings, message = ADAPTERS[scheme].decode(params, y)
    except DecodeFailure as exc:
        print("verdict=failed")
        return _fail(type(exc).__name__, str(exc))
    if scheme == "c2":
        message_text = ",".join(str(v) for v in message)
    elif scheme == "multi":
        message_text = ",".join(message)
    else:
        message_text = message
    lines = [
        f"verdict={verdict.value}",
        f"message={message_text}",
        f"codeword={','.join(strings)}",
    ]
    adapter_sizes = _consumed_sizes(scheme, params, y)
    lines.append("consumed_sizes=" + ",".join(str(j) for j in adapter_sizes))
    out = "".join(ln + "\n" for ln in lines)
    _write(args.out, out)
    if args.out:
        print(f"verdict={verdict.value}")
    if verdict is not Verdict.RECOVERED:
        return _fail(verdict.value, "decoder did not recover a consistent codeword")
    return 0


def _consumed_sizes(scheme: str, params, y) -> tuple[int, ...]:
    if scheme == "c1":
        return tuple(range(1, params.n + 1))
    if scheme == "c2":
        return tuple(j * params.block for j in range(1, params.n1 + 1))
    if scheme == "c3":
        return tuple(range(1, params.n2 + params.n1 + 1))
    if scheme == "c4":
        return tuple(range(params.n2 - params.n1, params.n + 1))
    return tuple(range(1, params.n + 1))


def cmd_verify(args) -> int:
    scheme, params = _load_params(args.params)
    if args.exhaustive:
        sample = (args.messages, args.seed) if args.messages else None
        mode = Exhaustive(budget=args.budget, message_sample=sample)
    else:
        mode = Randomized(seed=args.seed, messages=args.messages or 100,
                          plans_per_message=args.plans, budget=args.budget)
    try:
        report = sweep(scheme, params, mode)
    except ValueError as exc:
        return _fail("infeasible-sweep", str(exc), 2)
    sys.stdout.write(report.to_text())
    if args.report_dir:
        from .report import write_report_files

        paths = write_report_files([report], args.report_dir)
        for kind, path in sorted(paths.items()):
            print(f"wrote {kind}: {path}")
    if report.all_recovered and report.mismatches == 0:
        return 0
    return _fail("sweep-incomplete",
                 f"recovered {report.recovered}/{report.total}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pscodes",
        description="Encode, corrupt, and reconstruct strings from prefix-suffix compositions.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="validate parameters and emit a canonical file")
    p.add_argument("--scheme", required=True, choices=SCHEME_IDS)
    for key in ("p", "n", "n1", "n2", "t", "t1", "h", "k", "good-t"):
        p.add_argument(f"--{key}", dest=key.replace("-", "_"), type=int)
    p.add_argument("--dominant", choices=("enumerative", "interleave"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("encode", help="message -> codeword bits")
    p.add_argument("--params", required=True)
    p.add_argument("--message", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("compose", help="codeword bits -> composition multiset")
    p.add_argument("--bits", help="bit string, or comma-separated strings for multi")
    p.add_argument("--in", dest="in", help="file with one bit string per line")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("corrupt", help="inject a random budgeted error plan")
    p.add_argument("--multiset", required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--plan-out", dest="plan_out")
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("apply-plan", help="apply a stored error plan")
    p.add_argument("--multiset", required=True)
    p.add_argument("--plan", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_apply_plan)

    p = sub.add_parser("decode", help="multiset -> message + verdict")
    p.add_argument("--params", required=True)
    p.add_argument("--multiset", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="oracle sweep with report and figure")
    p.add_argument("--params", required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("--messages", type=int)
    p.add_argument("--plans", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report-dir", dest="report_dir")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

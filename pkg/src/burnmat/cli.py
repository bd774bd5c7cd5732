"""Command-line front end.

Subcommands:

* ``verify <suite>`` runs registered claim suites and emits a report
  (exit code 0 = everything proved/observed-agreeing, 2 = some UNKNOWN,
  3 = a refutation or a recorded discrepancy);
* ``decide`` answers one ideal-membership question with a certificate,
  an obstruction, or UNKNOWN;
* ``order`` computes element orders in the metabelian quotient (``--in fs``)
  or the t-bearing quotient group (``--in g``);
* ``kernel`` runs the staged kernel-membership probe;
* ``expand`` prints a truncated (t-1)-adic expansion with sigma-degree
  floors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import burnside, ideal, series
from .claims import SUITES, RunConfig, run_suite
from .ideal import (
    CYCLOTOMIC,
    CYCLOTOMIC_TIMES_SIGMA,
    SIGMA_POWER,
    Budget,
    IdealSpec,
    decide,
    verdict_to_json,
)
from .laurent import ExponentSpec, Ring, format_poly, is_prime_power, parse_poly
from .matgroup import parse_word
from .report import emit_report, exit_code_for, report_json, report_text

EXIT_OK = 0
EXIT_UNKNOWN = 2
EXIT_REFUTED = 3


def _q_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad q list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burnmat",
        description="Exact verification of matrix-group and ideal-membership "
        "claims over Laurent polynomial rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a claim suite and emit a report")
    p_verify.add_argument("suite", choices=SUITES + ("all",))
    p_verify.add_argument("--q", type=_q_list, default=None, help="comma-separated prime powers")
    p_verify.add_argument("--window", type=int, default=None, help="unit window W")
    p_verify.add_argument("--box", type=int, default=None, help="multiplier box B")
    p_verify.add_argument("--trunc", type=int, default=None, help="series truncation D")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--samples", type=int, default=None, help="override sample counts")
    p_verify.add_argument("-o", "--output", default=None, help="write the report here")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument(
        "--figures", action="store_true", help="render a summary figure beside the report"
    )

    p_decide = sub.add_parser("decide", help="one ideal-membership question")
    p_decide.add_argument("--target", required=True, help="polynomial text, e.g. '1-2*x+x^2'")
    p_decide.add_argument(
        "--ideal",
        required=True,
        help="cyclo | cyclo-sigma | sigma^m (e.g. sigma^3)",
    )
    p_decide.add_argument("--q", type=int, default=None, help="prime power (cyclotomic kinds)")
    p_decide.add_argument("--rank", type=int, default=2)
    p_decide.add_argument("--window", type=int, default=None)
    p_decide.add_argument("--box", type=int, default=None)
    p_decide.add_argument("--format", choices=("text", "json"), default="text")

    p_order = sub.add_parser("order", help="order of a word in the exponent-q quotients")
    p_order.add_argument("--word", required=True)
    p_order.add_argument("--q", type=int, required=True)
    p_order.add_argument("--in", dest="group", choices=("fs", "g"), default="g")
    p_order.add_argument("--rank", type=int, default=2)
    p_order.add_argument("--format", choices=("text", "json"), default="text")

    p_kernel = sub.add_parser("kernel", help="staged kernel-membership probe")
    p_kernel.add_argument("--word", required=True)
    p_kernel.add_argument("--q", type=int, required=True)
    p_kernel.add_argument("--trunc", type=int, default=None)
    p_kernel.add_argument("--rank", type=int, default=2)
    p_kernel.add_argument("--format", choices=("text", "json"), default="text")

    p_expand = sub.add_parser("expand", help="truncated (t-1)-adic expansion")
    p_expand.add_argument("--word", required=True)
    p_expand.add_argument("--trunc", type=int, default=None)
    p_expand.add_argument("--q", type=int, default=None, help="sets the default truncation")
    p_expand.add_argument("--rank", type=int, default=2)
    p_expand.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _cmd_verify(args) -> int:
    for q in args.q or []:
        if not is_prime_power(q):
            print(
                f"error: q = {q} is not a prime power; the exponent-q "
                "constructions are stated for prime powers only",
                file=sys.stderr,
            )
            return EXIT_REFUTED
    config = RunConfig(
        seed=args.seed,
        window=args.window,
        box=args.box,
        trunc=args.trunc,
        samples=args.samples,
    )
    results = run_suite(args.suite, args.q, config)
    body = emit_report(
        results,
        fmt=args.format,
        path=args.output,
        config={
            "suite": args.suite,
            "q": args.q,
            "seed": args.seed,
            "window": args.window,
            "box": args.box,
            "trunc": args.trunc,
            "samples": args.samples,
        },
        figures=args.figures,
    )
    if args.output:
        print(f"report written to {args.output}")
    else:
        sys.stdout.write(body)
    return exit_code_for(results)


def _parse_ideal(args) -> IdealSpec:
    text = args.ideal.lower()
    if text.startswith("sigma^"):
        m = int(text.split("^", 1)[1])
        return IdealSpec(SIGMA_POWER, m, window=0, rank=args.rank)
    if text in ("cyclo", "cyclotomic"):
        kind = CYCLOTOMIC
    elif text in ("cyclo-sigma", "cyclotomic-sigma"):
        kind = CYCLOTOMIC_TIMES_SIGMA
    else:
        raise ValueError(f"unknown ideal {args.ideal!r}")
    if args.q is None:
        raise ValueError("cyclotomic ideals need --q")
    window = args.window if args.window is not None else ExponentSpec.from_q(args.q).ephi
    return IdealSpec(kind, args.q, window=window, rank=args.rank)


def _cmd_decide(args) -> int:
    try:
        spec = _parse_ideal(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUTED
    ring = Ring(args.rank, False)
    target = parse_poly(args.target, ring)
    budget = None
    if args.window is not None or args.box is not None:
        base = Budget.for_q(args.q) if spec.kind != SIGMA_POWER else Budget(spec.window, spec.value + 1)
        budget = Budget(
            window=args.window if args.window is not None else base.window,
            box=args.box if args.box is not None else base.box,
        )
    verdict = decide(target, spec, budget)
    payload = verdict_to_json(verdict, target, spec)
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"{verdict.status}: {format_poly(target)}")
        if verdict.certificate is not None:
            for g, m in verdict.certificate.parts:
                print(f"  ({format_poly(g)}) * ({format_poly(m)})")
        if verdict.obstruction is not None:
            print(f"  {verdict.obstruction.reason}")
            print(f"  hom: {verdict.obstruction.hom}  image: {list(verdict.obstruction.value)}")
        if verdict.bounds is not None:
            print(f"  bounds: {verdict.bounds}")
    return {"PROVED": EXIT_OK, "REFUTED": EXIT_REFUTED, "UNKNOWN": EXIT_UNKNOWN}[verdict.status]


def _cmd_order(args) -> int:
    if not is_prime_power(args.q):
        print(f"error: q = {args.q} is not a prime power", file=sys.stderr)
        return EXIT_REFUTED
    word = parse_word(args.word, args.rank)
    if args.group == "fs":
        verdict = burnside.order_in_FS(word, args.q)
    else:
        verdict = burnside.order_in_G(word, args.q)
    payload = {
        "word": args.word,
        "q": args.q,
        "group": args.group,
        "kind": verdict.kind,
        "n": verdict.n,
        "falsified": verdict.falsified,
        "evidence": verdict.evidence,
    }
    if args.format == "json":
        from .report import _sanitize

        print(json.dumps(_sanitize(payload), indent=2, sort_keys=True))
    else:
        if verdict.kind == "finite":
            print(f"order divides {verdict.n} (proved)")
        elif verdict.kind == "infinite":
            print(f"infinite order: determinant {verdict.evidence['determinant']}")
        else:
            print("unknown at the configured budgets")
        if verdict.falsified:
            print("FALSIFICATION: an identity expected to hold was refuted", file=sys.stderr)
    if verdict.falsified:
        return EXIT_REFUTED
    return EXIT_OK if verdict.kind in ("finite", "infinite") else EXIT_UNKNOWN


def _cmd_kernel(args) -> int:
    if not is_prime_power(args.q):
        print(f"error: q = {args.q} is not a prime power", file=sys.stderr)
        return EXIT_REFUTED
    word = parse_word(args.word, args.rank)
    verdict = burnside.kernel_probe(word, args.q, args.trunc)
    payload = {
        "word": args.word,
        "q": args.q,
        "status": verdict.status,
        "stage": verdict.stage,
        "evidence": verdict.evidence,
    }
    if args.format == "json":
        from .report import _sanitize

        print(json.dumps(_sanitize(payload), indent=2, sort_keys=True))
    else:
        print(f"{verdict.status} (decided at stage: {verdict.stage})")
        for k, v in verdict.evidence.items():
            print(f"  {k}: {v}")
    return EXIT_OK if verdict.status != "unknown" else EXIT_UNKNOWN


def _cmd_expand(args) -> int:
    trunc = args.trunc
    if trunc is None:
        trunc = ExponentSpec.from_q(args.q).ephi + 2 if args.q else 4
    word = parse_word(args.word, args.rank)
    s = series.expand(word, trunc)
    floors = series.coeff_sigma_floor(s)
    if args.format == "json":
        payload = {
            "word": args.word,
            "trunc": trunc,
            "coefficients": {
                str(i): [[format_poly(p) for p in row] for row in s.coeffs[i].rows]
                for i in range(trunc + 1)
            },
            "sigma_floors": {str(i): ("inf" if f == float("inf") else f) for i, f in floors.items()},
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for i in range(trunc + 1):
            mat = s.coeffs[i]
            label = "A0 (t=1 image)" if i == 0 else f"A{i} (order {i})"
            if i and mat.is_zero():
                print(f"{label}: 0")
                continue
            print(f"{label}:")
            for row in mat.rows:
                print("  [" + ", ".join(format_poly(p) for p in row) + "]")
            if i in floors:
                print(f"  sigma-degree floor: {floors[i]}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "verify": _cmd_verify,
        "decide": _cmd_decide,
        "order": _cmd_order,
        "kernel": _cmd_kernel,
        "expand": _cmd_expand,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())

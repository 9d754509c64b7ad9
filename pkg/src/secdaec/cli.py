"""Command-line front end.

Bit strings are written d1 first (leftmost), matching the printed matrices.
Every command accepts ``--json`` for machine-readable output (one JSON
object on stdout). Exit status: 0 success, 1 property failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import complexity, netlist, registry
from .campaign import MODELS, CampaignConfig, run_campaign
from .codec import MODES, decode, encode
from .gf2 import BitVector
from .verifier import inject, oracle_mismatches, verify_code

ENV_CODE = "SECDAEC_CODE"


class UsageError(Exception):
    pass


def _bits(text: str, length: int | None, what: str) -> BitVector:
    try:
        v = BitVector.from_str(text)
    except ValueError as exc:
        raise UsageError(f"{what}: {exc}") from None
    if length is not None and len(v) != length:
        raise UsageError(f"{what} has {len(v)} bits, expected {length}")
    return v


def _spec(args) -> registry.CodeSpec:
    name = args.code or os.environ.get(ENV_CODE)
    if not name:
        raise UsageError(f"--code is required (or set {ENV_CODE})")
    try:
        return registry.builtin(name)
    except registry.UnknownCodeError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, record: dict, text: str):
    print(json.dumps(record, indent=2) if args.json else text)


def cmd_codes(args) -> int:
    if args.action == "list":
        specs = registry.all_builtin()
        record = {"codes": [{"name": s.name, "n": s.n, "k": s.k} for s in specs]}
        text = "\n".join(f"{s.name:<6} n={s.n:<3} k={s.k}" for s in specs)
        _emit(args, record, text)
        return 0
    spec = _spec(args)
    record = {
        "name": spec.name,
        "n": spec.n,
        "k": spec.k,
        "h": [list(spec.h.row(i)) for i in range(spec.r)],
        "q": [list(p) for p in registry.q_matrix(spec).positions],
    }
    _emit(args, record, spec.to_text().rstrip())
    return 0


def cmd_bound(args) -> int:
    b = registry.parity_bound(args.k)
    record = {"k": args.k, "parity": b.value, "raw": round(b.raw, 6), "in_range": b.in_range}
    text = f"k={args.k}: {b.value} parity bits (raw {b.raw:.3f})"
    if not b.in_range:
        lo, hi = registry.PARITY_BOUND_RANGE
        text += f"\nwarning: the fit is only claimed for {lo} <= k <= {hi}"
    _emit(args, record, text)
    return 0


def cmd_encode(args) -> int:
    spec = _spec(args)
    cw = encode(spec, _bits(args.data, spec.k, "data"))
    _emit(args, {"code": spec.name, "data": args.data, "codeword": cw.to_str()}, cw.to_str())
    return 0


def _outcome_record(out) -> dict:
    return {
        "kind": out.kind.name,
        "syndrome": out.syndrome.to_str(),
        "position": out.position,
        "corrected": out.corrected.to_str() if out.corrected is not None else None,
        "data": out.data.to_str() if out.data is not None else None,
    }


def cmd_decode(args) -> int:
    spec = _spec(args)
    out = decode(spec, _bits(args.word, spec.n, "word"), args.mode)
    rec = _outcome_record(out)
    text = "\n".join(f"{k}: {v}" for k, v in rec.items() if v is not None)
    _emit(args, rec, text)
    return 0


def cmd_inject(args) -> int:
    word = _bits(args.word, None, "word")
    try:
        positions = [int(p) for p in args.flip.split(",") if p.strip()]
        out = inject(word, positions)
    except ValueError as exc:
        raise UsageError(f"--flip: {exc}") from None
    _emit(args, {"word": args.word, "flip": positions, "result": out.to_str()}, out.to_str())
    return 0


def cmd_verify(args) -> int:
    spec = _spec(args)
    report = verify_code(spec, args.mode)
    rec = report.as_dict()
    if args.exhaustive:
        rec["oracle_mismatches"] = oracle_mismatches(spec, args.mode)
    stats = report.nonadjacent_double_stats
    lines = [
        f"code {spec.name} ({args.mode})",
        f"single errors corrected:   {'yes' if report.sec_ok else 'NO'} ({report.singles_checked} patterns)",
        f"adjacent pairs corrected:  {'yes' if report.daec_ok else 'NO'} ({report.pairs_checked} patterns)",
        f"odd singles / even pairs:  {'yes' if report.parity_split_ok else 'no'}",
        "non-adjacent doubles:      "
        + ", ".join(f"{k}={v}" for k, v in stats.as_dict().items()),
    ]
    if args.exhaustive:
        lines.append(f"decoder vs lookup oracle:  {rec['oracle_mismatches']} mismatches over {1 << spec.n} words")
    for c in report.counterexamples[:10]:
        lines.append(f"counterexample: flips {c.pattern} syndrome {c.syndrome} collides with {c.collides_with}")
    _emit(args, rec, "\n".join(lines))
    ok = report.passed and rec.get("oracle_mismatches", 0) == 0
    return 0 if ok else 1


def cmd_complexity(args) -> int:
    if args.table:
        specs = registry.all_builtin()
        rec = {
            kind: {
                mode: {s.name: (complexity.area(s, mode) if kind == "area" else complexity.delay(s, mode)).as_dict() for s in specs}
                for mode in MODES
            }
            for kind in ("area", "delay")
        }
        text = "Area\n" + complexity.render_table(specs, "area")
        text += "\n\nCritical path\n" + complexity.render_table(specs, "delay")
        _emit(args, rec, text)
        return 0
    spec = _spec(args)
    a = complexity.area(spec, args.mode)
    d = complexity.delay(spec, args.mode)
    rec = {"code": spec.name, "mode": args.mode, "area": a.as_dict(), "delay": d.as_dict()}
    text = "\n".join(
        [
            f"area:  " + "  ".join(f"{k} {v}" for k, v in a.as_dict().items()),
            f"delay: " + "  ".join(f"{k} {v}" for k, v in d.as_dict().items()),
        ]
    )
    _emit(args, rec, text)
    return 0


def cmd_netlist(args) -> int:
    spec = _spec(args)
    if args.target == "encoder":
        nl = netlist.emit_encoder(spec)
    else:
        nl = netlist.emit_decoder(spec, args.mode)
    hdl = netlist.serialize_hdl(nl)
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(hdl)
    rec = {
        "module": nl.name,
        "file": args.out,
        "census_core": netlist.census(nl).as_dict(),
        "census_all": netlist.census(nl, None).as_dict(),
    }
    text = hdl.rstrip() if not args.out or args.out == "-" else f"wrote {args.out} ({len(nl.gates)} gates)"
    _emit(args, rec, text)
    return 0


def cmd_campaign(args) -> int:
    spec = _spec(args)
    model, p = args.model, 0.0
    if model.startswith("bernoulli"):
        try:
            p = float(model.partition(":")[2] or args.p)
        except ValueError:
            raise UsageError(f"bad bernoulli probability in {model!r}") from None
        model = "bernoulli"
    try:
        config = CampaignConfig(spec.name, args.mode, args.trials, model, p, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_campaign(config, jobs=args.jobs)
    rec = report.as_dict()
    text = "\n".join(f"{k}: {v}" for k, v in rec["counts"].items())
    text += f"\nresidual word error rate: {report.residual_word_error_rate:.6g}"
    _emit(args, rec, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object instead of text")

    def code_arg(p):
        p.add_argument("--code", help=f"registry name, e.g. 8-3 (default: ${ENV_CODE})")

    def mode_arg(p, default="daec"):
        p.add_argument("--mode", choices=MODES, default=default)

    parser = argparse.ArgumentParser(
        prog="secdaec",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("codes", parents=[common], help="list or show registry codes")
    p.add_argument("action", choices=["list", "show"])
    code_arg(p)
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("bound", parents=[common], help="parity-bit estimate for k data bits")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("encode", parents=[common], help="encode a data word")
    code_arg(p)
    p.add_argument("--data", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="decode a received word")
    code_arg(p)
    mode_arg(p)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("inject", parents=[common], help="flip 1-based positions of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--flip", required=True, help="comma-separated positions, e.g. 2,3")
    p.set_defaults(func=cmd_inject)

    p = sub.add_parser("verify", parents=[common], help="check SEC / DAEC properties")
    code_arg(p)
    mode_arg(p)
    p.add_argument("--exhaustive", action="store_true", help="also compare with the lookup oracle on all 2^n words")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("complexity", parents=[common], help="gate-count area and delay")
    code_arg(p)
    mode_arg(p, "secded")
    p.add_argument("--table", action="store_true", help="all codes, both modes, beside published rows")
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("netlist", parents=[common], help="emit structural HDL")
    code_arg(p)
    mode_arg(p)
    p.add_argument("--target", choices=["encoder", "decoder"], default="decoder")
    p.add_argument("--out", help="output file ('-' or omitted: stdout)")
    p.set_defaults(func=cmd_netlist)

    p = sub.add_parser("campaign", parents=[common], help="Monte Carlo fault injection")
    code_arg(p)
    mode_arg(p)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--model", default="adjacent-double", help=f"one of {', '.join(MODELS)} (bernoulli:P allowed)")
    p.add_argument("--p", type=float, default=0.01, help="bit flip probability for bernoulli")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"secdaec {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success / identity holds / sequence valid, 1 verification
false or nothing found, 2 usage or input errors.  `--json` switches every
subcommand to the documented machine-readable schemas.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bricks import cross_validate, enumerate_maximal_chains
from .framed import MutationSequence
from .presets import preset, preset_names
from .qdilog import dt_product, identity_check
from .quiver import Quiver
from .search import SearchConfig, count_mgs, enumerate_mgs, shortest_mgs, verify_sequence
from .transforms import restrict_mgs, rotate


class UsageError(Exception):
    pass


def load_quiver(source: str) -> Quiver:
    """A path to a quiver JSON file, or a preset name such as a2 or q222."""
    path = Path(source)
    if path.exists():
        try:
            return Quiver.from_json(path.read_text())
        except ValueError as exc:
            raise UsageError(f"{source}: {exc}") from exc
    try:
        return preset(source)
    except KeyError:
        raise UsageError(
            f"{source!r} is neither a file nor a preset "
            f"(presets: {', '.join(preset_names())})"
        ) from None


def parse_seq(text: str) -> MutationSequence:
    try:
        return MutationSequence.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(payload: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def _quiver_human(q: Quiver) -> str:
    arrows = ", ".join(f"{i}->{j}" + (f" x{m}" if m > 1 else "") for i, j, m in q.arrows())
    return f"vertices: {q.n}; arrows: {arrows or '(none)'}"


def cmd_mutate(args) -> int:
    q = load_quiver(args.quiver)
    try:
        out = q.mutate(args.at)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(out.to_dict(), args.json, _quiver_human(out))
    return 0


def cmd_search(args) -> int:
    q = load_quiver(args.quiver)
    mode = args.mode.replace("-", "_")
    if args.shortest:
        seq = shortest_mgs(q, args.max_len)
        found = seq is not None
        payload = {"shortest": str(seq) if found else None}
        _emit(payload, args.json, f"shortest: {seq if found else 'none found'}")
        return 0 if found else 1
    strategy = "count_only" if args.count else "dfs_all"
    cfg = SearchConfig(max_len=args.max_len, mode=mode, strategy=strategy, dedup=args.dedup)
    report = enumerate_mgs(q, cfg)
    payload = report.to_dict()
    if args.count:
        del payload["sequences"]
        human = f"count: {report.count} (truncated: {report.truncated})"
    else:
        lines = [str(s) for s in report.sequences]
        human = "\n".join(lines + [f"count: {report.count} (truncated: {report.truncated})"])
    _emit(payload, args.json, human)
    return 0 if report.count > 0 else 1


def cmd_verify(args) -> int:
    q = load_quiver(args.quiver)
    seq = parse_seq(args.seq)
    try:
        report = verify_sequence(q, seq, args.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    steps = [
        {"vertex": s.vertex, "green": s.green, "c_vector": list(s.c_vector.entries)}
        for s in report.steps
    ]
    payload = {
        "valid": report.valid,
        "mode": report.mode,
        "steps": steps,
        "all_red": report.all_red,
        "permutation": list(report.permutation.image) if report.permutation else None,
        "reason": report.reason,
    }
    if report.valid:
        human = f"valid {report.mode} sequence"
        if report.permutation is not None:
            human += f"; permutation: {list(report.permutation.image)}"
    else:
        human = f"invalid: {report.reason}"
    _emit(payload, args.json, human)
    return 0 if report.valid else 1


def cmd_dt(args) -> int:
    q = load_quiver(args.quiver)
    seq = parse_seq(args.seq)
    try:
        series = dt_product(q, seq, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = series.to_dict()
    lines = [
        f"y^{term['y']}: {series.coefficient(tuple(term['y']))}"
        for term in payload["terms"]
    ]
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_identity(args) -> int:
    q = load_quiver(args.quiver)
    s1 = parse_seq(args.seq1)
    s2 = parse_seq(args.seq2)
    try:
        a = dt_product(q, s1, args.degree)
        b = dt_product(q, s2, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    equal = identity_check(a, b)
    _emit(
        {"equal": equal, "degree": args.degree},
        args.json,
        f"identity {'holds' if equal else 'fails'} at degree {args.degree}",
    )
    return 0 if equal else 1


def cmd_restrict(args) -> int:
    q = load_quiver(args.quiver)
    seq = parse_seq(args.seq)
    try:
        keep = sorted({int(v) for v in args.keep.split(",") if v.strip()})
    except ValueError as exc:
        raise UsageError(f"bad --keep value: {exc}") from exc
    if not keep:
        raise UsageError("--keep must list at least one vertex")
    try:
        sub, labels = q.full_subquiver(keep)
        restricted = restrict_mgs(q, seq, keep)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {
        "sequence": str(restricted),
        "subquiver": sub.to_dict(),
        "labels": list(labels),
    }
    _emit(
        payload,
        args.json,
        f"restricted: {restricted}\nsubquiver: {_quiver_human(sub)} "
        f"(new vertex v = original {list(labels)})",
    )
    return 0


def cmd_rotate(args) -> int:
    q = load_quiver(args.quiver)
    seq = parse_seq(args.seq)
    try:
        new_q, new_seq = rotate(q, seq)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"quiver": new_q.to_dict(), "sequence": str(new_seq)}
    _emit(payload, args.json, f"quiver: {_quiver_human(new_q)}\nsequence: {new_seq}")
    return 0


def cmd_bricks(args) -> int:
    if args.cross_validate:
        try:
            ok = cross_validate(args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        _emit(
            {"n": args.n, "cross_validate": ok},
            args.json,
            f"cross-validation for n={args.n}: {'agree' if ok else 'DISAGREE'}",
        )
        return 0 if ok else 1
    try:
        chains = enumerate_maximal_chains(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    serial = [[[iv.a, iv.b] for iv in c.intervals] for c in chains]
    human = "\n".join(" ".join(str(iv) for iv in c.intervals) for c in chains)
    _emit({"n": args.n, "chains": serial, "count": len(chains)}, args.json, human)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenseq",
        description="Quiver mutation, maximal green sequences, and DT products.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("GREENSEQ_THREADS", "1")),
        help="worker count for searches (reserved; current searches are single-threaded)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--quiver", required=True, help="quiver JSON file or preset name")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(fn=fn)
        return p

    p = add("mutate", cmd_mutate, help="mutate a quiver at one vertex")
    p.add_argument("--at", type=int, required=True, help="1-based vertex")

    p = add("search", cmd_search, help="enumerate maximal green sequences")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--shortest", action="store_true", help="breadth-first shortest only")
    p.add_argument("--count", action="store_true", help="count without storing")
    p.add_argument("--mode", default="maximal-green", choices=["maximal-green", "reddening"])
    p.add_argument("--dedup", action="store_true", help="memoize states during the search")

    p = add("verify", cmd_verify, help="replay and check a mutation sequence")
    p.add_argument("--seq", required=True, help="comma-separated vertices, e.g. 2,1,2")
    p.add_argument("--mode", default="maximal-green",
                   choices=["green", "maximal-green", "reddening"])

    p = add("dt", cmd_dt, help="refined DT product along a sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--degree", type=int, required=True, help="truncation order")

    p = add("identity", cmd_identity, help="compare DT products of two sequences")
    p.add_argument("--seq1", required=True)
    p.add_argument("--seq2", required=True)
    p.add_argument("--degree", type=int, required=True)

    p = add("restrict", cmd_restrict, help="restrict an MGS to a full subquiver")
    p.add_argument("--seq", required=True)
    p.add_argument("--keep", required=True, help="vertices to keep, e.g. 1,3")

    p = add("rotate", cmd_rotate, help="rotate a maximal green sequence")
    p.add_argument("--seq", required=True)

    p = sub.add_parser("bricks", help="maximal brick chains for linear type A")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cross-validate", action="store_true",
                   help="compare against green-sequence c-vectors")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bricks)

    p = sub.add_parser("serve", help="run the explorer HTTP service")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(fn=cmd_serve)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ValueError) as exc:
        # ValueError covers validation of flag values (depth bounds, modes,
        # vertex ranges); internal invariant violations are RuntimeErrors
        # and still surface as crashes.
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

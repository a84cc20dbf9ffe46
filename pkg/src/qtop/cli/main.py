"""The qtop command line.

Exit codes: 0 pass, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..dyadic import Dyadic
from ..finspace import FinSpace, diagram_violations
from ..metrize import MetricBundle, verify_theorem_main
from ..monoid import TopMonoid, canonical_uniformity, synth_subinvariant
from ..quniform import EntourageBase, induced_topology, rotund_check, saturate_mult
from ..relalg import Entourage
from .catalog import load_catalog
from .enumeration import KNOWN_TOPOLOGY_COUNTS, enumerate_topologies
from .serialize import (
    BadDocument,
    Instance,
    base_to_obj,
    bundle_from_obj,
    bundle_to_obj,
    canonical_dumps,
    detect_and_parse,
    space_to_obj,
)
from .suites import SUITES, SearchSpec, run_suite, search

PASS, FAIL, INPUT_ERROR = 0, 1, 2


def _load(path: str, strict: bool):
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise BadDocument(f"cannot read {path}: {exc}") from exc
    value = detect_and_parse(obj, strict=strict)
    if isinstance(value, Instance):
        return value.value
    return value


def _resolve(args, wanted, what: str):
    """A file path or a catalog name resolves to an instance value."""
    ref = getattr(args, what)
    if ref is None:
        raise BadDocument(f"need a {what} (file path or catalog name)")
    if ":" in ref and not Path(ref).exists():
        catalog = load_catalog()
        if ref not in catalog:
            raise BadDocument(f"{ref!r} is not a catalog instance")
        value = catalog[ref].value
    else:
        value = _load(ref, args.strict)
    if not isinstance(value, wanted):
        raise BadDocument(f"{ref!r} is not a {wanted.__name__}")
    return value


def _emit(args, obj: dict, text: str) -> None:
    payload = canonical_dumps(obj) if args.json else text
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _cmd_classify(args) -> int:
    space = _resolve(args, FinSpace, "space")
    rec = space.classify()
    obj = {"flags": rec.flags(), "diagram_violations": diagram_violations(rec)}
    lines = [f"{k}: {v}" for k, v in rec.flags().items()]
    _emit(args, obj, "\n".join(lines) + "\n")
    return PASS if not diagram_violations(rec) else FAIL


def _cmd_base(args) -> int:
    base = _resolve(args, EntourageBase, "base")
    if args.action == "validate":
        obj = {
            "n": base.n,
            "members": len(base.members),
            "is_multiplicative": base.is_multiplicative,
            "is_symmetric": base.is_symmetric,
        }
        _emit(args, obj, f"valid base: {obj}\n")
        return PASS
    if args.action == "saturate":
        sat = base if base.is_multiplicative else saturate_mult(base)
        _emit(args, base_to_obj(sat), f"saturated to {len(sat.members)} members\n")
        return PASS
    if args.action == "rotund":
        work = base if base.is_multiplicative else saturate_mult(base)
        space = induced_topology(work)
        res = rotund_check(work, space, args.kind)
        obj = {"kind": args.kind, "holds": res.holds}
        text = f"{args.kind}-rotund: {res.holds}\n"
        _emit(args, obj, text)
        return PASS if res.holds else FAIL
    raise BadDocument(f"unknown base action {args.action!r}")


def _cmd_synth(args) -> int:
    base = _resolve(args, EntourageBase, "base")
    target = _resolve(args, Entourage, "target") if args.target else base.members[0]
    bundle = verify_theorem_main(base, target)
    obj = bundle_to_obj(bundle)
    failures = [c.check_id for c in bundle.failures()]
    text = f"synthesized bundle; failures: {failures or 'none'}\n"
    _emit(args, obj, text if not args.json else text)
    if args.out and not args.json:
        Path(args.out).write_text(canonical_dumps(obj), encoding="utf-8")
    return PASS if bundle.all_passed else FAIL


def _cmd_verify(args) -> int:
    try:
        obj = json.loads(Path(args.bundle).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise BadDocument(f"cannot read {args.bundle}: {exc}") from exc
    stored = bundle_from_obj(obj)
    fresh = verify_theorem_main(stored.base, stored.target, stored.space)
    claims = None if args.claims in (None, "all") else set(args.claims.split(","))
    report = [
        c
        for c in fresh.report
        if claims is None or c.check_id in claims or (c.item is not None and str(c.item) in claims)
    ]
    same = (
        fresh.d == stored.d
        and fresh.d_reg == stored.d_reg
        and fresh.d_semireg == stored.d_semireg
    )
    failures = [c for c in report if c.status == "fail"]
    out = {
        "recomputation_matches": same,
        "checks": [
            {"check_id": c.check_id, "item": c.item, "status": c.status, "detail": c.detail}
            for c in report
        ],
    }
    lines = [f"recomputation matches stored premetrics: {same}"]
    lines += [f"[{c.status.upper()}] {c.check_id} {c.detail}".rstrip() for c in report]
    _emit(args, out, "\n".join(lines) + "\n")
    return PASS if same and not failures else FAIL


def _cmd_monoid(args) -> int:
    m = _resolve(args, TopMonoid, "monoid")
    if args.action == "validate":
        obj = {"n": m.n, "unit": m.unit, "unit_side": m.unit_side, "valid": True}
        _emit(args, obj, f"valid monoid on {m.n} points\n")
        return PASS
    if args.action == "uniformity":
        base = canonical_uniformity(m, args.which)
        _emit(args, base_to_obj(base), f"{args.which}: {len(base.members)} members\n")
        return PASS
    if args.action == "synth":
        if args.nbhd:
            mask = 0
            for p in args.nbhd.split(","):
                mask |= 1 << int(p)
        else:
            mask = m.space.min_nbhd(m.unit)
        sb = synth_subinvariant(m, mask, args.side)
        obj = {
            "side": sb.side,
            "balanced": sb.balanced,
            "left_subinvariant": sb.left_subinvariant,
            "right_subinvariant": sb.right_subinvariant,
            "ball_in_translate": sb.ball_in_translate,
            "reg_ball_in_hull": sb.reg_ball_in_hull,
            "report": [
                {"check_id": c.check_id, "status": c.status, "detail": c.detail}
                for c in sb.report
            ],
            "bundle": bundle_to_obj(sb.bundle),
        }
        ok = sb.all_passed and sb.bundle.all_passed
        _emit(args, obj, f"synth {sb.side}: {'ok' if ok else 'FAILED'}\n")
        return PASS if ok else FAIL
    raise BadDocument(f"unknown monoid action {args.action!r}")


def _cmd_enumerate(args) -> int:
    n = args.n
    if args.list:
        spaces = list(enumerate_topologies(n))
        obj = {"n": n, "count": len(spaces), "spaces": [space_to_obj(s) for s in spaces]}
        text = "\n".join(str(space_to_obj(s)) for s in spaces) + "\n"
    else:
        count = sum(1 for _ in enumerate_topologies(n))
        obj = {"n": n, "count": count, "known": KNOWN_TOPOLOGY_COUNTS.get(n)}
        text = f"{count} labeled topologies on {n} points\n"
    _emit(args, obj, text)
    return PASS


def _cmd_search(args) -> int:
    spec = SearchSpec(n=args.n, predicate=args.predicate, budget=args.budget, workers=args.workers)
    res = search(spec)
    _emit(args, res.to_obj(), res.to_text())
    return PASS


def _cmd_suite(args) -> int:
    report = run_suite(args.name, scope=args.scope, seed=args.seed, workers=args.workers)
    _emit(args, report.to_obj(), report.to_text())
    return FAIL if report.failed else PASS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtop", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit canonical JSON")
        sp.add_argument("--strict", action="store_true", help="reject non-canonical input")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", help="write output to a file")

    sp = sub.add_parser("classify", help="separation axioms of a space")
    sp.add_argument("space", help="file or catalog name (space:...)")
    common(sp)
    sp.set_defaults(fn=_cmd_classify)

    sp = sub.add_parser("base", help="validate/saturate/rotund-check a base")
    sp.add_argument("action", choices=["validate", "saturate", "rotund"])
    sp.add_argument("base", help="file or catalog name (base:...)")
    sp.add_argument("--kind", choices=["point", "set", "delta", "full"], default="full")
    common(sp)
    sp.set_defaults(fn=_cmd_base)

    sp = sub.add_parser("synth", help="run the metric synthesis for a target entourage")
    sp.add_argument("--base", required=True)
    sp.add_argument("--target", help="entourage file (defaults to the first member)")
    common(sp)
    sp.set_defaults(fn=_cmd_synth)

    sp = sub.add_parser("verify", help="re-verify a stored bundle")
    sp.add_argument("bundle")
    sp.add_argument("--claims", default="all", help="comma list of check ids or item numbers")
    common(sp)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("monoid", help="validate a monoid, build uniformities, synthesize")
    sp.add_argument("action", choices=["validate", "uniformity", "synth"])
    sp.add_argument("monoid", help="file or catalog name (monoid:...)")
    sp.add_argument("--which", choices=["L", "R", "LvR", "LwR"], default="L")
    sp.add_argument("--side", choices=["left", "right"], default="left")
    sp.add_argument("--nbhd", help="comma list of points of an open unit neighborhood")
    common(sp)
    sp.set_defaults(fn=_cmd_monoid)

    sp = sub.add_parser("enumerate", help="enumerate labeled topologies")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--list", action="store_true")
    common(sp)
    sp.set_defaults(fn=_cmd_enumerate)

    sp = sub.add_parser("search", help="predicate search over enumerated spaces")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--predicate", required=True)
    sp.add_argument("--budget", type=int)
    common(sp)
    sp.set_defaults(fn=_cmd_search)

    sp = sub.add_parser("suite", help="run a verification suite")
    sp.add_argument("name", choices=list(SUITES))
    sp.add_argument("--scope", default="catalog", help="catalog or enumerated(n)")
    common(sp)
    sp.set_defaults(fn=_cmd_suite)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (BadDocument, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

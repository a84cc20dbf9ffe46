"""JSON (de)serialization with bit-exact canonical output.

Subsets travel as sorted point lists; all documents round-trip through
``canonical_dumps`` byte-for-byte, which is what the golden-file tests pin.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from ..dyadic import Dyadic
from ..finspace import FinSpace, SubsetOutOfRange, bits, mk_space
from ..metrize import Chain, CheckResult, MetricBundle, Premetric
from ..monoid import TopMonoid, validate_monoid
from ..quniform import EntourageBase, validate_base
from ..relalg import Entourage, Relation

BUNDLE_SCHEMA = "qtop.bundle.v1"

KINDS = ("space", "base", "monoid", "bundle")


class BadDocument(ValueError):
    """Raised for malformed JSON documents."""


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def mask_to_points(mask: int) -> list[int]:
    return list(bits(mask))


def points_to_mask(points: list[int], n: int) -> int:
    mask = 0
    for p in points:
        if not isinstance(p, int) or not 0 <= p < n:
            raise SubsetOutOfRange(f"point {p!r} out of range for {n} points")
        mask |= 1 << p
    return mask


def space_to_obj(s: FinSpace) -> dict:
    return {"n": s.n, "opens": [mask_to_points(o) for o in s.opens]}


def space_from_obj(obj: dict, strict: bool = False) -> FinSpace:
    try:
        n = obj["n"]
        raw = obj["opens"]
    except (KeyError, TypeError) as exc:
        raise BadDocument("space document needs 'n' and 'opens'") from exc
    return mk_space(n, [points_to_mask(o, n) for o in raw], strict=strict)


def entourage_to_obj(u: Relation) -> dict:
    return {"n": u.n, "rows": [mask_to_points(r) for r in u.rows]}


def entourage_from_obj(obj: dict, strict: bool = False) -> Entourage:
    try:
        n = obj["n"]
        raw = obj["rows"]
    except (KeyError, TypeError) as exc:
        raise BadDocument("entourage document needs 'n' and 'rows'") from exc
    if len(raw) != n:
        raise BadDocument(f"need exactly {n} rows")
    rows = []
    for x, points in enumerate(raw):
        mask = points_to_mask(points, n)
        if not (mask >> x) & 1:
            if strict:
                raise BadDocument(f"strict mode: diagonal pair ({x},{x}) missing")
            mask |= 1 << x
        rows.append(mask)
    return Entourage(n, tuple(rows))


def base_to_obj(b: EntourageBase) -> dict:
    return {"n": b.n, "members": [entourage_to_obj(m) for m in b.members]}


def base_from_obj(obj: dict, strict: bool = False) -> EntourageBase:
    try:
        members = [entourage_from_obj(m, strict=strict) for m in obj["members"]]
    except (KeyError, TypeError) as exc:
        raise BadDocument("base document needs 'members'") from exc
    return validate_base(members)


def dyadic_to_obj(d: Dyadic) -> dict:
    return {"num": d.num, "exp": d.exp}


def dyadic_from_obj(obj: dict) -> Dyadic:
    try:
        return Dyadic(obj["num"], obj["exp"])
    except (KeyError, TypeError) as exc:
        raise BadDocument("dyadic document needs 'num' and 'exp'") from exc


def premetric_to_obj(d: Premetric) -> dict:
    return {
        "n": d.n,
        "values": [[dyadic_to_obj(v) for v in row] for row in d.values],
    }


def premetric_from_obj(obj: dict) -> Premetric:
    try:
        n = obj["n"]
        vals = tuple(
            tuple(dyadic_from_obj(v) for v in row) for row in obj["values"]
        )
    except (KeyError, TypeError) as exc:
        raise BadDocument("premetric document needs 'n' and 'values'") from exc
    return Premetric(n, vals)


def monoid_to_obj(m: TopMonoid) -> dict:
    return {
        "space": space_to_obj(m.space),
        "mul": [list(row) for row in m.mul],
        "unit": m.unit,
        "unit_side": m.unit_side,
    }


def monoid_from_obj(obj: dict, strict: bool = False) -> TopMonoid:
    try:
        space = space_from_obj(obj["space"], strict=strict)
        mul = obj["mul"]
        unit = obj["unit"]
        side = obj.get("unit_side", "two")
    except (KeyError, TypeError) as exc:
        raise BadDocument("monoid document needs 'space', 'mul', 'unit'") from exc
    return validate_monoid(space, mul, unit, side)


def bundle_to_obj(b: MetricBundle) -> dict:
    return {
        "schema_version": BUNDLE_SCHEMA,
        "base": base_to_obj(b.base),
        "space": space_to_obj(b.space),
        "target": entourage_to_obj(b.target),
        "chain": {
            "links": [entourage_to_obj(u) for u in b.chain.links],
            "stab": b.chain.stab,
        },
        "d": premetric_to_obj(b.d),
        "d_reg": premetric_to_obj(b.d_reg),
        "d_semireg": premetric_to_obj(b.d_semireg),
        "rotund": dict(b.rotund),
        "report": [
            {"check_id": c.check_id, "item": c.item, "status": c.status, "detail": c.detail}
            for c in b.report
        ],
    }


def bundle_from_obj(obj: dict) -> MetricBundle:
    try:
        if obj.get("schema_version") != BUNDLE_SCHEMA:
            raise BadDocument(f"unknown bundle schema {obj.get('schema_version')!r}")
        base = base_from_obj(obj["base"])
        space = space_from_obj(obj["space"])
        target = entourage_from_obj(obj["target"])
        links = tuple(entourage_from_obj(u) for u in obj["chain"]["links"])
        chain = Chain(target=target, links=links)
        report = tuple(
            CheckResult(c["check_id"], c["item"], c["status"], c.get("detail", ""))
            for c in obj["report"]
        )
        return MetricBundle(
            base=base,
            space=space,
            target=target,
            chain=chain,
            d=premetric_from_obj(obj["d"]),
            d_reg=premetric_from_obj(obj["d_reg"]),
            d_semireg=premetric_from_obj(obj["d_semireg"]),
            rotund=dict(obj["rotund"]),
            report=report,
        )
    except (KeyError, TypeError) as exc:
        raise BadDocument("malformed bundle document") from exc


@dataclass(frozen=True)
class Instance:
    """A named catalog entry: a space, base, monoid, or bundle."""

    kind: str
    name: str
    value: Any

    def payload(self) -> dict:
        return _TO_OBJ[self.kind](self.value)


_TO_OBJ = {
    "space": space_to_obj,
    "base": base_to_obj,
    "monoid": monoid_to_obj,
    "bundle": bundle_to_obj,
}

_FROM_OBJ = {
    "space": space_from_obj,
    "base": base_from_obj,
    "monoid": monoid_from_obj,
    "bundle": lambda obj, strict=False: bundle_from_obj(obj),
}


def instance_to_obj(inst: Instance) -> dict:
    return {"kind": inst.kind, "name": inst.name, "payload": inst.payload()}


def instance_from_obj(obj: dict, strict: bool = False) -> Instance:
    try:
        kind = obj["kind"]
        name = obj["name"]
        payload = obj["payload"]
    except (KeyError, TypeError) as exc:
        raise BadDocument("instance document needs 'kind', 'name', 'payload'") from exc
    if kind not in KINDS:
        raise BadDocument(f"unknown instance kind {kind!r}")
    value = _FROM_OBJ[kind](payload, strict=strict)
    return Instance(kind, name, value)


def detect_and_parse(obj: dict, strict: bool = False) -> Any:
    """Parse a bare document by shape: instance, bundle, base, monoid,
    entourage, premetric, or space."""
    if not isinstance(obj, dict):
        raise BadDocument("expected a JSON object")
    if "kind" in obj and "payload" in obj:
        return instance_from_obj(obj, strict=strict)
    if "schema_version" in obj:
        return bundle_from_obj(obj)
    if "members" in obj:
        return base_from_obj(obj, strict=strict)
    if "mul" in obj:
        return monoid_from_obj(obj, strict=strict)
    if "rows" in obj:
        return entourage_from_obj(obj, strict=strict)
    if "values" in obj:
        return premetric_from_obj(obj)
    if "opens" in obj:
        return space_from_obj(obj, strict=strict)
    raise BadDocument("unrecognized document shape")

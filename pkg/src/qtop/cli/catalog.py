"""The built-in instance catalog.

Instances are built in code, materialized as canonical JSON files under
``catalog_data/`` (regenerate with ``python -m qtop.cli.catalog``), and
loaded back from disk so the files themselves are under test.  The
QTOP_CATALOG environment variable points the loader at a different
directory.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from ..finspace import mk_space
from ..metrize import verify_theorem_main
from ..monoid import TopMonoid, canonical_uniformity, validate_monoid
from ..quniform import validate_base
from ..relalg import diagonal, from_pairs, full_relation
from .serialize import Instance, canonical_dumps, instance_from_obj, instance_to_obj

DATA_DIR = Path(__file__).parent / "catalog_data"


def _line_entourage(n: int, k: int):
    """Reflexive 'forward within k steps' relation on a directed line."""
    pairs = [(x, y) for x in range(n) for y in range(x + 1, min(x + k, n - 1) + 1)]
    return from_pairs(n, pairs)


def _equivalence(n: int, blocks: list[list[int]]):
    pairs = [(x, y) for blk in blocks for x in blk for y in blk if x != y]
    return from_pairs(n, pairs)


def _spaces() -> dict[str, object]:
    return {
        "sierpinski": mk_space(2, [{1}]),
        "discrete2": mk_space(2, [{0}, {1}]),
        "indiscrete2": mk_space(2, []),
        "point3": mk_space(3, [{0}, {0, 1}, {0, 2}]),
        "chain3": mk_space(3, [{2}, {1, 2}]),
        "partition4": mk_space(4, [{0, 1}, {2, 3}]),
    }


def _monoids() -> dict[str, TopMonoid]:
    out = {}
    # two-element monoid a*a = a with open absorbing point
    out["sierpinski"] = validate_monoid(mk_space(2, [{1}]), [[0, 1], [1, 1]], 0)
    out["z2_discrete"] = validate_monoid(mk_space(2, [{0}, {1}]), [[0, 1], [1, 0]], 0)
    out["z3_indiscrete"] = validate_monoid(
        mk_space(3, []), [[(i + j) % 3 for j in range(3)] for i in range(3)], 0
    )
    # max-semilattice on the chain e < a < b with upper-set topology
    out["max3_chain"] = validate_monoid(
        mk_space(3, [{2}, {1, 2}]),
        [[max(i, j) for j in range(3)] for i in range(3)],
        0,
    )
    # direct product of the discrete Z2 and the sierpinski monoid;
    # commutative, hence balanced, with several opens at the unit
    mul = [[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 0, 1], [3, 3, 1, 1]]
    out["z2_x_sierpinski"] = validate_monoid(
        mk_space(4, [{1}, {3}, {0, 1}, {2, 3}]), mul, 0
    )
    # left-zero semigroup x*y = x: every point is a right unit, none is left
    out["leftzero3_discrete"] = validate_monoid(
        mk_space(3, [{0}, {1}, {2}]),
        [[i] * 3 for i in range(3)],
        0,
        unit_side="right",
    )
    return out


def _bases(monoids: dict[str, TopMonoid]) -> dict[str, object]:
    d1 = from_pairs(2, [(0, 1)])
    s3 = from_pairs(3, [(0, 1), (1, 2)])
    out = {
        # transitive singletons
        "sierpinski_step": validate_base([d1]),
        "chain3": validate_base([from_pairs(3, [(0, 1), (0, 2), (1, 2)])]),
        # symmetric
        "diag2": validate_base([diagonal(2)]),
        "full2": validate_base([full_relation(2)]),
        "equiv3": validate_base([_equivalence(3, [[0, 1], [2]])]),
        "equiv3_full": validate_base([_equivalence(3, [[0, 1], [2]]), full_relation(3)]),
        "partition4_sym": validate_base(
            [_equivalence(4, [[0, 1], [2, 3]]), full_relation(4)]
        ),
        "sym5_nested": validate_base(
            [
                _equivalence(5, [[0, 1], [2, 3], [4]]),
                _equivalence(5, [[0, 1, 2, 3], [4]]),
                full_relation(5),
            ]
        ),
        # step relations (need a smaller companion for the halving axiom)
        "step3": validate_base([from_pairs(3, [(0, 1)]), s3]),
        "step4": validate_base(
            [from_pairs(4, [(0, 1)]), from_pairs(4, [(0, 1), (1, 2), (2, 3)])]
        ),
        "nested2": validate_base([d1, full_relation(2)]),
        # nested line relations on five points
        "line5": validate_base(
            [from_pairs(5, [(3, 4)])] + [_line_entourage(5, k) for k in (1, 2, 3, 4)]
        ),
    }
    # monoid-derived bases
    out["sierpinski_monoid_L"] = canonical_uniformity(monoids["sierpinski"], "L")
    out["z2sierp_L"] = canonical_uniformity(monoids["z2_x_sierpinski"], "L")
    out["z2sierp_LwR"] = canonical_uniformity(monoids["z2_x_sierpinski"], "LwR")
    out["z3_indiscrete_L"] = canonical_uniformity(monoids["z3_indiscrete"], "L")
    return out


def build_catalog() -> dict[str, Instance]:
    """All built-in instances, keyed by qualified name."""
    out: dict[str, Instance] = {}
    for name, s in _spaces().items():
        out[f"space:{name}"] = Instance("space", f"space:{name}", s)
    monoids = _monoids()
    for name, m in monoids.items():
        out[f"monoid:{name}"] = Instance("monoid", f"monoid:{name}", m)
    for name, b in _bases(monoids).items():
        out[f"base:{name}"] = Instance("base", f"base:{name}", b)
    golden_base = out["base:sierpinski_step"].value
    golden = verify_theorem_main(golden_base, golden_base.members[0])
    out["bundle:sierpinski_golden"] = Instance(
        "bundle", "bundle:sierpinski_golden", golden
    )
    return out


def catalog_dir() -> Path:
    override = os.environ.get("QTOP_CATALOG")
    return Path(override) if override else DATA_DIR


def _file_name(name: str) -> str:
    return name.replace(":", "__") + ".json"


def write_catalog(directory: Path | None = None) -> list[Path]:
    """Materialize the built-in catalog as canonical JSON files."""
    directory = Path(directory) if directory else DATA_DIR
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, inst in sorted(build_catalog().items()):
        path = directory / _file_name(name)
        path.write_text(canonical_dumps(instance_to_obj(inst)), encoding="utf-8")
        written.append(path)
    return written


def load_catalog(directory: Path | None = None) -> dict[str, Instance]:
    """Load every instance file from the catalog directory."""
    directory = Path(directory) if directory else catalog_dir()
    out: dict[str, Instance] = {}
    for path in sorted(directory.glob("*.json")):
        obj = json.loads(path.read_text(encoding="utf-8"))
        inst = instance_from_obj(obj)
        out[inst.name] = inst
    return out


if __name__ == "__main__":
    for p in write_catalog():
        print(p)

"""qtop: a finite-model laboratory for quasi-uniform spaces.

Exact (dyadic, bit-set) implementations of finite topological spaces, the
entourage algebra of quasi-uniformity bases, rotundness predicates, the
chain-based quasi-pseudometric synthesis with its regularizations, and the
canonical quasi-uniformities and subinvariant metrics of finite topological
monoids, plus an enumeration and verification harness.
"""

from .dyadic import Dyadic, balanced_product, concat, expansion, from_expansion
from .finspace import FinSpace, SeparationRecord, mk_space
from .metrize import (
    Chain,
    MetricBundle,
    Premetric,
    build_chain,
    classify_continuity,
    classify_premetric,
    combine,
    dist_fn,
    eval_d,
    eval_d_truncated,
    regularize,
    semiregularize,
    v_family,
    verify_theorem_main,
)
from .monoid import TopMonoid, canonical_uniformity, synth_subinvariant, validate_monoid
from .quniform import (
    EntourageBase,
    induced_topology,
    is_u_uniform,
    min_entourage,
    rotund_check,
    saturate_mult,
    uniform_regularity,
    validate_base,
)
from .relalg import Entourage, Relation, diagonal, from_pairs, full_relation, topo_ops

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "Dyadic",
    "Entourage",
    "EntourageBase",
    "FinSpace",
    "MetricBundle",
    "Premetric",
    "Relation",
    "SeparationRecord",
    "TopMonoid",
    "balanced_product",
    "build_chain",
    "canonical_uniformity",
    "classify_continuity",
    "classify_premetric",
    "combine",
    "concat",
    "diagonal",
    "dist_fn",
    "eval_d",
    "eval_d_truncated",
    "expansion",
    "from_expansion",
    "from_pairs",
    "full_relation",
    "induced_topology",
    "is_u_uniform",
    "min_entourage",
    "mk_space",
    "regularize",
    "rotund_check",
    "saturate_mult",
    "semiregularize",
    "synth_subinvariant",
    "topo_ops",
    "uniform_regularity",
    "v_family",
    "validate_base",
    "validate_monoid",
    "verify_theorem_main",
]

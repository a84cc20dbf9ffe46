"""Serialization, instance catalog, enumeration/search harness, and reports."""

from .serialize import Instance, canonical_dumps, instance_from_obj, instance_to_obj
from .enumeration import (
    KNOWN_TOPOLOGY_COUNTS,
    count_topologies_oracle,
    enumerate_preorders,
    enumerate_topologies,
    groups_of_order,
)
from .catalog import load_catalog
from .suites import Report, SearchSpec, run_suite, search

__all__ = [
    "Instance",
    "KNOWN_TOPOLOGY_COUNTS",
    "Report",
    "SearchSpec",
    "canonical_dumps",
    "count_topologies_oracle",
    "enumerate_preorders",
    "enumerate_topologies",
    "groups_of_order",
    "instance_from_obj",
    "instance_to_obj",
    "load_catalog",
    "run_suite",
    "search",
]

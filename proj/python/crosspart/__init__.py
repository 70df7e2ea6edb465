"""Exact combinatorics for cross-intersecting families of set partitions.

The heavy lifting lives in the compiled ``_core`` module; this package just
re-exports its public surface.  Partitions cross the boundary as strings in
the block notation ``{1,4|2|3,5}``, exact counts as Python integers.
"""

from ._core import (
    __version__,
    audit_lemma,
    build_construction,
    construction_size,
    dual,
    h,
    lemma_names,
    pair_search,
    phi,
    r1,
    r2,
    r_bound,
    stirling,
    tau,
    threshold_holds,
    threshold_min_n,
    verify,
    verify_scenarios,
)

__all__ = [
    "__version__",
    "audit_lemma",
    "build_construction",
    "construction_size",
    "dual",
    "h",
    "lemma_names",
    "pair_search",
    "phi",
    "r1",
    "r2",
    "r_bound",
    "stirling",
    "tau",
    "threshold_holds",
    "threshold_min_n",
    "verify",
    "verify_scenarios",
]

"""Complex hyperbolic (m, n, inf) triangle groups."""

from ._core import (
    __version__,
    classify,
    classify_word,
    discriminant,
    euler_phi,
    involutions,
    isometric_sphere,
    lemma32_bound,
    nondiscreteness_report,
    order_k_locus,
    phi_inequality,
    primitive_root_sum,
    refute_finite_order,
    reproduce_table,
    run_cli,
    scan_intervals,
    trace_123_closed_form,
    word,
)

__all__ = [
    "__version__",
    "classify",
    "classify_word",
    "discriminant",
    "euler_phi",
    "involutions",
    "isometric_sphere",
    "lemma32_bound",
    "nondiscreteness_report",
    "order_k_locus",
    "phi_inequality",
    "primitive_root_sum",
    "refute_finite_order",
    "reproduce_table",
    "run_cli",
    "scan_intervals",
    "trace_123_closed_form",
    "word",
]

"""Bergman-space Toeplitz product diagnostics."""

from ._core import (  # noqa: F401
    QuadratureRule,
    SchurParameters,
    Symbol,
    berezin_mod_squared,
    berezin_transform,
    bergman_kernel,
    bergman_metric,
    hs_tail_norm,
    hyperbolic_disk,
    integrate,
    integrate_subdisk,
    kernel_action,
    lemma1_ratio,
    luecking_k,
    mobius,
    normalized_kernel,
    product_norm,
    quadrature_matrix,
    run_scenario,
    s_operator,
    sarason_quantity,
    sarason_sup,
    schur_ratio,
    toeplitz_matrix,
)

__all__ = [
    "QuadratureRule",
    "SchurParameters",
    "Symbol",
    "berezin_mod_squared",
    "berezin_transform",
    "bergman_kernel",
    "bergman_metric",
    "hs_tail_norm",
    "hyperbolic_disk",
    "integrate",
    "integrate_subdisk",
    "kernel_action",
    "lemma1_ratio",
    "luecking_k",
    "mobius",
    "normalized_kernel",
    "product_norm",
    "quadrature_matrix",
    "run_scenario",
    "s_operator",
    "sarason_quantity",
    "sarason_sup",
    "schur_ratio",
    "toeplitz_matrix",
]

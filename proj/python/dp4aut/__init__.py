"""Exact classification engine for real degree-4 del Pezzo surfaces."""

from ._dp4aut import (
    classify,
    enumerate_conic_classes,
    enumerate_minus_one,
    exceptional_pairs,
    forms,
    image_bound,
    kernel_bound,
    predicate,
    quadric_model,
    sigma_pair_action,
    verify_paper,
    weyl_order,
)

__all__ = [
    "classify",
    "enumerate_conic_classes",
    "enumerate_minus_one",
    "exceptional_pairs",
    "forms",
    "image_bound",
    "kernel_bound",
    "predicate",
    "quadric_model",
    "sigma_pair_action",
    "verify_paper",
    "weyl_order",
]

"""Attractors of complex de Casteljau subdivision and the Takagi limit."""

from fractions import Fraction

from ._core import (
    CanonicalizationError,
    ConstructionError,
    DomainError,
    ResourceError,
    control_attractor,
    convergence_sweep,
    eval_point,
    hausdorff,
    is_hyperbolic,
    joint_spectral_radius,
    scaled_attractor,
    subdivide,
    takagi,
    takagi_envelope,
    takagi_graph,
    triangular_forms,
    vector_field_v,
    vector_field_vm,
    verify,
)

__version__ = "1.0.0"


def z_poly(word: str, n: int) -> list[Fraction]:
    """Coefficients of (i beta)^k in the orbit polynomial of a binary word, as Fractions."""
    from ._core import z_poly_pairs

    return [Fraction(num, 2**exp) for num, exp in z_poly_pairs(word, n)]


__all__ = [
    "CanonicalizationError",
    "ConstructionError",
    "DomainError",
    "ResourceError",
    "control_attractor",
    "convergence_sweep",
    "eval_point",
    "hausdorff",
    "is_hyperbolic",
    "joint_spectral_radius",
    "scaled_attractor",
    "subdivide",
    "takagi",
    "takagi_envelope",
    "takagi_graph",
    "triangular_forms",
    "vector_field_v",
    "vector_field_vm",
    "verify",
    "z_poly",
]

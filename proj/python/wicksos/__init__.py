"""Exact Wick star-product algebra, eigenspace reduction and
sums-of-Hermitian-squares certificates.

All scalars cross the boundary as exact rational strings like "3/2";
polynomials as expression strings over z0..zN, zb0..zbN, J and i.
"""

from ._core import (  # noqa: F401
    anti_star,
    average,
    binom,
    canonical,
    certify_minus_one,
    certify_positive,
    classify,
    conj,
    design_find,
    design_verify,
    evaluate,
    falling,
    fock_inner,
    grade,
    ideal_member,
    is_invariant,
    momentum_map,
    normal_form,
    omega_level,
    omega_state,
    phi_sign,
    pi_apply,
    pi_matrix,
    poisson,
    psd_check,
    psi_map,
    quad_check,
    red_star,
    star,
    theta,
    verify_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]

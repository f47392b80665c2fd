"""Fermionic and bosonic Fock spaces with their vertex and affine operators."""
from .affine import (
    A_op,
    charge_decompose,
    d_prime,
    gamma_block,
    generator,
    kac_prediction,
    mainprop_block,
    sl2_generators,
    sugawara_L,
    vacuum_vector,
    verma_embedding,
)
from .boson import gamma_join, gamma_split, inner, z_lambda
from .vertex import gamma_element, gamma_element_operator, gamma_pair, omega_check
from .wedge import alpha, alpha_esum, alpha_strips, character, rho_E, schur_inverse, schur_transition

__all__ = [
    "A_op", "alpha", "alpha_esum", "alpha_strips", "character", "charge_decompose", "d_prime",
    "gamma_block", "gamma_element", "gamma_element_operator", "gamma_join", "gamma_pair",
    "gamma_split", "generator", "inner", "kac_prediction", "mainprop_block", "omega_check",
    "rho_E", "schur_inverse", "schur_transition", "sl2_generators", "sugawara_L",
    "vacuum_vector", "verma_embedding", "z_lambda",
]

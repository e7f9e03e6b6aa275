"""Tits indices of semisimple groups and the Brauer conditions on their Tits algebras."""

from ._tits import (
    DomainError,
    alpha_in_omega,
    cartan_matrix,
    catalog,
    check,
    cocenter_factors,
    data_dir,
    distinguishes,
    is_admissible,
    label,
    max_candim,
    verdicts,
)

__all__ = [
    "DomainError",
    "alpha_in_omega",
    "cartan_matrix",
    "catalog",
    "check",
    "cocenter_factors",
    "data_dir",
    "distinguishes",
    "is_admissible",
    "label",
    "max_candim",
    "verdicts",
]

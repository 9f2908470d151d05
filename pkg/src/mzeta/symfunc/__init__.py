from .characters import character_table, mn_character
from .lr import kronecker_coefficient, lr_coefficient, lr_coefficient_via_characters
from .partitions import (
    Partition,
    conjugate,
    hook_lengths,
    make_partition,
    partitions_of,
    sign_of,
    syt_count,
    z_rho,
)
from .symfunc import SymFunc, basis_convert, omega, parse_symfunc, plethysm, sym_product

__all__ = [
    "Partition",
    "SymFunc",
    "basis_convert",
    "character_table",
    "conjugate",
    "hook_lengths",
    "kronecker_coefficient",
    "lr_coefficient",
    "lr_coefficient_via_characters",
    "make_partition",
    "mn_character",
    "omega",
    "parse_symfunc",
    "partitions_of",
    "plethysm",
    "sign_of",
    "sym_product",
    "syt_count",
    "z_rho",
]

"""Exact Euler characteristics of the Sp-invariant chain complex of symplectic
derivations of a free Lie algebra, and the integral Euler characteristics
e(Out F_n) extracted from them."""
from .chain import (
    ChainDimTable,
    ChainSeries,
    WeightPartition,
    chain_dims,
    chain_tables,
    chain_term_dim,
    euler_char,
    weight_partitions,
)
from .characters import character_value, schur_expand
from .lie import (
    derivation_character,
    lie_character,
    littlewood_series,
    sp_invariant_dim,
    sp_invariant_dim_oracle,
)
from .outfn import EulerTable, expand_product, extract_out_euler, verify_congruence
from .partitions import mobius, partitions_of, z_factor
from .symfunc import (
    SymmetricFunction,
    exterior_plethysm,
    hall_inner,
    p,
    plethysm_power,
    sf_mul,
    specialize_dimension,
)

__version__ = "0.1.0"

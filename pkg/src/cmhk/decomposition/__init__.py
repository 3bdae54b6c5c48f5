"""
Decomposição global-local de álgebras com involução.

Submódulos:
- algebra: fatores p-ádicos, órbitas da involução e plano de blocos
"""

from .algebra import (
    HYPERBOLIC,
    CM,
    TOWER_UNAVAILABLE,
    GlobalCMAlgebra,
    LocalFactor,
    LocalFactorSet,
    Block,
    BlockPlan,
    cyclotomic_algebra,
    local_factors,
    involution_orbits,
    orthogonal_blocks,
    block_extension,
    decompose,
    cyclotomic_oracle,
)

__all__ = [
    'HYPERBOLIC',
    'CM',
    'TOWER_UNAVAILABLE',
    'GlobalCMAlgebra',
    'LocalFactor',
    'LocalFactorSet',
    'Block',
    'BlockPlan',
    'cyclotomic_algebra',
    'local_factors',
    'involution_orbits',
    'orthogonal_blocks',
    'block_extension',
    'decompose',
    'cyclotomic_oracle',
]

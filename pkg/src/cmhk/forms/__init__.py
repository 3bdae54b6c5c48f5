"""
Formas quadráticas sobre Q.

Submódulos:
- quadratic_form: tipos, diagonalização e invariantes
- hilbert: símbolo de Hilbert, ε e fórmula do produto
- oracle: oráculo de força bruta para o símbolo de Hilbert
- criteria: critérios de assinatura e a redução p-ádica
"""

from .quadratic_form import (
    REAL_PLACE,
    PlaceQ,
    QuadraticFormQ,
    DiagonalFormQ,
    HodgeNumbers,
    FormInvariants,
    diagonalize,
    invariants,
    orthogonal_sum,
)
from .hilbert import hilbert_symbol, epsilon, product_formula_check, compare_local, relevant_places
from .oracle import conic_oracle
from .criteria import (
    mod4_report,
    padic_reduction_check,
    signature_top_check,
    epsilon_sum_identity,
)

__all__ = [
    'REAL_PLACE',
    'PlaceQ',
    'QuadraticFormQ',
    'DiagonalFormQ',
    'HodgeNumbers',
    'FormInvariants',
    'diagonalize',
    'invariants',
    'orthogonal_sum',
    'hilbert_symbol',
    'epsilon',
    'product_formula_check',
    'compare_local',
    'relevant_places',
    'conic_oracle',
    'mod4_report',
    'padic_reduction_check',
    'signature_top_check',
    'epsilon_sum_identity',
]

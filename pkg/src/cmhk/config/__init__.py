"""
Configurações do pacote cmhk.
"""

from .settings import (
    PRECISION_CONFIG,
    ORACLE_CONFIG,
    RANDOM_CONFIG,
    REPORT_CONFIG,
    SUITE_CONFIG,
    UNRAMIFIED_POLYNOMIALS,
    get_default_precision,
)

__all__ = [
    'PRECISION_CONFIG',
    'ORACLE_CONFIG',
    'RANDOM_CONFIG',
    'REPORT_CONFIG',
    'SUITE_CONFIG',
    'UNRAMIFIED_POLYNOMIALS',
    'get_default_precision',
]

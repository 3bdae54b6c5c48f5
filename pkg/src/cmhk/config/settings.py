"""
Configurações padrão do cmhk.

Este módulo concentra os parâmetros de precisão p-ádica, os expoentes do
oráculo de cônicas, a semente aleatória e o formato dos relatórios.
"""

import logging
import os

# Configuração de logging
logger = logging.getLogger(__name__)

# Variável de ambiente que sobrescreve a precisão padrão
PRECISION_ENV_VAR = 'CMHK_PRECISION'

# Configurações de precisão p-ádica (normalização v(p) = 1)
PRECISION_CONFIG = {
    # Precisão absoluta padrão N das torres
    'default': 50,

    # Fator de reconstrução da torre após um erro de precisão (uma única tentativa)
    'retry_factor': 2,

    # Margem, em dígitos, exigida para certificar valorizações aproximadas
    'certification_margin': 2,
}

# Configurações do oráculo de cônicas (busca exaustiva mod p^k)
ORACLE_CONFIG = {
    'odd_exponent': 3,
    'two_exponent': 6,
}

# Semente aleatória para reprodutibilidade
RANDOM_CONFIG = {
    'random_state': 42,

    # Altura máxima dos coeficientes sorteados
    'coefficient_bound': 3,
}

# Configurações dos relatórios
REPORT_CONFIG = {
    'version': '0.1.0',
    'table_width': 100,
    'max_colwidth': 40,
}

# Tamanhos das baterias aleatórias da CLI
SUITE_CONFIG = {
    'qform_corpus': 500,
    'qform_min_dim': 2,
    'qform_max_dim': 6,
    'qform_entry_bound': 30,
    'norm_audit_elements': 40,
    'milnor_gauges': 20,
    'filtered_cm_corpus': 200,
    'lt_primes': [2, 3, 5],
    'lt_degrees': [1, 2, 3],
    'lt_random_inputs': 3,
}

# Polinômios não ramificados com Frobenius exato: (p, f) -> coeficientes (decrescentes)
UNRAMIFIED_POLYNOMIALS = {
    (2, 2): [1, 1, 1],
    (3, 2): [1, 0, 1],
    (5, 2): [1, 0, 2],
    (7, 2): [1, 0, 1],
    (2, 3): [1, 1, -2, -1],
    (3, 3): [1, 1, -2, -1],
    (5, 3): [1, 1, -2, -1],
    (2, 4): [1, 1, 1, 1, 1],
    (3, 4): [1, 1, 1, 1, 1],
}


def get_default_precision() -> int:
    """Retorna a precisão padrão, respeitando a variável de ambiente CMHK_PRECISION."""
    raw = os.environ.get(PRECISION_ENV_VAR)
    if raw is None:
        return PRECISION_CONFIG['default']
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"{PRECISION_ENV_VAR} inválida ({raw!r}); usando {PRECISION_CONFIG['default']}")
        return PRECISION_CONFIG['default']
    if value <= 0:
        logger.warning(f"{PRECISION_ENV_VAR} deve ser positiva; usando {PRECISION_CONFIG['default']}")
        return PRECISION_CONFIG['default']
    return value

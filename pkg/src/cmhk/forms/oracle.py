"""Oráculo de força bruta para o símbolo de Hilbert.

Procura soluções primitivas de z² = a x² + b y² módulo p^k (k = 3 para p
ímpar, k = 6 para p = 2). Por homogeneidade basta x = 1 com y arbitrário,
ou y = 1 com x divisível por p; basta então que a x² + b y² seja um
quadrado módulo p^k.
"""

import logging
from functools import lru_cache
from typing import Any, Tuple

import numpy as np

from ..config import ORACLE_CONFIG
from ..exceptions import DomainError
from ..kernel.numbers import reduce_mod, to_rational, unit_part
from .quadratic_form import PlaceQ

# Configuração de logging
logger = logging.getLogger(__name__)


def oracle_exponent(p: int) -> int:
    return ORACLE_CONFIG['two_exponent'] if p == 2 else ORACLE_CONFIG['odd_exponent']


@lru_cache(maxsize=None)
def _squares(p: int, k: int) -> np.ndarray:
    """Tabela booleana dos quadrados módulo p^k."""
    modulus = p ** k
    roots = np.arange(modulus, dtype=np.int64)
    table = np.zeros(modulus, dtype=bool)
    table[roots * roots % modulus] = True
    return table


def _normalize(a: Any, p: int, k: int) -> Tuple[int, int]:
    alpha, u = unit_part(to_rational(a), p)
    return alpha % 2, reduce_mod(u, p ** k)


@lru_cache(maxsize=4096)
def _search(p: int, k: int, key_a: Tuple[int, int], key_b: Tuple[int, int]) -> int:
    modulus = p ** k
    a = (p ** key_a[0] * key_a[1]) % modulus
    b = (p ** key_b[0] * key_b[1]) % modulus
    table = _squares(p, k)
    values = np.arange(modulus, dtype=np.int64)
    # x = 1, y livre
    w = (a + b * (values * values % modulus)) % modulus
    if table[w].any():
        return 1
    # y = 1, x ≡ 0 mod p
    multiples = values[::p]
    w = (a * (multiples * multiples % modulus) + b) % modulus
    return 1 if table[w].any() else -1


def conic_oracle(a: Any, b: Any, place: Any) -> int:
    """Decide (a, b)_ν por busca exaustiva de pontos da cônica.

    Args:
        a: racional não nulo.
        b: racional não nulo.
        place: lugar de Q.

    Returns:
        +1 ou -1.
    """
    a, b = to_rational(a), to_rational(b)
    if a == 0 or b == 0:
        raise DomainError("Oráculo exige argumentos não nulos")
    place = PlaceQ.parse(place)
    if place.is_real:
        return -1 if a < 0 and b < 0 else 1
    p = place.prime
    k = oracle_exponent(p)
    result = _search(p, k, _normalize(a, p, k), _normalize(b, p, k))
    logger.debug(f"Oráculo ({a}, {b})_{p} = {result}")
    return result

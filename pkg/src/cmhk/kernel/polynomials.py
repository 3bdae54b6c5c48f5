"""Polinômios densos sobre Q e sobre F_p.

Convenção: listas de coeficientes em ordem decrescente de grau, como no
sympy (``Poly.all_coeffs``). Reduções módulo p usam ``sympy.polys.galoistools``.
"""

import logging
from typing import List, Sequence, Tuple

from sympy import QQ, ZZ, Poly, Symbol
from sympy.polys.galoistools import (
    gf_diff,
    gf_factor_sqf,
    gf_from_int_poly,
    gf_gcd,
    gf_irreducible_p,
    gf_sqf_p,
)

from ..exceptions import DomainError
from .numbers import denominator, numerator, padic_valuation, to_rational

# Configuração de logging
logger = logging.getLogger(__name__)

X = Symbol('x')


def rational_coeffs(coeffs: Sequence) -> List:
    """Converte coeficientes em elementos de ``QQ`` e remove zeros à esquerda."""
    result = [to_rational(c) for c in coeffs]
    while result and result[0] == 0:
        result.pop(0)
    return result


def integer_coeffs(coeffs: Sequence) -> List[int]:
    """Converte coeficientes racionais inteiros em ``int``; rejeita denominadores."""
    result = []
    for c in rational_coeffs(coeffs):
        if denominator(c) != 1:
            raise DomainError(f"Coeficiente não inteiro: {c}")
        result.append(numerator(c))
    return result


def to_poly(coeffs: Sequence, gen: Symbol = X) -> Poly:
    """Constrói um ``Poly`` sobre QQ a partir de coeficientes decrescentes."""
    coeffs = rational_coeffs(coeffs)
    return Poly.from_list(coeffs or [QQ(0)], gen, domain=QQ)


def from_poly(poly: Poly) -> List:
    """Coeficientes decrescentes de ``poly`` como elementos de ``QQ``."""
    return [QQ.from_sympy(c) for c in poly.all_coeffs()]


def is_monic(coeffs: Sequence) -> bool:
    coeffs = rational_coeffs(coeffs)
    return bool(coeffs) and coeffs[0] == 1


def degree(coeffs: Sequence) -> int:
    coeffs = rational_coeffs(coeffs)
    if not coeffs:
        raise DomainError("Grau do polinômio nulo não está definido")
    return len(coeffs) - 1


def coefficient_valuation(coeffs: Sequence, p: int):
    """Menor valorização p-ádica entre os coeficientes (``None`` para o polinômio nulo)."""
    values = [padic_valuation(c, p) for c in rational_coeffs(coeffs) if c != 0]
    return min(values) if values else None


def reduce_mod_p(coeffs: Sequence[int], p: int) -> List[int]:
    """Redução de um polinômio inteiro em F_p[x] (formato galoistools)."""
    return [int(c) for c in gf_from_int_poly([int(c) for c in coeffs], p)]


def is_irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    reduced = reduce_mod_p(coeffs, p)
    if len(reduced) != len(coeffs):
        return False
    return bool(gf_irreducible_p(reduced, p, ZZ))


def squarefree_witness_mod_p(coeffs: Sequence[int], p: int) -> List[int]:
    """mdc(g, g') mod p; a lista ``[1]`` indica redução livre de quadrados."""
    reduced = reduce_mod_p(coeffs, p)
    if gf_sqf_p(reduced, p, ZZ):
        return [1]
    witness = gf_gcd(reduced, gf_diff(reduced, p, ZZ), p, ZZ)
    return [int(c) for c in witness]


def factor_mod_p(coeffs: Sequence[int], p: int) -> Tuple[int, List[List[int]]]:
    """Fatoração de uma redução livre de quadrados em fatores mônicos irredutíveis mod p."""
    reduced = reduce_mod_p(coeffs, p)
    lc, factors = gf_factor_sqf(reduced, p, ZZ)
    return int(lc), [[int(c) for c in factor] for factor in factors]


def poly_mul_int(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Produto de polinômios inteiros (coeficientes decrescentes)."""
    result = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            result[i + j] += ca * cb
    return result


def poly_sub_int(a: Sequence[int], b: Sequence[int]) -> List[int]:
    size = max(len(a), len(b))
    a = [0] * (size - len(a)) + list(a)
    b = [0] * (size - len(b)) + list(b)
    return [x - y for x, y in zip(a, b)]


def divisible_by_prime_power(coeffs: Sequence[int], modulus: int) -> bool:
    return all(c % modulus == 0 for c in coeffs)

"""Símbolo de Hilbert em todos os lugares de Q, invariante ε e fórmula do produto."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List

from sympy import legendre_symbol
from sympy.ntheory import primefactors

from ..exceptions import DomainError
from ..kernel.numbers import (
    denominator,
    is_padic_square_rational,
    numerator,
    to_rational,
    unit_part,
)
from .quadratic_form import REAL_PLACE, PlaceQ, QuadraticFormQ, diagonalize

# Configuração de logging
logger = logging.getLogger(__name__)


def _unit_integer(u) -> int:
    """Inteiro num·den, na mesma classe de quadrados que a unidade ``u``."""
    return numerator(u) * denominator(u)


def _eps2(u: int) -> int:
    return ((u - 1) // 2) % 2


def _omega2(u: int) -> int:
    return ((u * u - 1) // 8) % 2


def hilbert_symbol(a: Any, b: Any, place: Any) -> int:
    """Símbolo de Hilbert (a, b)_ν.

    Args:
        a: racional não nulo.
        b: racional não nulo.
        place: ``PlaceQ``, 'real' ou um primo.

    Returns:
        +1 se z² = a x² + b y² tem solução não trivial no completamento, senão -1.
    """
    a, b = to_rational(a), to_rational(b)
    if a == 0 or b == 0:
        raise DomainError("Símbolo de Hilbert exige argumentos não nulos")
    place = PlaceQ.parse(place)
    if place.is_real:
        return -1 if a < 0 and b < 0 else 1

    p = place.prime
    alpha, u = unit_part(a, p)
    beta, v = unit_part(b, p)
    u_int, v_int = _unit_integer(u), _unit_integer(v)
    if p == 2:
        exponent = _eps2(u_int) * _eps2(v_int) + alpha * _omega2(v_int) + beta * _omega2(u_int)
        return -1 if exponent % 2 else 1
    sign = -1 if (alpha * beta * (p - 1) // 2) % 2 else 1
    leg_u = int(legendre_symbol(u_int % p, p)) if beta % 2 else 1
    leg_v = int(legendre_symbol(v_int % p, p)) if alpha % 2 else 1
    return sign * leg_u * leg_v


def _diagonal_epsilon(entries: List[Any], place: PlaceQ) -> int:
    result = 1
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            result *= hilbert_symbol(entries[i], entries[j], place)
    return result


def epsilon(form: QuadraticFormQ, place: Any) -> int:
    """Invariante de Hasse ε_ν = Π_{i<j} (a_i, a_j)_ν de uma diagonalização."""
    return _diagonal_epsilon(list(diagonalize(form).entries), PlaceQ.parse(place))


def relevant_places(entries: List[Any]) -> List[PlaceQ]:
    """Lugar real, 2 e os primos que dividem numerador ou denominador de alguma entrada."""
    primes = {2}
    for a in entries:
        primes.update(primefactors(abs(numerator(a))))
        primes.update(primefactors(denominator(a)))
    return [REAL_PLACE] + [PlaceQ(p) for p in sorted(primes)]


@dataclass(frozen=True)
class ProductFormulaReport:
    """ε_ν nos lugares relevantes e o produto (+1 pela fórmula do produto)."""
    table: Dict[PlaceQ, int]
    product: int

    @property
    def holds(self) -> bool:
        return self.product == 1


def product_formula_check(form: QuadraticFormQ) -> ProductFormulaReport:
    """Calcula ε_ν em todos os lugares relevantes e o produto."""
    entries = list(diagonalize(form).entries)
    table = {place: _diagonal_epsilon(entries, place) for place in relevant_places(entries)}
    product = 1
    for value in table.values():
        product *= value
    if product != 1:
        logger.warning(f"Fórmula do produto violada para {form}: {table}")
    return ProductFormulaReport(table=table, product=product)


def same_square_class(a: Any, b: Any, p: int) -> bool:
    """Decide se a e b coincidem em Q_p^×/(Q_p^×)²."""
    return is_padic_square_rational(to_rational(a) * to_rational(b), p)


def compare_local(f1: QuadraticFormQ, f2: QuadraticFormQ, p: int) -> bool:
    """Critério de isomorfismo sobre Q_p: discriminantes e ε_p coincidem."""
    if f1.dim != f2.dim:
        msg = f"Dimensões diferentes: {f1.dim} e {f2.dim}"
        logger.error(msg)
        raise DomainError(msg)
    place = PlaceQ(p)
    if not same_square_class(f1.determinant, f2.determinant, p):
        return False
    return epsilon(f1, place) == epsilon(f2, place)

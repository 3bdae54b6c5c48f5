"""Racionais exatos e aritmética p-ádica elementar sobre Q.

Os escalares do pacote são elementos do domínio ``QQ`` do sympy; este módulo
converte entradas externas (inteiros, strings "a/b", ``Rational``) e fornece
valorizações, partes unitárias e classes de quadrados.
"""

import logging
from typing import Any, Tuple

from sympy import QQ, Rational, mod_inverse
from sympy.ntheory import factorint, multiplicity

from ..exceptions import DomainError

# Configuração de logging
logger = logging.getLogger(__name__)


def to_rational(value: Any):
    """Converte ``value`` em elemento de ``QQ``.

    Args:
        value: inteiro, string "a/b" ou "a", ``Rational`` ou elemento de ``QQ``.

    Returns:
        Elemento de ``QQ`` em termos mínimos.
    """
    if isinstance(value, bool):
        raise DomainError(f"Valor booleano não é racional: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        text = value.strip()
        if '/' in text:
            num_text, den_text = text.split('/', 1)
        else:
            num_text, den_text = text, '1'
        try:
            num, den = int(num_text), int(den_text)
        except ValueError:
            raise DomainError(f"Racional malformado: {value!r}")
        if den == 0:
            raise DomainError(f"Denominador nulo em {value!r}")
        return QQ(num, den)
    if isinstance(value, Rational):
        return QQ(int(value.p), int(value.q))
    if QQ.of_type(value):
        return value
    try:
        return QQ.convert(value)
    except Exception:
        raise DomainError(f"Não é possível converter {value!r} em racional")


def numerator(a) -> int:
    return int(QQ.numer(a))


def denominator(a) -> int:
    return int(QQ.denom(a))


def format_rational(a) -> str:
    """Formata um racional como "a/b" (ou "a" quando inteiro)."""
    a = to_rational(a)
    num, den = numerator(a), denominator(a)
    return str(num) if den == 1 else f"{num}/{den}"


def padic_valuation(a, p: int) -> int:
    """Valorização p-ádica de um racional não nulo."""
    a = to_rational(a)
    if a == 0:
        raise DomainError("Valorização de zero não está definida")
    return multiplicity(p, abs(numerator(a))) - multiplicity(p, denominator(a))


def unit_part(a, p: int) -> Tuple[int, Any]:
    """Decompõe ``a = p^v * u`` com ``u`` unidade p-ádica.

    Returns:
        Par ``(v, u)``.
    """
    a = to_rational(a)
    v = padic_valuation(a, p)
    if v >= 0:
        return v, a / QQ(p ** v)
    return v, a * QQ(p ** (-v))


def squarefree_part(a) -> int:
    """Representante inteiro livre de quadrados da classe de ``a`` em Q^×/(Q^×)^2."""
    a = to_rational(a)
    if a == 0:
        raise DomainError("Zero não tem classe de quadrados")
    product = numerator(a) * denominator(a)
    sign = -1 if product < 0 else 1
    result = 1
    for prime, exponent in factorint(abs(product)).items():
        if exponent % 2:
            result *= prime
    return sign * result


def reduce_mod(a, modulus: int) -> int:
    """Reduz um racional com denominador invertível módulo ``modulus`` (resíduo em [0, modulus))."""
    a = to_rational(a)
    den = denominator(a)
    try:
        inverse = mod_inverse(den, modulus)
    except ValueError:
        raise DomainError(f"Denominador {den} não é invertível módulo {modulus}")
    return (numerator(a) * inverse) % modulus


def symmetric_residue(n: int, modulus: int) -> int:
    """Representante de ``n`` módulo ``modulus`` no intervalo (-modulus/2, modulus/2]."""
    r = n % modulus
    return r - modulus if r > modulus // 2 else r


def is_padic_square_rational(a, p: int) -> bool:
    """Decide se o racional não nulo ``a`` é quadrado em Q_p."""
    v, u = unit_part(a, p)
    if v % 2:
        return False
    if p == 2:
        return reduce_mod(u, 8) == 1
    residue = reduce_mod(u, p)
    return pow(residue, (p - 1) // 2, p) == 1


def square_class_representatives(p: int) -> list:
    """Representantes inteiros de Q_p^×/(Q_p^×)^2."""
    if p == 2:
        return [1, 3, 5, 7, 2, 6, 10, 14]
    non_residue = next(n for n in range(2, p) if pow(n, (p - 1) // 2, p) == p - 1)
    return [1, non_residue, p, non_residue * p]

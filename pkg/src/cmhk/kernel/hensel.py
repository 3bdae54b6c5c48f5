"""Levantamento de Hensel de fatorações módulo p."""

import logging
from typing import List, Sequence

from sympy import ZZ
from sympy.polys.factortools import dup_zz_hensel_lift
from sympy.polys.galoistools import gf_gcd, gf_mul

from ..exceptions import DomainError, HenselRefusal
from .polynomials import integer_coeffs, reduce_mod_p, squarefree_witness_mod_p

# Configuração de logging
logger = logging.getLogger(__name__)


def hensel_factor(poly: Sequence[int], seed: Sequence[Sequence[int]], p: int, precision: int) -> List[List[int]]:
    """Levanta uma fatoração coprima de ``poly`` mod p até mod p^precision.

    Args:
        poly: polinômio mônico com coeficientes inteiros (ordem decrescente).
        seed: fatores mônicos, dois a dois coprimos mod p, com produto ≡ poly mod p.
        p: primo.
        precision: expoente N da precisão final.

    Returns:
        Fatores mônicos inteiros (representantes simétricos mod p^N) cujo produto
        é congruente a ``poly`` módulo p^N.
    """
    poly = integer_coeffs(poly)
    if not poly or poly[0] != 1:
        msg = f"Polinômio não mônico: {poly}"
        logger.error(msg)
        raise DomainError(msg)
    if precision < 1:
        raise DomainError(f"Precisão deve ser positiva: {precision}")

    witness = squarefree_witness_mod_p(poly, p)
    if witness != [1]:
        msg = f"Redução mod {p} não é livre de quadrados; mdc(g, g') = {witness}"
        logger.error(msg)
        raise HenselRefusal(msg, witness)

    factors = [integer_coeffs(f) for f in seed]
    if any(not f or f[0] != 1 for f in factors):
        raise DomainError("Fatores semente devem ser mônicos")
    reduced = [reduce_mod_p(f, p) for f in factors]
    for i in range(len(reduced)):
        for j in range(i + 1, len(reduced)):
            common = gf_gcd(reduced[i], reduced[j], p, ZZ)
            if len(common) > 1:
                msg = f"Fatores semente {i} e {j} não são coprimos mod {p}"
                logger.error(msg)
                raise HenselRefusal(msg, [int(c) for c in common])

    product = [1]
    for f in reduced:
        product = gf_mul(product, f, p, ZZ)
    if [int(c) for c in product] != reduce_mod_p(poly, p):
        msg = f"Produto das sementes não é congruente ao polinômio mod {p}"
        logger.error(msg)
        raise DomainError(msg)

    if len(factors) == 1:
        return [list(poly)]

    lifted = dup_zz_hensel_lift(ZZ(p), [ZZ(c) for c in poly], [[ZZ(c) for c in f] for f in reduced], precision, ZZ)
    logger.debug(f"Fatoração levantada até {p}^{precision}: {len(lifted)} fatores")
    return [[int(c) for c in factor] for factor in lifted]

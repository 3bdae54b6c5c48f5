"""Catálogo de extensões quadráticas padrão usadas pelas baterias e pela CLI."""

import itertools
import logging
from typing import Any, Dict, List, Optional

from ..config import UNRAMIFIED_POLYNOMIALS
from ..exceptions import DomainError
from ..kernel.polynomials import is_irreducible_mod_p
from .norms import QuadraticExtension
from .tower import PadicTower

# Configuração de logging
logger = logging.getLogger(__name__)

# nome -> descritor (torre + imagens de x e y em coordenadas aninhadas)
STANDARD_EXTENSIONS: Dict[str, Dict[str, Any]] = {
    # Moderadamente ramificadas, σy = -y
    'Q5(sqrt5)': {'p': 5, 'f': 1, 'unram_poly': [1, -1], 'eis_poly': [[1], [0], [-5]],
                  'images': [[[1], [0]], [[0], [-1]]]},
    'Q3(sqrt3)': {'p': 3, 'f': 1, 'unram_poly': [1, -1], 'eis_poly': [[1], [0], [-3]],
                  'images': [[[1], [0]], [[0], [-1]]]},
    'Q7(sqrt-7)': {'p': 7, 'f': 1, 'unram_poly': [1, -1], 'eis_poly': [[1], [0], [7]],
                   'images': [[[1], [0]], [[0], [-1]]]},
    # Não ramificadas, E = y - p
    'Q5-unram2': {'p': 5, 'f': 2, 'unram_poly': [1, 0, 2], 'eis_poly': [[1], [-5]],
                  'images': [[[0, -1]], [[5, 0]]]},
    'Q3-unram2': {'p': 3, 'f': 2, 'unram_poly': [1, 0, 1], 'eis_poly': [[1], [-3]],
                  'images': [[[0, -1]], [[3, 0]]]},
    'Q7-unram2': {'p': 7, 'f': 2, 'unram_poly': [1, 0, 1], 'eis_poly': [[1], [-7]],
                  'images': [[[0, -1]], [[7, 0]]]},
    'Q2-unram2': {'p': 2, 'f': 2, 'unram_poly': [1, 1, 1], 'eis_poly': [[1], [-2]],
                  'images': [[[-1, -1]], [[2, 0]]]},
    # Selvagens (p = 2)
    'Q2(i)': {'p': 2, 'f': 1, 'unram_poly': [1, -1], 'eis_poly': [[1], [2], [2]],
              'images': [[[1], [0]], [[-2], [-1]]]},
    'Q2(sqrt2)': {'p': 2, 'f': 1, 'unram_poly': [1, -1], 'eis_poly': [[1], [0], [-2]],
                  'images': [[[1], [0]], [[0], [-1]]]},
    'Q2(zeta8)/Q2(i)': {'p': 2, 'f': 1, 'unram_poly': [1, -1], 'eis_poly': [[1], [4], [6], [4], [2]],
                        'images': [[[1], [0], [0], [0]], [[-2], [-1], [0], [0]]]},
    # ζ5 ↦ ζ5^4 sobre Q2: corpo fixo Q2(√5), não ramificada
    'Q2(zeta5)/Q2(sqrt5)': {'p': 2, 'f': 4, 'unram_poly': [1, 1, 1, 1, 1], 'eis_poly': [[1], [-2]],
                            'images': [[[-1, -1, -1, -1]], [[2, 0, 0, 0]]]},
}

TAME_EXTENSIONS = ['Q5(sqrt5)', 'Q3(sqrt3)', 'Q7(sqrt-7)']
UNRAMIFIED_EXTENSIONS = ['Q5-unram2', 'Q3-unram2', 'Q7-unram2', 'Q2-unram2', 'Q2(zeta5)/Q2(sqrt5)']
WILD_EXTENSIONS = ['Q2(i)', 'Q2(sqrt2)', 'Q2(zeta8)/Q2(i)']


def default_unramified_polynomial(p: int, f: int) -> List[int]:
    """Polinômio mônico de grau f irredutível mod p.

    Prefere os polinômios configurados (Frobenius exato); senão devolve o
    primeiro na ordem lexicográfica dos coeficientes em [0, p).
    """
    if f == 1:
        return [1, -1]
    if (p, f) in UNRAMIFIED_POLYNOMIALS:
        return list(UNRAMIFIED_POLYNOMIALS[(p, f)])
    for tail in itertools.product(range(p), repeat=f):
        candidate = [1] + list(tail)
        if is_irreducible_mod_p(candidate, p):
            logger.debug(f"Polinômio não ramificado (p={p}, f={f}) por busca: {candidate}")
            return candidate
    raise DomainError(f"Nenhum polinômio irredutível de grau {f} mod {p}")


def build_extension(descriptor: Dict[str, Any], precision: Optional[int] = None) -> QuadraticExtension:
    tower = PadicTower(descriptor['p'], descriptor['f'], descriptor['unram_poly'], descriptor['eis_poly'],
                       precision if precision is not None else descriptor.get('precision'))
    return QuadraticExtension.from_images(tower, descriptor['images'])


def standard_extension(name: str, precision: Optional[int] = None) -> QuadraticExtension:
    """Constrói uma extensão do catálogo pelo nome."""
    if name not in STANDARD_EXTENSIONS:
        msg = f"Extensão desconhecida: {name}. Disponíveis: {', '.join(STANDARD_EXTENSIONS)}"
        logger.error(msg)
        raise DomainError(msg)
    return build_extension(STANDARD_EXTENSIONS[name], precision)

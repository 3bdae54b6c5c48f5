"""Involuções de torres p-ádicas e o corpo fixo F0.

Uma involução é dada pelas imagens dos geradores x e y no modelo exato. A
validação verifica, nesta ordem, os axiomas ``homomorphism``, ``order_two``,
``non_trivial`` e ``fixed_dimension``; a falha levanta ``StructureError``
com o nome do axioma.
"""

import logging
from functools import cached_property
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ, Poly, ilcm

from ..config import RANDOM_CONFIG
from ..exceptions import DomainError, StructureError
from ..kernel.matrices import (
    char_poly,
    identity,
    left_inverse,
    mat_mul,
    mat_sub,
    mat_vec,
    rational_nullspace,
    rational_rank,
)
from ..kernel.numbers import denominator
from ..kernel.polynomials import X
from .tower import PadicElement, PadicTower

# Configuração de logging
logger = logging.getLogger(__name__)


def _evaluate_unram(tower: PadicTower, z: PadicElement) -> PadicElement:
    acc = tower.zero()
    for c in tower.unram_poly:
        acc = acc * z + c
    return acc


def _layer_at(tower: PadicTower, layer_coords: Sequence[Any], x_image: PadicElement) -> PadicElement:
    acc = tower.zero()
    power = tower.one()
    for c in layer_coords:
        if c != 0:
            acc = acc + power * c
        power = power * x_image
    return acc


class Involution:
    """Automorfismo de ordem dois de uma torre, validado."""

    def __init__(self, tower: PadicTower, x_image: PadicElement, y_image: PadicElement, matrix: List[List[Any]]):
        self.tower = tower
        self.x_image = x_image
        self.y_image = y_image
        self.matrix = matrix

    def apply(self, z: PadicElement) -> PadicElement:
        if z.tower != self.tower:
            raise DomainError("Elemento de outra torre")
        return PadicElement(self.tower, tuple(mat_vec(self.matrix, z.coords)), z.precision)

    __call__ = apply

    def is_fixed(self, z: PadicElement) -> bool:
        return self.apply(z) == z

    def describe(self) -> dict:
        return {
            'images': {
                'x': [list(b) for b in self.tower._blocks(self.x_image.coords)],
                'y': [list(b) for b in self.tower._blocks(self.y_image.coords)],
            }
        }

    # ---------------------------------------------------------- corpo fixo
    @cached_property
    def fixed_basis(self) -> List[PadicElement]:
        """Base racional do corpo fixo F0 (núcleo de S - I), com coordenadas inteiras."""
        kernel = rational_nullspace(mat_sub(self.matrix, identity(self.tower.d)))
        basis = []
        for vector in kernel:
            scale = 1
            for c in vector:
                scale = ilcm(scale, denominator(c))
            basis.append(self.tower.element([c * scale for c in vector]))
        return basis

    @property
    def fixed_degree(self) -> int:
        return len(self.fixed_basis)

    @cached_property
    def _projection(self) -> List[List[Any]]:
        columns = [[b.coords[i] for b in self.fixed_basis] for i in range(self.tower.d)]
        return left_inverse(columns)

    def fixed_coordinates(self, z: PadicElement) -> List[Any]:
        """Coordenadas de ``z`` ∈ F0 na base fixa."""
        if not self.is_fixed(z):
            raise DomainError("Elemento não pertence ao corpo fixo")
        return mat_vec(self._projection, z.coords)

    def restricted_matrix(self, z: PadicElement) -> List[List[Any]]:
        """Matriz racional da multiplicação por ``z`` ∈ F0 restrita a F0."""
        columns = [self.fixed_coordinates(z * b) for b in self.fixed_basis]
        n = len(columns)
        return [[columns[k][i] for k in range(n)] for i in range(n)]

    def _separable(self, z: PadicElement) -> Optional[List[Any]]:
        coeffs = char_poly(self.restricted_matrix(z))
        poly = Poly.from_list(coeffs, X, domain=QQ)
        if poly.gcd(poly.diff(X)).degree() == 0:
            return coeffs
        return None

    @cached_property
    def primitive_element(self) -> Tuple[PadicElement, List[Any]]:
        """Elemento primitivo de F0 e seu polinômio mínimo sobre Q (decrescente).

        Candidatos, em ordem: θ + θ* com θ = y + x, depois y·y*, depois
        combinações aleatórias pequenas da base fixa (semente fixa).
        """
        tower = self.tower
        theta = tower.y() + tower.x()
        y = tower.y()
        candidates = [theta + self.apply(theta), y * self.apply(y)]
        rng = np.random.default_rng(RANDOM_CONFIG['random_state'])
        bound = RANDOM_CONFIG['coefficient_bound']
        for _ in range(50):
            weights = rng.integers(-bound, bound + 1, size=len(self.fixed_basis))
            acc = tower.zero()
            for w, b in zip(weights, self.fixed_basis):
                acc = acc + b * int(w)
            candidates.append(acc)
        for candidate in candidates:
            coeffs = self._separable(candidate)
            if coeffs is not None:
                return candidate, coeffs
        raise StructureError("Nenhum elemento primitivo encontrado para o corpo fixo", 'primitive_element')

    # ---------------------------------------------------------- ramificação
    @cached_property
    def is_ramified(self) -> bool:
        """F/F0 é ramificada sse a involução age trivialmente no corpo residual."""
        tower = self.tower
        if tower.f == 1:
            return True
        return self.x_image.residue() == tower.x().residue()

    @property
    def extension_type(self) -> str:
        return 'ramified' if self.is_ramified else 'unramified'

    @property
    def fixed_ramification_index(self) -> int:
        return self.tower.e // 2 if self.is_ramified else self.tower.e

    @property
    def fixed_residue_degree(self) -> int:
        return self.tower.f if self.is_ramified else self.tower.f // 2

    @cached_property
    def fixed_uniformizer(self) -> PadicElement:
        """Uniformizador de F0 (valorização 1/e0)."""
        tower = self.tower
        target = QQ(1, self.fixed_ramification_index)
        y = tower.y()
        if self.is_ramified:
            candidate = y * self.apply(y)
            if candidate.valuation() == target:
                return candidate
        x = tower.x()
        trials = []
        for i in range(tower.f):
            t = (x ** i) * y
            trials.append(t)
            for k in range(i + 1, tower.f):
                trials.append(((x ** i) + (x ** k)) * y)
        for t in trials:
            candidate = t + self.apply(t)
            if not candidate.is_zero and candidate.valuation() == target:
                return candidate
        raise StructureError("Uniformizador do corpo fixo não encontrado", 'fixed_uniformizer')


def build_involution(tower: PadicTower, images: Sequence[Any]) -> Involution:
    """Valida as imagens de (x, y) e constrói a involução.

    Args:
        tower: torre.
        images: par (imagem de x, imagem de y), como ``PadicElement`` ou coordenadas.

    Returns:
        ``Involution`` validada.
    """
    if len(images) != 2:
        raise DomainError("São necessárias as imagens de x e de y")
    x_image, y_image = [img if isinstance(img, PadicElement) else tower.element(img) for img in images]

    if not _evaluate_unram(tower, x_image).is_zero:
        msg = "Imagem de x não é raiz do polinômio não ramificado"
        logger.error(msg)
        raise StructureError(msg, 'homomorphism')
    acc = tower.zero()
    power = tower.one()
    for coeffs in tower.eisenstein_coefficients():
        acc = acc + _layer_at(tower, coeffs, x_image) * power
        power = power * y_image
    if not acc.is_zero:
        msg = "Imagem de y não é raiz do polinômio de Eisenstein conjugado"
        logger.error(msg)
        raise StructureError(msg, 'homomorphism')

    x_powers = [tower.one()]
    for _ in range(1, tower.f):
        x_powers.append(x_powers[-1] * x_image)
    columns = []
    y_power = tower.one()
    for _ in range(tower.e):
        for i in range(tower.f):
            columns.append((x_powers[i] * y_power).coords)
        y_power = y_power * y_image
    matrix = [[columns[k][i] for k in range(tower.d)] for i in range(tower.d)]

    ident = identity(tower.d)
    if mat_mul(matrix, matrix) != ident:
        msg = "A aplicação não tem ordem dois"
        logger.error(msg)
        raise StructureError(msg, 'order_two')
    if matrix == ident:
        msg = "A involução é trivial"
        logger.error(msg)
        raise StructureError(msg, 'non_trivial')
    if tower.d % 2 or rational_rank(mat_sub(matrix, ident)) != tower.d // 2:
        msg = f"O corpo fixo não tem dimensão d/2 = {tower.d / 2}"
        logger.error(msg)
        raise StructureError(msg, 'fixed_dimension')

    involution = Involution(tower, x_image, y_image, matrix)
    logger.info(f"Involução validada ({involution.extension_type}) sobre {tower}")
    return involution

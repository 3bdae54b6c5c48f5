"""Traço, norma, quadrados e o símbolo de reciprocidade de extensões quadráticas.

As decisões de quadrado e de norma são exatas: para p ímpar vêm de
caracteres quadráticos do corpo residual; para p = 2 de buscas certificadas
em O_F/π^K, com K dentro da margem de Hensel para quadráticas.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..config import PRECISION_CONFIG, RANDOM_CONFIG
from ..exceptions import DomainError, PrecisionError
from ..kernel.matrices import determinant, trace
from ..kernel.numbers import square_class_representatives
from .involution import Involution, build_involution
from .tower import PadicElement, PadicTower, Subfield

# Configuração de logging
logger = logging.getLogger(__name__)

IDENTITY = 'identity'
STAR = 'star'


@dataclass(frozen=True)
class TraceNorm:
    """Traço e norma de um elemento, mergulhados na torre."""
    trace: PadicElement
    norm: PadicElement


def _layer_matrix(z: PadicElement) -> List[List[PadicElement]]:
    """Matriz e x e (entradas na camada) da multiplicação por ``z`` na base 1, y, ..., y^{e-1}."""
    tower = z.tower
    y = tower.y()
    columns = []
    power = tower.one()
    for _ in range(tower.e):
        product = z * power
        columns.append([tower.from_layer(block) for block in tower._blocks(product.coords)])
        power = power * y
    return [[columns[k][i] for k in range(tower.e)] for i in range(tower.e)]


def _layer_source_matrix(z: PadicElement) -> List[List[Any]]:
    tower = z.tower
    x = tower.x()
    columns = []
    power = tower.one()
    for _ in range(tower.f):
        columns.append((z * power).coords[:tower.f])
        power = power * x
    return [[columns[k][i] for k in range(tower.f)] for i in range(tower.f)]


def trace_norm(elem: PadicElement, sub: Subfield, involution: Optional[Involution] = None,
               source: Optional[Subfield] = None) -> TraceNorm:
    """Traço e norma de ``elem`` para o subcorpo ``sub``.

    Args:
        elem: elemento da torre (ou do subcorpo ``source``).
        sub: subcorpo alvo (base Q_p, camada L, corpo fixo F0).
        involution: necessária quando F0 aparece como alvo ou origem.
        source: corpo de origem; padrão é a torre inteira.

    Returns:
        ``TraceNorm`` com os resultados mergulhados na torre.
    """
    tower = elem.tower
    if Subfield.FIXED in (sub, source) and involution is None:
        raise DomainError("Traço/norma relativos a F0 exigem uma involução")

    if source is None:
        if sub is Subfield.BASE:
            matrix = tower.multiplication_matrix(elem)
            return TraceNorm(tower.scalar(trace(matrix)), tower.scalar(determinant(matrix)))
        if sub is Subfield.LAYER:
            matrix = _layer_matrix(elem)
            zero, one = tower.zero(), tower.one()
            return TraceNorm(trace(matrix, zero), determinant(matrix, zero, one))
        star = involution.apply(elem)
        return TraceNorm(elem + star, elem * star)

    if source is Subfield.FIXED:
        if sub is not Subfield.BASE:
            raise DomainError(f"O subcorpo {sub.value} não está contido em F0 nesta apresentação")
        matrix = involution.restricted_matrix(elem)
        return TraceNorm(tower.scalar(trace(matrix)), tower.scalar(determinant(matrix)))
    if source is Subfield.LAYER:
        if sub is not Subfield.BASE:
            raise DomainError(f"O subcorpo {sub.value} não está contido na camada")
        if not elem.in_layer():
            raise DomainError("Elemento não pertence à camada")
        matrix = _layer_source_matrix(elem)
        return TraceNorm(tower.scalar(trace(matrix)), tower.scalar(determinant(matrix)))
    if sub is not Subfield.BASE or any(c != 0 for c in elem.coords[1:]):
        raise DomainError("Origem Q_p só admite alvo Q_p e elementos racionais")
    return TraceNorm(elem, elem)


# -------------------------------------------------------------- quadrados
def _certified_square_keys(tower: PadicTower) -> Set[Tuple[int, ...]]:
    level = 2 * tower.e + 1
    keys = set()
    for t in tower.residue_representatives(tower.e + 1, units_only=True):
        keys.add(tower.residue_key(t * t, level))
    return keys


_SQUARE_CACHE: Dict[Any, Set[Tuple[int, ...]]] = {}


def is_square(x: PadicElement) -> bool:
    """Decide se ``x`` (não nulo) é um quadrado em F.

    Para p ímpar: valorização par e resíduo da parte unitária quadrado em F_q.
    Para p = 2: valorização par e u ≡ t² mod π^{2e+1} para alguma unidade t,
    o que Hensel certifica.
    """
    tower = x.tower
    m, unit = x.unit_part()
    if m % 2:
        return False
    if tower.p != 2:
        return tower.residue_is_square(unit.residue())
    level = 2 * tower.e + 1
    if level > tower.e * tower.precision:
        raise PrecisionError(f"Nível π^{level} excede a precisão {tower.precision}", level)
    if tower.key not in _SQUARE_CACHE:
        _SQUARE_CACHE[tower.key] = _certified_square_keys(tower)
    return tower.residue_key(unit, level) in _SQUARE_CACHE[tower.key]


# -------------------------------------------------------------- extensões
@dataclass
class QuadraticExtension:
    """Extensão quadrática F/F0 dada por uma torre e uma involução."""

    tower: PadicTower
    involution: Involution
    _norm_keys: Optional[Set[Tuple[int, ...]]] = field(default=None, repr=False)

    @classmethod
    def from_images(cls, tower: PadicTower, images: Sequence[Any]) -> 'QuadraticExtension':
        return cls(tower, build_involution(tower, images))

    @property
    def p(self) -> int:
        return self.tower.p

    @property
    def is_ramified(self) -> bool:
        return self.involution.is_ramified

    @property
    def e0(self) -> int:
        return self.involution.fixed_ramification_index

    def star(self, z: PadicElement) -> PadicElement:
        return self.involution.apply(z)

    def norm(self, z: PadicElement) -> PadicElement:
        return z * self.star(z)

    def fixed_valuation(self, x: PadicElement) -> int:
        """Valorização de ``x`` ∈ F0 na normalização de F0."""
        return int(x.valuation() * self.e0)

    @cached_property
    def delta(self) -> PadicElement:
        """δ = t - t* ≠ 0, com δ* = -δ; F = F0(δ) e δ² ∈ F0."""
        tower = self.tower
        y, x = tower.y(), tower.x()
        candidates = [y] + [(x ** i) * y for i in range(1, tower.f)] + [x ** i for i in range(1, tower.f)]
        for t in candidates:
            d = t - self.star(t)
            if not d.is_zero:
                return d
        raise DomainError("Não foi possível obter δ com δ* = -δ")

    def require_fixed(self, x: PadicElement) -> None:
        if x.is_zero:
            raise DomainError("Elemento nulo")
        if x.tower != self.tower:
            raise DomainError("Elemento de outra torre")
        if not self.involution.is_fixed(x):
            msg = "Elemento não pertence ao corpo fixo F0"
            logger.error(msg)
            raise DomainError(msg)

    def _norm_level(self) -> int:
        return (self.tower.e // self.e0) * (2 * self.e0 + 3)

    def _dyadic_norm_keys(self) -> Set[Tuple[int, ...]]:
        if self._norm_keys is None:
            level = self._norm_level()
            keys = set()
            for y in self.tower.residue_representatives(level, units_only=True):
                keys.add(self.tower.residue_key(self.norm(y), level))
            self._norm_keys = keys
            logger.debug(f"{len(keys)} classes de normas unitárias mod π^{level}")
        return self._norm_keys

    def is_norm(self, x: PadicElement) -> bool:
        """Decide se ``x`` ∈ F0^× é norma de F^×."""
        self.require_fixed(x)
        m0 = self.fixed_valuation(x)
        if not self.is_ramified:
            return m0 % 2 == 0
        if self.p != 2:
            return self._tame_is_norm(x, m0)
        level = self._norm_level()
        if level > self.tower.e * self.tower.precision:
            raise PrecisionError(f"Nível π^{level} excede a precisão {self.tower.precision}", level)
        uniformizer_norm = self.norm(self.tower.y())
        unit = x * (uniformizer_norm ** (-m0))
        return self.tower.residue_key(unit, level) in self._dyadic_norm_keys()

    def _tame_is_norm(self, x: PadicElement, m0: int) -> bool:
        square = self.delta * self.delta
        beta = self.fixed_valuation(square)
        sign = -1 if (m0 * beta) % 2 else 1
        symbol_unit = (x ** beta) * (square ** (-m0)) * sign
        return self.tower.residue_is_square(symbol_unit.residue())

    def reciprocity_symbol(self, x: PadicElement) -> str:
        """Imagem de ``x`` em Gal(F/F0) = {identity, star}."""
        return IDENTITY if self.is_norm(x) else STAR

    def random_fixed_element(self, rng: np.random.Generator, bound: Optional[int] = None) -> PadicElement:
        bound = bound or RANDOM_CONFIG['coefficient_bound']
        while True:
            acc = self.tower.zero()
            for b in self.involution.fixed_basis:
                acc = acc + b * int(rng.integers(-bound, bound + 1))
            if not acc.is_zero:
                return acc

    def random_element(self, rng: np.random.Generator, bound: Optional[int] = None) -> PadicElement:
        bound = bound or RANDOM_CONFIG['coefficient_bound']
        while True:
            coords = [int(c) for c in rng.integers(-bound, bound + 1, size=self.tower.d)]
            z = self.tower.element(coords)
            if not z.is_zero:
                return z

    def with_precision(self, precision: int) -> 'QuadraticExtension':
        tower = self.tower.with_precision(precision)
        images = [self.involution.x_image.coords, self.involution.y_image.coords]
        return QuadraticExtension(tower, build_involution(tower, images))


def with_precision_retry(decision: Callable[[QuadraticExtension], Any], ext: QuadraticExtension) -> Any:
    """Executa ``decision``; em ``PrecisionError`` reconstrói a torre com precisão maior, uma única vez."""
    try:
        return decision(ext)
    except PrecisionError as error:
        larger = ext.tower.precision * PRECISION_CONFIG['retry_factor']
        logger.warning(f"Precisão insuficiente ({error}); repetindo com N = {larger}")
        return decision(ext.with_precision(larger))


def is_norm(x: PadicElement, ext: QuadraticExtension) -> bool:
    return ext.is_norm(x)


def reciprocity_symbol(x: PadicElement, ext: QuadraticExtension) -> str:
    return ext.reciprocity_symbol(x)


# -------------------------------------------------------------- auditoria
def norm_class_representatives(ext: QuadraticExtension) -> List[PadicElement]:
    """Elementos de F0 que cobrem as classes de quadrados usadas na auditoria.

    Quando F0 = Q_p usamos os representantes clássicos de Q_p^×/(Q_p^×)²;
    caso contrário, 1, o uniformizador de F0, a base fixa e seus produtos
    com o uniformizador.
    """
    tower = ext.tower
    if ext.involution.fixed_degree == 1:
        return [tower.scalar(r) for r in square_class_representatives(tower.p)]
    uniformizer = ext.involution.fixed_uniformizer
    reps = [tower.one(), uniformizer]
    for b in ext.involution.fixed_basis:
        if b.is_zero:
            continue
        reps.append(b)
        reps.append(b * uniformizer)
    return reps


@dataclass(frozen=True)
class NormAuditReport:
    """Resultado da auditoria das classes de F0^×/N(F^×)."""
    classes_seen: int
    norm_count: int
    non_norm_count: int
    multiplicative: bool
    passed: bool
    failures: Tuple[str, ...] = ()


def norm_class_audit(ext: QuadraticExtension, elements: Sequence[PadicElement]) -> NormAuditReport:
    """Classifica ``elements`` e verifica a lei de grupo de ordem dois."""
    verdicts = [ext.is_norm(x) for x in elements]
    failures = []
    for i in range(len(elements)):
        j = (i + 1) % len(elements)
        product = ext.is_norm(elements[i] * elements[j])
        if product != (verdicts[i] == verdicts[j]):
            failures.append(f"classe de x{i}·x{j} não é o produto das classes")
    classes = len(set(verdicts))
    passed = classes == 2 and not failures
    return NormAuditReport(
        classes_seen=classes,
        norm_count=sum(verdicts),
        non_norm_count=len(verdicts) - sum(verdicts),
        multiplicative=not failures,
        passed=passed,
        failures=tuple(failures),
    )

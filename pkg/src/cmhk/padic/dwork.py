"""Testemunha finita do cálculo de reciprocidade no caso moderadamente ramificado.

Para F/F0 quadrática ramificada com p ímpar e um uniformizador π com π* = -π,
escolhemos uma unidade racional u de resíduo não quadrado no corpo residual de
F0, apresentamos c = √u na torre não ramificada Q_p[x]/(x² - u) e verificamos
nela que φ^f troca o sinal de c, que c·c* = u e que u não é norma de F.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from sympy import QQ

from ..exceptions import DomainError
from .norms import QuadraticExtension
from .tower import PadicElement, PadicTower

# Configuração de logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DworkReport:
    """Relatório da testemunha: a unidade escolhida, o sinal do Frobenius e as verificações."""
    u: PadicElement
    frobenius_sign: int
    uniformizer: PadicElement
    root_tower: PadicTower
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _anti_fixed_uniformizer(ext: QuadraticExtension) -> Optional[PadicElement]:
    tower = ext.tower
    target = QQ(1, tower.e)
    y = tower.y()
    for candidate in (y, ext.delta):
        if ext.star(candidate) == -candidate and candidate.valuation() == target:
            return candidate
    return None


def _non_square_unit(tower: PadicTower) -> int:
    """Menor inteiro 1 < u < p cujo resíduo não é quadrado em F_q."""
    for u in range(2, tower.p):
        if not tower.residue_is_square([u] + [0] * (tower.f - 1)):
            return u
    msg = f"Nenhuma unidade racional de resíduo não quadrado em F_{tower.residue_cardinality}"
    logger.error(msg)
    raise DomainError(msg)


def root_tower(p: int, u: int, precision: Optional[int] = None) -> PadicTower:
    """Torre não ramificada Q_p(√u) = Q_p[x]/(x² - u); exige u não quadrado mod p."""
    return PadicTower(p, 2, [1, 0, -u], [[1], [-p]], precision)


def frobenius_sign(tower: PadicTower, k: int) -> int:
    """Sinal ε com φ^k(c) = ε·c para o gerador c de uma torre Q_p[x]/(x² - u).

    Returns:
        1 ou -1; 0 se φ^k(c) não for ±c à precisão da torre.
    """
    c = tower.x()
    image = tower.frobenius_power(c, k)
    for sign in (1, -1):
        if image.agrees_with(c * sign, tower.precision):
            return sign
    logger.warning(f"φ^{k}(c) = {image} não é ±c em {tower}")
    return 0


def dwork_tame_witness(ext: QuadraticExtension) -> DworkReport:
    """Monta a testemunha para uma extensão quadrática moderadamente ramificada.

    Args:
        ext: extensão F/F0 com p ímpar, ramificada, com uniformizador anti-fixo.

    Returns:
        ``DworkReport`` com ``u``, a torre de c = √u e as verificações nomeadas.
    """
    if ext.p == 2:
        msg = "Caso p = 2 (selvagem) não é suportado pela testemunha moderada"
        logger.error(msg)
        raise DomainError(msg)
    if not ext.is_ramified:
        msg = "A testemunha exige F/F0 ramificada"
        logger.error(msg)
        raise DomainError(msg)
    uniformizer = _anti_fixed_uniformizer(ext)
    if uniformizer is None:
        msg = "Nenhum uniformizador com π* = -π na apresentação"
        logger.error(msg)
        raise DomainError(msg)

    tower = ext.tower
    value = _non_square_unit(tower)
    u = tower.scalar(value)
    k_tower = root_tower(tower.p, value, tower.precision)
    c = k_tower.x()
    sign = frobenius_sign(k_tower, tower.f)
    # * se estende a K = F(c) fixando F0(c)
    c_star = c
    frobenius_norm = c * k_tower.frobenius_power(c, tower.f)

    checks = {
        'non_square_residue': not tower.residue_is_square(u.residue()),
        'frobenius_negates_root': sign == -1,
        'norm_of_root_is_u': (c * c_star).agrees_with(k_tower.scalar(value), k_tower.precision),
        'frobenius_norm_is_minus_u': frobenius_norm.agrees_with(k_tower.scalar(-value), k_tower.precision),
        'u_is_not_norm': not ext.is_norm(u),
        'uniformizer_anti_fixed': ext.star(uniformizer) == -uniformizer,
        'ramified': ext.is_ramified,
    }
    report = DworkReport(u=u, frobenius_sign=sign, uniformizer=uniformizer, root_tower=k_tower, checks=checks)
    logger.info(f"Testemunha moderada sobre {tower}: u = {u}, φ^{tower.f}(√u) = {sign}·√u, aprovada = {report.passed}")
    return report

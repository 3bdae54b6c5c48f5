"""Critérios de assinatura módulo 4 e a redução do problema de positividade a p.

Os relatórios carregam os dados brutos e os veredictos; uma verificação que
falha é um campo do relatório, nunca uma exceção. As identidades que são
teoremas (e não hipóteses do usuário) levantam ``ConsistencyError`` quando
violadas.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

from ..exceptions import ConsistencyError, DomainError
from .hilbert import epsilon, hilbert_symbol, same_square_class
from .quadratic_form import REAL_PLACE, HodgeNumbers, PlaceQ, QuadraticFormQ, invariants, orthogonal_sum

# Configuração de logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mod4Report:
    """Sinal do discriminante, índice negativo, ε_real e os veredictos 2 | s_- e 4 | s_-."""
    disc_sign: int
    s_minus: int
    eps_real: int
    verdict_2_divides: bool
    verdict_4_divides: bool


def mod4_report(form: QuadraticFormQ) -> Mod4Report:
    """Relatório da relação entre discriminante, assinatura e ε_real."""
    inv = invariants(form)
    eps_real = epsilon(form, REAL_PLACE)
    report = Mod4Report(
        disc_sign=inv.disc_sign,
        s_minus=inv.s_minus,
        eps_real=eps_real,
        verdict_2_divides=inv.s_minus % 2 == 0,
        verdict_4_divides=inv.s_minus % 4 == 0,
    )
    if (report.disc_sign == 1) != report.verdict_2_divides:
        raise ConsistencyError(f"Sinal do discriminante incoerente com s_- = {inv.s_minus}")
    if report.disc_sign == 1 and report.verdict_4_divides != (eps_real == 1):
        raise ConsistencyError(f"4 | s_- incoerente com ε_real = {eps_real}")
    return report


@dataclass(frozen=True)
class CheckItem:
    """Item de um veredicto detalhado."""
    name: str
    passed: bool
    detail: str = ''
    informational: bool = False


@dataclass(frozen=True)
class ReductionVerdict:
    """Veredicto da redução p-ádica, com a lista de itens verificados."""
    p: int
    s_m: int
    eps_z: int
    eps_b: int
    items: Tuple[CheckItem, ...]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items if not item.informational)

    def item(self, name: str) -> CheckItem:
        return next(item for item in self.items if item.name == name)


def padic_reduction_check(q_z: QuadraticFormQ, q_b: QuadraticFormQ, p: int,
                          hodge: HodgeNumbers) -> ReductionVerdict:
    """Verifica discriminantes iguais e positivos e ε_p(q_Z)/ε_p(q_B) = (-1)^{s_M}.

    Args:
        q_z: forma do lado dos ciclos.
        q_b: forma de Betti (polarização).
        p: primo.
        hodge: números de Hodge de V_B.

    Returns:
        ``ReductionVerdict`` itemizado.
    """
    if q_z.dim != q_b.dim:
        msg = f"Dimensões diferentes: {q_z.dim} e {q_b.dim}"
        logger.error(msg)
        raise DomainError(msg)
    place = PlaceQ(p)
    inv_z, inv_b = invariants(q_z), invariants(q_b)
    s_m = hodge.s_m()
    eps_z, eps_b = epsilon(q_z, place), epsilon(q_b, place)
    expected = -1 if s_m % 2 else 1

    items = (
        CheckItem('discriminant', inv_z.discriminant == inv_b.discriminant,
                  f"{inv_z.discriminant} vs {inv_b.discriminant}"),
        CheckItem('positive', inv_z.discriminant > 0, f"sinal {inv_z.disc_sign}"),
        CheckItem('epsilon', eps_z * eps_b == expected, f"ε_p(q_Z)/ε_p(q_B) = {eps_z * eps_b}, (-1)^s_M = {expected}"),
        CheckItem('hodge_signature', inv_b.s_minus == hodge.s_minus_b(),
                  f"s_-(q_B) = {inv_b.s_minus}, Σ h_ímpar = {hodge.s_minus_b()}", informational=True),
    )
    verdict = ReductionVerdict(p=p, s_m=s_m, eps_z=eps_z, eps_b=eps_b, items=items)
    logger.info(f"Redução p-ádica em p={p}: s_M={s_m}, aprovada={verdict.passed}")
    return verdict


@dataclass(frozen=True)
class SignatureTopReport:
    """Dados do critério que transfere 4 | s_-(q1) para o lugar p."""
    disc_equal: bool
    disc_positive: bool
    predicted_4_divides: bool
    actual_4_divides: bool

    @property
    def consistent(self) -> bool:
        if not (self.disc_equal and self.disc_positive):
            return True
        return self.predicted_4_divides == self.actual_4_divides


def signature_top_check(q1: QuadraticFormQ, q2: QuadraticFormQ, p: int) -> SignatureTopReport:
    """Compara a previsão ε_p(q1) = ε_R(q2)ε_p(q2) com o valor real de 4 | s_-(q1).

    A previsão só é um teorema quando q1 e q2 são isomorfas em todo primo
    ℓ ≠ p; o relatório apenas expõe os dois lados.
    """
    place = PlaceQ(p)
    inv1, inv2 = invariants(q1), invariants(q2)
    predicted = epsilon(q1, place) == epsilon(q2, REAL_PLACE) * epsilon(q2, place)
    return SignatureTopReport(
        disc_equal=inv1.discriminant == inv2.discriminant,
        disc_positive=inv1.discriminant > 0,
        predicted_4_divides=predicted,
        actual_4_divides=inv1.s_minus % 4 == 0,
    )


def epsilon_sum_identity(f1: QuadraticFormQ, f2: QuadraticFormQ, place) -> bool:
    """ε(f1 ⊕ f2) = ε(f1)·ε(f2)·(d1, d2)_ν."""
    place = PlaceQ.parse(place)
    total = epsilon(orthogonal_sum(f1, f2), place)
    glued = epsilon(f1, place) * epsilon(f2, place) * hilbert_symbol(f1.determinant, f2.determinant, place)
    return total == glued


def local_discriminant_equal(f1: QuadraticFormQ, f2: QuadraticFormQ, p: int) -> bool:
    return same_square_class(f1.determinant, f2.determinant, p)

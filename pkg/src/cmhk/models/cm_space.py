"""Espaços quadráticos CM de dimensão um sobre F.

A forma associada ao calibre a ∈ F0^× é b(x, y) = ½·Tr_{F/Q}(a·x*·y), de modo
que q(x) = Tr_{F0/Q}(a·x·x*). Pelo teorema de classificação há exatamente
duas classes, distinguidas pela classe de a em F0^×/N(F^×); os invariantes
racionais (discriminante, ε_p) vêm de ``cmhk.forms``.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ

from ..config import RANDOM_CONFIG
from ..exceptions import ConsistencyError, DomainError, StructureError
from ..forms import PlaceQ, QuadraticFormQ, epsilon, invariants
from ..kernel.matrices import (
    identity,
    mat_equal,
    mat_mul,
    mat_vec,
    rational_inverse,
    rational_solve,
    transpose,
)
from ..padic import PadicElement, QuadraticExtension, with_precision_retry

# Configuração de logging
logger = logging.getLogger(__name__)

TRIVIAL = 'trivial'
NONTRIVIAL = 'nontrivial'


@dataclass(frozen=True)
class CMQuadraticSpace:
    """Espaço CM (F, *, a): extensão quadrática com involução e um calibre a ∈ F0^×."""
    extension: QuadraticExtension
    gauge: PadicElement

    def __post_init__(self):
        if self.gauge.is_zero:
            raise DomainError("Calibre nulo")
        if not self.extension.involution.is_fixed(self.gauge):
            msg = "Calibre não pertence ao corpo fixo F0"
            logger.error(msg)
            raise DomainError(msg)

    @property
    def tower(self):
        return self.extension.tower

    @property
    def star(self):
        return self.extension.involution


def _basis_matrix(space_basis: Sequence[PadicElement]) -> List[List[object]]:
    d = len(space_basis)
    return [[space_basis[k].coords[i] for k in range(d)] for i in range(d)]


def trace_form_gram(space: CMQuadraticSpace, basis: Optional[Sequence[PadicElement]] = None) -> QuadraticFormQ:
    """Matriz de Gram G(i, j) = ½·Tr_{F/Q}(a·e_i*·e_j) na base dada.

    Args:
        space: espaço CM.
        basis: base de F sobre Q; padrão é a base x^i y^j da torre.

    Returns:
        ``QuadraticFormQ`` exata (levanta ``DegeneracyError`` se singular).
    """
    tower = space.tower
    basis = list(basis) if basis is not None else tower.basis()
    if len(basis) != tower.d:
        raise DomainError(f"A base deve ter {tower.d} elementos")
    starred = [space.gauge * space.star.apply(b) for b in basis]
    half = QQ(1, 2)
    gram = [[half * tower.rational_trace(starred[i] * basis[j]) for j in range(tower.d)]
            for i in range(tower.d)]
    return QuadraticFormQ(gram)


@dataclass(frozen=True)
class CMAction:
    """Matrizes (na base escolhida) dos geradores x, y e das suas imagens por *."""
    generators: Tuple[List[List[object]], ...]
    star_images: Tuple[List[List[object]], ...]
    basis_matrix: List[List[object]]


def cm_action(extension: QuadraticExtension, basis: Optional[Sequence[PadicElement]] = None) -> CMAction:
    tower = extension.tower
    basis_matrix = _basis_matrix(basis) if basis is not None else identity(tower.d)
    inverse = rational_inverse(basis_matrix)

    def in_basis(z: PadicElement):
        return mat_mul(inverse, mat_mul(tower.multiplication_matrix(z), basis_matrix))

    gens = (tower.x(), tower.y())
    return CMAction(
        generators=tuple(in_basis(g) for g in gens),
        star_images=tuple(in_basis(extension.star(g)) for g in gens),
        basis_matrix=basis_matrix,
    )


def adjoint_check(gram: QuadraticFormQ, action: CMAction) -> bool:
    """Verifica b(αx, y) = b(x, α*y) para os dois geradores: M_αᵀ G = G M_{α*}."""
    g = gram.gram
    for m_alpha, m_star in zip(action.generators, action.star_images):
        if not mat_equal(mat_mul(transpose(m_alpha), g), mat_mul(g, m_star)):
            return False
    return True


def gauge_recover(gram: QuadraticFormQ, action: CMAction, extension: QuadraticExtension) -> PadicElement:
    """Recupera o calibre a com b(1, y) = Tr_{F0/Q}(a·y) para todo y ∈ F0.

    O resultado é único para a base dada; mudar a base multiplica a por uma
    norma, de modo que só a classe módulo N(F^×) é intrínseca.
    """
    if not adjoint_check(gram, action):
        msg = "A ação não é autoadjunta em relação à forma"
        logger.error(msg)
        raise StructureError(msg, 'adjoint')
    tower = extension.tower
    to_basis = rational_inverse(action.basis_matrix)
    fixed = extension.involution.fixed_basis
    one = mat_vec(to_basis, tower.one().coords)
    g = gram.gram
    one_g = [sum((one[i] * g[i][j] for i in range(tower.d)), QQ(0)) for j in range(tower.d)]
    half = QQ(1, 2)
    rows, rhs = [], []
    for w_k in fixed:
        rows.append([half * tower.rational_trace(w_m * w_k) for w_m in fixed])
        coords = mat_vec(to_basis, w_k.coords)
        rhs.append(sum((a * b for a, b in zip(one_g, coords)), QQ(0)))
    try:
        solution = rational_solve(rows, rhs)
    except DomainError:
        msg = "Forma traço de F0 singular: modelo corrompido"
        logger.error(msg)
        raise StructureError(msg, 'trace_pairing')
    gauge = tower.zero()
    for c, w in zip(solution, fixed):
        gauge = gauge + w * c
    return gauge


def cm_classify(space: CMQuadraticSpace) -> str:
    """Classe do espaço: ``trivial`` se o calibre é norma, senão ``nontrivial``."""
    is_norm = with_precision_retry(lambda ext: ext.is_norm(space.gauge), space.extension)
    return TRIVIAL if is_norm else NONTRIVIAL


@dataclass(frozen=True)
class CMCompareReport:
    """Comparação de dois espaços CM sobre o mesmo (F, *)."""
    isomorphic: bool
    disc_equal: bool
    eps_p_1: int
    eps_p_2: int
    disc_1: int
    disc_2: int


def cm_compare(s1: CMQuadraticSpace, s2: CMQuadraticSpace) -> CMCompareReport:
    """Compara pelo teste do calibre e confere com os invariantes racionais em p.

    Levanta ``ConsistencyError`` se o teste do calibre e o teste de ε_p
    discordarem, ou se os discriminantes diferirem.
    """
    if s1.extension.tower != s2.extension.tower or s1.star.matrix != s2.star.matrix:
        raise DomainError("Os espaços devem compartilhar torre e involução")
    ext = s1.extension
    ratio = s1.gauge * s2.gauge.inverse()
    isomorphic = with_precision_retry(lambda e: e.is_norm(ratio), ext)
    place = PlaceQ(ext.p)
    g1, g2 = trace_form_gram(s1), trace_form_gram(s2)
    inv1, inv2 = invariants(g1), invariants(g2)
    report = CMCompareReport(
        isomorphic=isomorphic,
        disc_equal=inv1.discriminant == inv2.discriminant,
        eps_p_1=epsilon(g1, place),
        eps_p_2=epsilon(g2, place),
        disc_1=inv1.discriminant,
        disc_2=inv2.discriminant,
    )
    if not report.disc_equal:
        raise ConsistencyError(f"Discriminantes diferentes: {inv1.discriminant} e {inv2.discriminant}")
    if report.isomorphic != (report.eps_p_1 == report.eps_p_2):
        raise ConsistencyError(
            f"Critérios discordam: calibre diz isomorfo={isomorphic}, ε_p = {report.eps_p_1}, {report.eps_p_2}"
        )
    return report


@dataclass(frozen=True)
class MilnorAuditReport:
    """Auditoria da lei das duas classes sobre um conjunto de calibres."""
    gauges: int
    disc_classes: Tuple[int, ...]
    invariant_pairs: Tuple[Tuple[int, int], ...]
    gauge_classes: Tuple[bool, ...]
    discrepancies: int

    @property
    def passed(self) -> bool:
        return len(self.disc_classes) == 1 and len(self.invariant_pairs) == 2 and self.discrepancies == 0


def random_gauges(extension: QuadraticExtension, count: int, seed: Optional[int] = None) -> List[PadicElement]:
    """Calibres aleatórios de F0^× (semente fixa por padrão)."""
    rng = np.random.default_rng(RANDOM_CONFIG['random_state'] if seed is None else seed)
    return [extension.random_fixed_element(rng) for _ in range(count)]


def milnor_audit(extension: QuadraticExtension, gauges: Sequence[PadicElement]) -> MilnorAuditReport:
    """Discriminante constante, exatamente dois pares (disc, ε_p) e critérios equivalentes.

    Args:
        extension: F/F0.
        gauges: calibres (devem cobrir as duas classes para o par de invariantes).

    Returns:
        ``MilnorAuditReport``.
    """
    place = PlaceQ(extension.p)
    discs, pairs, classes = [], [], []
    for a in gauges:
        gram = trace_form_gram(CMQuadraticSpace(extension, a))
        disc = invariants(gram).discriminant
        eps = epsilon(gram, place)
        discs.append(disc)
        pairs.append((disc, eps))
        classes.append(extension.is_norm(a))

    discrepancies = 0
    for i, j in itertools.combinations(range(len(gauges)), 2):
        ratio_is_norm = extension.is_norm(gauges[i] * gauges[j].inverse())
        if ratio_is_norm != (pairs[i][1] == pairs[j][1]):
            discrepancies += 1
    report = MilnorAuditReport(
        gauges=len(gauges),
        disc_classes=tuple(sorted(set(discs))),
        invariant_pairs=tuple(sorted(set(pairs))),
        gauge_classes=tuple(classes),
        discrepancies=discrepancies,
    )
    if discrepancies:
        logger.warning(f"Auditoria com {discrepancies} discrepâncias sobre {extension.tower}")
    logger.info(f"Auditoria de Milnor: {len(report.invariant_pairs)} pares (disc, ε_p), aprovada={report.passed}")
    return report

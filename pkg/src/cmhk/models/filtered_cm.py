"""Espaços CM filtrados: pesos inteiros indexados pelos mergulhos, com involução.

Os mergulhos são modelados pelo conjunto de índices {0, ..., d-1} com ι = 0.
O espaço é simétrico quando n[i] = -n[*i]; nesse caso o mínimo do polígono
de Hodge é -Σ_{n[i] ≥ 0} n[i], e a classe do período segue a paridade desse
número: o espaço fundamental (n[ι] = 1, n[ι*] = -1) tem período fora do grupo
das normas, e a classe é multiplicativa no produto tensorial.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from ..config import RANDOM_CONFIG
from ..exceptions import DomainError
from ..padic import PadicTower
from .phi_module import SYMMETRIC_TAG, FilteredPhiModule, hodge_polygon

# Configuração de logging
logger = logging.getLogger(__name__)

NORM = 'norm'
NON_NORM = 'non-norm'
EVEN = 'even'
ODD = 'odd'

FUNDAMENTAL_AXIOM = (
    "período do espaço fundamental fora do grupo das normas (fato estabelecido; "
    "corroborado pelo caso não ramificado e pela testemunha de Dwork)"
)


def _parity(n: int) -> str:
    return ODD if n % 2 else EVEN


def _check_star(d: int, star_perm: Sequence[int]) -> Tuple[int, ...]:
    perm = tuple(int(i) for i in star_perm)
    if d < 2 or len(perm) != d:
        raise DomainError(f"Permutação de tamanho {len(perm)} incompatível com d = {d}")
    if sorted(perm) != list(range(d)):
        raise DomainError(f"Não é uma permutação de 0..{d - 1}: {list(perm)}")
    if any(perm[perm[i]] != i for i in range(d)):
        raise DomainError(f"A involução deve ter ordem ≤ 2: {list(perm)}")
    if perm[0] == 0:
        msg = "ι = 0 não pode ser fixo pela involução"
        logger.error(msg)
        raise DomainError(msg)
    return perm


@dataclass(frozen=True)
class FilteredCMSpace:
    """Espaço (V, n, ι, *) com ι = 0."""
    d: int
    star_perm: Tuple[int, ...]
    weights: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'star_perm', _check_star(self.d, self.star_perm))
        if len(self.weights) != self.d:
            raise DomainError(f"Esperados {self.d} pesos, recebidos {len(self.weights)}")
        object.__setattr__(self, 'weights', tuple(int(n) for n in self.weights))

    @classmethod
    def zero(cls, d: int, star_perm: Sequence[int]) -> 'FilteredCMSpace':
        return cls(d, tuple(star_perm), (0,) * d)

    def star(self, i: int) -> int:
        return self.star_perm[i]


def validate_symmetric(space: FilteredCMSpace) -> bool:
    """Verdadeiro se n[i] = -n[*i] para todo i."""
    return all(space.weights[i] == -space.weights[space.star(i)] for i in range(space.d))


def _require_symmetric(space: FilteredCMSpace) -> None:
    if not validate_symmetric(space):
        msg = f"Espaço não simétrico: pesos {list(space.weights)}"
        logger.error(msg)
        raise DomainError(msg)


def tensor(first: FilteredCMSpace, second: FilteredCMSpace) -> FilteredCMSpace:
    """Produto tensorial: os pesos se somam."""
    if first.d != second.d or first.star_perm != second.star_perm:
        msg = "Produto tensorial exige o mesmo d e a mesma involução"
        logger.error(msg)
        raise DomainError(msg)
    weights = tuple(a + b for a, b in zip(first.weights, second.weights))
    return FilteredCMSpace(first.d, first.star_perm, weights)


def fundamental(d: int, star_perm: Sequence[int]) -> FilteredCMSpace:
    """Espaço fundamental: n[0] = 1, n[*0] = -1, demais nulos."""
    perm = _check_star(d, star_perm)
    weights = [0] * d
    weights[0] = 1
    weights[perm[0]] = -1
    return FilteredCMSpace(d, perm, tuple(weights))


def star_swap(space: FilteredCMSpace) -> FilteredCMSpace:
    """Espaço com pesos trocados pela involução (n'[i] = n[*i])."""
    return FilteredCMSpace(space.d, space.star_perm, tuple(space.weights[space.star(i)] for i in range(space.d)))


def hodge_min(space: FilteredCMSpace) -> int:
    """Σ dos pesos não negativos (o oposto do mínimo do polígono de Hodge)."""
    _require_symmetric(space)
    return sum(n for n in space.weights if n >= 0)


def period_norm_class(space: FilteredCMSpace) -> str:
    """``non-norm`` se o mínimo de Hodge é ímpar, senão ``norm``."""
    return NON_NORM if hodge_min(space) % 2 else NORM


def class_sign(period_class: str) -> int:
    return 1 if period_class == NORM else -1


@dataclass(frozen=True)
class GoodnessReport:
    """Derivação completa do predicado de bondade de um bloco."""
    hodge_min: int
    period_class: str
    forms_isomorphic: bool
    s_m_parity: str
    good: bool
    trace: Tuple[str, ...] = field(default_factory=tuple)


def _is_good(forms_isomorphic: bool, parity: str) -> bool:
    return forms_isomorphic == (parity == EVEN)


def goodness(space: FilteredCMSpace) -> GoodnessReport:
    """Bondade de um espaço simétrico.

    As formas são isomorfas exatamente quando o período é uma norma; o bloco
    é bom quando isso coincide com a paridade par de s_M. Para espaços
    simétricos o resultado é sempre bom, mas o relatório traz cada passo.
    """
    s_m = hodge_min(space)
    period_class = NON_NORM if s_m % 2 else NORM
    isomorphic = period_class == NORM
    parity = _parity(s_m)
    good = _is_good(isomorphic, parity)
    trace = (
        f"pesos = {list(space.weights)}, involução = {list(space.star_perm)}",
        f"s_M = Σ n ≥ 0 = {s_m}",
        f"axioma: {FUNDAMENTAL_AXIOM}",
        f"classe do período = {period_class} (paridade de s_M, multiplicatividade no tensor)",
        f"formas isomorfas ⇔ período é norma: {isomorphic}",
        f"bom = (isomorfas ∧ par) ∨ (¬isomorfas ∧ ímpar) = {good}",
    )
    return GoodnessReport(s_m, period_class, isomorphic, parity, good, trace)


def goodness_from_forms(forms_isomorphic: bool, s_m: int) -> GoodnessReport:
    """Bondade a partir de um teste de isomorfismo efetivo (não tautológico)."""
    if s_m < 0:
        raise DomainError(f"s_M deve ser não negativo: {s_m}")
    parity = _parity(s_m)
    period_class = NORM if forms_isomorphic else NON_NORM
    good = _is_good(forms_isomorphic, parity)
    trace = (
        f"formas isomorfas (teste efetivo) = {forms_isomorphic}",
        f"s_M = {s_m} ({parity})",
        f"bom = {good}",
    )
    return GoodnessReport(s_m, period_class, forms_isomorphic, parity, good, trace)


@dataclass(frozen=True)
class AggregateVerdict:
    """Veredicto global sobre os blocos CM e hiperbólicos."""
    good: bool
    block_parities: Tuple[str, ...]
    hyperbolic_ranks: Tuple[int, ...]
    total_s_m: int
    total_parity: str
    culprit: Optional[int]
    trace: Tuple[str, ...]


def aggregate_blocks(reports: Sequence[GoodnessReport], hyperbolic_ranks: Sequence[int] = ()) -> AggregateVerdict:
    """Conjunção da bondade por bloco.

    Blocos hiperbólicos contribuem formas isomorfas e paridade par; os
    discriminantes iguais bloco a bloco tornam ε multiplicativo na soma
    ortogonal, de modo que basta a bondade de cada bloco.

    Args:
        reports: relatórios dos blocos CM, na ordem do plano de blocos.
        hyperbolic_ranks: postos dos blocos hiperbólicos.

    Returns:
        ``AggregateVerdict`` com o índice do primeiro bloco ruim, se houver.
    """
    for rank in hyperbolic_ranks:
        if rank <= 0 or rank % 2:
            raise DomainError(f"Bloco hiperbólico deve ter posto par positivo: {rank}")
    culprit = next((i for i, report in enumerate(reports) if not report.good), None)
    total = sum(report.hodge_min for report in reports)
    trace = [f"bloco {i}: s_M = {r.hodge_min} ({r.s_m_parity}), bom = {r.good}" for i, r in enumerate(reports)]
    trace += [f"hiperbólico de posto {rank}: isomorfas, par" for rank in hyperbolic_ranks]
    trace.append(f"s_M total = {total} ({_parity(total)})")
    verdict = AggregateVerdict(
        good=culprit is None,
        block_parities=tuple(report.s_m_parity for report in reports),
        hyperbolic_ranks=tuple(int(r) for r in hyperbolic_ranks),
        total_s_m=total,
        total_parity=_parity(total),
        culprit=culprit,
        trace=tuple(trace),
    )
    if culprit is not None:
        logger.warning(f"Bloco {culprit} não é bom")
    return verdict


def tensor_generators(d: int, star_perm: Sequence[int]) -> Dict[int, FilteredCMSpace]:
    """Família V(τ): peso 1 em τ e -1 em τ*, para cada τ < τ*."""
    perm = _check_star(d, star_perm)
    generators = {}
    for tau in range(d):
        if tau < perm[tau]:
            weights = [0] * d
            weights[tau], weights[perm[tau]] = 1, -1
            generators[tau] = FilteredCMSpace(d, perm, tuple(weights))
    return generators


def decompose_symmetric(space: FilteredCMSpace) -> Dict[int, int]:
    """Coeficientes {τ: n[τ]} com V = ⊗ V(τ)^{n[τ]}."""
    _require_symmetric(space)
    return {tau: space.weights[tau] for tau in range(space.d) if tau < space.star(tau)}


def recompose(d: int, star_perm: Sequence[int], coefficients: Dict[int, int]) -> FilteredCMSpace:
    """Inverso de :func:`decompose_symmetric`."""
    generators = tensor_generators(d, star_perm)
    result = FilteredCMSpace.zero(d, star_perm)
    for tau, n in coefficients.items():
        generator = generators[tau] if n >= 0 else star_swap(generators[tau])
        for _ in range(abs(n)):
            result = tensor(result, generator)
    return result


def random_star_perm(rng: np.random.Generator, d: int) -> Tuple[int, ...]:
    """Involução aleatória de {0..d-1} que não fixa 0."""
    if d < 2:
        raise DomainError("d deve ser ao menos 2")
    perm = list(range(d))
    partner = int(rng.integers(1, d))
    perm[0], perm[partner] = partner, 0
    rest = [i for i in range(1, d) if i != partner]
    rng.shuffle(rest)
    for a, b in zip(rest[0::2], rest[1::2]):
        if rng.random() < 0.7:
            perm[a], perm[b] = b, a
    return tuple(perm)


def random_symmetric(rng: np.random.Generator, d: int, star_perm: Optional[Sequence[int]] = None,
                     bound: Optional[int] = None) -> FilteredCMSpace:
    """Espaço simétrico aleatório com pesos em [-bound, bound]."""
    bound = RANDOM_CONFIG['coefficient_bound'] if bound is None else bound
    perm = _check_star(d, star_perm) if star_perm is not None else random_star_perm(rng, d)
    weights = [0] * d
    for tau in range(d):
        if tau < perm[tau]:
            n = int(rng.integers(-bound, bound + 1))
            weights[tau], weights[perm[tau]] = n, -n
    return FilteredCMSpace(d, perm, tuple(weights))


def to_phi_module(space: FilteredCMSpace, p: int) -> FilteredPhiModule:
    """φ-módulo associado sobre a camada trivial: base φ-fixa, saltos = pesos."""
    _require_symmetric(space)
    layer = PadicTower(p, 1, [1, -1], [[1], [-p]])
    rows = [[1 if i == j else 0 for j in range(space.d)] for i in range(space.d)]
    counts: Dict[int, int] = {}
    for n in space.weights:
        counts[n] = counts.get(n, 0) + 1
    return FilteredPhiModule.build(layer, rows, sorted(counts.items()), tag=SYMMETRIC_TAG)


def hodge_minimum_matches(space: FilteredCMSpace, module: FilteredPhiModule) -> bool:
    """O mínimo do polígono de Hodge do módulo convertido é -hodge_min(V)."""
    return hodge_polygon(module).min_ordinate() == -hodge_min(space)

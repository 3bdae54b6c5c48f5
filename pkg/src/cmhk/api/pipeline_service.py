"""Serviço do pipeline ponta a ponta.

Este módulo coordena a decomposição da álgebra em p, a comparação das formas
traço em cada bloco CM, a agregação da bondade e a redução p-ádica sobre as
formas montadas. Os blocos CM são independentes e podem ser processados em
paralelo; o relatório segue sempre a ordem do plano de blocos.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..config import get_default_precision
from ..data.documents import malformed_document, parse_algebra, parse_element, parse_hodge, validate_document
from ..decomposition import (
    CM,
    HYPERBOLIC,
    Block,
    BlockPlan,
    GlobalCMAlgebra,
    LocalFactorSet,
    block_extension,
    decompose,
)
from ..exceptions import DomainError
from ..forms import HodgeNumbers, QuadraticFormQ, orthogonal_sum
from ..forms.criteria import CheckItem, ReductionVerdict, padic_reduction_check
from ..models import (
    AggregateVerdict,
    CMQuadraticSpace,
    GoodnessReport,
    aggregate_blocks,
    cm_compare,
    goodness_from_forms,
    trace_form_gram,
)
from ..models.cm_space import CMCompareReport

# Configuração de logging
logger = logging.getLogger(__name__)

DATA_ONLY = 'data-only'


@dataclass(frozen=True)
class GaugePair:
    """Calibres (a_B, a_Z) de um bloco CM e, opcionalmente, o s_M do bloco."""
    a_b: Any
    a_z: Any
    s_m: Optional[int] = None


@dataclass(frozen=True)
class PipelineRequest:
    """Pedido do pipeline: álgebra, primo, precisão, calibres por bloco CM e números de Hodge."""
    algebra: GlobalCMAlgebra
    p: int
    precision: int
    gauges: Tuple[GaugePair, ...] = ()
    hodge: HodgeNumbers = field(default_factory=HodgeNumbers)
    supplied_factors: Optional[Tuple[Any, ...]] = None

    @classmethod
    def from_document(cls, document: Any) -> 'PipelineRequest':
        """Monta o pedido a partir do documento JSON.

        Formato: ``{"g", "r"}`` (ou ``"algebra"``), ``"p"``, ``"precision"``?,
        ``"gauges": [{"a_B", "a_Z", "s_M"?}]``, ``"hodge"``?, ``"supplied_factors"``?.
        """
        valid, errors = validate_document(document, ['p'])
        if not valid:
            msg = f"Pedido de pipeline inválido: {'; '.join(errors)}"
            logger.error(msg)
            raise DomainError(msg)
        with malformed_document('pipeline'):
            algebra = parse_algebra(document.get('algebra', document))
            gauges = []
            for entry in document.get('gauges', []):
                if isinstance(entry, dict):
                    if 'a_B' not in entry or 'a_Z' not in entry:
                        raise DomainError(f"Calibre sem a_B/a_Z: {entry}")
                    s_m = entry.get('s_M')
                    gauges.append(GaugePair(entry['a_B'], entry['a_Z'], int(s_m) if s_m is not None else None))
                else:
                    a_b, a_z = entry
                    gauges.append(GaugePair(a_b, a_z))
            supplied = document.get('supplied_factors')
            return cls(
                algebra=algebra,
                p=int(document['p']),
                precision=int(document.get('precision') or get_default_precision()),
                gauges=tuple(gauges),
                hodge=parse_hodge(document.get('hodge')),
                supplied_factors=tuple(supplied) if supplied is not None else None,
            )


@dataclass(frozen=True)
class BlockResult:
    """Resultado de um bloco do plano."""
    index: int
    kind: str
    factors: Tuple[int, ...]
    rank: int
    status: str
    q_b: Optional[QuadraticFormQ] = None
    q_z: Optional[QuadraticFormQ] = None
    compare: Optional[CMCompareReport] = None
    goodness: Optional[GoodnessReport] = None

    @property
    def passed(self) -> bool:
        return self.goodness is None or self.goodness.good


@dataclass(frozen=True)
class PipelineReport:
    """Relatório consolidado: blocos, agregação, redução p-ádica e veredicto."""
    p: int
    factors: LocalFactorSet
    plan: BlockPlan
    blocks: Tuple[BlockResult, ...]
    aggregate: AggregateVerdict
    reduction: Optional[ReductionVerdict]
    items: Tuple[CheckItem, ...]
    failed_block: Optional[int]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items if not item.informational)


def hyperbolic_form(rank: int) -> QuadraticFormQ:
    """Soma de rank/2 planos hiperbólicos: Gram [[0, I], [I, 0]]."""
    if rank <= 0 or rank % 2:
        raise DomainError(f"Posto hiperbólico deve ser par positivo: {rank}")
    half = rank // 2
    gram = [[1 if abs(i - j) == half else 0 for j in range(rank)] for i in range(rank)]
    return QuadraticFormQ(gram)


class PipelineService:
    """Coordena decomposição, comparação por bloco, agregação e redução p-ádica."""

    def __init__(self, max_workers: Optional[int] = None):
        """Inicializa o serviço.

        Args:
            max_workers: número de threads para os blocos CM (padrão do executor se None).
        """
        self.max_workers = max_workers

    def run(self, request: PipelineRequest) -> PipelineReport:
        """Executa o pipeline completo.

        Args:
            request: pedido validado.

        Returns:
            ``PipelineReport`` com a derivação completa.
        """
        factor_set, plan = decompose(request.algebra, request.p, request.precision, request.supplied_factors)
        jobs = self._assign_gauges(plan, request)

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            cm_results = list(executor.map(lambda job: self._run_cm_block(job, request.precision), jobs))
        by_index = {result.index: result for result in cm_results}

        results: List[BlockResult] = []
        for index, block in enumerate(plan.blocks):
            if block.kind == HYPERBOLIC:
                form = hyperbolic_form(block.rank)
                results.append(BlockResult(index, HYPERBOLIC, block.factors, block.rank, 'hyperbolic',
                                           q_b=form, q_z=form))
            else:
                results.append(by_index[index])

        graded = [r for r in results if r.goodness is not None]
        aggregate = aggregate_blocks([r.goodness for r in graded], plan.hyperbolic_ranks)
        failed_block = graded[aggregate.culprit].index if aggregate.culprit is not None else None

        items = [CheckItem('aggregate', aggregate.good, f"s_M total = {aggregate.total_s_m} ({aggregate.total_parity})")]
        reduction = None
        if any(r.status == DATA_ONLY for r in results):
            logger.warning("Há blocos apenas com dados: redução p-ádica global não executada")
            items.append(CheckItem('reduction', False, 'blocos sem torre', informational=True))
        else:
            q_z, q_b = self._assemble(results)
            reduction = padic_reduction_check(q_z, q_b, request.p, request.hodge)
            items.append(reduction.item('discriminant'))
            items.append(reduction.item('epsilon'))
            positive = reduction.item('positive')
            items.append(CheckItem(positive.name, positive.passed, positive.detail, informational=True))
            items.append(reduction.item('hodge_signature'))
        items.extend(self._accounting_items(request, plan, graded))

        report = PipelineReport(
            p=request.p,
            factors=factor_set,
            plan=plan,
            blocks=tuple(results),
            aggregate=aggregate,
            reduction=reduction,
            items=tuple(items),
            failed_block=failed_block,
        )
        logger.info(f"Pipeline em p={request.p}: aprovado={report.passed}, bloco com falha={failed_block}")
        return report

    def _assign_gauges(self, plan: BlockPlan, request: PipelineRequest) -> List[Tuple[int, Block, Optional[GaugePair], int]]:
        """Associa calibres aos blocos CM, na ordem do plano."""
        cm_indices = [i for i, block in enumerate(plan.blocks) if block.kind == CM]
        if len(request.gauges) > len(cm_indices):
            msg = f"{len(request.gauges)} calibres para {len(cm_indices)} blocos CM"
            logger.error(msg)
            raise DomainError(msg)
        jobs = []
        for position, index in enumerate(cm_indices):
            block = plan.blocks[index]
            pair = request.gauges[position] if position < len(request.gauges) else None
            if block.descriptor is not None and pair is None:
                msg = f"Bloco CM {index} sem calibres (a_B, a_Z)"
                logger.error(msg)
                raise DomainError(msg)
            if pair is not None and pair.s_m is not None:
                s_m = pair.s_m
            elif len(cm_indices) == 1:
                s_m = request.hodge.s_m()
            else:
                msg = f"Bloco CM {index}: s_M por bloco é obrigatório quando há vários blocos CM"
                logger.error(msg)
                raise DomainError(msg)
            jobs.append((index, block, pair, s_m))
        return jobs

    def _run_cm_block(self, job: Tuple[int, Block, Optional[GaugePair], int], precision: int) -> BlockResult:
        index, block, pair, s_m = job
        if block.descriptor is None:
            logger.warning(f"Bloco {index}: torre indisponível, bloco apenas com dados")
            return BlockResult(index, CM, block.factors, block.rank, DATA_ONLY)
        ext = block_extension(block, precision)
        s_b = CMQuadraticSpace(ext, parse_element(ext.tower, pair.a_b))
        s_z = CMQuadraticSpace(ext, parse_element(ext.tower, pair.a_z))
        compare = cm_compare(s_z, s_b)
        report = goodness_from_forms(compare.isomorphic, s_m)
        logger.info(f"Bloco {index}: isomorfas={compare.isomorphic}, s_M={s_m}, bom={report.good}")
        return BlockResult(index, CM, block.factors, block.rank, 'cm',
                           q_b=trace_form_gram(s_b), q_z=trace_form_gram(s_z),
                           compare=compare, goodness=report)

    @staticmethod
    def _assemble(results: Sequence[BlockResult]) -> Tuple[QuadraticFormQ, QuadraticFormQ]:
        q_z, q_b = results[0].q_z, results[0].q_b
        for result in results[1:]:
            q_z = orthogonal_sum(q_z, result.q_z)
            q_b = orthogonal_sum(q_b, result.q_b)
        return q_z, q_b

    @staticmethod
    def _accounting_items(request: PipelineRequest, plan: BlockPlan,
                          graded: Sequence[BlockResult]) -> List[CheckItem]:
        items = []
        degree = request.algebra.degree
        total_rank = sum(block.rank for block in plan.blocks)
        items.append(CheckItem('degree', total_rank == degree, f"Σ postos = {total_rank}, grau = {degree}"))
        if request.hodge.dim:
            items.append(CheckItem('hodge_dimension', request.hodge.dim == degree,
                                   f"Σ h_i = {request.hodge.dim}, grau = {degree}", informational=True))
            block_total = sum(r.goodness.hodge_min for r in graded)
            items.append(CheckItem('s_m_accounting', block_total % 2 == request.hodge.s_m() % 2,
                                   f"Σ s_M por bloco = {block_total}, s_M = {request.hodge.s_m()}",
                                   informational=True))
        return items


def run_pipeline(document: Dict[str, Any], max_workers: Optional[int] = None) -> PipelineReport:
    """Atalho: documento JSON → relatório."""
    return PipelineService(max_workers).run(PipelineRequest.from_document(document))

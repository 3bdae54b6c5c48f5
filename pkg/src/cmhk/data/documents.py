"""Leitura e validação dos documentos JSON de entrada.

Cada tipo de objeto tem um formato fixo; racionais aparecem como inteiros ou
strings "a/b". Um documento inválido levanta ``DomainError`` com a lista de
problemas encontrados.
"""

import json
import logging
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from ..exceptions import CMHKError, DomainError
from ..forms import HodgeNumbers, QuadraticFormQ
from ..padic import PadicElement, PadicTower, QuadraticExtension, standard_extension
from ..padic.catalog import build_extension, default_unramified_polynomial
from ..decomposition import GlobalCMAlgebra
from ..models import CMQuadraticSpace, FilteredCMSpace, FilteredPhiModule

# Configuração de logging
logger = logging.getLogger(__name__)


class DocumentLoader:
    """Carrega documentos JSON de arquivo ou de texto e valida as chaves."""

    def __init__(self):
        self.document: Optional[Dict[str, Any]] = None

    def load(self, filepath: str) -> Dict[str, Any]:
        """Lê um documento de um arquivo JSON.

        Args:
            filepath: caminho do arquivo.

        Returns:
            Dicionário com o conteúdo.
        """
        try:
            with open(filepath, 'r', encoding='utf-8') as handle:
                self.document = json.load(handle)
        except json.JSONDecodeError as exc:
            msg = f"JSON inválido em {filepath}: {exc}"
            logger.error(msg)
            raise DomainError(msg)
        logger.info(f"Documento carregado de {filepath}")
        return self.document

    def loads(self, text: str) -> Dict[str, Any]:
        try:
            self.document = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"JSON inválido: {exc}")
        return self.document


def validate_document(document: Any, required: Sequence[str]) -> Tuple[bool, List[str]]:
    """Verifica se o documento é um objeto com as chaves obrigatórias.

    Returns:
        Tupla com booleano indicando se é válido e lista de erros.
    """
    if not isinstance(document, dict):
        return False, [f"Esperado objeto JSON, recebido {type(document).__name__}"]
    errors = [f"Chave obrigatória ausente: {key}" for key in required if key not in document]
    return len(errors) == 0, errors


def _require(document: Any, required: Sequence[str], kind: str) -> Dict[str, Any]:
    valid, errors = validate_document(document, required)
    if not valid:
        msg = f"Documento de {kind} inválido: {'; '.join(errors)}"
        logger.error(msg)
        raise DomainError(msg)
    return document


@contextmanager
def malformed_document(kind: str) -> Iterator[None]:
    """Converte erros de tipo e de chave em ``DomainError``."""
    try:
        yield
    except CMHKError:
        raise
    except (AttributeError, KeyError, TypeError, ValueError) as exc:
        msg = f"Documento de {kind} malformado: {exc!r}"
        logger.error(msg)
        raise DomainError(msg) from exc


def parse_form(document: Any) -> QuadraticFormQ:
    """``{"gram": [[...]]}`` ou ``{"diagonal": [...]}``."""
    with malformed_document('forma'):
        if isinstance(document, dict) and 'diagonal' in document:
            return QuadraticFormQ.from_diagonal(document['diagonal'])
        document = _require(document, ['gram'], 'forma')
        return QuadraticFormQ(document['gram'])


def parse_hodge(value: Any) -> HodgeNumbers:
    """``{"1": 1, "-1": 1, "0": 2}`` ou ``[[i, h_i], ...]``."""
    if value is None:
        return HodgeNumbers()
    pairs = value.items() if isinstance(value, dict) else value
    try:
        return HodgeNumbers.from_pairs((int(i), int(h)) for i, h in pairs)
    except (TypeError, ValueError):
        raise DomainError(f"Números de Hodge inválidos: {value}")


def parse_tower(document: Any, precision: Optional[int] = None) -> PadicTower:
    """``{"p", "f", "unram_poly", "eis_poly", "precision"?}``; ``unram_poly`` é opcional."""
    document = _require(document, ['p', 'eis_poly'], 'torre')
    with malformed_document('torre'):
        p = int(document['p'])
        f = int(document.get('f', 1))
        unram = document.get('unram_poly') or default_unramified_polynomial(p, f)
        return PadicTower(p, f, unram, document['eis_poly'],
                          precision if precision is not None else document.get('precision'))


def parse_extension(document: Any, precision: Optional[int] = None) -> QuadraticExtension:
    """``{"name": ...}`` do catálogo ou torre com ``"images"``."""
    with malformed_document('extensão'):
        if isinstance(document, dict) and 'name' in document:
            return standard_extension(document['name'],
                                      precision if precision is not None else document.get('precision'))
        document = _require(document, ['p', 'eis_poly', 'images'], 'extensão')
        descriptor = dict(document)
        descriptor.setdefault('f', 1)
        if not descriptor.get('unram_poly'):
            descriptor['unram_poly'] = default_unramified_polynomial(int(descriptor['p']), int(descriptor['f']))
        return build_extension(descriptor, precision)


def parse_element(tower: PadicTower, value: Any) -> PadicElement:
    """Escalar racional, coordenadas planas ou aninhadas (e listas de f)."""
    with malformed_document('elemento'):
        if isinstance(value, (list, tuple)):
            return tower.element(list(value))
        return tower.scalar(value)


def parse_layer(document: Any) -> PadicTower:
    """Camada não ramificada ``{"p", "f"?, "unram_poly"?}``."""
    document = _require(document, ['p'], 'camada')
    with malformed_document('camada'):
        p = int(document['p'])
        f = int(document.get('f', 1))
        unram = document.get('unram_poly') or default_unramified_polynomial(p, f)
        return PadicTower(p, f, unram, [[1], [-p]], document.get('precision'))


def parse_cm_space(document: Any, precision: Optional[int] = None) -> CMQuadraticSpace:
    """``{"extension": {...}, "gauge": a}`` ou ``{"tower": {...}, "star": {"images": ...}, "gauge": a}``."""
    with malformed_document('espaço CM'):
        if isinstance(document, dict) and 'tower' in document:
            document = _require(document, ['tower', 'star', 'gauge'], 'espaço CM')
            star = document['star']
            descriptor = dict(document['tower'])
            descriptor['images'] = star['images'] if isinstance(star, dict) else star
            return CMQuadraticSpace(*_with_gauge(parse_extension(descriptor, precision), document['gauge']))
        document = _require(document, ['extension', 'gauge'], 'espaço CM')
        return CMQuadraticSpace(*_with_gauge(parse_extension(document['extension'], precision), document['gauge']))


def _with_gauge(extension: QuadraticExtension, gauge: Any) -> Tuple[QuadraticExtension, PadicElement]:
    return extension, parse_element(extension.tower, gauge)


def parse_filtered_cm(document: Any) -> FilteredCMSpace:
    """``{"d", "star_perm", "weights"}``."""
    document = _require(document, ['d', 'star_perm', 'weights'], 'espaço CM filtrado')
    with malformed_document('espaço CM filtrado'):
        return FilteredCMSpace(int(document['d']),
                               tuple(int(i) for i in document['star_perm']),
                               tuple(int(w) for w in document['weights']))


def parse_phi_module(document: Any) -> FilteredPhiModule:
    """``{"layer": {...}, "frob_matrix": [[...]], "hodge_jumps": [[w, m]], "tag"?}``."""
    document = _require(document, ['layer', 'frob_matrix', 'hodge_jumps'], 'φ-módulo')
    layer = parse_layer(document['layer'])
    with malformed_document('φ-módulo'):
        return FilteredPhiModule.build(layer, document['frob_matrix'], document['hodge_jumps'], document.get('tag'))


def parse_algebra(document: Any) -> GlobalCMAlgebra:
    """``{"g", "r"}`` ou ``{"components": [[g_i, r_i], ...]}``."""
    with malformed_document('álgebra'):
        if isinstance(document, dict) and 'components' in document:
            return GlobalCMAlgebra.from_components([(g, r) for g, r in document['components']])
        document = _require(document, ['g', 'r'], 'álgebra')
        return GlobalCMAlgebra(tuple(document['g']), tuple(document['r']))


def dump_document(document: Dict[str, Any]) -> str:
    """Serialização estável (chaves ordenadas)."""
    return json.dumps(document, sort_keys=True, ensure_ascii=False)

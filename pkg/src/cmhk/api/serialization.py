"""
Conversão dos relatórios para o esquema JSON da CLI.

Racionais viram strings "a/b" (inteiros continuam inteiros), polígonos viram
listas de vértices, enums viram seus valores e dataclasses viram dicionários
com os campos em ordem. A saída de ``dump_report`` é estável byte a byte.
"""

import dataclasses
import json
import logging
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np
from sympy import QQ, ZZ

from ..config import REPORT_CONFIG
from ..forms import PlaceQ, QuadraticFormQ, HodgeNumbers
from ..kernel.numbers import format_rational
from ..kernel.polygons import LowerPolygon
from ..padic import PadicElement, PadicTower, QuadraticExtension

# Configuração de logging
logger = logging.getLogger(__name__)


def _rational(value: Any) -> Any:
    text = format_rational(value)
    return int(text) if '/' not in text else text


def to_jsonable(obj: Any) -> Any:
    """Converte recursivamente ``obj`` em tipos JSON.

    Args:
        obj: relatório, forma, elemento, polígono ou coleção destes.

    Returns:
        Estrutura com apenas dict, list, str, int, bool e None.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if QQ.of_type(obj) or ZZ.of_type(obj):
        return _rational(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, PlaceQ):
        return str(obj)
    if isinstance(obj, LowerPolygon):
        return [[x, _rational(y)] for x, y in obj.vertices]
    if isinstance(obj, QuadraticFormQ):
        return {'gram': [[_rational(c) for c in row] for row in obj.gram]}
    if isinstance(obj, HodgeNumbers):
        return {str(i): h for i, h in sorted(obj.values.items())}
    if isinstance(obj, PadicTower):
        return to_jsonable(obj.describe())
    if isinstance(obj, QuadraticExtension):
        return to_jsonable(obj.tower.describe())
    if isinstance(obj, PadicElement):
        return {'coords': [_rational(c) for c in obj.coords], 'precision': obj.precision}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        data = {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        passed = getattr(type(obj), 'passed', None)
        if isinstance(passed, property):
            data['passed'] = bool(obj.passed)
        return data
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj, key=repr) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    logger.debug(f"Tipo sem conversão dedicada: {type(obj).__name__}")
    return str(obj)


def build_report(command: str, result: Any, passed: bool, seed: Optional[int] = None) -> Dict[str, Any]:
    """Envelope comum de todos os relatórios da CLI."""
    return {
        'version': REPORT_CONFIG['version'],
        'seed': seed,
        'command': command,
        'passed': bool(passed),
        'result': to_jsonable(result),
    }


def dump_report(report: Dict[str, Any]) -> str:
    """JSON com chaves ordenadas (determinístico)."""
    return json.dumps(report, sort_keys=True, ensure_ascii=False, indent=2)

"""
Tabelas de texto para a saída legível da CLI.

As tabelas são montadas com pandas e limitadas à largura configurada em
``REPORT_CONFIG``. Só a saída ``--json`` é estável byte a byte; estas tabelas
são para leitura humana.
"""

import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence

import pandas as pd

from ..config import REPORT_CONFIG
from ..forms.criteria import CheckItem

# Configuração de logging
logger = logging.getLogger(__name__)


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return 'sim' if value else 'não'
    if value is None:
        return '-'
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(_format_value(v) for v in value) + ']'
    if isinstance(value, dict):
        return '{' + ', '.join(f"{k}: {_format_value(v)}" for k, v in value.items()) + '}'
    return str(value)


def render_table(rows: Sequence[Dict[str, Any]], columns: Optional[Sequence[str]] = None,
                 title: Optional[str] = None) -> str:
    """Renderiza linhas (dicionários) como tabela de texto.

    Args:
        rows: uma entrada por linha.
        columns: ordem das colunas (padrão: chaves da primeira linha).
        title: título opcional acima da tabela.

    Returns:
        Texto da tabela.
    """
    if not rows:
        body = '(vazio)'
    else:
        columns = list(columns or rows[0].keys())
        df = pd.DataFrame([{c: _format_value(row.get(c)) for c in columns} for row in rows], columns=columns)
        with pd.option_context('display.width', REPORT_CONFIG['table_width'],
                               'display.max_colwidth', REPORT_CONFIG['max_colwidth'],
                               'display.max_rows', None):
            body = df.to_string(index=False)
    return f"{title}\n{body}" if title else body


def flatten(data: Any, prefix: str = '') -> List[Dict[str, Any]]:
    """Achata um dicionário aninhado em linhas (campo, valor) com chaves pontuadas."""
    rows: List[Dict[str, Any]] = []
    if isinstance(data, dict):
        for key, value in data.items():
            name = f"{prefix}.{key}" if prefix else str(key)
            if isinstance(value, dict) and value:
                rows.extend(flatten(value, name))
            else:
                rows.append({'campo': name, 'valor': value})
    else:
        rows.append({'campo': prefix or 'valor', 'valor': data})
    return rows


def render_key_values(data: Dict[str, Any], title: Optional[str] = None) -> str:
    """Tabela de duas colunas campo/valor."""
    return render_table(flatten(data), ['campo', 'valor'], title)


def render_checks(items: Iterable[CheckItem], title: Optional[str] = 'Verificações') -> str:
    """Tabela dos itens de um veredicto."""
    rows = [
        {'item': item.name, 'ok': item.passed, 'informativo': item.informational, 'detalhe': item.detail}
        for item in items
    ]
    return render_table(rows, ['item', 'ok', 'informativo', 'detalhe'], title)


def render_report(report: Dict[str, Any]) -> str:
    """Saída legível de um envelope de relatório (ver ``build_report``).

    Listas de objetos no primeiro nível do resultado viram tabelas próprias;
    o restante é exibido como campo/valor.
    """
    result = report.get('result')
    header = f"cmhk {report.get('version')} · {report.get('command')} · semente {report.get('seed')}"
    sections = [header]
    if isinstance(result, dict):
        scalars = {}
        for key, value in result.items():
            if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
                sections.append(render_table([_flat_row(v) for v in value], title=key))
            else:
                scalars[key] = value
        if scalars:
            sections.append(render_key_values(scalars))
    elif isinstance(result, list) and result and all(isinstance(v, dict) for v in result):
        sections.append(render_table([_flat_row(v) for v in result]))
    else:
        sections.append(_format_value(result))
    sections.append(f"Resultado: {'APROVADO' if report.get('passed') else 'FALHOU'}")
    return '\n\n'.join(sections)


def _flat_row(row: Dict[str, Any]) -> Dict[str, Any]:
    return {entry['campo']: entry['valor'] for entry in flatten(row)}

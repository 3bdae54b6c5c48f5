"""
Utilitários do cmhk.

Submódulos:
- reporting: tabelas de texto (pandas) para a saída da CLI
"""

from .reporting import render_table, render_key_values, render_checks, render_report, flatten

__all__ = [
    'render_table',
    'render_key_values',
    'render_checks',
    'render_report',
    'flatten',
]

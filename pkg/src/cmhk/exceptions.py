"""Exceções do pacote cmhk.

Todas derivam de ``ValueError``: entradas inválidas continuam sendo
sinalizadas como valores inválidos para quem só captura ``ValueError``.
"""

from typing import Any, List, Optional


class CMHKError(ValueError):
    """Erro base do pacote."""


class DomainError(CMHKError):
    """Entrada fora do domínio da operação (polinômio nulo, dimensão incompatível...)."""


class DegeneracyError(CMHKError):
    """Forma quadrática degenerada (matriz de Gram singular)."""


class PrecisionError(CMHKError):
    """A precisão de trabalho não basta para certificar a resposta."""

    def __init__(self, message: str, required: Optional[int] = None):
        super().__init__(message)
        self.required = required


class HenselRefusal(CMHKError):
    """O levantamento de Hensel foi recusado; carrega a testemunha do mdc mod p."""

    def __init__(self, message: str, witness: Optional[List[int]] = None):
        super().__init__(message)
        self.witness = list(witness) if witness is not None else None


class StructureError(CMHKError):
    """Um axioma ou identidade estrutural falhou; ``axiom`` nomeia qual."""

    def __init__(self, message: str, axiom: str, details: Any = None):
        super().__init__(message)
        self.axiom = axiom
        self.details = details


class ConsistencyError(CMHKError):
    """Dois critérios que deveriam concordar discordaram (alarme interno)."""

"""Formas quadráticas sobre Q: tipos, diagonalização e invariantes.

As matrizes de Gram são listas de linhas de elementos de ``QQ``; a
diagonalização é simétrica (operações simultâneas em linhas e colunas), de
modo que a forma diagonal é congruente à original.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

from sympy import isprime

from ..exceptions import DegeneracyError, DomainError
from ..kernel.matrices import block_diag, determinant, rational_rows
from ..kernel.numbers import squarefree_part, to_rational

# Configuração de logging
logger = logging.getLogger(__name__)

REAL = 'real'


@dataclass(frozen=True)
class PlaceQ:
    """Lugar de Q: o lugar real ou um primo."""
    tag: Union[str, int]

    def __post_init__(self):
        if self.tag == REAL:
            return
        if isinstance(self.tag, bool) or not isinstance(self.tag, int) or not isprime(self.tag):
            raise DomainError(f"Lugar inválido: {self.tag!r}")

    @classmethod
    def parse(cls, value: Any) -> 'PlaceQ':
        """Aceita 'real', 'inf', um primo ou uma string com um primo."""
        if isinstance(value, PlaceQ):
            return value
        if isinstance(value, str):
            text = value.strip().lower()
            if text in (REAL, 'inf', 'infinity', 'r'):
                return cls(REAL)
            try:
                return cls(int(text))
            except ValueError:
                raise DomainError(f"Lugar inválido: {value!r}")
        return cls(value)

    @property
    def is_real(self) -> bool:
        return self.tag == REAL

    @property
    def prime(self) -> int:
        if self.is_real:
            raise DomainError("O lugar real não tem primo associado")
        return int(self.tag)

    def sort_key(self) -> Tuple[int, int]:
        return (0, 0) if self.is_real else (1, int(self.tag))

    def __str__(self) -> str:
        return REAL if self.is_real else str(self.tag)


REAL_PLACE = PlaceQ(REAL)


class QuadraticFormQ:
    """Forma quadrática não degenerada sobre Q dada pela matriz de Gram."""

    def __init__(self, gram: Sequence[Sequence[Any]]):
        rows = rational_rows(gram)
        n = len(rows)
        if n == 0:
            raise DomainError("Forma quadrática de dimensão zero")
        if any(len(row) != n for row in rows):
            raise DomainError("Matriz de Gram não é quadrada")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise DomainError(f"Matriz de Gram não simétrica na posição ({i}, {j})")
        if determinant(rows) == 0:
            msg = "Matriz de Gram singular: forma degenerada"
            logger.error(msg)
            raise DegeneracyError(msg)
        self.gram: List[List[Any]] = rows

    @classmethod
    def from_diagonal(cls, entries: Iterable[Any]) -> 'QuadraticFormQ':
        values = [to_rational(a) for a in entries]
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.gram)

    @property
    def determinant(self):
        return determinant(self.gram)

    def evaluate(self, vector: Sequence[Any]):
        """q(v) = vᵀ G v."""
        v = [to_rational(c) for c in vector]
        return sum((v[i] * self.gram[i][j] * v[j] for i in range(self.dim) for j in range(self.dim)),
                   to_rational(0))

    def congruent(self, transform: Sequence[Sequence[Any]]) -> 'QuadraticFormQ':
        """Forma Pᵀ G P para uma matriz invertível P."""
        p = rational_rows(transform)
        n = self.dim
        gp = [[sum((self.gram[i][k] * p[k][j] for k in range(n)), to_rational(0)) for j in range(n)]
              for i in range(n)]
        return QuadraticFormQ([[sum((p[k][i] * gp[k][j] for k in range(n)), to_rational(0)) for j in range(n)]
                               for i in range(n)])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuadraticFormQ) and self.gram == other.gram

    def __repr__(self) -> str:
        return f"QuadraticFormQ(dim={self.dim})"


@dataclass(frozen=True)
class DiagonalFormQ:
    """Forma diagonal ⟨a_1, ..., a_n⟩ com entradas racionais não nulas."""
    entries: Tuple[Any, ...]

    def __post_init__(self):
        if any(a == 0 for a in self.entries):
            raise DegeneracyError("Forma diagonal com entrada nula")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def to_form(self) -> QuadraticFormQ:
        return QuadraticFormQ.from_diagonal(self.entries)


@dataclass(frozen=True)
class HodgeNumbers:
    """Números de Hodge h_i (i inteiro), com suporte finito."""
    values: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for i, h in self.values.items():
            if not isinstance(i, int) or not isinstance(h, int) or h < 0:
                raise DomainError(f"Número de Hodge inválido: h_{i} = {h}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> 'HodgeNumbers':
        values: Dict[int, int] = {}
        for i, h in pairs:
            values[int(i)] = values.get(int(i), 0) + int(h)
        return cls({i: h for i, h in values.items() if h})

    def get(self, i: int) -> int:
        return self.values.get(i, 0)

    @property
    def dim(self) -> int:
        return sum(self.values.values())

    def is_symmetric(self) -> bool:
        return all(self.get(-i) == h for i, h in self.values.items())

    def s_m(self) -> int:
        """s_M = soma de h_i para i ≥ 1 ímpar."""
        return sum(h for i, h in self.values.items() if i >= 1 and i % 2)

    def s_minus_b(self) -> int:
        """Índice negativo previsto pela polarização: soma de h_i para i ímpar."""
        return sum(h for i, h in self.values.items() if i % 2)

    def s_plus_b(self) -> int:
        return sum(h for i, h in self.values.items() if i % 2 == 0)

    def weighted_parity(self) -> int:
        """Paridade de Σ_{i≥0} i·h_i (coincide com a paridade de s_M)."""
        return sum(i * h for i, h in self.values.items() if i >= 0) % 2


@dataclass(frozen=True)
class FormInvariants:
    """Assinatura, classe do discriminante (inteiro livre de quadrados) e seu sinal."""
    s_plus: int
    s_minus: int
    discriminant: int
    disc_sign: int


def diagonalize(form: QuadraticFormQ) -> DiagonalFormQ:
    """Diagonaliza por congruência simétrica.

    O pivô é a primeira entrada diagonal não nula; se a diagonal restante é
    toda nula, soma-se a linha/coluna j à linha/coluna i para o primeiro par
    (i, j) com G[i][j] ≠ 0.

    Args:
        form: forma não degenerada.

    Returns:
        Forma diagonal congruente.
    """
    a = [list(row) for row in form.gram]
    n = form.dim
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                msg = "Forma degenerada encontrada durante a diagonalização"
                logger.error(msg)
                raise DegeneracyError(msg)
            i, j = pair
            for r in range(n):
                a[i][r] += a[j][r]
            for r in range(n):
                a[r][i] += a[r][j]
            pivot = i
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            for row in a:
                row[k], row[pivot] = row[pivot], row[k]
        for r in range(k + 1, n):
            if a[r][k] == 0:
                continue
            factor = a[r][k] / a[k][k]
            for c in range(n):
                a[r][c] -= factor * a[k][c]
            for c in range(n):
                a[c][r] -= factor * a[c][k]
    entries = tuple(a[i][i] for i in range(n))
    logger.debug(f"Diagonalização: {[str(x) for x in entries]}")
    return DiagonalFormQ(entries)


def invariants(form: QuadraticFormQ) -> FormInvariants:
    """Assinatura e discriminante (módulo quadrados) de ``form``."""
    entries = diagonalize(form).entries
    s_minus = sum(1 for a in entries if a < 0)
    disc = squarefree_part(form.determinant)
    return FormInvariants(
        s_plus=len(entries) - s_minus,
        s_minus=s_minus,
        discriminant=disc,
        disc_sign=-1 if s_minus % 2 else 1,
    )


def orthogonal_sum(f1: QuadraticFormQ, f2: QuadraticFormQ) -> QuadraticFormQ:
    """Soma ortogonal (Gram em blocos diagonais)."""
    return QuadraticFormQ(block_diag([f1.gram, f2.gram]))

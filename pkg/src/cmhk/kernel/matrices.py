"""Matrizes densas exatas.

Matrizes são listas de linhas. Sobre Q usamos ``DomainMatrix``/``Matrix`` do
sympy; para anéis próprios (elementos de torres p-ádicas) há rotinas
genéricas sem divisão, entre elas o polinômio característico de Berkowitz.
"""

import logging
from typing import Any, Callable, List, Optional, Sequence

from sympy import QQ, Matrix
from sympy.polys.matrices import DomainMatrix

from ..exceptions import DomainError
from .numbers import to_rational

# Configuração de logging
logger = logging.getLogger(__name__)

Rows = List[List[Any]]


def _check_square(rows: Sequence[Sequence[Any]]) -> int:
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise DomainError(f"Matriz não quadrada: {n} linhas com comprimentos {[len(r) for r in rows]}")
    return n


def is_rational_matrix(rows: Sequence[Sequence[Any]]) -> bool:
    return all(isinstance(c, int) or QQ.of_type(c) for row in rows for c in row)


def rational_rows(rows: Sequence[Sequence[Any]]) -> Rows:
    return [[to_rational(c) for c in row] for row in rows]


def to_domain_matrix(rows: Sequence[Sequence[Any]]) -> DomainMatrix:
    rows = rational_rows(rows)
    ncols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def to_sympy_matrix(rows: Sequence[Sequence[Any]]) -> Matrix:
    return Matrix([[QQ.to_sympy(to_rational(c)) for c in row] for row in rows])


def from_sympy_matrix(matrix: Matrix) -> Rows:
    return [[QQ.from_sympy(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


def berkowitz_charpoly(rows: Sequence[Sequence[Any]], zero: Any, one: Any) -> List[Any]:
    """Polinômio característico sem divisões (Berkowitz), coeficientes decrescentes.

    Funciona sobre qualquer anel comutativo cujos elementos suportem ``+``,
    ``-`` e ``*``; ``zero`` e ``one`` são os neutros do anel.
    """
    n = _check_square(rows)
    poly = [one]
    for k in range(n):
        column = [one, -rows[k][k]]
        vector = [rows[i][k] for i in range(k)]
        for _ in range(k):
            acc = zero
            for i in range(k):
                acc = acc + rows[k][i] * vector[i]
            column.append(-acc)
            vector = [
                sum((rows[i][j] * vector[j] for j in range(k)), zero)
                for i in range(k)
            ]
        new_poly = []
        for i in range(k + 2):
            acc = zero
            for j in range(min(i, k) + 1):
                acc = acc + column[i - j] * poly[j]
            new_poly.append(acc)
        poly = new_poly
    return poly


def char_poly(rows: Sequence[Sequence[Any]], zero: Any = None, one: Any = None) -> List[Any]:
    """Polinômio característico mônico, exato, coeficientes decrescentes.

    Matrizes racionais usam ``DomainMatrix.charpoly`` (livre de frações);
    as demais caem em :func:`berkowitz_charpoly`.

    Args:
        rows: matriz quadrada.
        zero: zero do anel dos coeficientes (necessário fora de Q).
        one: unidade do anel dos coeficientes (necessário fora de Q).

    Returns:
        Lista ``[1, c_{n-1}, ..., c_0]``.
    """
    n = _check_square(rows)
    if n == 0:
        return [one if one is not None else QQ(1)]
    if is_rational_matrix(rows):
        return list(to_domain_matrix(rows).charpoly())
    if zero is None or one is None:
        raise DomainError("Anel dos coeficientes desconhecido: informe zero e one")
    return berkowitz_charpoly(rows, zero, one)


def determinant(rows: Sequence[Sequence[Any]], zero: Any = None, one: Any = None):
    n = _check_square(rows)
    if is_rational_matrix(rows):
        return to_domain_matrix(rows).det() if n else QQ(1)
    poly = char_poly(rows, zero, one)
    return poly[-1] if n % 2 == 0 else -poly[-1]


def trace(rows: Sequence[Sequence[Any]], zero: Any = None):
    n = _check_square(rows)
    acc = zero if zero is not None else QQ(0)
    for i in range(n):
        acc = acc + rows[i][i]
    return acc


def identity(n: int, zero: Any = None, one: Any = None) -> Rows:
    zero = QQ(0) if zero is None else zero
    one = QQ(1) if one is None else one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(nrows: int, ncols: int, zero: Any = None) -> Rows:
    zero = QQ(0) if zero is None else zero
    return [[zero for _ in range(ncols)] for _ in range(nrows)]


def mat_mul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]], zero: Any = None) -> Rows:
    if a and len(a[0]) != len(b):
        raise DomainError(f"Dimensões incompatíveis: {len(a)}x{len(a[0])} por {len(b)}x{len(b[0]) if b else 0}")
    zero = QQ(0) if zero is None else zero
    ncols = len(b[0]) if b else 0
    result = []
    for row in a:
        out = []
        for j in range(ncols):
            acc = zero
            for k, value in enumerate(row):
                acc = acc + value * b[k][j]
            out.append(acc)
        result.append(out)
    return result


def mat_vec(a: Sequence[Sequence[Any]], v: Sequence[Any], zero: Any = None) -> List[Any]:
    zero = QQ(0) if zero is None else zero
    result = []
    for row in a:
        acc = zero
        for value, entry in zip(row, v):
            acc = acc + value * entry
        result.append(acc)
    return result


def mat_add(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Rows:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> Rows:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Sequence[Sequence[Any]], scalar: Any) -> Rows:
    return [[scalar * x for x in row] for row in a]


def transpose(a: Sequence[Sequence[Any]]) -> Rows:
    return [list(col) for col in zip(*a)] if a else []


def mat_map(a: Sequence[Sequence[Any]], fn: Callable[[Any], Any]) -> Rows:
    return [[fn(x) for x in row] for row in a]


def mat_equal(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> bool:
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def block_diag(blocks: Sequence[Sequence[Sequence[Any]]], zero: Any = None) -> Rows:
    zero = QQ(0) if zero is None else zero
    size = sum(len(block) for block in blocks)
    result = zeros(size, size, zero)
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, value in enumerate(row):
                result[offset + i][offset + j] = value
        offset += len(block)
    return result


def rational_inverse(rows: Sequence[Sequence[Any]]) -> Rows:
    _check_square(rows)
    if determinant(rows) == 0:
        raise DomainError("Matriz singular não tem inversa")
    return from_sympy_matrix(to_sympy_matrix(rows).inv())


def rational_rank(rows: Sequence[Sequence[Any]]) -> int:
    if not rows:
        return 0
    return int(to_sympy_matrix(rows).rank())


def rational_nullspace(rows: Sequence[Sequence[Any]]) -> Rows:
    """Base do núcleo à direita; cada vetor é devolvido como lista de racionais."""
    basis = to_sympy_matrix(rows).nullspace()
    return [[QQ.from_sympy(v[i, 0]) for i in range(v.rows)] for v in basis]


def rational_solve(rows: Sequence[Sequence[Any]], rhs: Sequence[Any]) -> List[Any]:
    """Resolve ``A x = b`` para ``A`` quadrada invertível."""
    _check_square(rows)
    if determinant(rows) == 0:
        raise DomainError("Sistema linear singular")
    solution = to_sympy_matrix(rows).LUsolve(to_sympy_matrix([[c] for c in rhs]))
    return [QQ.from_sympy(solution[i, 0]) for i in range(solution.rows)]


def left_inverse(columns: Sequence[Sequence[Any]]) -> Rows:
    """Inversa à esquerda ``(W^T W)^{-1} W^T`` de uma matriz de posto coluna completo."""
    w = to_sympy_matrix(columns)
    gram = w.T * w
    return from_sympy_matrix(gram.inv() * w.T)


def field_inverse(rows: Sequence[Sequence[Any]], zero: Any, one: Any) -> Rows:
    """Inversa por Gauss-Jordan sobre um corpo cujos elementos expõem ``inverse()`` e ``is_zero``."""
    n = _check_square(rows)
    work = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot: Optional[int] = next((r for r in range(col, n) if not work[r][col].is_zero), None)
        if pivot is None:
            raise DomainError("Matriz singular não tem inversa")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [inv * value for value in work[col]]
        for r in range(n):
            if r != col and not work[r][col].is_zero:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return [row[n:] for row in work]

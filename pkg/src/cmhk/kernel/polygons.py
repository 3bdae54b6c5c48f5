"""Polígonos convexos inferiores (Newton e Hodge).

Convenção: o polígono de Newton de um polinômio é o fecho convexo inferior
dos pontos (i, v(a_i)), onde a_i é o coeficiente de x^i; as valorizações das
raízes são os declives com sinal trocado, com multiplicidade igual ao
comprimento horizontal do segmento.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

from sympy import QQ

from ..exceptions import DomainError
from .numbers import padic_valuation, to_rational

# Configuração de logging
logger = logging.getLogger(__name__)

Vertex = Tuple[int, Any]


def _cross(o: Vertex, a: Vertex, b: Vertex):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class LowerPolygon:
    """Polígono convexo inferior dado por seus vértices."""

    vertices: Tuple[Vertex, ...]

    def __post_init__(self):
        if not self.vertices:
            raise DomainError("Polígono sem vértices")
        xs = [x for x, _ in self.vertices]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise DomainError(f"Abscissas devem ser estritamente crescentes: {xs}")
        slopes = [s for s, _ in self.segments]
        if any(b < a for a, b in zip(slopes, slopes[1:])):
            raise DomainError(f"Declives devem ser crescentes: {slopes}")

    @classmethod
    def from_points(cls, points: Iterable[Tuple[int, Any]]) -> 'LowerPolygon':
        """Fecho convexo inferior de um conjunto de pontos com abscissas distintas."""
        pts = sorted((int(x), to_rational(y)) for x, y in points)
        if not pts:
            raise DomainError("Nenhum ponto para o fecho convexo")
        hull: List[Vertex] = []
        for point in pts:
            while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
                hull.pop()
            hull.append(point)
        return cls(tuple(hull))

    @classmethod
    def from_segments(cls, segments: Iterable[Tuple[Any, int]], start: Vertex = (0, QQ(0))) -> 'LowerPolygon':
        """Concatena segmentos (declive, comprimento) em ordem crescente de declive."""
        merged: List[List[Any]] = []
        for slope, length in sorted((to_rational(s), int(l)) for s, l in segments):
            if length <= 0:
                raise DomainError(f"Comprimento de segmento deve ser positivo: {length}")
            if merged and merged[-1][0] == slope:
                merged[-1][1] += length
            else:
                merged.append([slope, length])
        x, y = int(start[0]), to_rational(start[1])
        vertices = [(x, y)]
        for slope, length in merged:
            x, y = x + length, y + slope * length
            vertices.append((x, y))
        return cls(tuple(vertices))

    @property
    def segments(self) -> List[Tuple[Any, int]]:
        """Lista de (declive, comprimento horizontal)."""
        result = []
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            result.append(((y1 - y0) / QQ(x1 - x0), x1 - x0))
        return result

    @property
    def width(self) -> int:
        return self.vertices[-1][0] - self.vertices[0][0]

    @property
    def total_rise(self):
        return self.vertices[-1][1] - self.vertices[0][1]

    @property
    def slopes(self) -> List[Any]:
        """Declives com multiplicidade, em ordem crescente."""
        return [slope for slope, length in self.segments for _ in range(length)]

    def min_ordinate(self):
        return min(y for _, y in self.vertices)

    def ordinate_at(self, x: int):
        """Ordenada do polígono na abscissa ``x`` (interpolação linear)."""
        x0 = self.vertices[0][0]
        if x < x0 or x > self.vertices[-1][0]:
            raise DomainError(f"Abscissa {x} fora do polígono")
        for (xa, ya), (xb, yb) in zip(self.vertices, self.vertices[1:]):
            if xa <= x <= xb:
                return ya + (yb - ya) * QQ(x - xa, xb - xa)
        return self.vertices[0][1]

    def lies_above(self, other: 'LowerPolygon') -> bool:
        """Verdadeiro se ``self`` está (fracamente) acima de ``other`` no domínio comum."""
        lo = max(self.vertices[0][0], other.vertices[0][0])
        hi = min(self.vertices[-1][0], other.vertices[-1][0])
        abscissae = {x for x, _ in self.vertices + other.vertices if lo <= x <= hi}
        return all(self.ordinate_at(x) >= other.ordinate_at(x) for x in abscissae)

    def interior_lattice_points(self) -> List[Vertex]:
        """Pontos de coordenadas inteiras no interior (relativo) das arestas, excluídas as extremidades."""
        points = []
        for x in range(self.vertices[0][0] + 1, self.vertices[-1][0]):
            y = self.ordinate_at(x)
            if QQ.denom(y) == 1:
                points.append((x, y))
        return points

    def root_valuations(self) -> List[Tuple[Any, int]]:
        """Para polígonos de Newton de polinômios: (valorização da raiz, multiplicidade)."""
        return [(-slope, length) for slope, length in self.segments]


def rational_valuation(p: int) -> Callable[[Any], Optional[Any]]:
    """Valorização p-ádica de coeficientes racionais, com ``None`` para zero."""
    def valuation(c):
        c = to_rational(c)
        return None if c == 0 else QQ(padic_valuation(c, p))
    return valuation


def newton_polygon_of_poly(coeffs: Sequence[Any], valuation: Callable[[Any], Optional[Any]]) -> LowerPolygon:
    """Polígono de Newton de um polinômio.

    Args:
        coeffs: coeficientes em ordem decrescente de grau.
        valuation: mapa coeficiente -> valorização (``None`` para coeficiente nulo).

    Returns:
        Fecho convexo inferior dos pontos (i, v(a_i)).
    """
    n = len(coeffs) - 1
    points = []
    for index, c in enumerate(coeffs):
        v = valuation(c)
        if v is not None:
            points.append((n - index, v))
    if not points:
        raise DomainError("Polígono de Newton do polinômio nulo não está definido")
    if valuation(coeffs[0]) is None:
        raise DomainError("Coeficiente líder sem valorização finita")
    return LowerPolygon.from_points(points)

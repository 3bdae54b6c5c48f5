"""φ-módulos filtrados sobre a camada não ramificada.

Um módulo é dado pela matriz A de φ numa base fixa (entradas na camada L) e
pelos saltos de Hodge. A linearização de φ^f é A·φ(A)···φ^{f-1}(A); o
polígono de Newton vem do polinômio característico dessa matriz (Berkowitz,
exato sobre L) com declives divididos por f.
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from sympy import QQ

from ..config import PRECISION_CONFIG
from ..exceptions import DomainError, PrecisionError, StructureError
from ..kernel.matrices import berkowitz_charpoly, block_diag, field_inverse, mat_map, mat_mul
from ..kernel.polygons import LowerPolygon, newton_polygon_of_poly
from ..padic import PadicElement, PadicTower

# Configuração de logging
logger = logging.getLogger(__name__)

SYMMETRIC_TAG = 'symmetric_filtered_cm'

CERTIFIED_ADMISSIBLE = 'certified_admissible'
CERTIFIED_INADMISSIBLE = 'certified_inadmissible'
UNKNOWN = 'unknown'

Matrix = List[List[PadicElement]]


def layer_entry(layer: PadicTower, value: Any) -> PadicElement:
    """Converte um racional, uma string "a/b" ou coordenadas crescentes em elemento da camada."""
    if isinstance(value, PadicElement):
        return value
    if isinstance(value, (list, tuple)):
        return layer.from_layer(list(value))
    return layer.scalar(value)


def layer_matrix(layer: PadicTower, rows: Sequence[Sequence[Any]]) -> Matrix:
    return [[layer_entry(layer, c) for c in row] for row in rows]


def layer_determinant(layer: PadicTower, rows: Matrix) -> PadicElement:
    """Determinante pelo polinômio característico de Berkowitz (sem divisões)."""
    poly = berkowitz_charpoly(rows, layer.zero(), layer.one())
    return poly[-1] if len(rows) % 2 == 0 else -poly[-1]


@dataclass(frozen=True)
class FilteredPhiModule:
    """φ-módulo filtrado (D, φ, Fil) de posto r sobre a camada ``layer``."""
    layer: PadicTower
    frob_matrix: Tuple[Tuple[PadicElement, ...], ...]
    hodge_jumps: Tuple[Tuple[int, int], ...]
    tag: Optional[str] = None

    def __post_init__(self):
        if self.layer.e != 1:
            raise DomainError("A camada de um φ-módulo deve ser não ramificada (e = 1)")
        r = len(self.frob_matrix)
        if r == 0 or any(len(row) != r for row in self.frob_matrix):
            raise DomainError("Matriz de Frobenius deve ser quadrada e não vazia")
        if any(m <= 0 for _, m in self.hodge_jumps):
            raise DomainError(f"Multiplicidades de Hodge devem ser positivas: {self.hodge_jumps}")
        if sum(m for _, m in self.hodge_jumps) != r:
            raise DomainError(f"Multiplicidades de Hodge somam {sum(m for _, m in self.hodge_jumps)}, posto {r}")
        if self.determinant().is_zero:
            msg = "Matriz de Frobenius não invertível"
            logger.error(msg)
            raise DomainError(msg)

    @classmethod
    def build(cls, layer: PadicTower, rows: Sequence[Sequence[Any]], hodge_jumps: Sequence[Sequence[int]],
              tag: Optional[str] = None) -> 'FilteredPhiModule':
        matrix = layer_matrix(layer, rows)
        jumps = tuple(sorted((int(w), int(m)) for w, m in hodge_jumps))
        return cls(layer, tuple(tuple(row) for row in matrix), jumps, tag)

    @property
    def rank(self) -> int:
        return len(self.frob_matrix)

    @property
    def f(self) -> int:
        return self.layer.f

    def matrix(self) -> Matrix:
        return [list(row) for row in self.frob_matrix]

    def determinant(self) -> PadicElement:
        return layer_determinant(self.layer, self.matrix())


def frobenius_matrix(layer: PadicTower, matrix: Matrix, k: int = 1) -> Matrix:
    """Aplica φ^k entrada a entrada."""
    return mat_map(matrix, lambda z: layer.frobenius_power(z, k))


def phi_power_matrix(module: FilteredPhiModule) -> Matrix:
    """Matriz de φ^f: A·φ(A)···φ^{f-1}(A)."""
    layer = module.layer
    a = module.matrix()
    result = a
    for k in range(1, module.f):
        result = mat_mul(result, frobenius_matrix(layer, a, k), layer.zero())
    return result


def _certified_valuation(z: PadicElement) -> Optional[Any]:
    if z.is_zero and z.precision is None:
        return None
    v = z.valuation()
    if z.precision is not None and v + PRECISION_CONFIG['certification_margin'] > z.precision:
        raise PrecisionError(f"Valorização {v} sem margem de certificação à precisão {z.precision}", z.precision)
    return v


def newton_polygon_module(module: FilteredPhiModule) -> LowerPolygon:
    """Polígono de Newton: valorizações dos autovalores de φ^f divididas por f, em ordem crescente."""
    layer = module.layer
    poly = berkowitz_charpoly(phi_power_matrix(module), layer.zero(), layer.one())
    polygon = newton_polygon_of_poly(poly, _certified_valuation)
    segments = [(v / QQ(module.f), m) for v, m in polygon.root_valuations()]
    return LowerPolygon.from_segments(segments)


def hodge_polygon(module: FilteredPhiModule) -> LowerPolygon:
    """Polígono de Hodge: declive w com comprimento m para cada salto (w, m)."""
    return LowerPolygon.from_segments(sorted(module.hodge_jumps))


@dataclass(frozen=True)
class AdmissibilityCertificate:
    """Resultado do certificado de admissibilidade fraca e o motivo."""
    status: str
    reason: str
    t_newton: Any
    t_hodge: Any


def admissibility_certificate(module: FilteredPhiModule) -> AdmissibilityCertificate:
    """Certifica admissibilidade fraca quando os critérios disponíveis alcançam.

    Ordem: módulo simétrico com Newton plano; alturas diferentes; Newton
    abaixo de Hodge; Newton de um único segmento sem pontos inteiros
    interiores; caso contrário ``unknown``.
    """
    newton, hodge = newton_polygon_module(module), hodge_polygon(module)
    t_n, t_h = newton.total_rise, hodge.total_rise

    def certificate(status: str, reason: str) -> AdmissibilityCertificate:
        logger.debug(f"Certificado: {status} ({reason})")
        return AdmissibilityCertificate(status, reason, t_n, t_h)

    if module.tag == SYMMETRIC_TAG and all(s == 0 for s in newton.slopes) and t_h == 0:
        return certificate(CERTIFIED_ADMISSIBLE, "módulo simétrico com base φ-invariante (Newton plano)")
    if t_n != t_h:
        return certificate(CERTIFIED_INADMISSIBLE, f"t_N = {t_n} difere de t_H = {t_h}")
    if not newton.lies_above(hodge):
        return certificate(CERTIFIED_INADMISSIBLE, "polígono de Newton passa abaixo do de Hodge")
    if len(newton.segments) == 1 and not newton.interior_lattice_points():
        return certificate(CERTIFIED_ADMISSIBLE, "Newton de um único segmento sem pontos inteiros interiores")
    return certificate(UNKNOWN, "critério de pontos inteiros não se aplica")


def dieudonne_manin_type(module: FilteredPhiModule) -> List[Tuple[Any, int, int]]:
    """Decomposição isoclina: (declive, multiplicidade, número de fatores simples).

    Um declive a/b (em termos mínimos) contribui com fatores simples de posto
    b; a multiplicidade precisa ser múltipla de b.
    """
    result = []
    for slope, length in newton_polygon_module(module).segments:
        denominator = int(QQ.denom(slope))
        if length % denominator:
            msg = f"Multiplicidade {length} do declive {slope} não é múltipla de {denominator}"
            logger.error(msg)
            raise StructureError(msg, 'dieudonne_manin')
        result.append((slope, length, length // denominator))
    return result


def base_change(module: FilteredPhiModule, change: Sequence[Sequence[Any]]) -> FilteredPhiModule:
    """Módulo na nova base: A' = B⁻¹·A·φ(B)."""
    layer = module.layer
    b = layer_matrix(layer, change)
    if len(b) != module.rank:
        raise DomainError("Mudança de base com dimensão incompatível")
    b_inv = field_inverse(b, layer.zero(), layer.one())
    new = mat_mul(mat_mul(b_inv, module.matrix(), layer.zero()), frobenius_matrix(layer, b), layer.zero())
    return FilteredPhiModule(layer, tuple(tuple(row) for row in new), module.hodge_jumps, module.tag)


def f_action_embed(layer: PadicTower, matrix: Sequence[Sequence[Any]]) -> Matrix:
    """Diag(M, φ(M), ..., φ^{f-1}(M))."""
    m = layer_matrix(layer, matrix)
    blocks = [frobenius_matrix(layer, m, k) for k in range(layer.f)]
    return block_diag(blocks, layer.zero())

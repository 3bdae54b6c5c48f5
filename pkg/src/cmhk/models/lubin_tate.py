"""O módulo de Lubin-Tate D_π de uma torre.

D_π = L^{ef} com a matriz de Frobenius em blocos e×e: a matriz companheira C
do polinômio de Eisenstein no canto (0, f-1) e identidades na subdiagonal.
A filtração tem saltos {(0, ef-1), (1, 1)}; a reta W (onde as ações de F à
esquerda e à direita coincidem) vive sobre F e entra apenas pelos saltos.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ

from ..config import PRECISION_CONFIG, RANDOM_CONFIG, SUITE_CONFIG
from ..exceptions import DomainError, StructureError
from ..kernel.matrices import identity, mat_add, mat_mul, rational_rank, zeros
from ..padic import PadicElement, PadicTower, default_unramified_polynomial
from .phi_module import (
    CERTIFIED_ADMISSIBLE,
    AdmissibilityCertificate,
    FilteredPhiModule,
    admissibility_certificate,
    f_action_embed,
    frobenius_matrix,
    hodge_polygon,
    layer_determinant,
    newton_polygon_module,
    phi_power_matrix,
)

# Configuração de logging
logger = logging.getLogger(__name__)

FILTRATION_LINE = "W: reta de F onde as ações à esquerda e à direita coincidem (apenas os saltos)"

Matrix = List[List[PadicElement]]


@dataclass(frozen=True)
class LubinTateModule:
    """D_π com a torre de origem e a matriz companheira C."""
    tower: PadicTower
    module: FilteredPhiModule
    companion: Tuple[Tuple[PadicElement, ...], ...]
    filtration_line_tag: str = FILTRATION_LINE

    @property
    def layer(self) -> PadicTower:
        return self.module.layer

    @property
    def e(self) -> int:
        return self.tower.e

    @property
    def f(self) -> int:
        return self.tower.f

    def companion_matrix(self) -> Matrix:
        return [list(row) for row in self.companion]


def companion_matrix(tower: PadicTower) -> Matrix:
    """Companheira de E(y) = y^e + a_{e-1} y^{e-1} + ... + a_0 sobre a camada."""
    layer = tower.layer
    e = tower.e
    coefficients = [layer.from_layer(list(c)) for c in tower.eisenstein_coefficients()]
    matrix = zeros(e, e, layer.zero())
    for k in range(1, e):
        matrix[k][k - 1] = layer.one()
    for k in range(e):
        matrix[k][e - 1] = matrix[k][e - 1] - coefficients[k]
    return matrix


def lubin_tate_jumps(e: int, f: int) -> List[Tuple[int, int]]:
    return [(w, m) for w, m in ((0, e * f - 1), (1, 1)) if m > 0]


def build_D_pi(tower: PadicTower) -> LubinTateModule:
    """Monta D_π: C no bloco (0, f-1) e identidades e×e nos blocos (k+1, k).

    Args:
        tower: torre F = L(π) com polinômio de Eisenstein E.

    Returns:
        ``LubinTateModule`` de posto ef.
    """
    layer = tower.layer
    e, f = tower.e, tower.f
    c = companion_matrix(tower)
    rank = e * f
    a = zeros(rank, rank, layer.zero())
    for i in range(e):
        for j in range(e):
            a[i][(f - 1) * e + j] = c[i][j]
    for k in range(f - 1):
        for i in range(e):
            a[(k + 1) * e + i][k * e + i] = layer.one()
    module = FilteredPhiModule(layer, tuple(tuple(row) for row in a), tuple(lubin_tate_jumps(e, f)))
    logger.info(f"D_π construído: p={tower.p}, e={e}, f={f}, posto {rank}")
    return LubinTateModule(tower, module, tuple(tuple(row) for row in c))


def _entries_agree(x: PadicElement, y: PadicElement) -> bool:
    if x.precision is None and y.precision is None:
        return x == y
    bound = min(n for n in (x.precision, y.precision) if n is not None)
    return x.agrees_with(y, bound - PRECISION_CONFIG['certification_margin'])


def _matrices_agree(a: Matrix, b: Matrix) -> bool:
    return all(_entries_agree(x, y) for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def commutes_with_frobenius(lt: LubinTateModule, m: Sequence[Sequence[Any]]) -> bool:
    """f_action_embed(M)·A = A·φ(f_action_embed(M))."""
    layer = lt.layer
    embedded = f_action_embed(layer, m)
    a = lt.module.matrix()
    lhs = mat_mul(embedded, a, layer.zero())
    rhs = mat_mul(a, frobenius_matrix(layer, embedded), layer.zero())
    return _matrices_agree(lhs, rhs)


@dataclass(frozen=True)
class LTStructureReport:
    """Identidades estruturais; ``None`` marca uma verificação não aplicável."""
    checks: Dict[str, Optional[bool]]

    @property
    def passed(self) -> bool:
        return all(value is not False for value in self.checks.values())

    def failures(self) -> List[str]:
        return [name for name, value in self.checks.items() if value is False]


def verify_structure(lt: LubinTateModule, strict: bool = True) -> LTStructureReport:
    """Verifica a ação de F, a identidade π = φ^f e o controle negativo.

    Args:
        lt: módulo construído por :func:`build_D_pi`.
        strict: levanta ``StructureError`` com o nome da identidade que falhou.

    Returns:
        ``LTStructureReport``.
    """
    layer = lt.layer
    c = lt.companion_matrix()
    one = identity(lt.e, layer.zero(), layer.one())
    checks: Dict[str, Optional[bool]] = {
        'commutes_C': commutes_with_frobenius(lt, c),
        'commutes_C2': commutes_with_frobenius(lt, mat_mul(c, c, layer.zero())),
        'commutes_C_plus_1': commutes_with_frobenius(lt, mat_add(c, one)),
        'pi_equals_phi_f': _matrices_agree(phi_power_matrix(lt.module), f_action_embed(layer, c)),
    }
    if lt.e >= 2:
        control = identity(lt.e, layer.zero(), layer.one())
        control[0][1] = layer.one()
        # I + E_01 nunca comuta com uma companheira
        checks['negative_control'] = not commutes_with_frobenius(lt, control)
    else:
        checks['negative_control'] = None
    report = LTStructureReport(checks)
    if strict and not report.passed:
        name = report.failures()[0]
        msg = f"Identidade estrutural falhou: {name}"
        logger.error(msg)
        raise StructureError(msg, name, checks)
    return report


@dataclass(frozen=True)
class LTPolygonReport:
    """Polígonos de D_π comparados com os valores esperados."""
    newton_segments: Tuple[Tuple[Any, int], ...]
    hodge_segments: Tuple[Tuple[Any, int], ...]
    det_valuation: Any
    newton_ok: bool
    hodge_ok: bool
    det_ok: bool
    lattice_ok: bool
    certificate: AdmissibilityCertificate

    @property
    def passed(self) -> bool:
        return (self.newton_ok and self.hodge_ok and self.det_ok and self.lattice_ok
                and self.certificate.status == CERTIFIED_ADMISSIBLE)


def verify_polygons(lt: LubinTateModule) -> LTPolygonReport:
    """Newton com declive único 1/ef, Hodge {0: ef-1, 1: 1}, v(det φ^f) = f e certificado."""
    ef = lt.e * lt.f
    newton = newton_polygon_module(lt.module)
    hodge = hodge_polygon(lt.module)
    det_valuation = layer_determinant(lt.layer, phi_power_matrix(lt.module)).valuation()
    expected_hodge = [(QQ(w), m) for w, m in lubin_tate_jumps(lt.e, lt.f)]
    report = LTPolygonReport(
        newton_segments=tuple(newton.segments),
        hodge_segments=tuple(hodge.segments),
        det_valuation=det_valuation,
        newton_ok=newton.segments == [(QQ(1, ef), ef)],
        hodge_ok=hodge.segments == expected_hodge,
        det_ok=det_valuation == lt.f,
        lattice_ok=len(newton.segments) == 1 and not newton.interior_lattice_points(),
        certificate=admissibility_certificate(lt.module),
    )
    logger.info(f"Polígonos de D_π (e={lt.e}, f={lt.f}): aprovado={report.passed}")
    return report


def _layer_basis(layer: PadicTower) -> List[PadicElement]:
    return [layer.from_layer([1 if i == t else 0 for i in range(layer.f)]) for t in range(layer.f)]


def _flatten(entries: Sequence[PadicElement]) -> List[Any]:
    return [c for z in entries for c in z.layer_coords()]


def commutant_dimension(lt: LubinTateModule) -> int:
    """Dimensão sobre L das matrizes e×e que comutam com C (deve ser e)."""
    layer = lt.layer
    c = lt.companion_matrix()
    e = lt.e
    columns = []
    for i in range(e):
        for j in range(e):
            for scalar in _layer_basis(layer):
                m = zeros(e, e, layer.zero())
                m[i][j] = scalar
                diff = mat_add(mat_mul(m, c, layer.zero()),
                               [[-z for z in row] for row in mat_mul(c, m, layer.zero())])
                columns.append(_flatten([z for row in diff for z in row]))
    rows = [list(r) for r in zip(*columns)]
    dimension = e * e * layer.f - rational_rank(rows)
    return dimension // layer.f


def cyclic_vector_check(lt: LubinTateModule) -> bool:
    """A órbita de v = Σ_k (primeiro vetor do bloco k) sob F à esquerda e L à direita gera D sobre Q_p."""
    layer = lt.layer
    e, f = lt.e, lt.f
    rank = e * f
    x = layer.x()
    operators = [
        f_action_embed(layer, lt.companion_matrix()),
        f_action_embed(layer, [[x if i == j else layer.zero() for j in range(e)] for i in range(e)]),
    ]
    start = [layer.one() if k % e == 0 else layer.zero() for k in range(rank)]
    target = rank * f
    kept: List[List[Any]] = []
    queue = [start]
    while queue and len(kept) < target:
        v = queue.pop(0)
        candidate = kept + [_flatten(v)]
        if rational_rank(candidate) == len(kept):
            continue
        kept = candidate
        for op in operators:
            queue.append([sum((op[i][j] * v[j] for j in range(rank)), layer.zero()) for i in range(rank)])
        queue.append([x * z for z in v])
    return len(kept) == target


def random_eisenstein(layer: PadicTower, e: int, rng: np.random.Generator,
                      bound: Optional[int] = None) -> List[List[Any]]:
    """Polinômio de Eisenstein aleatório com coeficientes na camada.

    a_k = p·(elemento aleatório) e a_0 = p·(unidade); quando f ≥ 2 a unidade
    tem termo em x, de modo que os twists de Frobenius de C são distintos.

    Returns:
        Coeficientes decrescentes em y, cada um decrescente em x.
    """
    if e < 1:
        raise DomainError(f"Grau de Eisenstein inválido: {e}")
    bound = RANDOM_CONFIG['coefficient_bound'] if bound is None else bound
    p, f = layer.p, layer.f
    unit_bound = max(1, min(bound, p - 1))

    def random_coords() -> List[int]:
        return [int(c) for c in rng.integers(-bound, bound + 1, size=f)]

    unit = random_coords()
    if f >= 2:
        unit[1] = int(rng.integers(1, unit_bound + 1))
    else:
        unit[0] = int(rng.choice([-1, 1])) * int(rng.integers(1, unit_bound + 1))
    ascending = [unit] + [random_coords() for _ in range(1, e)]
    coefficients = [[p * c for c in reversed(coords)] for coords in ascending]
    return [[1]] + list(reversed(coefficients))


def lubin_tate_tower(p: int, e: int, f: int, eis_poly: Optional[Sequence[Sequence[Any]]] = None,
                     precision: Optional[int] = None) -> PadicTower:
    """Torre com camada padrão de grau f; sem ``eis_poly`` usa y^e - p."""
    unram = default_unramified_polynomial(p, f)
    if eis_poly is None:
        eis_poly = [[1]] + [[0]] * (e - 1) + [[-p]]
    return PadicTower(p, f, unram, eis_poly, precision)


@dataclass(frozen=True)
class LTGridRow:
    p: int
    e: int
    f: int
    trial: int
    eis_poly: Tuple[Tuple[Any, ...], ...]
    structure_passed: bool
    polygons_passed: bool


def lubin_tate_grid(primes: Optional[Sequence[int]] = None, degrees: Optional[Sequence[int]] = None,
                    trials: Optional[int] = None, seed: Optional[int] = None) -> List[LTGridRow]:
    """Bateria (p, e, f) com polinômios de Eisenstein aleatórios."""
    primes = SUITE_CONFIG['lt_primes'] if primes is None else primes
    degrees = SUITE_CONFIG['lt_degrees'] if degrees is None else degrees
    trials = SUITE_CONFIG['lt_random_inputs'] if trials is None else trials
    rng = np.random.default_rng(RANDOM_CONFIG['random_state'] if seed is None else seed)
    rows = []
    for p in primes:
        for f in degrees:
            layer = lubin_tate_tower(p, 1, f).layer
            for e in degrees:
                for trial in range(trials):
                    eis = random_eisenstein(layer, e, rng)
                    lt = build_D_pi(lubin_tate_tower(p, e, f, eis))
                    rows.append(LTGridRow(
                        p=p, e=e, f=f, trial=trial,
                        eis_poly=tuple(tuple(c) for c in eis),
                        structure_passed=verify_structure(lt, strict=False).passed,
                        polygons_passed=verify_polygons(lt).passed,
                    ))
    failed = sum(1 for row in rows if not (row.structure_passed and row.polygons_passed))
    logger.info(f"Bateria de Lubin-Tate: {len(rows)} casos, {failed} falhas")
    return rows

import dataclasses

import pytest
from sympy import QQ

from cmhk.exceptions import StructureError
from cmhk.models import (
    CERTIFIED_ADMISSIBLE,
    build_D_pi,
    commutant_dimension,
    cyclic_vector_check,
    lubin_tate_grid,
    lubin_tate_tower,
    verify_polygons,
    verify_structure,
)
from cmhk.models.lubin_tate import companion_matrix


def _scalars(matrix):
    return [[entry.coords[0] for entry in row] for row in matrix]


def test_ramified_quadratic_matrix():
    """Testa D_π para e = 2, f = 1, p = 5: A = [[0, 5], [1, 0]]."""
    lt = build_D_pi(lubin_tate_tower(5, 2, 1))
    assert _scalars(lt.module.matrix()) == [[0, 5], [1, 0]]
    assert lt.module.hodge_jumps == ((0, 1), (1, 1))


@pytest.mark.parametrize('p', [2, 3, 5])
def test_unramified_quadratic_matrix(p):
    """Testa D_π para e = 1, f = 2: A = [[0, p], [1, 0]]."""
    lt = build_D_pi(lubin_tate_tower(p, 1, 2))
    assert _scalars(lt.module.matrix()) == [[0, p], [1, 0]]
    assert all(entry.in_layer() for row in lt.module.matrix() for entry in row)


@pytest.mark.parametrize('p, e, f', [(5, 2, 1), (3, 1, 2), (3, 2, 2), (2, 3, 1), (5, 1, 1)])
def test_structure_and_polygons(p, e, f):
    """Testa as identidades estruturais e os polígonos esperados."""
    lt = build_D_pi(lubin_tate_tower(p, e, f))
    assert verify_structure(lt).passed
    report = verify_polygons(lt)
    assert report.newton_segments == ((QQ(1, e * f), e * f),)
    assert report.det_valuation == f
    assert report.certificate.status == CERTIFIED_ADMISSIBLE
    assert report.passed


def test_negative_control_only_for_ramified():
    """Testa que o controle negativo não se aplica quando e = 1."""
    assert verify_structure(build_D_pi(lubin_tate_tower(3, 1, 2))).checks['negative_control'] is None
    assert verify_structure(build_D_pi(lubin_tate_tower(5, 2, 1))).checks['negative_control'] is True


def test_wrong_companion_fails_strictly():
    """Testa a falha nomeada quando C não corresponde a A."""
    lt = build_D_pi(lubin_tate_tower(5, 2, 1))
    other = companion_matrix(lubin_tate_tower(5, 2, 1, [[1], [0], [-10]]))
    broken = dataclasses.replace(lt, companion=tuple(tuple(row) for row in other))
    assert not verify_structure(broken, strict=False).passed
    with pytest.raises(StructureError) as info:
        verify_structure(broken)
    assert info.value.axiom == 'commutes_C'


def test_commutant_and_cyclic_vector():
    """Testa a dimensão do comutante de C e o vetor cíclico."""
    lt = build_D_pi(lubin_tate_tower(5, 2, 1))
    assert commutant_dimension(lt) == 2
    assert cyclic_vector_check(lt)


def test_custom_eisenstein_polynomial():
    """Testa E = y² + 3y + 3 sobre Q3."""
    lt = build_D_pi(lubin_tate_tower(3, 2, 1, [[1], [3], [3]]))
    assert _scalars(lt.companion_matrix()) == [[0, -3], [1, -3]]
    assert verify_polygons(lt).passed


def test_small_random_grid():
    """Testa a bateria com polinômios de Eisenstein aleatórios."""
    rows = lubin_tate_grid(primes=[3], degrees=[1, 2], trials=1, seed=5)
    assert len(rows) == 4
    assert all(row.structure_passed and row.polygons_passed for row in rows)

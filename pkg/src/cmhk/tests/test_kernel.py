import pytest
from hypothesis import given, settings, strategies as st
from sympy import QQ

from cmhk.exceptions import DomainError, HenselRefusal
from cmhk.kernel.hensel import hensel_factor
from cmhk.kernel.matrices import berkowitz_charpoly, char_poly, determinant, identity, mat_mul, rational_inverse
from cmhk.kernel.numbers import (
    format_rational,
    is_padic_square_rational,
    padic_valuation,
    squarefree_part,
    to_rational,
)
from cmhk.kernel.polygons import LowerPolygon, newton_polygon_of_poly, rational_valuation
from cmhk.kernel.polynomials import factor_mod_p, is_irreducible_mod_p, poly_mul_int, squarefree_witness_mod_p


def test_to_rational_accepts_strings_and_ints():
    """Testa a conversão de strings "a/b" e inteiros."""
    assert to_rational('3/6') == QQ(1, 2)
    assert to_rational(-4) == QQ(-4)
    assert format_rational(QQ(-3, 4)) == '-3/4'
    assert format_rational(QQ(6, 3)) == '2'


def test_to_rational_rejects_garbage():
    """Testa a rejeição de valores não racionais."""
    with pytest.raises(DomainError):
        to_rational('um/dois')
    with pytest.raises(DomainError):
        to_rational(True)


def test_valuation_and_square_classes():
    """Testa valorização, parte livre de quadrados e quadrados p-ádicos."""
    assert padic_valuation(QQ(50, 3), 5) == 2
    assert padic_valuation(QQ(1, 8), 2) == -3
    assert squarefree_part(-20) == -5
    assert squarefree_part(QQ(1, 2)) == 2
    assert is_padic_square_rational(4, 5)
    assert not is_padic_square_rational(2, 5)
    assert is_padic_square_rational(17, 2)
    assert not is_padic_square_rational(3, 2)


def test_newton_polygon_linear_eisenstein():
    """Testa x - p: um segmento, raiz de valorização 1."""
    polygon = newton_polygon_of_poly([1, -5], rational_valuation(5))
    assert polygon.root_valuations() == [(QQ(1), 1)]


def test_newton_polygon_ramified_quadratic():
    """Testa x² - 5 sobre Q5: raízes de valorização 1/2."""
    polygon = newton_polygon_of_poly([1, 0, -5], rational_valuation(5))
    assert polygon.root_valuations() == [(QQ(1, 2), 2)]


def test_newton_polygon_two_slopes():
    """Testa x² - 3x + 2 sobre Q2: raízes de valorização 1 e 0."""
    polygon = newton_polygon_of_poly([1, -3, 2], rational_valuation(2))
    assert polygon.root_valuations() == [(QQ(1), 1), (QQ(0), 1)]


def test_polygon_from_segments_merges_and_sorts():
    """Testa a concatenação de segmentos com declives repetidos."""
    polygon = LowerPolygon.from_segments([(1, 1), (0, 2), (0, 1)])
    assert polygon.segments == [(QQ(0), 3), (QQ(1), 1)]
    assert polygon.total_rise == 1
    assert polygon.interior_lattice_points() == [(1, QQ(0)), (2, QQ(0)), (3, QQ(0))]


def test_polygon_without_interior_lattice_points():
    """Testa o segmento de declive 1/2 e comprimento 2."""
    polygon = LowerPolygon.from_segments([(QQ(1, 2), 2)])
    assert polygon.interior_lattice_points() == []
    assert polygon.lies_above(LowerPolygon.from_segments([(0, 1), (1, 1)]))


def test_polygon_rejects_bad_vertices():
    """Testa a validação dos vértices."""
    with pytest.raises(DomainError):
        LowerPolygon(((0, QQ(0)), (0, QQ(1))))
    with pytest.raises(DomainError):
        LowerPolygon(((0, QQ(0)), (1, QQ(2)), (2, QQ(2))))


def test_hensel_lifts_split_quadratic():
    """Testa x² + 1 mod 5 semeado por (x + 2)(x + 3) até 5^6."""
    factors = hensel_factor([1, 0, 1], [[1, 2], [1, 3]], 5, 6)
    assert len(factors) == 2
    assert all(f[0] == 1 and len(f) == 2 for f in factors)
    product = poly_mul_int(factors[0], factors[1])
    assert all((a - b) % 5 ** 6 == 0 for a, b in zip(product, [1, 0, 1]))


def test_hensel_single_seed_returns_input():
    """Testa a semente irredutível única."""
    assert hensel_factor([1, 0, 1], [[1, 0, 1]], 3, 10) == [[1, 0, 1]]


def test_hensel_refuses_non_squarefree_reduction():
    """Testa a recusa para x² + 1 em p = 2, com a testemunha do mdc."""
    with pytest.raises(HenselRefusal) as info:
        hensel_factor([1, 0, 1], [[1, 1], [1, 1]], 2, 10)
    assert info.value.witness == [1, 0, 1]


def test_modular_factorization_helpers():
    """Testa irredutibilidade, livre de quadrados e fatoração mod p."""
    assert is_irreducible_mod_p([1, 0, 1], 3)
    assert not is_irreducible_mod_p([1, 0, 1], 5)
    assert squarefree_witness_mod_p([1, 0, 1], 5) == [1]
    assert squarefree_witness_mod_p([1, 0, 1], 2) == [1, 0, 1]
    _, factors = factor_mod_p([1, 1, 1, 1, 1], 11)
    assert len(factors) == 4


@pytest.mark.parametrize('rows, expected', [
    ([[1, 0], [0, 1]], [1, -2, 1]),
    ([[0, 5], [1, 0]], [1, 0, -5]),
    ([[5, 0], [0, 5]], [1, -10, 25]),
])
def test_char_poly_examples(rows, expected):
    """Testa o polinômio característico nos exemplos básicos."""
    assert char_poly([[QQ(c) for c in row] for row in rows]) == [QQ(c) for c in expected]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=9, max_size=9))
def test_berkowitz_agrees_with_domain_charpoly(entries):
    """Testa Berkowitz contra o charpoly de DomainMatrix em matrizes 3x3."""
    rows = [[QQ(entries[3 * i + j]) for j in range(3)] for i in range(3)]
    assert berkowitz_charpoly(rows, QQ(0), QQ(1)) == char_poly(rows)


def test_rational_inverse():
    """Testa a inversa racional."""
    rows = [[QQ(2), QQ(1)], [QQ(1), QQ(1)]]
    assert mat_mul(rows, rational_inverse(rows)) == identity(2)
    assert determinant(rows) == 1

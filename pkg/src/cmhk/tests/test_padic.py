import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st
from sympy import QQ

from cmhk.exceptions import DomainError, PrecisionError, StructureError
from cmhk.padic import PadicTower, Subfield, build_involution, standard_extension, trace_norm
from cmhk.padic.catalog import STANDARD_EXTENSIONS, default_unramified_polynomial


def test_tower_rejects_invalid_presentations():
    """Testa a validação de p, do polinômio não ramificado e do Eisenstein."""
    with pytest.raises(DomainError):
        PadicTower(4, 1, [1, -1], [[1], [-2]])
    with pytest.raises(DomainError):
        PadicTower(5, 2, [1, 0, 1], [[1], [-5]])
    with pytest.raises(DomainError):
        PadicTower(5, 1, [1, -1], [[1], [0], [-25]])
    with pytest.raises(DomainError):
        PadicTower(5, 1, [1, -1], [[1], [1], [-5]])


def test_tower_dimensions(sqrt5, zeta5):
    """Testa e, f e d nas torres do catálogo."""
    assert (sqrt5.tower.e, sqrt5.tower.f, sqrt5.tower.d) == (2, 1, 2)
    assert (zeta5.tower.e, zeta5.tower.f, zeta5.tower.d) == (1, 4, 4)


def test_uniformizer_arithmetic(sqrt5):
    """Testa y² = 5 e a valorização 1/2 do uniformizador."""
    tower = sqrt5.tower
    y = tower.y()
    assert y * y == tower.scalar(5)
    assert y.valuation() == QQ(1, 2)
    assert y.normalized_valuation() == 1
    assert (y / y) == tower.one()


def test_trace_and_norm_to_base(sqrt5, zeta5):
    """Testa Tr(y) = 0, N(y) = -5 e Tr(ζ5) = -1."""
    tower = sqrt5.tower
    result = trace_norm(tower.y(), Subfield.BASE)
    assert result.trace == tower.scalar(0)
    assert result.norm == tower.scalar(-5)

    x = zeta5.tower.x()
    assert trace_norm(x, Subfield.BASE).trace == zeta5.tower.scalar(-1)
    assert trace_norm(x, Subfield.BASE).norm == zeta5.tower.scalar(1)


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.integers(0, 2 ** 32 - 1))
def test_norm_is_transitive_through_fixed_field(zeta5, sqrt5, seed):
    """Propriedade: N_{F/Qp} = N_{F0/Qp} ∘ N_{F/F0} e o mesmo para o traço."""
    rng = np.random.default_rng(seed)
    for ext in (zeta5, sqrt5):
        z = ext.random_element(rng)
        direct = trace_norm(z, Subfield.BASE)
        relative = trace_norm(z, Subfield.FIXED, ext.involution)
        assert ext.involution.is_fixed(relative.norm)
        through_norm = trace_norm(relative.norm, Subfield.BASE, ext.involution, source=Subfield.FIXED)
        through_trace = trace_norm(relative.trace, Subfield.BASE, ext.involution, source=Subfield.FIXED)
        assert through_norm.norm == direct.norm
        assert through_trace.trace == direct.trace


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.integers(0, 2 ** 32 - 1))
def test_norm_is_transitive_through_layer(sqrt5, seed):
    """Propriedade: N_{F/Qp} = N_{L/Qp} ∘ N_{F/L} na torre com camada não ramificada."""
    tower = PadicTower(3, 2, [1, 0, 1], [[1], [0], [-3]])
    rng = np.random.default_rng(seed)
    for z in (tower.element([int(c) for c in rng.integers(-9, 10, size=tower.d)]), sqrt5.random_element(rng)):
        if z.is_zero:
            continue
        to_layer = trace_norm(z, Subfield.LAYER)
        through = trace_norm(to_layer.norm, Subfield.BASE, source=Subfield.LAYER)
        assert through.norm == trace_norm(z, Subfield.BASE).norm


def test_trace_to_fixed_field_needs_involution(sqrt5):
    """Testa a exigência da involução para F0."""
    with pytest.raises(DomainError):
        trace_norm(sqrt5.tower.y(), Subfield.FIXED)
    result = trace_norm(sqrt5.tower.y(), Subfield.FIXED, sqrt5.involution)
    assert result.trace.is_zero
    assert result.norm == sqrt5.tower.scalar(-5)


def test_frobenius_on_quadratic_layer():
    """Testa o Frobenius de Q3[x]/(x² + 1): x ↦ x³ = -x."""
    tower = standard_extension('Q3-unram2').tower
    x = tower.x()
    assert tower.frobenius_image[1] is None
    assert tower.frobenius_lift(x) == -x
    assert tower.frobenius_power(x, 2) == x


def test_frobenius_on_quartic_layer(zeta5):
    """Testa Frobenius de ordem 4 sobre Q2[x]/(Φ5)."""
    tower = zeta5.tower
    x = tower.x()
    z = x + x ** 2
    assert tower.frobenius_lift(x) == x ** 2
    assert tower.frobenius_power(z, 4) == z
    assert tower.frobenius_power(z, 1) != z


def test_frobenius_rejects_ramified_part(sqrt5):
    """Testa que o Frobenius só age na camada não ramificada."""
    with pytest.raises(DomainError):
        sqrt5.tower.frobenius_lift(sqrt5.tower.y())


def test_residue_only_for_units(q5):
    """Testa o resíduo de unidades e a recusa para não unidades."""
    assert q5.scalar(7).residue() == (2,)
    with pytest.raises(DomainError):
        q5.scalar(10).residue()


def test_truncated_zero_has_no_valuation(q5):
    """Testa o erro de precisão para zero truncado."""
    with pytest.raises(PrecisionError):
        q5.element([0], precision=4).valuation()
    with pytest.raises(DomainError):
        q5.zero().valuation()


def test_precision_propagates_through_products(q5):
    """Testa a precisão de produtos de elementos truncados."""
    a = q5.element([1], precision=10)
    b = q5.scalar(25)
    assert (a * b).precision == 12
    assert (a + b).precision == 10
    assert a.agrees_with(q5.scalar(1 + 5 ** 11), 10)


def test_involution_fixed_field(sqrt5, zeta5):
    """Testa o corpo fixo: Q5 dentro de Q5(√5) e Q2(√5) dentro de Q2(ζ5)."""
    assert sqrt5.involution.fixed_degree == 1
    assert sqrt5.involution.extension_type == 'ramified'
    assert zeta5.involution.fixed_degree == 2
    assert zeta5.involution.extension_type == 'unramified'
    x = zeta5.tower.x()
    assert zeta5.involution.is_fixed(x + zeta5.star(x))
    assert not zeta5.involution.is_fixed(x)


def test_involution_rejects_identity(sqrt5):
    """Testa que a identidade não é aceita como involução."""
    with pytest.raises(StructureError) as info:
        build_involution(sqrt5.tower, [[[1], [0]], [[0], [1]]])
    assert info.value.axiom == 'non_trivial'


def test_involution_rejects_non_root_image(sqrt5):
    """Testa o axioma de homomorfismo."""
    with pytest.raises(StructureError) as info:
        build_involution(sqrt5.tower, [[[1], [0]], [[1], [0]]])
    assert info.value.axiom == 'homomorphism'


def test_fixed_uniformizer_valuation(sqrt5, unram5):
    """Testa a valorização do uniformizador de F0."""
    assert sqrt5.involution.fixed_uniformizer.valuation() == 1
    assert unram5.involution.fixed_uniformizer.valuation() == 1


@pytest.mark.parametrize('name', sorted(STANDARD_EXTENSIONS))
def test_catalog_entries_build(name):
    """Testa que todas as extensões do catálogo são válidas."""
    ext = standard_extension(name)
    assert 2 * ext.involution.fixed_degree == ext.tower.d


def test_catalog_unknown_name():
    """Testa o erro para nomes desconhecidos."""
    with pytest.raises(DomainError):
        standard_extension('Q11(sqrt11)')


def test_default_unramified_polynomial():
    """Testa os polinômios configurados e a busca lexicográfica."""
    assert default_unramified_polynomial(3, 1) == [1, -1]
    assert default_unramified_polynomial(5, 2) == [1, 0, 2]
    assert default_unramified_polynomial(11, 2) == [1, 0, 1]


def test_describe_round_trips_tower(sqrt5):
    """Testa que o descritor reconstrói a mesma torre."""
    desc = sqrt5.tower.describe()
    rebuilt = PadicTower(desc['p'], desc['f'], desc['unram_poly'], desc['eis_poly'], desc['precision'])
    assert rebuilt == sqrt5.tower

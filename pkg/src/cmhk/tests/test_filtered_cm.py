import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cmhk.exceptions import DomainError
from cmhk.models import (
    CERTIFIED_ADMISSIBLE,
    NON_NORM,
    NORM,
    FilteredCMSpace,
    admissibility_certificate,
    aggregate_blocks,
    decompose_symmetric,
    fundamental,
    goodness,
    goodness_from_forms,
    hodge_min,
    period_norm_class,
    tensor,
    tensor_generators,
    to_phi_module,
    validate_symmetric,
)
from cmhk.models.filtered_cm import hodge_minimum_matches, random_symmetric, recompose


def test_fundamental_weights():
    """Testa os pesos do espaço fundamental."""
    assert fundamental(2, (1, 0)).weights == (1, -1)
    assert fundamental(4, (2, 3, 0, 1)).weights == (1, 0, -1, 0)


def test_star_permutation_validation():
    """Testa permutações inválidas e ι fixo."""
    with pytest.raises(DomainError):
        FilteredCMSpace(2, (0, 1), (0, 0))
    with pytest.raises(DomainError):
        FilteredCMSpace(3, (1, 2, 0), (0, 0, 0))
    with pytest.raises(DomainError):
        FilteredCMSpace(2, (1, 0), (1,))


def test_fundamental_period_is_not_a_norm():
    """Testa hodge_min = 1 e período fora das normas."""
    space = fundamental(2, (1, 0))
    assert validate_symmetric(space)
    assert hodge_min(space) == 1
    assert period_norm_class(space) == NON_NORM


def test_tensor_square_of_fundamental():
    """Testa fund ⊗ fund: hodge_min = 2 e período norma."""
    space = fundamental(2, (1, 0))
    square = tensor(space, space)
    assert square.weights == (2, -2)
    assert hodge_min(square) == 2
    assert period_norm_class(square) == NORM


def test_tensor_requires_same_involution():
    """Testa a recusa de involuções diferentes."""
    with pytest.raises(DomainError):
        tensor(fundamental(4, (1, 0, 3, 2)), fundamental(4, (2, 3, 0, 1)))


def test_non_symmetric_space_is_rejected():
    """Testa hodge_min em espaço não simétrico."""
    space = FilteredCMSpace(2, (1, 0), (1, 1))
    assert not validate_symmetric(space)
    with pytest.raises(DomainError):
        hodge_min(space)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 16), st.integers(2, 6))
def test_period_class_is_multiplicative(seed, d):
    """Propriedade: a classe do período de V ⊗ W é o produto das classes."""
    rng = np.random.default_rng(seed)
    first = random_symmetric(rng, d)
    second = random_symmetric(rng, d, first.star_perm)
    sign = {NORM: 1, NON_NORM: -1}
    product = tensor(first, second)
    assert sign[period_norm_class(product)] == sign[period_norm_class(first)] * sign[period_norm_class(second)]


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 16))
def test_symmetric_spaces_are_always_good(seed):
    """Propriedade: todo espaço simétrico é bom."""
    space = random_symmetric(np.random.default_rng(seed), 4)
    assert goodness(space).good


def test_decomposition_into_generators():
    """Testa V = ⊗ V(τ)^{n[τ]} com um coeficiente negativo."""
    space = FilteredCMSpace(4, (2, 3, 0, 1), (2, -1, -2, 1))
    coefficients = decompose_symmetric(space)
    assert coefficients == {0: 2, 1: -1}
    assert recompose(4, (2, 3, 0, 1), coefficients) == space
    assert set(tensor_generators(4, (2, 3, 0, 1))) == {0, 1}


def test_goodness_report_trace():
    """Testa o relatório detalhado do espaço fundamental."""
    report = goodness(fundamental(2, (1, 0)))
    assert report.hodge_min == 1
    assert report.s_m_parity == 'odd'
    assert not report.forms_isomorphic
    assert report.good
    assert any('axioma' in line for line in report.trace)


@pytest.mark.parametrize('isomorphic, s_m, good', [(True, 0, True), (False, 1, True), (True, 1, False),
                                                   (False, 2, False)])
def test_goodness_from_forms(isomorphic, s_m, good):
    """Testa a tabela da bondade a partir do teste de formas."""
    assert goodness_from_forms(isomorphic, s_m).good is good


def test_aggregate_reports_first_culprit():
    """Testa a conjunção e o índice do primeiro bloco ruim."""
    reports = [goodness_from_forms(True, 0), goodness_from_forms(True, 1), goodness_from_forms(False, 2)]
    verdict = aggregate_blocks(reports, [2])
    assert not verdict.good
    assert verdict.culprit == 1
    assert verdict.total_s_m == 3
    assert verdict.hyperbolic_ranks == (2,)

    assert aggregate_blocks([goodness_from_forms(False, 1)], [2, 4]).good
    with pytest.raises(DomainError):
        aggregate_blocks([], [3])


def test_symmetric_space_phi_module():
    """Testa o φ-módulo associado: admissível e mínimo de Hodge coerente."""
    space = fundamental(4, (2, 3, 0, 1))
    module = to_phi_module(space, 5)
    assert module.rank == 4
    assert hodge_minimum_matches(space, module)
    assert admissibility_certificate(module).status == CERTIFIED_ADMISSIBLE

import pytest

from cmhk.decomposition import (
    CM,
    HYPERBOLIC,
    TOWER_UNAVAILABLE,
    GlobalCMAlgebra,
    block_extension,
    cyclotomic_algebra,
    cyclotomic_oracle,
    decompose,
    local_factors,
    orthogonal_blocks,
)
from cmhk.exceptions import DomainError, HenselRefusal, StructureError
from cmhk.padic import standard_extension


@pytest.fixture
def gaussian():
    """Q(i) com a conjugação x ↦ -x."""
    return GlobalCMAlgebra((1, 0, 1), (-1, 0))


@pytest.mark.parametrize('g, r, axiom', [
    ((1, -2, 1), (-1, 2), 'squarefree'),
    ((1, 0, 1), (1, 1), 'homomorphism'),
    ((1, 0, 1), (1, 0), 'non_trivial'),
])
def test_algebra_axioms(g, r, axiom):
    """Testa as falhas nomeadas da álgebra com involução."""
    with pytest.raises(StructureError) as info:
        GlobalCMAlgebra(g, r)
    assert info.value.axiom == axiom


def test_algebra_requires_monic():
    """Testa a recusa de g não mônico."""
    with pytest.raises(DomainError):
        GlobalCMAlgebra((2, 0, 1), (-1, 0))


def test_from_components_glues_by_crt():
    """Testa a colagem de Q(i) com Q (involução trivial na componente linear)."""
    algebra = GlobalCMAlgebra.from_components([((1, 0, 1), (-1, 0)), ((1, -2), (2,))])
    assert algebra.g == (1, -2, 1, -2)
    assert algebra.degree == 3
    assert algebra.r_poly().rem(GlobalCMAlgebra((1, 0, 1), (-1, 0)).g_poly()) == \
        GlobalCMAlgebra((1, 0, 1), (-1, 0)).r_poly()


def test_split_prime_gives_hyperbolic_block(gaussian):
    """Testa p = 5: dois fatores trocados, um bloco hiperbólico de posto 2."""
    factor_set, plan = decompose(gaussian, 5, 6)
    assert len(factor_set.factors) == 2
    assert not any(factor.exact for factor in factor_set.factors)
    assert factor_set.swapped_pairs == [(0, 1)]
    assert factor_set.tag(0) == 'swapped-with(1)'
    assert [block.kind for block in plan.blocks] == [HYPERBOLIC]
    assert plan.hyperbolic_ranks == [2]
    assert plan.cm_blocks == []


def test_inert_prime_gives_cm_block(gaussian):
    """Testa p = 3: um fator fixo, não ramificado de grau 2, com torre."""
    factor_set, plan = decompose(gaussian, 3, 10)
    assert factor_set.fixed == [0]
    (block,) = plan.blocks
    assert block.kind == CM
    assert (block.rank, block.e, block.f) == (2, 1, 2)
    assert block.tower_status == 'available'
    ext = block_extension(block, 10)
    assert ext.involution.extension_type == standard_extension('Q3-unram2').involution.extension_type
    assert ext.is_norm(ext.tower.scalar(-1))


def test_ramified_prime_is_refused(gaussian):
    """Testa p = 2: g mod 2 = (x + 1)², recusa com testemunha."""
    with pytest.raises(HenselRefusal) as info:
        local_factors(gaussian, 2, 10)
    assert info.value.witness == [1, 0, 1]


def test_cyclotomic_five_at_two():
    """Testa Φ5 em p = 2: fator quártico fixo e bloco CM com torre."""
    factor_set, plan = decompose(cyclotomic_algebra(5), 2, 10)
    assert len(factor_set.factors) == 1
    assert factor_set.factors[0].exact
    (block,) = plan.cm_blocks
    assert (block.rank, block.f) == (4, 4)
    assert block.tower_status == 'available'
    assert block_extension(block, 10).involution.fixed_degree == 2


def test_inexact_fixed_factors_have_no_tower():
    """Testa Φ5 em p = 19: dois fatores quadráticos fixos sem torre exata."""
    factor_set, plan = decompose(cyclotomic_algebra(5), 19, 8)
    assert factor_set.fixed == [0, 1]
    assert [block.tower_status for block in plan.blocks] == [TOWER_UNAVAILABLE, TOWER_UNAVAILABLE]
    with pytest.raises(DomainError):
        block_extension(plan.blocks[0])


@pytest.mark.parametrize('m, p', [(5, 11), (5, 2), (8, 3), (12, 5), (12, 7), (5, 19)])
def test_factor_count_matches_cyclotomic_oracle(m, p):
    """Testa o número de fatores de Φ_m contra φ(m)/ord_m(p)."""
    factor_set, plan = decompose(cyclotomic_algebra(m), p, 10)
    assert len(factor_set.factors) == cyclotomic_oracle(m, p)
    assert sum(block.rank for block in plan.blocks) == cyclotomic_algebra(m).degree


def test_cyclotomic_oracle_values():
    """Testa valores conhecidos e a recusa de p | m."""
    assert cyclotomic_oracle(5, 11) == 4
    assert cyclotomic_oracle(5, 2) == 1
    assert cyclotomic_oracle(8, 3) == 2
    with pytest.raises(DomainError):
        cyclotomic_oracle(10, 5)


def test_supplied_ramified_factor():
    """Testa x² - 5 em p = 5 com fatoração fornecida de Eisenstein."""
    algebra = GlobalCMAlgebra((1, 0, -5), (-1, 0))
    with pytest.raises(HenselRefusal):
        decompose(algebra, 5, 8)
    factor_set, plan = decompose(algebra, 5, 8, [{'coeffs': [1, 0, -5], 'shift': 0}])
    assert factor_set.factors[0].supplied
    (block,) = plan.blocks
    assert (block.kind, block.e, block.f) == (CM, 2, 1)
    ext = block_extension(block, 8)
    assert ext.is_ramified
    assert not ext.is_norm(ext.tower.scalar(2))


def test_supplied_factors_are_verified():
    """Testa a recusa de fatores que não são de Eisenstein ou cujo produto não é g."""
    algebra = GlobalCMAlgebra((1, 0, -5), (-1, 0))
    with pytest.raises(DomainError):
        decompose(algebra, 5, 8, [{'coeffs': [1, 0, -5], 'shift': 1}])
    with pytest.raises(DomainError):
        decompose(algebra, 5, 8, [[1, 0, -10]])


def test_trivial_involution_on_fixed_factor():
    """Testa a falha nomeada quando um fator fixo herda a identidade."""
    algebra = GlobalCMAlgebra.from_components([((1, 0, 1), (-1, 0)), ((1, -2), (2,))])
    factor_set = local_factors(algebra, 3, 8)
    assert len(factor_set.factors) == 2
    with pytest.raises(StructureError) as info:
        decompose(algebra, 3, 8)
    assert info.value.axiom == 'nontrivial_induced_involution'


def test_blocks_need_orbits(gaussian):
    """Testa que o plano exige a órbita calculada."""
    with pytest.raises(DomainError):
        orthogonal_blocks(local_factors(gaussian, 5, 6), gaussian.r)

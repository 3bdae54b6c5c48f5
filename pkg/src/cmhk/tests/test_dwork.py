import pytest

from cmhk.exceptions import DomainError
from cmhk.padic import dwork_tame_witness, frobenius_sign, root_tower, standard_extension
from cmhk.padic.catalog import TAME_EXTENSIONS


@pytest.mark.parametrize('name, expected_u', [('Q5(sqrt5)', 2), ('Q3(sqrt3)', 2), ('Q7(sqrt-7)', 3)])
def test_witness_picks_first_non_square_unit(name, expected_u):
    """Testa a unidade u escolhida em cada extensão moderada."""
    ext = standard_extension(name)
    report = dwork_tame_witness(ext)
    assert report.u == ext.tower.scalar(expected_u)
    assert report.frobenius_sign == -1
    assert report.root_tower.unram_poly == (1, 0, -expected_u)


@pytest.mark.parametrize('name', TAME_EXTENSIONS)
def test_witness_checks_pass(name):
    """Testa que todas as verificações nomeadas passam."""
    report = dwork_tame_witness(standard_extension(name))
    assert report.passed
    assert set(report.checks) == {
        'non_square_residue',
        'frobenius_negates_root',
        'norm_of_root_is_u',
        'frobenius_norm_is_minus_u',
        'u_is_not_norm',
        'uniformizer_anti_fixed',
        'ramified',
    }


@pytest.mark.parametrize('p, u', [(3, 2), (5, 2), (5, 3), (7, 3), (7, 5), (11, 2)])
def test_frobenius_sign_depends_on_power(p, u):
    """Testa φ(√u) = -√u e φ²(√u) = √u na torre Q_p[x]/(x² - u)."""
    tower = root_tower(p, u, 10)
    assert frobenius_sign(tower, 1) == -1
    assert frobenius_sign(tower, 2) == 1
    assert frobenius_sign(tower, 3) == -1


def test_frobenius_sign_matches_explicit_image():
    """Testa o sinal contra a imagem de x calculada pela torre."""
    tower = root_tower(5, 2, 10)
    x = tower.x()
    assert tower.frobenius_lift(x) == -x
    assert tower.frobenius_power(x, 2) == x


def test_root_tower_rejects_square_unit():
    """Testa que √u de resíduo quadrado não gera extensão não ramificada."""
    with pytest.raises(DomainError):
        root_tower(5, 4)


def test_witness_uniformizer_is_anti_fixed(sqrt5):
    """Testa π* = -π para o uniformizador devolvido."""
    report = dwork_tame_witness(sqrt5)
    assert sqrt5.star(report.uniformizer) == -report.uniformizer


@pytest.mark.parametrize('name', ['Q2(i)', 'Q5-unram2'])
def test_witness_rejects_wild_and_unramified(name):
    """Testa a recusa de p = 2 e de extensões não ramificadas."""
    with pytest.raises(DomainError):
        dwork_tame_witness(standard_extension(name))

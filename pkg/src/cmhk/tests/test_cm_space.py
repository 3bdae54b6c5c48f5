import pytest
from sympy import QQ

from cmhk.exceptions import DomainError
from cmhk.models import (
    NONTRIVIAL,
    TRIVIAL,
    CMQuadraticSpace,
    adjoint_check,
    cm_action,
    cm_classify,
    cm_compare,
    gauge_recover,
    milnor_audit,
    random_gauges,
    trace_form_gram,
)


@pytest.fixture
def sqrt5_spaces(sqrt5):
    """Espaços de Q5(√5) com calibres 1 e 2 (classes opostas)."""
    tower = sqrt5.tower
    return CMQuadraticSpace(sqrt5, tower.scalar(1)), CMQuadraticSpace(sqrt5, tower.scalar(2))


def test_space_rejects_bad_gauges(sqrt5):
    """Testa calibre nulo e calibre fora de F0."""
    with pytest.raises(DomainError):
        CMQuadraticSpace(sqrt5, sqrt5.tower.zero())
    with pytest.raises(DomainError):
        CMQuadraticSpace(sqrt5, sqrt5.tower.y())


def test_trace_form_gram_sqrt5(sqrt5_spaces):
    """Testa as formas diag(1, -5) e diag(2, -10)."""
    first, second = sqrt5_spaces
    assert trace_form_gram(first).gram == [[QQ(1), QQ(0)], [QQ(0), QQ(-5)]]
    assert trace_form_gram(second).gram == [[QQ(2), QQ(0)], [QQ(0), QQ(-10)]]


def test_trace_form_gram_cyclotomic(zeta5):
    """Testa a forma traço de Q(ζ5): 5/2 na diagonal menos 1/2 em toda parte."""
    gram = trace_form_gram(CMQuadraticSpace(zeta5, zeta5.tower.one())).gram
    for i in range(4):
        for j in range(4):
            expected = QQ(2) if i == j else QQ(-1, 2)
            assert gram[i][j] == expected


def test_action_is_self_adjoint(sqrt5_spaces, zeta5):
    """Testa b(αx, y) = b(x, α*y) para a forma traço."""
    first, _ = sqrt5_spaces
    assert adjoint_check(trace_form_gram(first), cm_action(first.extension))
    space = CMQuadraticSpace(zeta5, zeta5.tower.scalar(3))
    assert adjoint_check(trace_form_gram(space), cm_action(zeta5))


def test_gauge_recover_returns_gauge(sqrt5_spaces, zeta5):
    """Testa a recuperação exata do calibre na base padrão."""
    _, second = sqrt5_spaces
    action = cm_action(second.extension)
    assert gauge_recover(trace_form_gram(second), action, second.extension) == second.gauge

    x = zeta5.tower.x()
    gauge = x + zeta5.star(x) + 3
    space = CMQuadraticSpace(zeta5, gauge)
    assert gauge_recover(trace_form_gram(space), cm_action(zeta5), zeta5) == gauge


def test_classify_and_compare(sqrt5_spaces):
    """Testa a lei das duas classes em Q5(√5)."""
    first, second = sqrt5_spaces
    assert cm_classify(first) == TRIVIAL
    assert cm_classify(second) == NONTRIVIAL
    report = cm_compare(first, second)
    assert not report.isomorphic
    assert report.disc_equal and report.disc_1 == -5
    assert (report.eps_p_1, report.eps_p_2) == (1, -1)
    assert cm_compare(first, CMQuadraticSpace(first.extension, first.tower.scalar(4))).isomorphic


def test_compare_requires_same_extension(sqrt5_spaces, unram5):
    """Testa a recusa de espaços sobre extensões diferentes."""
    first, _ = sqrt5_spaces
    with pytest.raises(DomainError):
        cm_compare(first, CMQuadraticSpace(unram5, unram5.tower.one()))


def test_milnor_audit_explicit_gauges(sqrt5):
    """Testa discriminante constante e exatamente dois pares (disc, ε_5)."""
    gauges = [sqrt5.tower.scalar(a) for a in (1, 2, 3, 4, -5, 10)]
    report = milnor_audit(sqrt5, gauges)
    assert report.disc_classes == (-5,)
    assert report.invariant_pairs == ((-5, -1), (-5, 1))
    assert report.discrepancies == 0
    assert report.passed


def test_milnor_audit_random_gauges_are_consistent(unram5):
    """Testa que calibres sorteados nunca geram discrepâncias."""
    report = milnor_audit(unram5, random_gauges(unram5, 6, seed=3))
    assert report.discrepancies == 0
    assert len(report.disc_classes) == 1

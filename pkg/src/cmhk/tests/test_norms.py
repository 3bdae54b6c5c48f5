import numpy as np
import pytest

from cmhk.exceptions import DomainError, PrecisionError
from cmhk.padic import (
    is_norm,
    is_square,
    norm_class_audit,
    norm_class_representatives,
    reciprocity_symbol,
    standard_extension,
    with_precision_retry,
)
from cmhk.padic.norms import IDENTITY, STAR


@pytest.mark.parametrize('value, expected', [(4, True), (2, False), (5, False), (25, True), (-1, True)])
def test_is_square_odd_prime(q5, value, expected):
    """Testa quadrados em Q5."""
    assert is_square(q5.scalar(value)) is expected


@pytest.mark.parametrize('value, expected', [(17, True), (3, False), (-7, True), (2, False), (4, True)])
def test_is_square_dyadic(q2, value, expected):
    """Testa quadrados em Q2 (u ≡ 1 mod 8)."""
    assert is_square(q2.scalar(value)) is expected


def test_is_square_in_ramified_extension(sqrt5):
    """Testa que 5 vira quadrado em Q5(√5) e 2 continua não quadrado."""
    tower = sqrt5.tower
    assert is_square(tower.scalar(5))
    assert not is_square(tower.scalar(2))
    assert not is_square(tower.y())


def test_norms_in_tame_extension(sqrt5):
    """Testa normas de Q5(√5): -5 é norma, 2 não é."""
    tower = sqrt5.tower
    assert is_norm(tower.scalar(-5), sqrt5)
    assert not is_norm(tower.scalar(2), sqrt5)
    assert is_norm(tower.scalar(-1), sqrt5)
    assert reciprocity_symbol(tower.scalar(2), sqrt5) == STAR
    assert reciprocity_symbol(tower.scalar(4), sqrt5) == IDENTITY


def test_norms_in_unramified_extension(unram5):
    """Testa que na não ramificada a norma é decidida pela paridade da valorização."""
    tower = unram5.tower
    assert not is_norm(tower.scalar(5), unram5)
    assert is_norm(tower.scalar(25), unram5)
    assert is_norm(tower.scalar(2), unram5)


@pytest.mark.parametrize('name, value, expected', [
    ('Q2(i)', 2, True),
    ('Q2(i)', 5, True),
    ('Q2(i)', -1, False),
    ('Q2(i)', 3, False),
    ('Q2(sqrt2)', -1, True),
    ('Q2(sqrt2)', 2, True),
    ('Q2(sqrt2)', 3, False),
])
def test_norms_in_wild_extensions(name, value, expected):
    """Testa normas de extensões quadráticas de Q2 contra o símbolo de Hilbert."""
    ext = standard_extension(name)
    assert is_norm(ext.tower.scalar(value), ext) is expected


def test_is_norm_requires_fixed_element(sqrt5):
    """Testa a recusa de elementos fora de F0."""
    with pytest.raises(DomainError):
        is_norm(sqrt5.tower.y(), sqrt5)
    with pytest.raises(DomainError):
        is_norm(sqrt5.tower.zero(), sqrt5)


def test_precision_retry_rebuilds_tower():
    """Testa a única repetição com precisão dobrada."""
    ext = standard_extension('Q2(i)', precision=3)
    with pytest.raises(PrecisionError):
        ext.is_norm(ext.tower.scalar(5))
    assert with_precision_retry(lambda e: e.is_norm(e.tower.scalar(5)), ext)


@pytest.mark.parametrize('name', ['Q5(sqrt5)', 'Q3(sqrt3)', 'Q5-unram2', 'Q2(i)', 'Q2(sqrt2)'])
def test_norm_class_audit_sees_two_classes(name):
    """Testa que F0^×/N(F^×) tem exatamente duas classes e é multiplicativo."""
    ext = standard_extension(name)
    report = norm_class_audit(ext, norm_class_representatives(ext))
    assert report.classes_seen == 2
    assert report.multiplicative
    assert report.passed


def test_random_fixed_elements_are_fixed(zeta5):
    """Testa os sorteios no corpo fixo."""
    rng = np.random.default_rng(42)
    for _ in range(5):
        x = zeta5.random_fixed_element(rng)
        assert zeta5.involution.is_fixed(x)
        assert not x.is_zero


def test_norm_of_random_element_is_norm(sqrt5):
    """Testa que N(z) é sempre norma."""
    rng = np.random.default_rng(7)
    for _ in range(5):
        z = sqrt5.random_element(rng)
        assert sqrt5.is_norm(sqrt5.norm(z))

import pytest

from cmhk.padic import PadicTower, standard_extension


@pytest.fixture
def sqrt5():
    """Q5(√5)/Q5 com σ(√5) = -√5."""
    return standard_extension('Q5(sqrt5)')


@pytest.fixture
def unram5():
    """Quadrática não ramificada sobre Q5."""
    return standard_extension('Q5-unram2')


@pytest.fixture
def zeta5():
    """Q2(ζ5)/Q2(√5): quártica não ramificada com ζ ↦ ζ^4."""
    return standard_extension('Q2(zeta5)/Q2(sqrt5)')


@pytest.fixture
def q5():
    """Q5 como torre trivial."""
    return PadicTower(5, 1, [1, -1], [[1], [-5]])


@pytest.fixture
def q2():
    """Q2 como torre trivial."""
    return PadicTower(2, 1, [1, -1], [[1], [-2]])

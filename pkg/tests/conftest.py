from fractions import Fraction as F

import pytest

from littleq import CType, Family, Params

Q, A, B = F(1, 2), F(1, 3), F(1, 16)


@pytest.fixture(scope="session")
def pj():
    """Default type II little q-Jacobi point (dmax=2, strict range)."""
    return Params(Family.LQ_JACOBI, Q, A, B, CType.TYPE_II, dmax=2)


@pytest.fixture(scope="session")
def pl():
    """Default type II little q-Laguerre point."""
    return Params(Family.LQ_LAGUERRE, Q, A, 0, CType.TYPE_II, dmax=2)


@pytest.fixture(scope="session")
def pj_deep():
    """Little q-Jacobi point with b small enough for indices up to 6."""
    return Params(Family.LQ_JACOBI, Q, A, F(1, 200), CType.TYPE_II, dmax=6)


@pytest.fixture(scope="session")
def pji():
    """Type I little q-Jacobi point (a < q^3)."""
    return Params(Family.LQ_JACOBI, Q, F(1, 10), B, CType.TYPE_I, dmax=2)


@pytest.fixture(scope="session")
def pli():
    """Type I little q-Laguerre point."""
    return Params(Family.LQ_LAGUERRE, Q, F(1, 10), 0, CType.TYPE_I, dmax=2)

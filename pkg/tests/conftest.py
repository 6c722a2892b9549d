import pytest

from phaselab.fockspace import Boundary, Window


@pytest.fixture
def open_window():
    return Window(-4, 3, Boundary.OPEN)


@pytest.fixture
def cyclic_window():
    return Window.symmetric(7, Boundary.CYCLIC)

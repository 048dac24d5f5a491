import pytest

from albertalg.workspace import builtin_workspace


@pytest.fixture(scope="session")
def ws():
    return builtin_workspace()


@pytest.fixture(scope="session")
def jm(ws):
    """First construction over 3x3 rational matrices, mu = 2."""
    return ws.albert["JM"]


@pytest.fixture(scope="session")
def jd(ws):
    """First construction over the cyclic division candidate, mu = 3."""
    return ws.albert["JD"]


@pytest.fixture(scope="session")
def j2(ws):
    """Second construction over 3x3 matrices over Q(i)."""
    return ws.albert["J2"]


@pytest.fixture(scope="session")
def jr(ws):
    """Reduced split H3."""
    return ws.albert["JR"]


@pytest.fixture(scope="session")
def jrc(ws):
    """Reduced H3 over the (-1,-1,-1) octonions."""
    return ws.albert["JRC"]

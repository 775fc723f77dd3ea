import pytest

from ratcurve.param import param_from_strings


@pytest.fixture(scope="session")
def circle():
    return param_from_strings(["t0^2+t1^2", "2*t0*t1", "t1^2-t0^2"])


@pytest.fixture(scope="session")
def gerono():
    return param_from_strings(["(t0^2+t1^2)^2", "t1^4-t0^4", "2*t0*t1*(t1^2-t0^2)"])


@pytest.fixture(scope="session")
def line():
    return param_from_strings(["t0", "t1", "0"])


@pytest.fixture(scope="session")
def parabola():
    return param_from_strings(["t0^2", "t0*t1", "t1^2"])

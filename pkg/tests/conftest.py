"""
Shared fixtures for the branchlab test-suite
"""
import pytest

from branchlab.cli.params import ParameterRequest, resolve_parameter
from branchlab.config import settings
from branchlab.sympair.pair import build_pair


@pytest.fixture
def e6f4():
    return build_pair("e6f4")


@pytest.fixture
def sl2diag():
    return build_pair("sl2diag")


@pytest.fixture
def su11_self():
    return build_pair("su11_self")


@pytest.fixture
def spin_m2():
    return build_pair("spin2m2", m=2)


@pytest.fixture
def sun1_n2():
    return build_pair("sun1_un11", n=2)


@pytest.fixture
def diag_ds(sl2diag):
    """Discrete series of the diagonal pair with scalar K-type (2, 3)"""
    return resolve_parameter(sl2diag, ParameterRequest(values={"lam": 2, "lam2": 3}))


@pytest.fixture
def no_log_file(monkeypatch):
    monkeypatch.setattr(settings, "log_file", "")

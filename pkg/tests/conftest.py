import pytest

from designcodes.field import FieldCtx


@pytest.fixture(scope="session")
def gf2():
    return FieldCtx.of(2)


@pytest.fixture(scope="session")
def gf4():
    return FieldCtx.of(4)

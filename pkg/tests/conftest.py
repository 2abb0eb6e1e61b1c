import pytest

import helpers


@pytest.fixture
def path3():
    return helpers.path3()


@pytest.fixture
def claw4():
    return helpers.claw4()


@pytest.fixture
def nest3():
    return helpers.nest3()

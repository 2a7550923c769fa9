import pytest

import property_suites


@pytest.mark.parametrize("name", list(property_suites.SUITES))
def test_suite(name):
    res = property_suites.SUITES[name]()
    assert res.checked > 0
    assert res.passed, "\n".join(map(str, res.failures))

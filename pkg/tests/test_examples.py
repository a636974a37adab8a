import pytest

from worked_examples import CATALOG


@pytest.mark.parametrize("name", list(CATALOG))
def test_worked_example(name):
    for actual, expected in CATALOG[name]():
        assert actual == expected, f"{actual} != {expected}"

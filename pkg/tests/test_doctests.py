"""Run the worked examples embedded in module docstrings."""

import doctest
import importlib

import pytest

MODULES = [
    "mmp132.perms",
    "mmp132.series",
    "mmp132.oracle",
    "mmp132.recursions",
    "mmp132.formulas",
]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    module = importlib.import_module(name)
    failures, attempted = doctest.testmod(module)
    assert attempted > 0, f"{name} lost its doctests"
    assert failures == 0

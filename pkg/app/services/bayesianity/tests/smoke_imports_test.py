import importlib

import pytest


@pytest.mark.parametrize(
    "module",
    [
        "app.services.bayesianity",
        "app.services.bayesianity.application",
        "app.services.bayesianity.config",
        "app.services.bayesianity.domain",
        "app.services.bayesianity.integration",
        "app.services.bayesianity.schemas",
    ],
)
def test_modules_import(module: str) -> None:
    assert importlib.import_module(module) is not None

import warnings

import pytest

from veronese import VeroneseParams


def make_params(n: int, p: int, h: int) -> VeroneseParams:
    # n < 3 warns by design; tests that sweep small n silence it
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return VeroneseParams(n, p, h)


@pytest.fixture
def params321() -> VeroneseParams:
    return VeroneseParams(3, 2, 1)


@pytest.fixture
def params331() -> VeroneseParams:
    return VeroneseParams(3, 3, 1)


@pytest.fixture
def params322() -> VeroneseParams:
    return VeroneseParams(3, 2, 2)

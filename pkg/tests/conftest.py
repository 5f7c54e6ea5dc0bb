import os

import pytest

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


def fixture_text(name: str) -> str:
    with open(fixture_path(name), "r", encoding="ascii") as fh:
        return fh.read()


@pytest.fixture
def fixtures():
    return fixture_text

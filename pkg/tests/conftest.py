import json
from pathlib import Path

import pytest

from mal2sign import load_resources

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def resources():
    return load_resources()


@pytest.fixture(scope="session")
def rules(resources):
    return resources.rules


@pytest.fixture(scope="session")
def lexicon(resources):
    return resources.lexicon


@pytest.fixture(scope="session")
def golden():
    return json.loads((DATA / "golden.json").read_text(encoding="utf-8"))["cases"]

import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))  # for synth helpers

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def poem_wav():
    return FIXTURES / "poem.wav"


@pytest.fixture(scope="session")
def poem_align():
    return FIXTURES / "poem.align.json"


@pytest.fixture(scope="session")
def tone400_wav():
    return FIXTURES / "tone400.wav"


@pytest.fixture(scope="session")
def tone400_align():
    return FIXTURES / "tone400.align.json"

import pytest

from kagaskit.classify import default_spell_lexicon
from kagaskit.pos import default_tagger
from kagaskit.session import Session


@pytest.fixture(scope="session")
def tagger():
    return default_tagger()


@pytest.fixture(scope="session")
def spell():
    return default_spell_lexicon()


@pytest.fixture(scope="session")
def session():
    return Session()

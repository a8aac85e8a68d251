import gzip
from pathlib import Path

import pytest
from hypothesis import settings

from orbithop.keying import example_key

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def key():
    return example_key()


@pytest.fixture(scope="session")
def english_text():
    # Alice's Adventures in Wonderland + Paradise Lost (Project Gutenberg
    # plain text, both public domain), as shipped in the Canterbury corpus.
    with gzip.open(DATA / "english_pd.txt.gz", "rb") as fh:
        return fh.read()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])

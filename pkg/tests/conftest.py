from pathlib import Path

import pytest

from catchrec import parse
from catchrec.corpus import Candidate, LocalOrigin

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def listing1():
    return parse((FIXTURES / "listing1.java").read_text())


@pytest.fixture(scope="session")
def listing2():
    return parse((FIXTURES / "listing2.java").read_text())


@pytest.fixture(scope="session")
def rank_pool() -> list[Candidate]:
    return [
        Candidate.from_origin(LocalOrigin(path.name), path.read_text())
        for path in sorted((FIXTURES / "rankpool").glob("*.java"))
    ]


@pytest.fixture(scope="session")
def pool_names(rank_pool) -> dict[str, str]:
    return {c.id: c.origin.path for c in rank_pool}

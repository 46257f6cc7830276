import pytest

from succinctbits import BlockBitVec, FastBitVec, RRRBitVec, default_tables


@pytest.fixture(scope="session")
def tables():
    return default_tables()


@pytest.fixture(scope="session")
def build_all(tables):
    def _build(raw):
        return (
            ("BlockBitVec", BlockBitVec(raw)),
            ("FastBitVec", FastBitVec(raw)),
            ("RRRBitVec", RRRBitVec(raw, tables)),
        )

    return _build

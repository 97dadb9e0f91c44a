import pytest

from hurzeta import BernoulliTable


@pytest.fixture(scope="session")
def btable():
    """One shared exact-Bernoulli table, large enough for every consumer.

    The sinh-kernel series at |c| close to 3 needs ~175 terms, i.e.
    B_350; building the table is quadratic in the index, so do it once.
    """
    return BernoulliTable.build(380)

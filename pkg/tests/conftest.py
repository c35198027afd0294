import pytest

from hooklab.shapes import strict_partitions_upto, subpartitions


def pairs_upto(n):
    """All (lam, mu) with mu contained in lam and |lam| <= n."""
    return [(lam, mu) for lam in strict_partitions_upto(n) for mu in subpartitions(lam)]


@pytest.fixture(scope="session")
def pairs8():
    return pairs_upto(8)

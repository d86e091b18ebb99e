import pytest

from ordermaps import Family
from ordermaps.oracle import tabulate_counts


@pytest.fixture(scope="session")
def oracle_tables():
    """Memoized brute-force count tables, shared across the whole run."""
    cache = {}

    def get(family, n):
        key = (Family(family), n)
        if key not in cache:
            cache[key] = tabulate_counts(*key)
        return cache[key]

    return get

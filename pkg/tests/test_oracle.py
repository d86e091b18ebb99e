import pytest

from ordermaps import Family, classify
from ordermaps.oracle import enumerate_family, tabulate_counts


def test_single_full_map_on_one_point():
    assert len(list(enumerate_family(Family.O, 1))) == 1


def test_poi_on_one_point_is_null_and_identity():
    members = list(enumerate_family(Family.POI, 1))
    assert [m.mapping for m in members] == [(), ((1, 1),)]


def test_po2_has_eight_members():
    # of the 9 partial maps on {1,2} only the order-reversing one drops out
    members = list(enumerate_family(Family.PO, 2))
    assert len(members) == 8
    assert ((1, 2), (2, 1)) not in {m.mapping for m in members}


@pytest.mark.parametrize(
    "family,n,expected_entries,expected_total",
    [
        (Family.PO, 2, {(0, 0): 1, (1, 1): 4, (2, 1): 2, (2, 2): 1}, 8),
        (Family.POI, 2, {(0, 0): 1, (1, 1): 4, (2, 2): 1}, 6),
        (Family.O, 3, {(3, 1): 3, (3, 2): 6, (3, 3): 1}, 10),
    ],
)
def test_tabulate_counts_small_cases(family, n, expected_entries, expected_total):
    table = tabulate_counts(family, n)
    assert table.entries == expected_entries
    assert table.total == expected_total


@pytest.mark.parametrize("n", range(1, 6))
def test_ambient_universe_size(n, oracle_tables):
    assert oracle_tables(Family.PT, n).total == (n + 1) ** n


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_stream_has_no_duplicates_and_only_members(family, n):
    seen = set()
    for alpha in enumerate_family(family, n):
        assert alpha not in seen
        seen.add(alpha)
        assert family in classify(alpha)


def test_count_table_marginals():
    table = tabulate_counts(Family.PO, 2)
    assert table.stratum_total(2) == 3
    assert table.cell(2, 1) == 2
    assert table.image_size_counts(include_null=False) == {1: 6, 2: 1}
    assert table.image_size_counts(include_null=True) == {0: 1, 1: 6, 2: 1}
    assert table.conditional_image_counts(2) == {1: 2, 2: 1}


def test_chain_size_validated():
    with pytest.raises(ValueError):
        list(enumerate_family(Family.PO, 0))

"""Exhaustive enumeration oracle.

Ground truth for every closed form in this package: generate all (n+1)^n
partial maps of {1..n} (a length-n word over {0..n} with 0 meaning
"undefined") and filter by family membership.  Nothing here touches a
binomial coefficient, so agreement with the counting and distribution
modules is a real check, not a tautology.

Practical depth: n <= 6 (823543 candidate words).  The word iteration
order is exactly the canonical order of family PT; the order-preserving
families are sorted into their stratified canonical order after filtering.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .ranking import canonical_sort_key
from .transform import Family, PartialTransformation, classify


@dataclass(frozen=True)
class CountTable:
    """Exact member counts binned by (domain size, image size)."""

    n: int
    family: Family
    entries: dict[tuple[int, int], int]

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def cell(self, r: int, k: int) -> int:
        return self.entries.get((r, k), 0)

    def stratum_total(self, r: int) -> int:
        return sum(c for (rr, _), c in self.entries.items() if rr == r)

    def image_size_counts(self, include_null: bool = True) -> dict[int, int]:
        """Marginal histogram over image sizes, optionally dropping the null map."""
        hist: dict[int, int] = {}
        for (r, k), c in self.entries.items():
            if r == 0 and not include_null:
                continue
            hist[k] = hist.get(k, 0) + c
        return hist

    def conditional_image_counts(self, r: int) -> dict[int, int]:
        return {k: c for (rr, k), c in self.entries.items() if rr == r}


def _candidates(n: int) -> Iterator[PartialTransformation]:
    for word in product(range(n + 1), repeat=n):
        mapping = tuple((i + 1, y) for i, y in enumerate(word) if y)
        yield PartialTransformation(n, mapping)


def enumerate_family(family: Family, n: int) -> Iterator[PartialTransformation]:
    """Every member of the family on {1..n}, once each, in canonical order."""
    fam = Family(family)
    if n < 1:
        raise ValueError(f"chain size must be at least 1, got {n}")
    if fam is Family.PT:
        yield from _candidates(n)
        return
    members = [alpha for alpha in _candidates(n) if fam in classify(alpha)]
    members.sort(key=canonical_sort_key)
    yield from members


def tabulate_counts(family: Family, n: int) -> CountTable:
    """Bin the enumeration stream by (domain size, image size)."""
    counter: Counter[tuple[int, int]] = Counter()
    for alpha in enumerate_family(family, n):
        counter[(alpha.domain_size, alpha.image_size)] += 1
    return CountTable(n=n, family=Family(family), entries=dict(counter))

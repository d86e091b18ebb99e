"""Exact-uniform random sampling via unranking, plus Monte Carlo reports.

Randomness comes from random.Random, i.e. the Mersenne Twister (MT19937),
seeded with a caller-supplied integer.  Indexes below a bound M are drawn
by rejection on getrandbits(M.bit_length()), never by modulo, so each
family member is exactly equally likely.  Identical seeds give identical
streams.  Parallel callers must derive worker seeds as seed XOR
worker_index and concatenate outputs in worker order; sample_chunked
implements that rule.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .counting import count_family
from .distributions import DistributionTable, image_size_pmf, resolve_include_null
from .ranking import unrank
from .transform import Family, PartialTransformation


def _uniform_below(rng: random.Random, bound: int) -> int:
    # rejection on the top range keeps the draw exactly uniform
    bits = bound.bit_length()
    while True:
        value = rng.getrandbits(bits)
        if value < bound:
            return value


def sample_uniform(
    family: Family,
    n: int,
    seed: int,
    count: int,
    include_null: bool | None = None,
) -> Iterator[PartialTransformation]:
    """Independent exact-uniform draws from the family.

    The sample space follows the family's null convention (PO excludes the
    null map, POI and PT include it) unless include_null overrides it.
    """
    fam = Family(family)
    if count < 0:
        raise ValueError(f"sample count must be nonnegative, got {count}")
    withnull = resolve_include_null(fam, include_null)
    total = count_family(fam, n, include_null=True)
    offset = 0 if (withnull or fam is Family.O) else 1
    size = total - offset
    if size <= 0:
        raise ValueError("empty sample space")
    rng = random.Random(seed)
    for _ in range(count):
        yield unrank(fam, n, offset + _uniform_below(rng, size))


def _chunk_sizes(count: int, jobs: int) -> list[int]:
    base, extra = divmod(count, jobs)
    return [base + (1 if i < extra else 0) for i in range(jobs)]


def sample_chunked(
    family: Family,
    n: int,
    seed: int,
    count: int,
    jobs: int = 1,
    include_null: bool | None = None,
) -> Iterator[PartialTransformation]:
    """Fan the draw out over `jobs` worker streams, merged in worker order.

    Worker i is seeded with seed XOR i, so the output is deterministic for
    fixed (seed, count, jobs); jobs=1 reproduces sample_uniform exactly.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    for worker, chunk in enumerate(_chunk_sizes(count, jobs)):
        yield from sample_uniform(family, n, seed ^ worker, chunk, include_null)


@dataclass(frozen=True)
class SampleReport:
    """Empirical image-size frequencies against the exact distribution."""

    family: Family
    n: int
    sample_count: int
    seed: int
    include_null: bool
    empirical: dict[int, int]
    exact: DistributionTable
    tv_distance: Fraction


def total_variation(empirical: dict[int, int], sample_count: int, exact: DistributionTable) -> Fraction:
    """Half the L1 distance between the empirical frequencies and the exact pmf."""
    points = set(empirical) | {k for k, _ in exact.support}
    gap = sum(
        (abs(Fraction(empirical.get(k, 0), sample_count) - exact.probability(k)) for k in points),
        Fraction(0),
    )
    return gap / 2


def monte_carlo_report(
    family: Family,
    n: int,
    seed: int,
    count: int,
    include_null: bool | None = None,
) -> SampleReport:
    """Sample, histogram the image sizes, and attach the exact distribution."""
    fam = Family(family)
    if count < 1:
        raise ValueError(f"report needs at least 1 sample, got {count}")
    withnull = resolve_include_null(fam, include_null)
    exact = image_size_pmf(fam, n, include_null=withnull)
    empirical: dict[int, int] = {}
    for alpha in sample_uniform(fam, n, seed, count, include_null=withnull):
        k = alpha.image_size
        empirical[k] = empirical.get(k, 0) + 1
    return SampleReport(
        family=fam,
        n=n,
        sample_count=count,
        seed=seed,
        include_null=withnull,
        empirical=dict(sorted(empirical.items())),
        exact=exact,
        tv_distance=total_variation(empirical, count, exact),
    )

"""Exact image-size distributions and moments.

Everything here is computed in rational arithmetic (fractions.Fraction);
floats appear only in display code elsewhere.  Conventions follow the
probabilistic model of each family: for PO and O the null transformation
is excluded from the sample space, for POI it is included.  Both choices
can be overridden with include_null.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import binomial, count_family, count_stratum
from .transform import Family

# Per-family default for whether the null map belongs to the sample space.
NULL_CONVENTION = {
    Family.PT: True,
    Family.PO: False,
    Family.O: False,  # vacuous: O_n has no null element
    Family.POI: True,
}


def resolve_include_null(family: Family, include_null: bool | None) -> bool:
    return NULL_CONVENTION[family] if include_null is None else include_null


@dataclass(frozen=True)
class HypergeometricParams:
    """Draw `draws` items without replacement from `population` items of
    which `successes` are marked; the distribution counts marked draws."""

    population: int
    successes: int
    draws: int

    def __post_init__(self) -> None:
        if self.population < 0:
            raise ValueError("population must be nonnegative")
        if not 0 <= self.successes <= self.population:
            raise ValueError("successes must lie in 0..population")
        if not 0 <= self.draws <= self.population:
            raise ValueError("draws must lie in 0..population")


@dataclass(frozen=True)
class DistributionTable:
    """An exact pmf over image sizes.

    support holds (k, probability) pairs sorted by k with positive
    probabilities summing to exactly 1; normalizer is the integer
    denominator the table was built from.
    """

    support: tuple[tuple[int, Fraction], ...]
    normalizer: int
    label: str

    def __post_init__(self) -> None:
        ks = [k for k, _ in self.support]
        if ks != sorted(set(ks)):
            raise ValueError("support points must be distinct and ascending")
        if any(p < 0 for _, p in self.support):
            raise ValueError("negative probability")
        if sum((p for _, p in self.support), Fraction(0)) != 1:
            raise ValueError("probabilities must sum to exactly 1")

    def probability(self, k: int) -> Fraction:
        for point, p in self.support:
            if point == k:
                return p
        return Fraction(0)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.support)

    def mean(self) -> Fraction:
        return sum((k * p for k, p in self.support), Fraction(0))

    def variance(self) -> Fraction:
        mu = self.mean()
        return sum((k * k * p for k, p in self.support), Fraction(0)) - mu * mu

    def same_distribution(self, other: "DistributionTable") -> bool:
        """Pointwise equality of the pmfs, ignoring normalizer and label."""
        return self.support == other.support


def _table(points, normalizer: int, label: str) -> DistributionTable:
    kept = tuple((k, p) for k, p in points if p > 0)
    return DistributionTable(support=kept, normalizer=normalizer, label=label)


def hypergeometric_pmf(params: HypergeometricParams) -> DistributionTable:
    """Exact hypergeometric table over its natural support."""
    big_n, big_k, t = params.population, params.successes, params.draws
    if big_n == 0:
        return _table([(0, Fraction(1))], 1, "hypergeometric(0,0,0)")
    denom = binomial(big_n, t)
    lo = max(0, t - (big_n - big_k))
    hi = min(big_k, t)
    points = [
        (k, Fraction(binomial(big_k, k) * binomial(big_n - big_k, t - k), denom))
        for k in range(lo, hi + 1)
    ]
    return _table(points, denom, f"hypergeometric({big_n},{big_k},{t})")


def hypergeometric_moments(params: HypergeometricParams) -> tuple[Fraction, Fraction]:
    """Mean K t / N and the standard finite-population variance."""
    big_n, big_k, t = params.population, params.successes, params.draws
    if big_n == 0:
        return Fraction(0), Fraction(0)
    mean = Fraction(big_k * t, big_n)
    if big_n == 1:
        return mean, Fraction(0)
    var = Fraction(big_k * t * (big_n - big_k) * (big_n - t), big_n * big_n * (big_n - 1))
    return mean, var


def degenerate_pmf(point: int, normalizer: int = 1, label: str = "") -> DistributionTable:
    return DistributionTable(
        support=((point, Fraction(1)),),
        normalizer=normalizer,
        label=label or f"degenerate({point})",
    )


def _check_r(family: Family, n: int, r: int) -> None:
    if family is Family.PO and not 1 <= r <= n:
        raise ValueError(f"domain size {r} outside 1..{n} for family 'po'")
    if family is Family.POI and not 0 <= r <= n:
        raise ValueError(f"domain size {r} outside 0..{n} for family 'poi'")
    if family is Family.O and r != n:
        raise ValueError("family 'o' conditions only on full domain, r = n")


def conditional_pmf(family: Family, n: int, r: int) -> DistributionTable:
    """Distribution of the image size given domain size r.

    PO and O strata carry the table C(n,k) C(r-1,k-1) / C(n+r-1,r) over
    k = 1..r; a POI stratum is degenerate at r (injectivity forces k = r).
    """
    if n < 1:
        raise ValueError(f"chain size must be at least 1, got {n}")
    _check_r(family, n, r)
    if family is Family.POI:
        return degenerate_pmf(r, count_stratum(family, n, r), f"poi(n={n}): im size | dom size={r}")
    if family in (Family.PO, Family.O):
        denom = binomial(n + r - 1, r)
        points = [
            (k, Fraction(binomial(n, k) * binomial(r - 1, k - 1), denom))
            for k in range(1, r + 1)
        ]
        return _table(points, denom, f"{family.value}(n={n}): im size | dom size={r}")
    raise ValueError("no conditional distribution for family 'pt'")


def conditional_moments(family: Family, n: int, r: int) -> tuple[Fraction, Fraction]:
    """Mean and variance of the image size given domain size r."""
    if n < 1:
        raise ValueError(f"chain size must be at least 1, got {n}")
    _check_r(family, n, r)
    if family is Family.POI:
        return Fraction(r), Fraction(0)
    if family in (Family.PO, Family.O):
        mean = Fraction(n * r, n + r - 1)
        if n + r == 2:  # single-point distribution at n = r = 1
            return mean, Fraction(0)
        var = Fraction(n * r * (n - 1) * (r - 1), (n + r - 1) ** 2 * (n + r - 2))
        return mean, var
    raise ValueError("no conditional distribution for family 'pt'")


def image_size_pmf(family: Family, n: int, include_null: bool | None = None) -> DistributionTable:
    """Distribution of the image size over the whole family.

    PO: P(k) = C(n,k) sum_r C(n,r) C(r-1,k-1) / S with S the number of
    non-null members.  POI: P(k) = C(n,k)^2 / C(2n,n) over k = 0..n.
    O: the r = n conditional table.
    """
    if n < 1:
        raise ValueError(f"chain size must be at least 1, got {n}")
    if family is Family.PT:
        raise ValueError("no image-size distribution for family 'pt'")
    withnull = resolve_include_null(family, include_null)
    if family is Family.O:
        return conditional_pmf(Family.O, n, n)
    if family is Family.PO:
        s = count_family(Family.PO, n, include_null=False)
        denom = s + 1 if withnull else s
        points = [(0, Fraction(1, denom))] if withnull else []
        for k in range(1, n + 1):
            num = binomial(n, k) * sum(
                binomial(n, r) * binomial(r - 1, k - 1) for r in range(1, n + 1)
            )
            points.append((k, Fraction(num, denom)))
        return _table(points, denom, f"po(n={n}): im size")
    # POI
    total = binomial(2 * n, n)
    if withnull:
        denom = total
        points = [(k, Fraction(binomial(n, k) ** 2, denom)) for k in range(0, n + 1)]
    else:
        denom = total - 1
        points = [(k, Fraction(binomial(n, k) ** 2, denom)) for k in range(1, n + 1)]
    return _table(points, denom, f"poi(n={n}): im size")


def image_size_moments(family: Family, n: int, include_null: bool | None = None) -> tuple[Fraction, Fraction]:
    """Closed-form mean and variance of the image size over the whole family."""
    if n < 1:
        raise ValueError(f"chain size must be at least 1, got {n}")
    if family is Family.PT:
        raise ValueError("no image-size distribution for family 'pt'")
    withnull = resolve_include_null(family, include_null)
    if family is Family.O:
        mean = Fraction(n * n, 2 * n - 1)
        var = Fraction((n - 1) * n * n, 2 * (2 * n - 1) ** 2)
        return mean, var
    if family is Family.PO:
        s = count_family(Family.PO, n, include_null=False)
        first = sum(binomial(n, r) * binomial(n + r - 2, r - 1) for r in range(1, n + 1))
        mean = Fraction(n * first, s)
        second = 0
        for r in range(1, n + 1):
            bracket = binomial(n + r - 2, r - 1)
            if n >= 2:  # (n-1) prefactor kills the term before the index goes negative
                bracket += (n - 1) * binomial(n + r - 3, r - 2)
            second += binomial(n, r) * bracket
        mean_sq = Fraction(n * second, s)
        if withnull:
            # adding the null atom at 0 rescales both raw moments by S/(S+1)
            mean = mean * Fraction(s, s + 1)
            mean_sq = mean_sq * Fraction(s, s + 1)
        return mean, mean_sq - mean * mean
    # POI
    mean = Fraction(n, 2)
    var = Fraction(n * n, 4 * (2 * n - 1))
    if not withnull:
        total = binomial(2 * n, n)
        scale = Fraction(total, total - 1)
        mean_sq = (var + mean * mean) * scale
        mean = mean * scale
        var = mean_sq - mean * mean
    return mean, var


def mixture_pmf(conditionals: list[DistributionTable], weights: list[Fraction]) -> DistributionTable:
    """Total-probability composition: sum_i weights[i] * conditionals[i].

    Weights must sum to exactly 1.  Used as an independent route to the
    unconditional tables: conditionals per domain size, weighted by the
    stratum counts over the family total.
    """
    if len(conditionals) != len(weights):
        raise ValueError("conditionals and weights must have equal length")
    if sum(weights, Fraction(0)) != 1:
        raise ValueError("weights must sum to exactly 1")
    acc: dict[int, Fraction] = {}
    for table, w in zip(conditionals, weights):
        for k, p in table.support:
            acc[k] = acc.get(k, Fraction(0)) + w * p
    points = sorted((k, p) for k, p in acc.items() if p > 0)
    denom = math.lcm(*(p.denominator for _, p in points)) if points else 1
    return _table(points, denom, "mixture")

"""Cross-checks between the enumeration oracle and the closed forms.

Each check compares a brute-force quantity with its closed-form or
rational-arithmetic counterpart, exactly.  The first mismatch is reported
with enough detail to reproduce it.
"""

from dataclasses import dataclass
from fractions import Fraction

from .counting import count_cell, count_family, count_stratum
from .distributions import (
    conditional_moments,
    conditional_pmf,
    image_size_moments,
    image_size_pmf,
    mixture_pmf,
    resolve_include_null,
)
from .oracle import tabulate_counts
from .transform import Family

BRUTE_FORCE_CAP = 6


@dataclass(frozen=True)
class CheckResult:
    name: str
    family: Family
    n: int
    ok: bool
    detail: str = ""


def _stratum_range(family: Family, n: int) -> range:
    return range(n, n + 1) if family is Family.O else range(0, n + 1)


def cross_check(family: Family, n: int) -> list[CheckResult]:
    """All oracle-versus-closed-form checks for one family at one chain size."""
    fam = Family(family)
    results: list[CheckResult] = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        results.append(CheckResult(name=name, family=fam, n=n, ok=ok, detail=detail))

    table = tabulate_counts(fam, n)

    for include in (True, False):
        closed = count_family(fam, n, include_null=include)
        brute = table.total - (0 if include or fam is Family.O else 1)
        record(
            f"total include_null={include}",
            closed == brute,
            f"closed {closed} vs brute {brute}",
        )

    if fam is Family.PT:
        return results  # only the cardinality has a closed form

    for r in _stratum_range(fam, n):
        closed = count_stratum(fam, n, r)
        brute = table.stratum_total(r)
        record(f"stratum r={r}", closed == brute, f"closed {closed} vs brute {brute}")
        for k in range(0, r + 1):
            closed = count_cell(fam, n, r, k)
            brute = table.cell(r, k)
            record(f"cell r={r} k={k}", closed == brute, f"closed {closed} vs brute {brute}")

    lo = 1 if fam in (Family.PO, Family.O) else 0
    for r in range(n, n + 1) if fam is Family.O else range(lo, n + 1):
        pmf = conditional_pmf(fam, n, r)
        hist = table.conditional_image_counts(r)
        total = sum(hist.values())
        brute_pmf = {k: Fraction(c, total) for k, c in hist.items()}
        record(
            f"conditional pmf r={r}",
            pmf.as_dict() == brute_pmf,
            f"closed {pmf.as_dict()} vs brute {brute_pmf}",
        )
        mean, var = conditional_moments(fam, n, r)
        record(
            f"conditional moments r={r}",
            (mean, var) == (pmf.mean(), pmf.variance()),
            f"closed ({mean}, {var}) vs summed ({pmf.mean()}, {pmf.variance()})",
        )

    include = resolve_include_null(fam, None)
    pmf = image_size_pmf(fam, n)
    hist = table.image_size_counts(include_null=include)
    total = sum(hist.values())
    brute_pmf = {k: Fraction(c, total) for k, c in hist.items()}
    record(
        "image-size pmf",
        pmf.as_dict() == brute_pmf,
        f"closed {pmf.as_dict()} vs brute {brute_pmf}",
    )
    mean, var = image_size_moments(fam, n)
    record(
        "image-size moments",
        (mean, var) == (pmf.mean(), pmf.variance()),
        f"closed ({mean}, {var}) vs summed ({pmf.mean()}, {pmf.variance()})",
    )

    strata = [r for r in _stratum_range(fam, n) if include or r >= 1]
    denom = count_family(fam, n, include_null=include)
    weights = [Fraction(count_stratum(fam, n, r), denom) for r in strata]
    mixed = mixture_pmf([conditional_pmf(fam, n, r) for r in strata], weights)
    record(
        "total-probability mixture",
        mixed.same_distribution(pmf),
        f"mixture {mixed.as_dict()} vs closed {pmf.as_dict()}",
    )

    return results


def run_verification(family: Family, max_n: int, max_brute: int = BRUTE_FORCE_CAP) -> list[CheckResult]:
    """Run cross_check for n = 1..min(max_n, max_brute), stopping at the first failure."""
    results: list[CheckResult] = []
    for n in range(1, min(max_n, max_brute) + 1):
        for result in cross_check(family, n):
            results.append(result)
            if not result.ok:
                return results
    return results

"""Closed-form counting with exact integers.

Counts are stratified by r = |dom| and k = |im|.  For a fixed domain of
size r, an order-preserving map is determined by its image (a k-subset of
the chain) together with the set of greatest preimages of the image points
(a k-subset of the domain forced to contain its maximum), which gives
C(n,k) * C(r-1,k-1) maps.  The injective family forces k = r, so a stratum
holds C(n,r)^2 maps, and the full family is the single stratum r = n.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from math import comb

from .transform import Family


def binomial(a: int, b: int) -> int:
    """C(a, b), extended with value 0 whenever b < 0 or b > a.

    The zero extension lets stratified sums run over a rectangular index
    grid without edge cases.  Negative a is rejected.
    """
    if a < 0:
        raise ValueError(f"binomial needs a natural upper index, got {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"chain size must be at least 1, got {n}")


def count_stratum(family: Family, n: int, r: int) -> int:
    """Number of family members with domain size exactly r."""
    _check_n(n)
    if not 0 <= r <= n:
        raise ValueError(f"domain size {r} outside 0..{n}")
    if family is Family.PO:
        return binomial(n, r) * binomial(n + r - 1, r)
    if family is Family.POI:
        return binomial(n, r) ** 2
    if family is Family.O:
        if r != n:
            raise ValueError("full transformations only populate the stratum r = n")
        return binomial(2 * n - 1, n - 1)
    raise ValueError("no stratified closed form for family 'pt'; use count_family")


def count_cell(family: Family, n: int, r: int, k: int) -> int:
    """Number of family members with domain size r and image size k."""
    _check_n(n)
    if not 0 <= k <= r <= n:
        raise ValueError(f"need 0 <= k <= r <= n, got k={k}, r={r}, n={n}")
    if family is Family.O and r != n:
        raise ValueError("full transformations only populate the stratum r = n")
    if r == 0:
        return 1  # the null transformation
    if family is Family.PO:
        return binomial(n, r) * binomial(n, k) * binomial(r - 1, k - 1)
    if family is Family.POI:
        return binomial(n, r) ** 2 if k == r else 0
    if family is Family.O:
        return binomial(n, k) * binomial(n - 1, k - 1)
    raise ValueError("no stratified closed form for family 'pt'; use count_family")


def count_family(family: Family, n: int, include_null: bool = True) -> int:
    """Total size of the family on {1..n}.

    include_null=False drops the empty transformation (O has none to drop).
    """
    _check_n(n)
    if family is Family.PT:
        total = (n + 1) ** n
        return total if include_null else total - 1
    if family is Family.O:
        return count_stratum(family, n, n)
    start = 0 if include_null else 1
    return sum(count_stratum(family, n, r) for r in range(start, n + 1))


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of a convolution identity, evaluated exactly."""

    identity: int
    params: tuple[tuple[str, int], ...]
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def _need(params: Mapping[str, int], *names: str) -> list[int]:
    missing = [name for name in names if name not in params]
    if missing:
        raise ValueError(f"identity parameters missing: {', '.join(missing)}")
    values = [int(params[name]) for name in names]
    if any(v < 0 for v in values):
        raise ValueError("identity parameters must be natural numbers")
    return values


def verify_identity(ident: int, params: Mapping[str, int]) -> IdentityCheck:
    """Evaluate one of the four convolution identities by direct summation.

    1: sum_k C(a,k) C(b,r-k)        = C(a+b, r)          (Vandermonde)
    2: sum_k C(n,k) C(r-1,k-1)      = C(n+r-1, r)
    3: sum_k k C(n,k) C(r-1,k-1)    = n C(n+r-2, r-1)
    4: sum_k k^2 C(n,k) C(r-1,k-1)  = n(n-1) C(n+r-3, r-2) + n C(n+r-2, r-1)

    Identities 2-4 require r >= 1.  The left side is always the literal sum;
    the right side is the closed form.
    """
    if ident == 1:
        a, b, r = _need(params, "a", "b", "r")
        lhs = sum(binomial(a, k) * binomial(b, r - k) for k in range(r + 1))
        rhs = binomial(a + b, r)
        used = (("a", a), ("b", b), ("r", r))
    elif ident in (2, 3, 4):
        n, r = _need(params, "n", "r")
        if r < 1:
            raise ValueError(f"identity {ident} requires r >= 1, got {r}")
        terms = [binomial(n, k) * binomial(r - 1, k - 1) for k in range(1, r + 1)]
        if ident == 2:
            lhs = sum(terms)
            rhs = binomial(n + r - 1, r)
        elif ident == 3:
            lhs = sum(k * t for k, t in enumerate(terms, start=1))
            # the n prefactor vanishes exactly when n+r-2 could go negative
            rhs = n * binomial(n + r - 2, r - 1) if n >= 1 else 0
        else:
            lhs = sum(k * k * t for k, t in enumerate(terms, start=1))
            # prefactors n(n-1) and n vanish before their upper index goes negative
            quad = n * (n - 1) * binomial(n + r - 3, r - 2) if n >= 2 else 0
            rhs = quad + (n * binomial(n + r - 2, r - 1) if n >= 1 else 0)
        used = (("n", n), ("r", r))
    else:
        raise ValueError(f"unknown identity {ident}; expected 1, 2, 3 or 4")
    return IdentityCheck(identity=ident, params=used, lhs=lhs, rhs=rhs)

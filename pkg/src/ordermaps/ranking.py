"""Canonical total order, pivot decomposition, and rank/unrank bijections.

The order-preserving families are ordered by (|dom|, dom, |im|, im, pivots),
all ascending, subsets compared lexicographically.  Every coordinate ranges
over a set with a closed-form size (C(n,r) domains, then for each k the
C(n,k) images times C(r-1,k-1) pivot sets), so unranking is a mixed-radix
decode with no searching.  The ambient family PT is instead ordered by its
image word read as a base-(n+1) numeral, matching the raw enumeration order.

An order-preserving map is reconstructed from three sets: its domain, its
image {i_1 < ... < i_k}, and its pivot set {p_1 < ... < p_k} where p_j is
the greatest domain point sent to i_j.  Every domain point m with
p_{j-1} < m <= p_j (taking p_0 = 0) is sent to i_j, and the pivot set must
contain max(dom), which is why there are C(r-1, k-1) choices for it.
"""

from bisect import bisect_left
from dataclasses import dataclass

from .counting import binomial, count_family, count_stratum
from .transform import Family, PartialTransformation, classify, null_map


def subset_rank(n: int, subset: tuple[int, ...]) -> int:
    """Lexicographic position of a sorted subset of {1..n} among its size class."""
    k = len(subset)
    prev = 0
    index = 0
    for j, c in enumerate(subset):
        if not prev < c <= n:
            raise ValueError(f"subset must be strictly increasing within 1..{n}")
        for x in range(prev + 1, c):
            index += binomial(n - x, k - j - 1)
        prev = c
    return index


def subset_unrank(n: int, k: int, index: int) -> tuple[int, ...]:
    """Inverse of subset_rank: the index-th k-subset of {1..n} in lex order."""
    if not 0 <= k <= n:
        raise ValueError(f"subset size {k} outside 0..{n}")
    if not 0 <= index < binomial(n, k):
        raise ValueError(f"subset index {index} outside 0..{binomial(n, k) - 1}")
    out = []
    c = 1
    for j in range(k):
        while True:
            block = binomial(n - c, k - j - 1)
            if index < block:
                break
            index -= block
            c += 1
        out.append(c)
        c += 1
    return tuple(out)


@dataclass(frozen=True)
class Decomposition:
    """The (domain, image, pivots) triple determining an order-preserving map."""

    n: int
    dom: tuple[int, ...]
    im: tuple[int, ...]
    pivots: tuple[int, ...]


def _greatest_preimages(alpha: PartialTransformation) -> tuple[int, ...]:
    # greatest domain point per image value, listed by ascending image value
    best: dict[int, int] = {}
    for x, y in alpha.mapping:
        if y not in best or x > best[y]:
            best[y] = x
    return tuple(best[y] for y in sorted(best))


def canonical_sort_key(alpha: PartialTransformation):
    """Key realizing the canonical order of the order-preserving families.

    The trailing raw mapping only breaks ties for maps that are not order
    preserving, where (dom, im, pivots) does not determine the map.
    """
    return (
        alpha.domain_size,
        alpha.domain,
        alpha.image_size,
        alpha.image,
        _greatest_preimages(alpha),
        alpha.mapping,
    )


def decompose(alpha: PartialTransformation) -> Decomposition:
    """Split an order-preserving map into its (dom, im, pivots) triple."""
    if Family.PO not in classify(alpha):
        raise ValueError("decomposition is only defined for order-preserving maps")
    return Decomposition(
        n=alpha.n,
        dom=alpha.domain,
        im=alpha.image,
        pivots=_greatest_preimages(alpha),
    )


def _check_sorted_subset(name: str, values: tuple[int, ...], n: int) -> None:
    prev = 0
    for v in values:
        if not prev < v <= n:
            raise ValueError(f"{name} must be a strictly increasing subset of 1..{n}")
        prev = v


def reconstruct(d: Decomposition) -> PartialTransformation:
    """Inverse of decompose; rejects triples violating the invariants."""
    _check_sorted_subset("dom", d.dom, d.n)
    _check_sorted_subset("im", d.im, d.n)
    _check_sorted_subset("pivots", d.pivots, d.n)
    if len(d.pivots) != len(d.im):
        raise ValueError("pivot set and image must have the same size")
    if not set(d.pivots) <= set(d.dom):
        raise ValueError("pivots must lie in the domain")
    if d.dom and (not d.pivots or d.pivots[-1] != d.dom[-1]):
        raise ValueError("the greatest domain point must be a pivot")
    pairs = tuple((m, d.im[bisect_left(d.pivots, m)]) for m in d.dom)
    return PartialTransformation(d.n, pairs)


def _pivot_rank(dom: tuple[int, ...], pivots: tuple[int, ...]) -> int:
    # pivots minus the forced max(dom), ranked as a subset of dom minus its max
    rest = dom[:-1]
    position = {x: i + 1 for i, x in enumerate(rest)}
    reduced = tuple(position[p] for p in pivots[:-1])
    return subset_rank(len(rest), reduced)


def rank(alpha: PartialTransformation, family: Family) -> int:
    """Position of alpha in the canonical order of its family."""
    fam = Family(family)
    if fam not in classify(alpha):
        raise ValueError(f"transformation is not a member of family '{fam.value}'")
    n = alpha.n
    if fam is Family.PT:
        index = 0
        for digit in alpha.image_word():
            index = index * (n + 1) + digit
        return index
    r = alpha.domain_size
    if r == 0:
        return 0
    if fam is Family.POI:
        base = sum(count_stratum(fam, n, s) for s in range(r))
        return base + subset_rank(n, alpha.domain) * binomial(n, r) + subset_rank(n, alpha.image)
    d = decompose(alpha)
    k = len(d.im)
    if fam is Family.O:
        base = 0
    else:
        base = sum(count_stratum(fam, n, s) for s in range(r))
        base += subset_rank(n, d.dom) * binomial(n + r - 1, r)
    within = sum(binomial(n, j) * binomial(r - 1, j - 1) for j in range(1, k))
    within += subset_rank(n, d.im) * binomial(r - 1, k - 1)
    within += _pivot_rank(d.dom, d.pivots)
    return base + within


def unrank(family: Family, n: int, index: int) -> PartialTransformation:
    """Inverse of rank: decode an index into a family member."""
    fam = Family(family)
    if n < 1:
        raise ValueError(f"chain size must be at least 1, got {n}")
    total = count_family(fam, n, include_null=True)
    if not 0 <= index < total:
        raise ValueError(f"index {index} outside 0..{total - 1} for {fam.value} on n={n}")

    if fam is Family.PT:
        word = []
        for _ in range(n):
            index, digit = divmod(index, n + 1)
            word.append(digit)
        word.reverse()
        return PartialTransformation(n, tuple((i + 1, y) for i, y in enumerate(word) if y))

    if fam is Family.POI:
        rem = index
        for r in range(n + 1):
            block = count_stratum(fam, n, r)
            if rem < block:
                break
            rem -= block
        if r == 0:
            return null_map(n)
        dom_rank, im_rank = divmod(rem, binomial(n, r))
        dom = subset_unrank(n, r, dom_rank)
        im = subset_unrank(n, r, im_rank)
        return PartialTransformation(n, tuple(zip(dom, im)))

    if fam is Family.O:
        r = n
        dom = tuple(range(1, n + 1))
        within = index
    else:
        rem = index
        for r in range(n + 1):
            block = count_stratum(fam, n, r)
            if rem < block:
                break
            rem -= block
        if r == 0:
            return null_map(n)
        dom_rank, within = divmod(rem, binomial(n + r - 1, r))
        dom = subset_unrank(n, r, dom_rank)

    for k in range(1, r + 1):
        kblock = binomial(n, k) * binomial(r - 1, k - 1)
        if within < kblock:
            break
        within -= kblock
    im_rank, piv_rank = divmod(within, binomial(r - 1, k - 1))
    im = subset_unrank(n, k, im_rank)
    rest = dom[:-1]
    reduced = subset_unrank(len(rest), k - 1, piv_rank)
    pivots = tuple(sorted(rest[p - 1] for p in reduced)) + (dom[-1],)
    return reconstruct(Decomposition(n=n, dom=dom, im=im, pivots=pivots))

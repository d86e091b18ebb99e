"""Partial transformations of the chain {1..n} and the order-preserving families.

A partial transformation maps a subset of {1..n} (its domain) into {1..n}.
Values are immutable and all operations are pure, so they can be shared
freely between threads.  Composition is left to right: x(ab) = (xa)b.
"""

from dataclasses import dataclass
from enum import Enum


class Family(str, Enum):
    """Membership families, from the ambient monoid down to the injective one.

    PT  - all partial transformations (the brute-force universe)
    PO  - order-preserving partial transformations
    O   - order-preserving full transformations (domain is all of {1..n})
    POI - injective order-preserving partial transformations
    """

    PT = "pt"
    PO = "po"
    O = "o"
    POI = "poi"


@dataclass(frozen=True)
class PartialTransformation:
    """A partial self-map of {1..n}, stored as (x, y) pairs strictly increasing in x."""

    n: int
    mapping: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"chain size must be at least 1, got {self.n}")
        prev = 0
        for x, y in self.mapping:
            if not (1 <= x <= self.n and 1 <= y <= self.n):
                raise ValueError(f"pair ({x}, {y}) outside the chain 1..{self.n}")
            if x <= prev:
                raise ValueError("domain points must be strictly increasing")
            prev = x

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.mapping)

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted({y for _, y in self.mapping}))

    @property
    def domain_size(self) -> int:
        return len(self.mapping)

    @property
    def image_size(self) -> int:
        return len({y for _, y in self.mapping})

    def apply(self, x: int) -> int | None:
        """Image of x, or None when x is outside the domain."""
        for px, py in self.mapping:
            if px == x:
                return py
        return None

    def is_null(self) -> bool:
        return not self.mapping

    def is_full(self) -> bool:
        return len(self.mapping) == self.n

    def is_injective(self) -> bool:
        return len({y for _, y in self.mapping}) == len(self.mapping)

    def is_order_preserving(self) -> bool:
        # mapping is sorted by x, so order preservation is just a monotone y-sequence
        ys = [y for _, y in self.mapping]
        return all(a <= b for a, b in zip(ys, ys[1:]))

    def image_word(self) -> tuple[int, ...]:
        """Length-n array with 0 for undefined points, y for x -> y."""
        word = [0] * self.n
        for x, y in self.mapping:
            word[x - 1] = y
        return tuple(word)

    def __repr__(self) -> str:
        pairs = ",".join(f"{x}:{y}" for x, y in self.mapping)
        return f"PartialTransformation(n={self.n}, {{{pairs}}})"


def make_partial_map(n: int, pairs) -> PartialTransformation:
    """Build a partial transformation from (x, y) pairs in any order.

    Rejects coordinates outside 1..n and duplicate domain points.
    """
    items = sorted((int(x), int(y)) for x, y in pairs)
    for (x1, _), (x2, _) in zip(items, items[1:]):
        if x1 == x2:
            raise ValueError(f"duplicate domain point {x1}: not a partial function")
    return PartialTransformation(n, tuple(items))


def null_map(n: int) -> PartialTransformation:
    return PartialTransformation(n, ())


def identity_map(n: int) -> PartialTransformation:
    return PartialTransformation(n, tuple((i, i) for i in range(1, n + 1)))


def classify(alpha: PartialTransformation) -> set[Family]:
    """All families containing alpha.  PT is always present; O and POI imply PO."""
    tags = {Family.PT}
    if alpha.is_order_preserving():
        tags.add(Family.PO)
        if alpha.is_injective():
            tags.add(Family.POI)
        if alpha.is_full():
            tags.add(Family.O)
    return tags


def compose(alpha: PartialTransformation, beta: PartialTransformation) -> PartialTransformation:
    """Left-to-right composition: x(alpha beta) = (x alpha) beta.

    The domain is every x in dom(alpha) whose image lies in dom(beta).
    """
    if alpha.n != beta.n:
        raise ValueError(f"ambient sizes differ: {alpha.n} != {beta.n}")
    pairs = []
    for x, y in alpha.mapping:
        z = beta.apply(y)
        if z is not None:
            pairs.append((x, z))
    return PartialTransformation(alpha.n, tuple(pairs))


def to_payload(alpha: PartialTransformation) -> dict:
    """Canonical serialization: {"n": n, "map": [[x, y], ...]} sorted by x."""
    return {"n": alpha.n, "map": [[x, y] for x, y in alpha.mapping]}


def from_payload(payload: dict) -> PartialTransformation:
    """Inverse of to_payload, validating the pairs."""
    try:
        n = int(payload["n"])
        pairs = payload["map"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"expected {{'n': int, 'map': [[x, y], ...]}}: {exc}") from exc
    return make_partial_map(n, pairs)

"""Integer partitions: enumeration, conjugation, ordering, and shape predicates.

A partition is represented as a tuple of weakly decreasing positive ints.
Tuples are hashable and compare structurally, so partitions double as dict
keys and set members throughout the package.  Equality is always equality
of this canonical form; there are no trailing zeros and no empty partition.
"""

from __future__ import annotations

from dataclasses import dataclass

Partition = tuple[int, ...]


def validate(parts) -> Partition:
    """Return ``parts`` as a canonical Partition tuple, or raise ValueError."""
    lam = tuple(parts)
    if not lam:
        raise ValueError("empty partition (n >= 1 everywhere)")
    for i, p in enumerate(lam):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"parts must be positive integers, got {lam!r}")
        if i and lam[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {lam!r}")
    return lam


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, in decreasing lexicographic order.

    The first element is (n,) and the last is (1,)*n.  Each step finds the
    rightmost part greater than 1, takes one unit from it, and refills the
    freed budget greedily with parts no larger than the decremented one.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out: list[Partition] = []
    parts = [n]
    while True:
        out.append(tuple(parts))
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return out
        budget = len(parts) - k  # trailing ones plus the unit taken below
        cap = parts[k] - 1
        parts = parts[:k] + [cap]
        while budget:
            c = min(cap, budget)
            parts.append(c)
            budget -= c


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Ferrers diagram: entry k counts the parts >= k."""
    lam = validate(lam)
    return tuple(sum(1 for p in lam if p >= k) for k in range(1, lam[0] + 1))


def lex_compare(lam: Partition, mu: Partition) -> int:
    """Three-way comparison in decreasing lexicographic order.

    Returns -1 when lam precedes mu (larger part at the first differing
    index), 0 when equal, +1 when lam follows.  Partitions of different
    totals are incomparable and rejected.
    """
    lam, mu = validate(lam), validate(mu)
    if sum(lam) != sum(mu):
        raise ValueError("cannot compare partitions of different totals")
    if lam == mu:
        return 0
    # equal totals rule out prefix ties, so plain tuple order is the
    # first-differing-index rule
    return -1 if lam > mu else 1


def is_hook(lam: Partition) -> bool:
    """True for (n-k, 1^k), including (n,) and (1,)*n."""
    lam = validate(lam)
    return all(p == 1 for p in lam[1:])


def is_two_part(lam: Partition) -> bool:
    return len(validate(lam)) == 2


def is_rectangular(lam: Partition) -> bool:
    """True when all parts are equal (shape r^m)."""
    lam = validate(lam)
    return len(set(lam)) == 1


def is_staircase(lam: Partition) -> bool:
    """True for (t, t-1, ..., 1)."""
    lam = validate(lam)
    return lam == tuple(range(len(lam), 0, -1))


def is_self_conjugate(lam: Partition) -> bool:
    lam = validate(lam)
    return lam == conjugate(lam)


@dataclass(frozen=True)
class ShapeFlags:
    is_hook: bool
    is_two_part: bool
    is_rectangular: bool
    is_staircase: bool
    is_self_conjugate: bool


def predicates(lam: Partition) -> ShapeFlags:
    """Bundle the five structural predicates for one partition."""
    return ShapeFlags(
        is_hook=is_hook(lam),
        is_two_part=is_two_part(lam),
        is_rectangular=is_rectangular(lam),
        is_staircase=is_staircase(lam),
        is_self_conjugate=is_self_conjugate(lam),
    )


def format_parts(lam: Partition) -> str:
    """Dot-joined text form used by all exports, e.g. (4, 2, 1, 1) -> "4.2.1.1"."""
    return ".".join(str(p) for p in validate(lam))


def parse_parts(text: str) -> Partition:
    """Inverse of format_parts; rejects any non-canonical spelling."""
    pieces = text.split(".")
    try:
        parts = tuple(int(p) for p in pieces)
    except ValueError:
        raise ValueError(f"malformed partition text: {text!r}") from None
    # int() tolerates "+4", " 4", "04"; the format does not
    if pieces != [str(p) for p in parts]:
        raise ValueError(f"malformed partition text: {text!r}")
    return validate(parts)

"""Young-diagram combinatorics: cells, hooks, tableau counts, and
Littlewood-Richardson coefficients.

Partitions are plain tuples of weakly decreasing positive ints; the
empty partition is ().  Cells are 1-indexed (row, col) pairs.
"""

from __future__ import annotations

from functools import cache
from math import factorial
from typing import NamedTuple

__all__ = [
    "Partition",
    "BasisLabel",
    "cells",
    "contents",
    "hook_length",
    "conjugate",
    "partitions_of",
    "basis_labels",
    "syt_count",
    "lr_coeff",
    "label_sort_key",
]

Partition = tuple[int, ...]


def _check_partition(p: Partition) -> None:
    for i, part in enumerate(p):
        if not isinstance(part, int) or part < 1:
            raise ValueError(f"invalid partition {p!r}: parts must be positive integers")
        if i and p[i - 1] < part:
            raise ValueError(f"invalid partition {p!r}: parts must be weakly decreasing")


def cells(lam: Partition) -> list[tuple[int, int]]:
    """All cells (i, j) of the diagram, row-major, 1-indexed."""
    _check_partition(lam)
    return [(i + 1, j + 1) for i, row in enumerate(lam) for j in range(row)]


def contents(lam: Partition) -> list[int]:
    """Multiset of cell contents j - i, in row-major cell order."""
    return [j - i for i, j in cells(lam)]


def hook_length(lam: Partition, i: int, j: int) -> int:
    """Hook length of cell (i, j): arm + leg + 1."""
    _check_partition(lam)
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"cell ({i}, {j}) lies outside the diagram {lam!r}")
    arm = lam[i - 1] - j
    leg = sum(1 for r in range(i, len(lam)) if lam[r] >= j)
    return arm + leg + 1


def conjugate(lam: Partition) -> Partition:
    """Transposed diagram."""
    _check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")

    def gen(remaining: int, max_part: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n)) if n else ((),)


class BasisLabel(NamedTuple):
    """Ordered pair of shapes indexing the two-sided basis elements.

    `neg` labels the clockwise strings, `pos` the counterclockwise ones.
    """

    neg: Partition
    pos: Partition

    def to_json(self) -> dict[str, list[int]]:
        return {"neg": list(self.neg), "pos": list(self.pos)}

    @classmethod
    def from_json(cls, obj: dict) -> "BasisLabel":
        return cls(tuple(obj["neg"]), tuple(obj["pos"]))


def label_sort_key(label: BasisLabel):
    """Global label order: |neg| descending, then reverse-lex on each side."""
    return (
        -sum(label.neg),
        tuple(-p for p in label.neg),
        tuple(-p for p in label.pos),
    )


@cache
def basis_labels(n: int, p: int) -> tuple[BasisLabel, ...]:
    """Labels (neg, pos) with |neg| <= n, |pos| <= p and |neg| - |pos| = n - p.

    The count is sum_j pi(n - j) pi(p - j) over j = 0..min(n, p).
    """
    if n < 0 or p < 0:
        raise ValueError("string counts must be nonnegative")
    out = []
    for j in range(min(n, p) + 1):
        for lam in partitions_of(n - j):
            for mu in partitions_of(p - j):
                out.append(BasisLabel(lam, mu))
    return tuple(out)


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook-length formula)."""
    _check_partition(lam)
    n = sum(lam)
    if n == 0:
        return 1
    hooks = 1
    for i, j in cells(lam):
        hooks *= hook_length(lam, i, j)
    return factorial(n) // hooks


def _contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


@cache
def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu, nu}.

    Counts column-strict fillings of the skew shape lam/mu with content
    nu whose reverse reading word is a lattice word.  Cells are visited
    in reverse reading order (right to left along each row, top row
    first) so the lattice condition can be checked incrementally.
    """
    _check_partition(lam)
    _check_partition(mu)
    _check_partition(nu)
    if sum(mu) + sum(nu) != sum(lam) or not _contains(lam, mu):
        return 0
    if not nu:
        return 1
    inner = tuple(mu) + (0,) * (len(lam) - len(mu))
    order = [
        (i, j)
        for i in range(len(lam))
        for j in range(lam[i] - 1, inner[i] - 1, -1)
    ]
    bound = list(nu)
    counts = [0] * (len(nu) + 1)
    filling: dict[tuple[int, int], int] = {}
    total = 0

    def place(pos: int) -> None:
        nonlocal total
        if pos == len(order):
            total += 1
            return
        i, j = order[pos]
        above = filling.get((i - 1, j), 0)  # inner/outside cells act as 0
        right = filling.get((i, j + 1))
        hi = len(nu) if right is None else right
        for k in range(above + 1, hi + 1):
            if counts[k - 1] >= bound[k - 1]:
                continue
            if k > 1 and counts[k - 2] <= counts[k - 1]:
                continue
            counts[k - 1] += 1
            filling[(i, j)] = k
            place(pos + 1)
            del filling[(i, j)]
            counts[k - 1] -= 1

    place(0)
    return total

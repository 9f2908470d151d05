"""Integer partitions as weakly decreasing tuples of positive ints."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable

from ..errors import UsageError

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Sort descending and drop zeros; negative parts are rejected."""
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise UsageError(f"partition parts must be nonnegative: {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def is_partition(parts) -> bool:
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order: (n), (n-1, 1), ..., (1^n)."""
    if n < 0:
        raise UsageError("cannot partition a negative integer")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > i) for i in range(la[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def hook_lengths(la: Partition) -> list[int]:
    conj = conjugate(la)
    return [la[i] - j + conj[j] - i - 1 for i in range(len(la)) for j in range(la[i])]


def syt_count(la: Partition) -> int:
    """Number of standard Young tableaux of shape ``la`` (hook-length formula)."""
    return factorial(sum(la)) // prod(hook_lengths(la))


def z_rho(rho: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``rho``."""
    return prod(i ** m * factorial(m) for i, m in Counter(rho).items())


def sign_of(rho: Partition) -> int:
    return -1 if (sum(rho) - len(rho)) % 2 else 1


def graded_key(la: Partition) -> tuple:
    """Sort key for graded reverse-lex partition order (weight first)."""
    return (sum(la), la)

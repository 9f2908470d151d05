"""Irreducible characters of S_n by the Murnaghan-Nakayama rule."""
from __future__ import annotations

from functools import lru_cache

from ..errors import UsageError
from .partitions import Partition, partitions_of


def _rim_hook_removals(la: Partition, k: int):
    """Yield (sign, shape) for every border strip of size ``k`` removable from ``la``.

    Works on beta-numbers: a strip of size k is a bead moving from b to b-k,
    and its height is the number of beads it jumps over.
    """
    n = len(la)
    beta = [la[i] + n - 1 - i for i in range(n)]
    beads = set(beta)
    for b in beta:
        c = b - k
        if c < 0 or c in beads:
            continue
        jumped = sum(1 for x in beta if c < x < b)
        new = sorted((c if x == b else x for x in beta), reverse=True)
        shape = tuple(p for p in (new[i] - (n - 1 - i) for i in range(n)) if p)
        yield (-1 if jumped % 2 else 1), shape


@lru_cache(maxsize=None)
def _mn(la: Partition, rho: Partition) -> int:
    if not rho:
        return 1 if not la else 0
    k, rest = rho[0], rho[1:]
    return sum(sign * _mn(shape, rest) for sign, shape in _rim_hook_removals(la, k))


def mn_character(la: Partition, rho: Partition) -> int:
    """Value of the irreducible character indexed by ``la`` on cycle type ``rho``."""
    la, rho = tuple(la), tuple(sorted(rho, reverse=True))
    if sum(la) != sum(rho):
        raise UsageError(f"weight mismatch: |{la}| != |{rho}|")
    return _mn(la, rho)


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    parts = partitions_of(n)
    return {(la, rho): _mn(la, rho) for la in parts for rho in parts}

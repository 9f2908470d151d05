"""Littlewood-Richardson and Kronecker coefficients."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import UsageError
from .characters import _mn
from .partitions import Partition, contains, partitions_of, z_rho


@lru_cache(maxsize=None)
def lr_coefficient(la: Partition, mu: Partition, nu: Partition) -> int:
    """c^la_{mu,nu}: LR tableaux of skew shape la/mu and content nu.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left), which lets the lattice condition be checked incrementally.
    """
    la, mu, nu = tuple(la), tuple(mu), tuple(nu)
    if sum(la) != sum(mu) + sum(nu) or not contains(la, mu) or not contains(la, nu):
        return 0
    mu_ext = mu + (0,) * (len(la) - len(mu))
    cells = [(r, c) for r in range(len(la)) for c in range(la[r] - 1, mu_ext[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * len(nu)

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = len(nu) - 1
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 0
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        # a row of a lattice-word filling never holds a letter beyond its row index
        hi = min(hi, r)
        total = 0
        for k in range(lo, hi + 1):
            if counts[k] >= nu[k]:
                continue
            if k > 0 and counts[k] + 1 > counts[k - 1]:
                continue
            counts[k] += 1
            filling[(r, c)] = k
            total += fill(idx + 1)
            del filling[(r, c)]
            counts[k] -= 1
        return total

    return fill(0)


def lr_coefficient_via_characters(la: Partition, mu: Partition, nu: Partition) -> int:
    """Same coefficient as <s_mu s_nu, s_la>, evaluated in the power-sum basis."""
    from .symfunc import SymFunc, plethysm  # noqa: F401

    la, mu, nu = tuple(la), tuple(mu), tuple(nu)
    if sum(la) != sum(mu) + sum(nu):
        return 0
    prod_p = _mul_p(SymFunc.s(mu).to("p").terms, SymFunc.s(nu).to("p").terms)
    total = sum((c * _mn(la, rho) for rho, c in prod_p.items()), Fraction(0))
    return int(total)


def _mul_p(a, b):
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(sorted(ka + kb, reverse=True))
            out[k] = out.get(k, 0) + ca * cb
    return out


@lru_cache(maxsize=None)
def kronecker_coefficient(la: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of V_la in V_mu (x) V_nu, from the triple character sum."""
    la, mu, nu = tuple(la), tuple(mu), tuple(nu)
    n = sum(la)
    if sum(mu) != n or sum(nu) != n:
        raise UsageError("Kronecker coefficients need three partitions of the same weight")
    total = sum(
        (Fraction(_mn(la, rho) * _mn(mu, rho) * _mn(nu, rho), z_rho(rho)) for rho in partitions_of(n)),
        Fraction(0),
    )
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"character sum gave non-natural value {total}")
    return int(total)

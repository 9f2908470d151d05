"""Rewrite symmetric polynomials in elementary symmetric generators.

A symmetric polynomial in N variables is stored by its *dominant*
coefficients: the coefficient of xi^la for every weakly decreasing
exponent vector la (padded to length N).  Leading-term descent then peels
off sigma_1^(la1-la2) sigma_2^(la2-la3) ... in decreasing lex order.
"""
from __future__ import annotations

import heapq
from itertools import combinations
from typing import Mapping

from .errors import DomainError

Dominant = dict[tuple[int, ...], int]


def _subsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(n), k))


class ElementaryReducer:
    """Memoized descent for a fixed number of variables ``n``.

    ``expansion(d)`` is the dominant part of sigma^d; it is built as
    ``expansion(d - unit_k) * sigma_k`` and cached, so one reducer instance
    amortizes work across many polynomials.
    """

    def __init__(self, n: int):
        if n < 0:
            raise DomainError("number of variables must be nonnegative")
        self.n = n
        self._subsets = {k: _subsets(n, k) for k in range(n + 1)}
        self._expansions: dict[tuple[int, ...], Dominant] = {(0,) * n: {(0,) * n: 1}}

    def _times_elementary(self, f: Dominant, k: int) -> Dominant:
        subs = self._subsets[k]
        cands = set()
        for nu in f:
            for s in subs:
                v = list(nu)
                for i in s:
                    v[i] += 1
                v.sort(reverse=True)
                cands.add(tuple(v))
        out: Dominant = {}
        for lam in cands:
            total = 0
            for s in subs:
                v = list(lam)
                ok = True
                for i in s:
                    v[i] -= 1
                    if v[i] < 0:
                        ok = False
                        break
                if not ok:
                    continue
                v.sort(reverse=True)
                c = f.get(tuple(v))
                if c:
                    total += c
            if total:
                out[lam] = total
        return out

    def expansion(self, d: tuple[int, ...]) -> Dominant:
        got = self._expansions.get(d)
        if got is not None:
            return got
        # peel the largest generator first so shared prefixes are reused
        k = max(i for i, x in enumerate(d) if x)
        prev = list(d)
        prev[k] -= 1
        got = self._times_elementary(self.expansion(tuple(prev)), k + 1)
        self._expansions[d] = got
        return got

    def reduce(self, dominant: Mapping[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
        """Map dominant coefficients to sigma-exponent coefficients."""
        work = {k: v for k, v in dominant.items() if v}
        heap = [tuple(-x for x in lam) for lam in work]
        heapq.heapify(heap)
        out: dict[tuple[int, ...], int] = {}
        n = self.n
        while heap:
            lam = tuple(-x for x in heapq.heappop(heap))
            c = work.pop(lam, 0)
            if not c:
                continue
            d = tuple(lam[i] - (lam[i + 1] if i + 1 < n else 0) for i in range(n))
            out[d] = c
            for mu, v in self.expansion(d).items():
                if mu == lam:
                    continue
                old = work.get(mu)
                if old is None:
                    work[mu] = -c * v
                    heapq.heappush(heap, tuple(-x for x in mu))
                else:
                    new = old - c * v
                    if new:
                        work[mu] = new
                    else:
                        del work[mu]
        return out


_REDUCERS: dict[int, ElementaryReducer] = {}


def reducer(n: int) -> ElementaryReducer:
    r = _REDUCERS.get(n)
    if r is None:
        r = _REDUCERS[n] = ElementaryReducer(n)
    return r

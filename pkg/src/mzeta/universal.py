"""Universal product and composition polynomials and their q-products.

Naming: the elementary generators of the first alphabet are ``s1, s2, ...``,
those of the second alphabet ``t1, t2, ...``; the q-products use the single
variable ``t``.  Roots (when a product is expanded) are ``x1, x2, ...`` and
``y1, y2, ...``.

* ``universal_P(n)``: coefficient of t^n in prod_{i,j} (1 + x_i y_j t),
  written in s (from x) and t-indexed generators (from y).
* ``universal_Pnr(n, r)``: coefficient of t^n in prod over r-subsets I of
  (1 + x_I t), written in s.
* ``q_poly(g, n)``: prod over n-subsets I of 2g roots of (1 + x_I t).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Mapping, Sequence

from .algebra import MultiPoly, VarTable
from .errors import DomainError, UsageError
from .symfunc import SymFunc, conjugate, partitions_of
from .symreduce import reducer

Exponent = tuple[int, ...]


def sigma_names(n: int, prefix: str = "s") -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


@lru_cache(maxsize=None)
def p_table(n: int) -> VarTable:
    """Variables of P_n: s1..sn then t1..tn."""
    return VarTable(sigma_names(n) + sigma_names(n, "t"))


@lru_cache(maxsize=None)
def pnr_table(n: int) -> VarTable:
    return VarTable(sigma_names(n))


@lru_cache(maxsize=None)
def q_table(nvars: int, invertible: bool = False) -> VarTable:
    names = sigma_names(nvars) + ["t"]
    inv = [names[nvars - 1], "t"] if invertible and nvars else (["t"] if invertible else [])
    return VarTable(names, inv)


# -- symmetric reduction on MultiPoly --------------------------------------------

def _is_dominant(e: Sequence[int]) -> bool:
    return all(e[i] >= e[i + 1] for i in range(len(e) - 1))


def elementary_reduce(
    p: MultiPoly,
    roots: Sequence[str],
    generators: Sequence[str] | None = None,
    target: VarTable | None = None,
    check: bool = True,
) -> MultiPoly:
    """Rewrite ``p`` (symmetric in ``roots``) in elementary symmetric generators.

    Variables of ``p`` other than ``roots`` are carried along as coefficients.
    The result lives on ``target`` (default: generators followed by the
    untouched variables of ``p``).
    """
    roots = list(roots)
    n = len(roots)
    generators = list(generators) if generators is not None else sigma_names(n)
    if len(generators) != n:
        raise UsageError("need exactly one generator name per root")
    vt = p.vars
    pos = [vt.index(r) for r in roots]
    if any(vt.is_invertible(i) and any(e[i] < 0 for e in p.terms) for i in pos):
        raise DomainError("symmetric reduction needs nonnegative exponents in the roots")
    rest_idx = [i for i in range(len(vt)) if i not in pos]
    rest_names = [vt.names[i] for i in rest_idx]
    if target is None:
        inv = [vt.names[i] for i in rest_idx if vt.is_invertible(i)]
        target = VarTable(generators + rest_names, inv)
    if check:
        for a in range(n - 1):
            i, j = pos[a], pos[a + 1]
            for e, c in p.terms.items():
                f = list(e)
                f[i], f[j] = f[j], f[i]
                if p.terms.get(tuple(f)) != c:
                    raise DomainError(f"polynomial is not symmetric in {roots[a]}, {roots[a + 1]}")
    groups: dict[Exponent, dict[Exponent, int]] = {}
    for e, c in p.terms.items():
        xi = tuple(e[i] for i in pos)
        if _is_dominant(xi):
            groups.setdefault(tuple(e[i] for i in rest_idx), {})[xi] = c
    red = reducer(n)
    gen_pos = [target.index(g) for g in generators]
    rest_pos = [target.index(r) for r in rest_names]
    out: dict[Exponent, int] = {}
    width = len(target)
    for rest, dom in groups.items():
        for d, c in red.reduce(dom).items():
            e = [0] * width
            for k, v in zip(gen_pos, d):
                e[k] += v
            for k, v in zip(rest_pos, rest):
                e[k] += v
            e = tuple(e)
            out[e] = out.get(e, 0) + c
    return MultiPoly(target, out)


def _expand_products(nroots: int, factors: Sequence[tuple[int, ...]], keep: Callable[[Exponent], bool]) -> dict:
    """Expand prod (1 + monomial) over factor exponent vectors, pruning with ``keep``."""
    cur: dict[Exponent, int] = {(0,) * nroots: 1}
    for f in factors:
        nxt = dict(cur)
        for e, c in cur.items():
            g = tuple(a + b for a, b in zip(e, f))
            if keep(g):
                nxt[g] = nxt.get(g, 0) + c
        cur = nxt
    return cur


# -- P_n ------------------------------------------------------------------------

def _e_expansion(la) -> dict[tuple[int, ...], int]:
    out = {}
    for key, c in SymFunc.s(la).to("e").terms.items():
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral e-expansion of s{la}")
        out[key] = int(c)
    return out


def _monomial_from_parts(parts: Sequence[int], offset: int, width: int) -> list[int]:
    e = [0] * width
    for p in parts:
        e[offset + p - 1] += 1
    return e


@lru_cache(maxsize=None)
def _universal_P_cauchy(n: int) -> MultiPoly:
    vt = p_table(n)
    out: dict[Exponent, int] = {}
    for mu in partitions_of(n):
        left = _e_expansion(mu)
        right = _e_expansion(conjugate(mu))
        for la, a in left.items():
            el = _monomial_from_parts(la, 0, 2 * n)
            for nu, b in right.items():
                e = list(el)
                for p in nu:
                    e[n + p - 1] += 1
                e = tuple(e)
                out[e] = out.get(e, 0) + a * b
    return MultiPoly(vt, out)


def _universal_P_naive(n: int) -> MultiPoly:
    # roots x1..xn, y1..yn; keep only terms of x-degree <= n
    names = sigma_names(n, "x") + sigma_names(n, "y")
    factors = []
    for i in range(n):
        for j in range(n):
            f = [0] * (2 * n)
            f[i] = 1
            f[n + j] = 1
            factors.append(tuple(f))
    terms = _expand_products(2 * n, factors, lambda e: sum(e[:n]) <= n)
    terms = {e: c for e, c in terms.items() if sum(e[:n]) == n}
    poly = MultiPoly(VarTable(names), terms)
    stage = elementary_reduce(poly, names[:n], sigma_names(n))
    return elementary_reduce(stage, names[n:], sigma_names(n, "t"), target=p_table(n))


def universal_P(n: int, method: str = "cauchy") -> MultiPoly:
    """P_n over ``p_table(n)``; ``P_0 = 1``."""
    if n < 0:
        raise UsageError("P_n needs n >= 0")
    if n == 0:
        return MultiPoly.const(p_table(0), 1)
    if method == "cauchy":
        return _universal_P_cauchy(n)
    if method == "naive":
        return _universal_P_naive(n)
    raise UsageError(f"unknown method {method!r} (naive, cauchy)")


# -- P_{n,r} --------------------------------------------------------------------

@lru_cache(maxsize=None)
def _universal_Pnr_plethysm(n: int, r: int) -> MultiPoly:
    vt = pnr_table(n * r)
    f = SymFunc.e(n).plethysm(SymFunc.e(r)).to("e")
    out = {}
    for la, c in f.terms.items():
        if c.denominator != 1:
            raise ArithmeticError("non-integral coefficient in e-basis plethysm")
        out[tuple(_monomial_from_parts(la, 0, n * r))] = int(c)
    return MultiPoly(vt, out)


def _universal_Pnr_naive(n: int, r: int) -> MultiPoly:
    big = n * r
    names = sigma_names(big, "x")
    factors = []
    for subset in combinations(range(big), r):
        f = [0] * big
        for i in subset:
            f[i] = 1
        factors.append(tuple(f))
    terms = _expand_products(big, factors, lambda e: sum(e) <= big)
    terms = {e: c for e, c in terms.items() if sum(e) == big}
    return elementary_reduce(MultiPoly(VarTable(names), terms), names, sigma_names(big), target=pnr_table(big))


def universal_Pnr(n: int, r: int, method: str = "plethysm") -> MultiPoly:
    """P_{n,r} over ``pnr_table(n*r)``; ``P_{0,r} = 1``.

    For r = 0 the product has the single factor (1 + t), so P_{n,0} is 1 for
    n <= 1 and 0 beyond.
    """
    if n < 0 or r < 0:
        raise UsageError("P_{n,r} needs n >= 0 and r >= 0")
    if r == 0:
        return MultiPoly.const(pnr_table(0), 1 if n <= 1 else 0)
    if n == 0:
        return MultiPoly.const(pnr_table(0), 1)
    if method == "plethysm":
        return _universal_Pnr_plethysm(n, r)
    if method == "naive":
        return _universal_Pnr_naive(n, r)
    raise UsageError(f"unknown method {method!r} (naive, plethysm)")


# -- q-products -----------------------------------------------------------------

@lru_cache(maxsize=None)
def subset_product_coefficients(nvars: int, n: int) -> tuple[dict[Exponent, int], ...]:
    """prod over n-subsets I of nvars roots of (1 + x_I t), as sigma-exponent dicts per t-power."""
    if not 0 <= n <= nvars:
        raise UsageError(f"subset size {n} out of range 0..{nvars}")
    if n == 0:
        return ({(0,) * nvars: 1}, {(0,) * nvars: 1})
    factors = []
    for subset in combinations(range(nvars), n):
        f = [0] * nvars
        for i in subset:
            f[i] = 1
        factors.append(tuple(f))
    terms = _expand_products(nvars, factors, lambda e: True)
    by_power: list[dict[Exponent, int]] = [dict() for _ in range(comb(nvars, n) + 1)]
    for e, c in terms.items():
        if _is_dominant(e):
            by_power[sum(e) // n][e] = c
    red = reducer(nvars)
    return tuple(red.reduce(dom) for dom in by_power)


def q_coefficients(nvars: int, n: int, images: Sequence, one, zero=0) -> list:
    """Coefficients of the q-product with sigma_i replaced by ``images[i-1]``."""
    out = []
    for coeffs in subset_product_coefficients(nvars, n):
        total = zero
        for d, c in coeffs.items():
            term = None
            skip = False
            for i, k in enumerate(d):
                if not k:
                    continue
                img = images[i]
                if isinstance(img, int) and img == 0:
                    skip = True
                    break
                f = img ** k
                term = f if term is None else term * f
            if skip:
                continue
            total = total + (one * c if term is None else term * c)
        out.append(total)
    return out


def _q_direct(g: int, n: int, vt: VarTable) -> MultiPoly:
    nv = 2 * g
    t = vt.index("t")
    out = {}
    for m, coeffs in enumerate(subset_product_coefficients(nv, n)):
        for d, c in coeffs.items():
            e = list(d) + [0] * (len(vt) - nv)
            e[t] = m
            out[tuple(e)] = c
    return MultiPoly(vt, out)


def _q_universal(g: int, n: int, vt: VarTable, source: Callable[[int, int], MultiPoly]) -> MultiPoly:
    nv = 2 * g
    b = comb(nv, n)
    t = vt.index("t")
    out: dict[Exponent, int] = {}
    for m in range(b + 1):
        if m * n > 16:
            raise UsageError(f"universal route needs P_{{{m},{n}}} with m*n > 16; use the direct method")
        poly = source(m, n)
        for e, c in poly.terms.items():
            if any(e[i] for i in range(nv, len(e))):
                continue  # generators beyond 2g vanish
            f = list(e[:nv]) + [0] * (len(vt) - min(nv, len(e)))
            f[t] = m
            out[tuple(f)] = out.get(tuple(f), 0) + c
    return MultiPoly(vt, out)


def q_poly(g: int, n: int, method: str = "direct", source: Callable[[int, int], MultiPoly] | None = None) -> MultiPoly:
    """q^g_n over ``q_table(2g)``; degree binomial(2g, n) in t."""
    if g < 1:
        raise UsageError("q-products need g >= 1")
    if not 0 <= n <= 2 * g:
        raise UsageError(f"n must lie in 0..{2 * g}")
    vt = q_table(2 * g)
    if method == "direct":
        return _q_direct(g, n, vt)
    if method == "universal":
        return _q_universal(g, n, vt, source or universal_Pnr)
    raise UsageError(f"unknown method {method!r} (direct, universal)")


@dataclass
class QIdentityReport:
    g: int
    n: int
    degree: int
    twist: int
    passed: bool
    witness: str | None = None
    checks: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "subject": f"q^{self.g}_{self.n}",
            "g": self.g,
            "n": self.n,
            "degree": self.degree,
            "twist": self.twist,
            "passed": self.passed,
            "witness": self.witness,
            "checks": list(self.checks),
        }


def verify_q_fe(g: int, n: int, q: Callable[[int, int], MultiPoly] | None = None) -> QIdentityReport:
    """Check q_n(1/(s t)) (s t)^b = s^binom(2g-1, n-1) q_{2g-n}(t) with s = s_{2g}."""
    q = q or q_poly
    b = comb(2 * g, n)
    twist = comb(2 * g - 1, n - 1) if n >= 1 else 0
    vt = q_table(2 * g, invertible=True)
    top = f"s{2 * g}"
    left = q(g, n).rename(vt)
    right = q(g, 2 * g - n).rename(vt)
    st = MultiPoly.var(vt, top) * MultiPoly.var(vt, "t")
    lhs = left.substitute("t", st.inverse_monomial()) * st ** b
    rhs = MultiPoly.var(vt, top, twist) * right
    diff = lhs - rhs
    checks = [
        f"deg q_{n} = {left.degree_in('t')} (expected {b})",
        f"deg q_{2 * g - n} = {right.degree_in('t')} (expected {comb(2 * g, 2 * g - n)})",
    ]
    passed = diff.is_zero() and left.degree_in("t") == b and right.degree_in("t") == b
    return QIdentityReport(g, n, b, twist, passed, None if diff.is_zero() else diff.render(), checks)

"""Symmetric functions in the p, e, h and s bases.

Power sums are the pivot: every conversion passes through the p-basis with
exact rational coefficients.  s <-> p uses the character table,
e/h <-> p the classical Newton-type expansions.
"""
from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Mapping, Union

from ..errors import DomainError, UsageError
from .characters import _mn
from .partitions import Partition, conjugate, contains, make_partition, partitions_of, sign_of, z_rho

BASES = ("p", "e", "h", "s")
Scalar = Union[int, Fraction]
Terms = dict[Partition, Fraction]


def _clean(terms: Mapping[Partition, Scalar]) -> Terms:
    return {k: Fraction(v) for k, v in terms.items() if v}


def _accumulate(out: dict, key, value) -> None:
    s = out.get(key, 0) + value
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def _mul_concat(a: Terms, b: Terms) -> Terms:
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            _accumulate(out, _merge(ka, kb), ca * cb)
    return out


# -- single-part expansions -------------------------------------------------

@lru_cache(maxsize=None)
def _e_in_p(n: int) -> Terms:
    return {rho: Fraction(sign_of(rho), z_rho(rho)) for rho in partitions_of(n)}


@lru_cache(maxsize=None)
def _h_in_p(n: int) -> Terms:
    return {rho: Fraction(1, z_rho(rho)) for rho in partitions_of(n)}


@lru_cache(maxsize=None)
def _s_in_p(la: Partition) -> Terms:
    n = sum(la)
    return _clean({rho: Fraction(_mn(la, rho), z_rho(rho)) for rho in partitions_of(n)})


def _newton_weight(la: Partition) -> Fraction:
    n, l = sum(la), len(la)
    return Fraction(n * factorial(l - 1), prod(factorial(m) for m in Counter(la).values()))


@lru_cache(maxsize=None)
def _p_in_e(n: int) -> Terms:
    return {la: (-1) ** (n - len(la)) * _newton_weight(la) for la in partitions_of(n)}


@lru_cache(maxsize=None)
def _p_in_h(n: int) -> Terms:
    return {la: (-1) ** (len(la) - 1) * _newton_weight(la) for la in partitions_of(n)}


@lru_cache(maxsize=None)
def _product_expansion(basis: str, key: Partition) -> Terms:
    """Expansion of a basis product element, e.g. e_(3,1) in p or p_(2,2) in e."""
    single = {
        ("e", "p"): _e_in_p,
        ("h", "p"): _h_in_p,
        ("p", "e"): _p_in_e,
        ("p", "h"): _p_in_h,
    }[tuple(basis.split(">"))]
    out: Terms = {(): Fraction(1)}
    for part in key:
        out = _mul_concat(out, single(part))
    return out


def _to_p(basis: str, terms: Terms) -> Terms:
    if basis == "p":
        return dict(terms)
    out: dict = {}
    for la, c in terms.items():
        if basis == "s":
            exp = _s_in_p(la)
        else:
            exp = _product_expansion(f"{basis}>p", la)
        for rho, v in exp.items():
            _accumulate(out, rho, c * v)
    return out


def _from_p(basis: str, terms: Terms) -> Terms:
    if basis == "p":
        return dict(terms)
    out: dict = {}
    if basis == "s":
        by_degree: dict[int, list] = {}
        for rho, c in terms.items():
            by_degree.setdefault(sum(rho), []).append((rho, c))
        for n, items in by_degree.items():
            for la in partitions_of(n):
                v = sum((c * _mn(la, rho) for rho, c in items), Fraction(0))
                if v:
                    out[la] = v
        return out
    for rho, c in terms.items():
        for la, v in _product_expansion(f"p>{basis}", rho).items():
            _accumulate(out, la, c * v)
    return out


class SymFunc:
    """Element of the ring of symmetric functions in a tagged basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Iterable[int], Scalar] | None = None):
        if basis not in BASES:
            raise UsageError(f"unknown basis {basis!r}; expected one of {BASES}")
        self.basis = basis
        cleaned: dict = {}
        for k, v in (terms or {}).items():
            _accumulate(cleaned, make_partition(k), Fraction(v))
        self.terms: Terms = cleaned

    # -- constructors ---------------------------------------------------------
    @classmethod
    def _basis_element(cls, basis: str, parts) -> SymFunc:
        if isinstance(parts, int):
            parts = (parts,) if parts else ()
        return cls(basis, {tuple(parts): 1})

    @classmethod
    def p(cls, parts) -> SymFunc:
        return cls._basis_element("p", parts)

    @classmethod
    def e(cls, parts) -> SymFunc:
        return cls._basis_element("e", parts)

    @classmethod
    def h(cls, parts) -> SymFunc:
        return cls._basis_element("h", parts)

    @classmethod
    def s(cls, parts) -> SymFunc:
        return cls._basis_element("s", parts)

    @classmethod
    def scalar(cls, c: Scalar, basis: str = "p") -> SymFunc:
        return cls(basis, {(): c})

    # -- conversion -----------------------------------------------------------
    def to(self, basis: str) -> SymFunc:
        if basis == self.basis:
            return self
        if basis not in BASES:
            raise UsageError(f"unknown basis {basis!r}")
        out = SymFunc(basis)
        out.terms = _from_p(basis, _to_p(self.basis, self.terms))
        return out

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, n: int) -> SymFunc:
        out = SymFunc(self.basis)
        out.terms = {k: v for k, v in self.terms.items() if sum(k) == n}
        return out

    def coefficient(self, parts) -> Fraction:
        return self.terms.get(make_partition(parts), Fraction(0))

    # -- arithmetic -----------------------------------------------------------
    def _lift(self, other) -> SymFunc:
        if isinstance(other, SymFunc):
            return other.to(self.basis)
        if isinstance(other, (int, Fraction)):
            return SymFunc(self.basis, {(): other})
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.to("p").terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other) -> SymFunc:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = SymFunc(self.basis)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            _accumulate(terms, k, v)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> SymFunc:
        out = SymFunc(self.basis)
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def __sub__(self, other) -> SymFunc:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> SymFunc:
        return (-self) + other

    def __mul__(self, other) -> SymFunc:
        if isinstance(other, (int, Fraction)):
            out = SymFunc(self.basis)
            out.terms = {k: v * other for k, v in self.terms.items()} if other else {}
            return out
        if not isinstance(other, SymFunc):
            return NotImplemented
        return sym_product(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SymFunc:
        if k < 0:
            raise DomainError("negative powers of symmetric functions are undefined")
        result = SymFunc(self.basis, {(): 1})
        for _ in range(k):
            result = result * self
        return result

    def plethysm(self, inner: SymFunc) -> SymFunc:
        """``self[inner]``; result is returned in ``self``'s basis."""
        return plethysm(self, inner).to(self.basis)

    def __call__(self, inner: SymFunc) -> SymFunc:
        return self.plethysm(inner)

    def omega(self) -> SymFunc:
        return omega(self)

    # -- rendering ------------------------------------------------------------
    def render(self) -> str:
        return render_symfunc(self)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SymFunc({self.render()!r})"


def basis_convert(f: SymFunc, target: str) -> SymFunc:
    return f.to(target)


def sym_product(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product; s-basis inputs multiply by Littlewood-Richardson coefficients."""
    if f.basis == "s" and g.basis == "s":
        out: dict = {}
        for mu, a in f.terms.items():
            for nu, b in g.terms.items():
                for la, c in _lr_row(mu, nu).items():
                    _accumulate(out, la, a * b * c)
        res = SymFunc("s")
        res.terms = out
        return res
    basis = f.basis if f.basis in ("p", "e", "h") else g.basis
    if basis == "s":
        basis = "p"
    res = SymFunc(basis)
    res.terms = _mul_concat(f.to(basis).terms, g.to(basis).terms)
    return res.to(f.basis)


@lru_cache(maxsize=None)
def _lr_row(mu: Partition, nu: Partition) -> dict[Partition, int]:
    from .lr import lr_coefficient

    n = sum(mu) + sum(nu)
    out = {}
    for la in partitions_of(n):
        if contains(la, mu) and contains(la, nu):
            c = lr_coefficient(la, mu, nu)
            if c:
                out[la] = c
    return out


def _scale_partition(rho: Partition, k: int) -> Partition:
    return tuple(k * r for r in rho)


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """f[g] computed in the p-basis: p_k[g] replaces each p_m in g by p_km."""
    gp = g.to("p")
    const = gp.terms.get((), Fraction(0))
    if const.denominator != 1:
        raise DomainError("plethysm into a non-integral constant is undefined")
    fp = f.to("p")
    adams: dict[int, Terms] = {}

    def adams_op(k: int) -> Terms:
        if k not in adams:
            adams[k] = {_scale_partition(rho, k): c for rho, c in gp.terms.items()}
        return adams[k]

    out: dict = {}
    for rho, c in fp.terms.items():
        acc: Terms = {(): Fraction(1)}
        for part in rho:
            acc = _mul_concat(acc, adams_op(part))
        for key, v in acc.items():
            _accumulate(out, key, c * v)
    res = SymFunc("p")
    res.terms = out
    return res


def omega(f: SymFunc) -> SymFunc:
    """The involution e_n <-> h_n, s_la -> s_la', p_rho -> sign(rho) p_rho."""
    res = SymFunc(f.basis)
    if f.basis == "e":
        res.basis = "h"
        res.terms = dict(f.terms)
        return res.to("e")
    if f.basis == "h":
        res.basis = "e"
        res.terms = dict(f.terms)
        return res.to("h")
    if f.basis == "s":
        res.terms = {conjugate(la): c for la, c in f.terms.items()}
        return res
    res.terms = {rho: c * sign_of(rho) for rho, c in f.terms.items()}
    return res


# -- text form ----------------------------------------------------------------

def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_symfunc(f: SymFunc) -> str:
    if not f.terms:
        return "0"
    keys = sorted(f.terms, key=lambda la: (sum(la), tuple(-x for x in la)))
    out = []
    for i, la in enumerate(keys):
        c = f.terms[la]
        name = f"{f.basis}[{','.join(map(str, la))}]"
        mag = abs(c)
        body = name if mag == 1 else f"{_fmt_coeff(mag)}*{name}"
        if i == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


_SF_TOKEN = re.compile(r"\s*(?:(?P<elem>[pehs]\[[0-9,\s]*\])|(?P<num>\d+(?:/\d+)?)|(?P<op>[-+*()]))")


def parse_symfunc(text: str, basis: str | None = None) -> SymFunc:
    """Parse sums/products of basis elements such as ``h[1]*h[3] - h[4]``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _SF_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise UsageError(f"cannot parse symmetric function at {text[pos:]!r}")
        tokens.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()
    state = {"i": 0}

    def peek():
        return tokens[state["i"]] if state["i"] < len(tokens) else (None, None)

    def take():
        tok = peek()
        state["i"] += 1
        return tok

    def atom():
        kind, val = take()
        if kind == "elem":
            parts = [int(x) for x in val[2:-1].split(",") if x.strip()]
            return SymFunc._basis_element(val[0], tuple(parts))
        if kind == "num":
            return SymFunc.scalar(Fraction(val), basis or "p")
        if val == "(":
            v = expr()
            if take()[1] != ")":
                raise UsageError("unbalanced parentheses")
            return v
        if val == "-":
            return -atom()
        raise UsageError(f"unexpected token {val!r}")

    def term():
        v = atom()
        while peek()[1] == "*":
            take()
            v = v * atom()
        return v

    def expr():
        v = term()
        while peek()[1] in ("+", "-"):
            op = take()[1]
            t = term()
            v = v + t if op == "+" else v - t
        return v

    if not tokens:
        raise UsageError("empty symmetric function text")
    result = expr()
    if state["i"] != len(tokens):
        raise UsageError("trailing input in symmetric function text")
    return result.to(basis) if basis else result

"""Sparse multivariate Laurent polynomials with integer coefficients.

A :class:`MultiPoly` is a map from exponent vectors to nonzero Python ints,
interpreted over a :class:`VarTable`.  Values are immutable and always kept in
canonical form, so equality is plain dict equality.

Textual form: terms in descending graded-lex order (total degree first, then
lexicographic by the declared variable order), ``*`` between factors and
``^`` for exponents other than 1, e.g. ``s1^2*t2 + s2*t1^2 - 2*s2*t2``.
"""
from __future__ import annotations

import re
from operator import add
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from ..errors import DomainError, UsageError

Exponent = tuple[int, ...]


class VarTable:
    """Ordered variable names plus the subset allowed to carry negative exponents."""

    __slots__ = ("names", "invertible", "_index", "_inv_mask")

    def __init__(self, names: Sequence[str], invertible: Iterable[str] = ()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names in {names}")
        inv = frozenset(invertible)
        unknown = inv - set(names)
        if unknown:
            raise UsageError(f"invertible variables not in table: {sorted(unknown)}")
        self.names = names
        self.invertible = inv
        self._index = {n: i for i, n in enumerate(names)}
        self._inv_mask = tuple(n in inv for n in names)

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, VarTable):
            return NotImplemented
        return self.names == other.names and self.invertible == other.invertible

    def __hash__(self) -> int:
        return hash((self.names, self.invertible))

    def __repr__(self) -> str:
        inv = ", ".join(n for n in self.names if n in self.invertible)
        return f"VarTable({list(self.names)}, invertible=[{inv}])"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"unknown variable {name!r}") from None

    def is_invertible(self, i: int) -> bool:
        return self._inv_mask[i]

    def check_exponent(self, exp: Exponent) -> None:
        for i, k in enumerate(exp):
            if k < 0 and not self._inv_mask[i]:
                raise DomainError(
                    f"negative exponent on non-invertible variable {self.names[i]!r}"
                )

    def zero_exponent(self) -> Exponent:
        return (0,) * len(self.names)


class MultiPoly:
    """Immutable sparse Laurent polynomial over ``vars``."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: VarTable, terms: Mapping[Exponent, int] | None = None, *, _trusted: bool = False):
        self.vars = vars
        if _trusted:
            self.terms = terms  # type: ignore[assignment]
        else:
            clean: dict[Exponent, int] = {}
            n = len(vars)
            for exp, c in (terms or {}).items():
                exp = tuple(exp)
                if len(exp) != n:
                    raise UsageError(f"exponent {exp} does not match {n} variables")
                if c:
                    vars.check_exponent(exp)
                    clean[exp] = clean.get(exp, 0) + int(c)
            self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # -- construction -------------------------------------------------------
    @classmethod
    def zero(cls, vars: VarTable) -> MultiPoly:
        return cls(vars, {}, _trusted=True)

    @classmethod
    def const(cls, vars: VarTable, c: int) -> MultiPoly:
        c = int(c)
        return cls(vars, {vars.zero_exponent(): c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, vars: VarTable, name: str, power: int = 1) -> MultiPoly:
        exp = [0] * len(vars)
        exp[vars.index(name)] = power
        return cls(vars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, vars: VarTable, powers: Mapping[str, int], coeff: int = 1) -> MultiPoly:
        exp = [0] * len(vars)
        for name, k in powers.items():
            exp[vars.index(name)] += k
        return cls(vars, {tuple(exp): coeff})

    # -- basic queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.vars.zero_exponent() in self.terms)

    def constant_term(self) -> int:
        return self.terms.get(self.vars.zero_exponent(), 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.terms.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == ({self.vars.zero_exponent(): other} if other else {})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def total_degree(self) -> float:
        """Largest total degree of a term; the zero polynomial has degree -inf."""
        if not self.terms:
            return float("-inf")
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> float:
        i = self.vars.index(name)
        if not self.terms:
            return float("-inf")
        return max(e[i] for e in self.terms)

    def min_degree_in(self, name: str) -> float:
        i = self.vars.index(name)
        if not self.terms:
            return float("inf")
        return min(e[i] for e in self.terms)

    def variables_used(self) -> set[str]:
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(self.vars.names[i])
        return used

    def coefficient_in(self, name: str, k: int) -> MultiPoly:
        """Coefficient of ``name^k`` as a polynomial in the remaining variables (same table)."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                out[e[:i] + (0,) + e[i + 1:]] = c
        return MultiPoly(self.vars, out, _trusted=True)

    def coefficients_in(self, name: str) -> dict[int, MultiPoly]:
        i = self.vars.index(name)
        buckets: dict[int, dict[Exponent, int]] = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: MultiPoly(self.vars, d, _trusted=True) for k, d in buckets.items()}

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise UsageError("polynomials live over different variable tables")
            return other
        if isinstance(other, int):
            return MultiPoly.const(self.vars, other)
        return NotImplemented

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.vars, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, int):
            if not other:
                return MultiPoly.zero(self.vars)
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()}, _trusted=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly.zero(self.vars)
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exponent, int] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return MultiPoly(self.vars, {e: c for e, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            return self.inverse_monomial() ** (-k)
        result = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, d: int) -> MultiPoly:
        """Divide every coefficient by the integer ``d``; raises unless exact."""
        out = {}
        for e, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                raise DomainError(f"coefficient {c} not divisible by {d}")
            out[e] = q
        return MultiPoly(self.vars, out, _trusted=True)

    def is_unit_monomial(self) -> bool:
        if len(self.terms) != 1:
            return False
        (e, c), = self.terms.items()
        return c in (1, -1) and all(k == 0 or self.vars.is_invertible(i) for i, k in enumerate(e))

    def inverse_monomial(self) -> MultiPoly:
        if not self.is_unit_monomial():
            raise DomainError(f"{self} is not a unit of the Laurent ring")
        (e, c), = self.terms.items()
        return MultiPoly(self.vars, {tuple(-k for k in e): c}, _trusted=True)

    def shift(self, exp: Exponent) -> MultiPoly:
        """Multiply by the monomial with exponent vector ``exp``."""
        out = {tuple(map(add, e, exp)): c for e, c in self.terms.items()}
        if any(k < 0 for k in exp):
            for e in out:
                self.vars.check_exponent(e)
        return MultiPoly(self.vars, out, _trusted=True)

    # -- substitution -------------------------------------------------------
    def substitute(self, name: str, image: MultiPoly) -> MultiPoly:
        """Replace variable ``name`` by ``image`` (a polynomial over the same table)."""
        image = self._coerce(image)
        i = self.vars.index(name)
        if image.terms == {tuple(1 if j == i else 0 for j in range(len(self.vars))): 1}:
            return self
        needs_inverse = any(e[i] < 0 for e in self.terms)
        inv_image = image.inverse_monomial() if needs_inverse else None
        powers: dict[int, MultiPoly] = {}

        def power(k: int) -> MultiPoly:
            if k not in powers:
                powers[k] = image ** k if k >= 0 else inv_image ** (-k)
            return powers[k]

        groups: dict[int, dict[Exponent, int]] = {}
        for e, c in self.terms.items():
            groups.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
        result = MultiPoly.zero(self.vars)
        for k, rest in groups.items():
            result = result + MultiPoly(self.vars, rest, _trusted=True) * power(k)
        for e in result.terms:
            self.vars.check_exponent(e)
        return result

    def evaluate(self, images: Mapping[str, object], one=1, zero=0, names: Sequence[str] | None = None):
        """Evaluate in any commutative ring.

        ``images`` maps variable names to ring elements; variables missing from
        ``images`` must not occur.  ``one``/``zero`` are that ring's identities.
        Terms whose image contains an exact integer ``0`` factor are skipped.
        """
        idx = []
        for i, n in enumerate(self.vars.names):
            idx.append(images.get(n, _MISSING))
        cache: dict[tuple[int, int], object] = {}

        def power(i: int, k: int):
            key = (i, k)
            if key not in cache:
                base = idx[i]
                if k == 1:
                    cache[key] = base
                elif k > 1:
                    half = power(i, k // 2)
                    val = half * half
                    if k % 2:
                        val = val * base
                    cache[key] = val
                else:
                    raise DomainError("evaluate() does not support negative exponents")
            return cache[key]

        total = zero
        for e, c in self.terms.items():
            term = None
            skip = False
            for i, k in enumerate(e):
                if not k:
                    continue
                img = idx[i]
                if img is _MISSING:
                    raise UsageError(f"no image for variable {self.vars.names[i]!r}")
                if isinstance(img, int) and img == 0:
                    skip = True
                    break
                f = power(i, k)
                term = f if term is None else term * f
            if skip:
                continue
            if term is None:
                total = total + one * c
            else:
                total = total + term * c
        return total

    def rename(self, vars: VarTable, mapping: Mapping[str, str] | None = None) -> MultiPoly:
        """Re-express over another table; variables map by name (optionally renamed)."""
        mapping = mapping or {}
        pos = []
        for i, n in enumerate(self.vars.names):
            pos.append(vars.index(mapping.get(n, n)) if any(e[i] for e in self.terms) else None)
        out: dict[Exponent, int] = {}
        width = len(vars)
        for e, c in self.terms.items():
            ne = [0] * width
            for i, k in enumerate(e):
                if k:
                    ne[pos[i]] += k
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + c
        return MultiPoly(vars, out)

    # -- rendering ----------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def render(self) -> str:
        return render_terms(self.vars, self.sorted_terms())

    def render_by(self, name: str) -> str:
        """Render grouped by ascending powers of ``name`` (canonical order inside each power)."""
        i = self.vars.index(name)
        ordered = sorted(self.terms.items(), key=lambda t: (t[0][i], [-x for x in (sum(t[0]),) + t[0]]))
        return render_terms(self.vars, ordered)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MultiPoly({self.render()!r})"


_MISSING = object()


def render_monomial(vars: VarTable, exp: Exponent) -> str:
    parts = []
    for name, k in zip(vars.names, exp):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def render_terms(vars: VarTable, terms: Sequence[tuple[Exponent, int]]) -> str:
    if not terms:
        return "0"
    out = []
    for n, (e, c) in enumerate(terms):
        mono = render_monomial(vars, e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if n == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\([A-Za-z_][A-Za-z0-9_]*\))?)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise UsageError(f"cannot parse polynomial text at {text[pos:]!r}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, resolve: Callable[[str], MultiPoly], one: MultiPoly):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.resolve = resolve
        self.one = one

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise UsageError(f"expected {value or 'token'}, got {tok[1]!r}")
        self.pos += 1
        return tok

    def parse(self) -> MultiPoly:
        if not self.tokens:
            raise UsageError("empty polynomial text")
        val = self.expr()
        if self.pos != len(self.tokens):
            raise UsageError(f"trailing input {self.peek()[1]!r}")
        return val

    def expr(self):
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        val = self.term() * sign
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            val = val + t if op == "+" else val - t
        return val

    def term(self):
        val = self.power()
        while self.peek()[1] == "*":
            self.take()
            val = val * self.power()
        return val

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            kind, num = self.take()
            if kind != "num":
                raise UsageError(f"exponent must be an integer, got {num!r}")
            k = int(num)
            return base ** (-k if neg else k)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return self.one * int(val)
        if kind == "name":
            self.take()
            return self.resolve(val)
        if val == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if val == "-":
            self.take()
            return -self.atom()
        raise UsageError(f"unexpected token {val!r}")


def parse_poly(text: str, vars: VarTable, resolve: Callable[[str], MultiPoly] | None = None) -> MultiPoly:
    """Parse polynomial text over ``vars``; ``resolve`` may map extra names to polynomials."""

    def default(name: str) -> MultiPoly:
        if name in vars:
            return MultiPoly.var(vars, name)
        if resolve is not None:
            return resolve(name)
        raise UsageError(f"unknown variable {name!r}")

    return _Parser(text, default, MultiPoly.const(vars, 1)).parse()


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Functional front end for ring operations: ``op`` in add/sub/mul/neg."""
    if op == "neg":
        return -a
    if a.vars != b.vars:
        raise UsageError("polynomials live over different variable tables")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise UsageError(f"unknown operation {op!r}")


def poly_substitute(p: MultiPoly, var: str, image: MultiPoly) -> MultiPoly:
    return p.substitute(var, image)

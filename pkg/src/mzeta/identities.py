"""Identity suites: exact cross-checks between independent computations.

Each suite returns an :class:`IdentityReport` listing every identity it
checked; the first failure is kept as a witness.  ``max_weight`` bounds the
symmetric-function weight of the heavier families (mn for composition
identities, rn for the universal composition polynomials).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import MultiPoly, parse_poly
from .errors import UsageError
from .k0 import ROUTES, AtomSpec, K0Ring, series_mul, verify_special_pair
from .symfunc import (
    SymFunc,
    conjugate,
    kronecker_coefficient,
    lr_coefficient,
    lr_coefficient_via_characters,
    mn_character,
    partitions_of,
    plethysm,
    syt_count,
    z_rho,
)
from .symfunc.tensor import TensorSymFunc
from .universal import p_table, pnr_table, universal_P, universal_Pnr


@dataclass
class IdentityReport:
    suite: str
    passed: bool = True
    checks: list[str] = field(default_factory=list)
    witness: str | None = None

    def check(self, label: str, lhs, rhs) -> bool:
        self.checks.append(label)
        ok = lhs == rhs
        if not ok and self.passed:
            self.passed = False
            self.witness = f"{label}: {lhs} != {rhs}"
        return ok

    def as_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": list(self.checks), "witness": self.witness}


ONE = SymFunc.scalar(1)
ZERO = SymFunc.scalar(0)


def _eval_sym(poly: MultiPoly, images: dict) -> SymFunc:
    return poly.evaluate(images, one=ONE, zero=ZERO)


def _lambda_sf(f: SymFunc, n: int) -> list[SymFunc]:
    return [ONE] + [plethysm(SymFunc.e([r]), f) for r in range(1, n + 1)]


def _pair_images(left, right, n: int) -> dict:
    images = {f"s{i}": left[i] for i in range(1, n + 1)}
    images.update({f"t{i}": right[i] for i in range(1, n + 1)})
    return images


# -- universal polynomials ----------------------------------------------------------

PINNED_P2 = "s1^2*t2 + s2*t1^2 - 2*s2*t2"
PINNED_P22 = "s1*s3 - s4"


def universal_suite(max_weight: int = 8) -> IdentityReport:
    rep = IdentityReport("universal polynomials: naive vs symmetric-function routes")
    rep.check("P_2 pinned", universal_P(2), parse_poly(PINNED_P2, p_table(2)))
    rep.check("P_{2,2} pinned", universal_Pnr(2, 2), parse_poly(PINNED_P22, pnr_table(4)))
    for n in range(1, min(5, max_weight) + 1):
        rep.check(f"P_{n} naive = dual Cauchy", universal_P(n, "naive"), universal_P(n, "cauchy"))
    for n in range(1, max_weight + 1):
        for r in range(1, max_weight // n + 1):
            if n * r > 8:
                continue
            rep.check(
                f"P_{{{n},{r}}} naive = plethysm", universal_Pnr(n, r, "naive"), universal_Pnr(n, r, "plethysm")
            )
    return rep


# -- free lambda-ring of symmetric functions -------------------------------------------

def specialness_suite(max_weight: int = 8, order: int = 4) -> IdentityReport:
    """lambda_t(fg) = lambda_t(f) o lambda_t(g) and e_m[e_n] = P_{m,n}(e)."""
    rep = IdentityReport("free lambda-ring specialness")
    shapes = [mu for k in range(1, 4) for mu in partitions_of(k)]
    Ps = [universal_P(n) for n in range(order + 1)]
    lam = {mu: _lambda_sf(SymFunc.s(mu), order) for mu in shapes}
    for i, mu in enumerate(shapes):
        for nu in shapes[i:]:
            if sum(mu) + sum(nu) > max_weight:
                continue
            prod = _lambda_sf(SymFunc.s(mu) * SymFunc.s(nu), order)
            for n in range(1, order + 1):
                rhs = _eval_sym(Ps[n], _pair_images(lam[mu], lam[nu], n))
                rep.check(f"e_{n}[s{list(mu)} s{list(nu)}] = P_{n}", prod[n].to("p"), rhs.to("p"))
    for m, n, poly in _composition_range(max_weight):
        images = {f"s{i}": SymFunc.e([i]) for i in range(1, m * n + 1)}
        rep.check(
            f"e_{m}[e_{n}] = P_{{{m},{n}}}(e)",
            plethysm(SymFunc.e([m]), SymFunc.e([n])).to("s"),
            _eval_sym(poly, images).to("s"),
        )
    return rep


def _composition_range(max_weight: int):
    for m in range(1, max_weight + 1):
        for n in range(1, max_weight // m + 1):
            if m * n <= 8:
                yield m, n, universal_Pnr(m, n)


def parity_suite(max_weight: int = 8) -> IdentityReport:
    """h_m[h_n] (n odd) and e_m[h_n] (n even) against P_{m,n}(h)."""
    rep = IdentityReport("composition parity identities")
    for m, n, poly in _composition_range(max_weight):
        images = {f"s{i}": SymFunc.h([i]) for i in range(1, m * n + 1)}
        outer, label = (SymFunc.h([m]), "h") if n % 2 else (SymFunc.e([m]), "e")
        rep.check(
            f"{label}_{m}[h_{n}] = P_{{{m},{n}}}(h)",
            plethysm(outer, SymFunc.h([n])).to("s"),
            _eval_sym(poly, images).to("s"),
        )
        # omega twists the outer function only when the inner degree is odd
        twisted = plethysm(outer.omega() if n % 2 else outer, SymFunc.e([n]))
        rep.check(f"omega({label}_{m}[h_{n}]) by the parity rule", plethysm(outer, SymFunc.h([n])).omega().to("s"),
                  twisted.to("s"))
    return rep


def character_suite(max_weight: int = 6) -> IdentityReport:
    rep = IdentityReport("characters, Littlewood-Richardson and Kronecker coefficients")
    top = min(max_weight, 6)
    for n in range(1, top + 1):
        parts = partitions_of(n)
        for la in parts:
            for mu in parts:
                inner = sum(
                    Fraction(mn_character(la, rho) * mn_character(mu, rho), z_rho(rho)) for rho in parts
                )
                rep.check(f"<chi{list(la)}, chi{list(mu)}>", inner, int(la == mu))
            rep.check(f"chi{list(la)}(1^{n}) = f^la", mn_character(la, (1,) * n), syt_count(la))
            for mu in parts:
                col = kronecker_coefficient((1,) * n, la, mu)
                row = kronecker_coefficient((n,), la, mu)
                rep.check(f"g((1^{n}), {list(la)}, {list(mu)})", col, int(mu == conjugate(la)))
                rep.check(f"g(({n}), {list(la)}, {list(mu)})", row, int(mu == la))
    for n in range(2, top + 1):
        for la in partitions_of(n):
            for k in range(1, n):
                for mu in partitions_of(k):
                    for nu in partitions_of(n - k):
                        rep.check(
                            f"c^{list(la)}_{{{list(mu)},{list(nu)}}} tableaux = characters",
                            lr_coefficient(la, mu, nu),
                            lr_coefficient_via_characters(la, mu, nu),
                        )
    return rep


# -- two-alphabet product formulas -------------------------------------------------------

def product_formula_suite(max_degree: int = 4) -> IdentityReport:
    """e_n(XY), h_n(XY) through P_n in the four Sym/Alt combinations."""
    rep = IdentityReport("product formulas in two alphabets")
    for n in range(1, max_degree + 1):
        P = universal_P(n)
        fam = {
            (b, slot): [TensorSymFunc.scalar(1)]
            + [TensorSymFunc.embed(getattr(SymFunc, b)([i]), slot) for i in range(1, n + 1)]
            for b in ("e", "h")
            for slot in (0, 1)
        }
        one, zero = TensorSymFunc.scalar(1), TensorSymFunc.scalar(0)
        cases = [
            ("Alt^n(xy) = P_n(Alt x; Alt y)", "e", "e", "e"),
            ("Alt^n(xy) = P_n(Sym x; Sym y)", "e", "h", "h"),
            ("Sym^n(xy) = P_n(Sym x; Alt y)", "h", "h", "e"),
            ("Sym^n(xy) = P_n(Alt x; Sym y)", "h", "e", "h"),
        ]
        for label, target, left, right in cases:
            rhs = P.evaluate(_pair_images(fam[left, 0], fam[right, 1], n), one=one, zero=zero)
            rep.check(f"{label} at n={n}", TensorSymFunc.product_alphabet(target, n), rhs)
    return rep


# -- motive corpus -----------------------------------------------------------------------

def corpus_ring() -> K0Ring:
    """Two elliptic atoms, a plus atom, a bare minus atom and a free atom."""
    return K0Ring([
        AtomSpec("a", "minus", 2, {2: "L"}),
        AtomSpec("b", "minus", 2, {2: "L"}),
        AtomSpec("c", "plus", 2),
        AtomSpec("d", "minus", 3),
        AtomSpec("u", "free", 10),
    ])


CORPUS = (
    "1", "L", "1 + L", "-1", "-L", "L^-1", "a", "-a", "L*a", "L^-1*a",
    "a*b", "a + b", "a - L", "2*a", "a^2", "c", "c*a", "L^2 - c", "u", "u*a",
    "-u", "L*u + 1", "L*a*b", "1 + a + L", "d", "d*a", "d^2", "c*d", "u^2", "u - a",
)

PRODUCT_CORPUS = (
    "a*b", "a^2", "c*a", "L*a*c", "c*d", "d^2", "u*a", "u^2",
    "(1 + a)*(L - b)", "-a*b", "a*b*c", "u*c",
)


def opposite_suite(order: int = 10, ring: K0Ring | None = None, corpus=CORPUS) -> IdentityReport:
    """Sym_T(x) * Alt_{-T}(x) = 1 up to T^order."""
    ring = ring or corpus_ring()
    rep = IdentityReport("opposite lambda-structures")
    one = MultiPoly.const(ring.vars, 1)
    for x in corpus:
        sym = ring.lambda_series(x, order, "sym")
        alt = ring.lambda_series(x, order, "alt")
        prod = series_mul(sym, [c * (-1) ** i for i, c in enumerate(alt)], order)
        prod = [ring.normalize(c) for c in prod]
        rep.check(f"Sym_T({x}) Alt_-T({x}) = 1 mod T^{order + 1}", prod, [one] + [one * 0] * order)
    return rep


def route_suite(max_degree: int = 6, ring: K0Ring | None = None, corpus=PRODUCT_CORPUS) -> IdentityReport:
    """Every product route gives the same Sym and Alt powers."""
    ring = ring or corpus_ring()
    rep = IdentityReport("route independence of Sym/Alt on products")
    for x in corpus:
        for fam in ("sym", "alt"):
            ref = ring.lambda_series(x, max_degree, fam, ROUTES[0])
            for route in ROUTES[1:]:
                rep.check(
                    f"{fam} of {x} up to {max_degree}: {ROUTES[0]} = {route}",
                    ring.lambda_series(x, max_degree, fam, route),
                    ref,
                )
    return rep


SCHUR_CORPUS = ("1 + L + a", "a*b", "c", "u", "-a", "L*a + c", "d", "u*a - 1")


def _hooks(i: int, j: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return (i + 1,) + (1,) * (j - 1), (i,) + (1,) * j


def schur_suite(ring: K0Ring | None = None, corpus=SCHUR_CORPUS) -> IdentityReport:
    """Decomposition of tensor powers, Pieri for hooks, Tate twisting."""
    ring = ring or corpus_ring()
    rep = IdentityReport("Schur layer identities")
    L = ring.tate()
    for text in corpus:
        x = ring.element(text)
        for n in range(1, 5):
            total = ring.element(0)
            for la in partitions_of(n):
                total = total + ring.schur(la, x) * syt_count(la)
            rep.check(f"({text})^{n} = sum f^la S_la", total, x ** n)
        rep.check(f"S_(1)({text}) = x", ring.schur((1,), x), x)
        for n in range(1, 5):
            rep.check(f"S_({n})({text}) = Sym^{n}", ring.schur((n,), x), ring.sym(n, x))
            rep.check(f"S_(1^{n})({text}) = Alt^{n}", ring.schur((1,) * n, x), ring.alt(n, x))
        for i in range(1, 5):
            for j in range(1, 6 - i):
                big, small = _hooks(i, j)
                rep.check(
                    f"Sym^{i} Alt^{j} ({text}) = S{list(big)} + S{list(small)}",
                    ring.sym(i, x) * ring.alt(j, x),
                    ring.schur(big, x) + ring.schur(small, x),
                )
        for n in range(1, 4):
            for la in partitions_of(n):
                rep.check(
                    f"S{list(la)}(L*({text})) = L^{n} S{list(la)}",
                    ring.schur(la, L * x),
                    ring.schur(la, x) * L ** n,
                )
    return rep


# -- K0 against symmetric functions ---------------------------------------------------------

def _truncate(f: SymFunc, bound: int | None) -> SymFunc:
    e = f.to("e")
    if bound is None:
        return e
    return SymFunc("e", {la: c for la, c in e.terms.items() if not la or la[0] <= bound})


ORACLE_ATOMS = (
    AtomSpec("d", "minus", 3),
    AtomSpec("c", "plus", 2),
    AtomSpec("u", "free", 8),
)

ORACLE_EXPRESSIONS = ("{a}", "-{a}", "{a}^2", "1 + {a}", "2*{a}", "{a} - 1", "{a}^2 - {a}")


def oracle_suite(max_degree: int = 6) -> IdentityReport:
    """Single-atom classes against plethysm in the free lambda-ring.

    A plus or free atom is the alphabet X (Alt^i -> e_i); a minus atom of
    bound f is the negated alphabet -X (Sym^i -> (-1)^i e_i).  Bounded atoms
    live in f (resp. e) variables, i.e. e_i = 0 beyond the bound.
    """
    rep = IdentityReport("lambda-ring engine against plethysm")
    for spec in ORACLE_ATOMS:
        ring = K0Ring([spec])
        sign = -1 if spec.parity == "minus" else 1
        bound = None if spec.parity == "free" else spec.bound
        base = SymFunc.p([1]) * sign
        images = {}
        for i in range(1, spec.bound + 1):
            images[spec.symbol(i)] = SymFunc.e([i]) * (sign ** i)
        top = min(max_degree, 6 if spec.parity != "free" else spec.bound)
        for pattern in ORACLE_EXPRESSIONS:
            text = pattern.format(a=spec.name)
            x = ring.element(text)
            # the symmetric-function image of x, built with the same arithmetic
            fx = _eval_sym(parse_poly(text, ring.vars), {**images, spec.name: base})
            for r in range(1, top + 1):
                for fam, outer in (("Sym", SymFunc.h([r])), ("Alt", SymFunc.e([r]))):
                    value = (ring.sym if fam == "Sym" else ring.alt)(r, x)
                    rep.check(
                        f"{fam}^{r}({text})",
                        _eval_sym(value.poly, images).to("e"),
                        _truncate(plethysm(outer, fx), bound),
                    )
            for n in range(2, min(top, 4) + 1):
                for la in partitions_of(n):
                    if la == (n,) or la == (1,) * n:
                        continue
                    rep.check(
                        f"S{list(la)}({text})",
                        _eval_sym(ring.schur(la, x).poly, images).to("e"),
                        _truncate(plethysm(SymFunc.s(la), fx), bound),
                    )
    return rep


def special_pair_suite() -> IdentityReport:
    ring = corpus_ring()
    rep = IdentityReport("special pairs in the motive model")
    for x, y, order in (("L", "L", 4), ("a", "b", 4), ("1 + L", "a", 4), ("c", "a", 4), ("u", "a", 3)):
        got = verify_special_pair(ring, x, y, order)
        rep.check(f"lambda_t({x} * {y}) = lambda_t({x}) o lambda_t({y}) to order {order}", got.passed, True)
        if not got.passed and rep.witness and got.witness:
            rep.witness += f" ({got.witness})"
    return rep


SUITES: dict[str, Callable[[int], IdentityReport]] = {
    "universal": lambda w: universal_suite(w),
    "specialness": lambda w: specialness_suite(w),
    "parity": lambda w: parity_suite(w),
    "characters": lambda w: character_suite(w),
    "product-formulas": lambda w: product_formula_suite(min(4, w)),
    "routes": lambda w: route_suite(min(6, w)),
    "opposite": lambda w: opposite_suite(10),
    "schur": lambda w: schur_suite(),
    "oracle": lambda w: oracle_suite(min(6, w)),
    "special-pairs": lambda w: special_pair_suite(),
}


def run_identities(max_weight: int = 8, suites=None) -> list[IdentityReport]:
    if max_weight < 1:
        raise UsageError("max weight must be at least 1")
    names = list(SUITES) if suites is None else list(suites)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown identity suites {unknown}; choose from {list(SUITES)}")
    return [SUITES[n](max_weight) for n in names]

import random
from itertools import combinations
from math import comb, prod

import pytest

from mzeta.algebra import MultiPoly, VarTable, parse_poly
from mzeta.errors import DomainError, UsageError
from mzeta.universal import (
    elementary_reduce,
    p_table,
    pnr_table,
    q_poly,
    q_table,
    universal_P,
    universal_Pnr,
    verify_q_fe,
)


# -- integer-root oracle -------------------------------------------------------------

def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def product_in_t(values):
    out = [1]
    for v in values:
        out = poly_mul(out, [1, v])
    return out


def elementary(values, k):
    return sum(prod(c) for c in combinations(values, k)) if k <= len(values) else 0


def roots(n, rng):
    return [rng.randint(-3, 3) for _ in range(n)]


def sigma_images(values, names_prefix, n):
    return {f"{names_prefix}{i}": elementary(values, i) for i in range(1, n + 1)}


@pytest.mark.parametrize("n", range(1, 7))
def test_P_matches_root_products(n):
    rng = random.Random(n)
    P = universal_P(n)
    for _ in range(4):
        xi, x = roots(n, rng), roots(n, rng)
        expect = product_in_t([a * b for a in xi for b in x])
        images = {**sigma_images(xi, "s", n), **sigma_images(x, "t", n)}
        assert P.evaluate(images) == (expect[n] if n < len(expect) else 0)


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in range(1, 5) if n * r <= 10])
def test_Pnr_matches_subset_products(n, r):
    rng = random.Random(10 * n + r)
    P = universal_Pnr(n, r)
    N = n * r
    for _ in range(3):
        xi = roots(N, rng)
        expect = product_in_t([prod(c) for c in combinations(xi, r)])
        assert P.evaluate(sigma_images(xi, "s", N)) == expect[n]


def test_pinned_small_values():
    assert universal_P(1) == parse_poly("s1*t1", p_table(1))
    assert universal_P(2).render() == "s1^2*t2 + s2*t1^2 - 2*s2*t2"
    assert universal_Pnr(2, 2).render() == "s1*s3 - s4"
    for r in range(1, 6):
        assert universal_Pnr(1, r) == parse_poly(f"s{r}", pnr_table(r))
        assert universal_Pnr(r, 1) == parse_poly(f"s{r}", pnr_table(r))


def test_edge_conventions():
    assert universal_P(0) == 1
    assert universal_Pnr(0, 3) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_two_methods_for_P(n):
    assert universal_P(n, "naive") == universal_P(n, "cauchy")


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 9) for r in range(1, 9) if n * r <= 8])
def test_two_methods_for_Pnr(n, r):
    assert universal_Pnr(n, r, "naive") == universal_Pnr(n, r, "plethysm")


def _weights(poly):
    for e in poly.terms:
        ws = wt = 0
        for name, k in zip(poly.vars.names, e):
            (ws := ws + int(name[1:]) * k) if name[0] == "s" else None
            if name[0] == "t":
                wt += int(name[1:]) * k
        yield ws, wt


@pytest.mark.parametrize("n", range(1, 6))
def test_P_swap_symmetry_and_grading(n):
    P = universal_P(n)
    swapped = P.rename(P.vars, {**{f"s{i}": f"t{i}" for i in range(1, n + 1)},
                                **{f"t{i}": f"s{i}" for i in range(1, n + 1)}})
    assert swapped == P
    assert set(_weights(P)) == {(n, n)}


def test_unknown_method():
    with pytest.raises(UsageError):
        universal_P(2, "magic")


# -- symmetric reduction ----------------------------------------------------------------

def test_reduction_examples():
    vt = VarTable(["x1", "x2", "x3"])
    assert elementary_reduce(parse_poly("x1 + x2", VarTable(["x1", "x2"])), ["x1", "x2"]).render() == "s1"
    two = VarTable(["x1", "x2"])
    assert elementary_reduce(parse_poly("x1^2 + x2^2", two), ["x1", "x2"]).render() == "s1^2 - 2*s2"
    m21 = parse_poly("x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2", vt)
    assert elementary_reduce(m21, ["x1", "x2", "x3"]).render() == "s1*s2 - 3*s3"


def test_reduction_rejects_non_symmetric():
    with pytest.raises(DomainError):
        elementary_reduce(parse_poly("x1^2 + x2", VarTable(["x1", "x2"])), ["x1", "x2"])


def test_reduction_substitution_check():
    rng = random.Random(7)
    names = ["x1", "x2", "x3", "x4"]
    vt = VarTable(names + ["c"])
    for _ in range(5):
        # symmetrize a random monomial times a coefficient variable
        e = [rng.randint(0, 3) for _ in range(4)]
        from itertools import permutations

        terms = {}
        for perm in set(permutations(e)):
            terms[tuple(perm) + (1,)] = 1
        p = MultiPoly(vt, terms)
        red = elementary_reduce(p, names)
        xs = [rng.randint(-4, 4) for _ in range(4)]
        cval = rng.randint(-4, 4)
        images = {**sigma_images(xs, "s", 4), "c": cval}
        direct = p.evaluate({**dict(zip(names, xs)), "c": cval})
        assert red.evaluate(images) == direct


# -- q-products -----------------------------------------------------------------------------

@pytest.mark.parametrize("g", [1, 2, 3])
def test_q_matches_subset_products(g):
    rng = random.Random(g)
    for n in range(0, 2 * g + 1):
        q = q_poly(g, n)
        xi = roots(2 * g, rng)
        expect = product_in_t([prod(c) for c in combinations(xi, n)])
        coeffs = q.coefficients_in("t")
        for m, c in enumerate(expect):
            got = coeffs.get(m)
            got = got.evaluate(sigma_images(xi, "s", 2 * g)) if got is not None else 0
            assert got == c


@pytest.mark.parametrize("g", [1, 2, 3])
def test_q_shape(g):
    for n in range(0, 2 * g + 1):
        q = q_poly(g, n)
        b = comb(2 * g, n)
        assert q.degree_in("t") == b
        assert q.coefficient_in("t", 0) == 1
        lead = q.coefficient_in("t", b)
        twist = comb(2 * g - 1, n - 1) if n else 0
        assert lead == MultiPoly.var(lead.vars, f"s{2 * g}", twist)


def test_q_examples():
    assert q_poly(1, 1).render_by("t") == "1 + s1*t + s2*t^2"
    assert q_poly(2, 0).render_by("t") == "1 + t"
    assert q_poly(1, 2).render_by("t") == "1 + s2*t"
    q22 = q_poly(2, 2)
    assert q22.degree_in("t") == 6
    assert q22.coefficient_in("t", 6).render() == "s4^3"


def test_q_range_checked():
    with pytest.raises(UsageError):
        q_poly(1, 3)
    with pytest.raises(UsageError):
        q_poly(0, 0)


@pytest.mark.parametrize("g", [1, 2])
def test_q_universal_route_agrees(g):
    for n in range(0, 2 * g + 1):
        assert q_poly(g, n, "universal") == q_poly(g, n)


@pytest.mark.parametrize("g,G", [(1, 2), (1, 3), (2, 3)])
def test_specialization_chain(g, G):
    for n in range(0, 2 * g + 1):
        big = q_poly(G, n)
        small = q_poly(g, n)
        images = {f"s{i}": (MultiPoly.var(small.vars, f"s{i}") if i <= 2 * g else 0) for i in range(1, 2 * G + 1)}
        images["t"] = MultiPoly.var(small.vars, "t")
        one = MultiPoly.const(small.vars, 1)
        assert big.evaluate(images, one=one, zero=MultiPoly.zero(small.vars)) == small


@pytest.mark.parametrize("g", [1, 2, 3])
def test_q_functional_equation(g):
    for n in range(0, 2 * g + 1):
        rep = verify_q_fe(g, n)
        assert rep.passed, rep.witness
        assert rep.twist == (comb(2 * g - 1, n - 1) if n else 0)


def test_q_functional_equation_reports_failure():
    def broken(g, n):
        q = q_poly(g, n)
        return q + MultiPoly.var(q.vars, "t", 2) if n == 1 else q

    rep = verify_q_fe(1, 1, broken)
    assert not rep.passed and rep.witness

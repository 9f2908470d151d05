from itertools import combinations
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from mzeta.algebra import MultiPoly, VarTable
from mzeta.errors import DomainError, UsageError
from mzeta.identities import CORPUS, PRODUCT_CORPUS, corpus_ring
from mzeta.k0 import ROUTES, AtomSpec, K0Ring, Relation, elliptic_atom, opposite, verify_special_pair

# -- line-element oracle ---------------------------------------------------------------
# Every atom is realized as a signed sum of line elements q^k in Z[q, 1/q], where
# Sym_t of a line is 1/(1 - q^k t).  L is the line q.  Minus atoms are minus a sum
# of f lines whose top elementary value is compatible with the declared images.

Q = VarTable(["q"], ["q"])
LINES = {
    "a": (-1, [0, 1]),
    "b": (-1, [-1, 2]),
    "c": (1, [2, 3]),
    "d": (-1, [0, 1, 3]),
    "u": (1, [-2, -1, 0, 1, 2, 4, 5, 6, 7, 8, 9, 11]),
}


def q(k):
    return MultiPoly.var(Q, "q", k)


def elementary(ks, i):
    return sum((prod((q(k) for k in sub), start=MultiPoly.const(Q, 1)) for sub in combinations(ks, i)),
               MultiPoly.zero(Q))


_IMAGES: dict = {}


def oracle_images(ring):
    key = tuple((n, s.parity, s.bound) for n, s in ring.atoms.items())
    if key in _IMAGES:
        return _IMAGES[key]
    images = {"L": q(1)}
    for name, spec in ring.atoms.items():
        sign, ks = LINES[name]
        for i in range(1, spec.bound + 1):
            images[spec.symbol(i)] = elementary(ks, i) * (sign ** i)
    _IMAGES[key] = images
    return images


def realize(ring, x):
    poly = ring.element(x).poly
    m = max(0, -int(poly.min_degree_in("L"))) if not poly.is_zero() else 0
    poly = poly * MultiPoly.var(ring.vars, "L", m)
    return poly.evaluate(oracle_images(ring), one=MultiPoly.const(Q, 1), zero=MultiPoly.zero(Q)) * q(-m)


def line_series(value, family, r):
    """Sym or Alt series of a virtual sum of lines, as a list of Laurent polynomials."""
    zero = MultiPoly.zero(Q)
    out = [MultiPoly.const(Q, 1)] + [zero] * r
    for (k,), c in value.terms.items():
        # Sym_t(line) = 1/(1 - q^k t) and Alt_t(line) = 1 + q^k t; a negative
        # multiplicity inverts the factor
        s = 1 if family == "sym" else -1
        for _ in range(abs(c)):
            if (c > 0) == (family == "sym"):
                out = [sum((out[j] * q(k * (n - j)) * s ** (n - j) for j in range(n + 1)), zero) for n in range(r + 1)]
            else:
                out = [out[n] + (out[n - 1] * q(k) * -s if n else zero) for n in range(r + 1)]
    return out


def test_line_oracle_sanity():
    ring = corpus_ring()
    assert line_series(realize(ring, "1 + L"), "alt", 2)[2] == q(1)
    assert line_series(realize(ring, "a"), "sym", 3)[2] == q(1)
    assert line_series(realize(ring, "a"), "sym", 3)[3].is_zero()


@pytest.fixture(scope="module")
def ring():
    return corpus_ring()


# -- reference values ----------------------------------------------------------------------

def test_alt_two_of_projective_line(ring):
    assert ring.alt(2, "1 + L") == ring.tate()


def test_sym_three_of_elliptic_vanishes(ring):
    assert ring.sym(3, "a").is_zero()
    assert ring.sym(2, "a") == ring.tate()


@pytest.mark.parametrize("route", ROUTES)
def test_sym_two_of_elliptic_product(ring, route):
    assert ring.sym(2, "a*b", route=route).render() == "a^2*b^2 - L*a^2 - L*b^2 + 2*L^2"


def test_alt_two_from_opposite_recursion(ring):
    assert ring.alt(2, "b").render() == "b^2 - L"


def test_unit_motive(ring):
    for i in range(6):
        assert ring.sym(i, 1) == 1
        assert ring.alt(i, 1) == (1 if i <= 1 else 0)


@pytest.mark.parametrize("x,expect", [("1", [1] * 7), ("L", ["L^%d" % i for i in range(7)])])
def test_sym_series_of_constants(ring, x, expect):
    got = ring.sym_series(x, 6)
    for i, e in enumerate(expect):
        assert got[i] == ring.element(e if isinstance(e, int) else e.replace("L^0", "1")).poly


def test_sym_series_of_elliptic(ring):
    got = ring.sym_series("a", 6)
    assert [got[i].render() for i in range(7)] == ["1", "a", "L", "0", "0", "0", "0"]


def test_schur_edge_rows(ring):
    for n in range(1, 5):
        assert ring.schur((n,), "c*a") == ring.sym(n, "c*a")
        assert ring.schur((1,) * n, "c*a") == ring.alt(n, "c*a")
    assert ring.schur((), "a") == 1


def test_schur_of_tate_vanishes_off_rows(ring):
    assert ring.schur((2, 1), "L").is_zero()
    assert ring.schur((3,), "L") == ring.tate(3)


# -- construction errors -----------------------------------------------------------------

def test_bound_zero_rejected():
    with pytest.raises(UsageError, match="bound 0"):
        K0Ring([AtomSpec("x", "plus", 0)])


@pytest.mark.parametrize("spec", [
    AtomSpec("L", "plus", 1),
    AtomSpec("1x", "plus", 1),
    AtomSpec("x", "odd", 1),
    AtomSpec("x", "plus", -1),
    AtomSpec("x", "minus", 2, {3: "L"}),
])
def test_invalid_atoms(spec):
    with pytest.raises(UsageError):
        K0Ring([spec])


def test_duplicate_atom():
    with pytest.raises(UsageError, match="duplicate"):
        K0Ring([elliptic_atom("h"), elliptic_atom("h")])


def test_relation_ordering_checked():
    with pytest.raises(UsageError):
        K0Ring([AtomSpec("x", "minus", 3)], [Relation("Sym2(x)", "Sym3(x)")])
    with pytest.raises(UsageError):
        K0Ring([AtomSpec("x", "minus", 3)], [Relation("Sym2(x)", "T")])
    with pytest.raises(UsageError, match="twice"):
        K0Ring([AtomSpec("x", "minus", 3, {2: "L"})], [Relation("Sym2(x)", "1")])


def test_relation_applied():
    r = K0Ring([AtomSpec("x", "minus", 4)], [Relation("Sym3(x)", "L*x"), Relation("Sym4(x)", "L^2")])
    assert r.sym(4, "x") == r.tate(2)
    assert r.sym(3, "x").render() == "L*x"


def test_free_atom_past_declared_order(ring):
    ring.alt(10, "u")
    with pytest.raises(DomainError, match="insufficient"):
        ring.alt(11, "u")


def test_classes_reject_zeta_variable(ring):
    with pytest.raises(UsageError):
        ring.element("T*a")


def test_unknown_route(ring):
    with pytest.raises(UsageError):
        ring.sym(2, "a", route="diagonal")


def test_superdimension(ring):
    assert ring.superdim("1 + a + L") == (2, 2)
    assert ring.superdim("a^2") == (4, 0)
    assert ring.superdim("-a") is None


# -- oracle comparisons ----------------------------------------------------------------

@pytest.mark.parametrize("x", CORPUS)
@pytest.mark.parametrize("family", ["sym", "alt"])
def test_corpus_matches_line_oracle(ring, x, family):
    r = 5
    got = ring.lambda_series(x, r, family)
    want = line_series(realize(ring, x), family, r)
    for n in range(r + 1):
        assert realize(ring, got[n]) == want[n], (x, family, n)


@pytest.mark.parametrize("x", PRODUCT_CORPUS)
def test_routes_agree(ring, x):
    base = ring.lambda_data(x, 5, route="mixed")
    for route in ROUTES[1:]:
        assert ring.lambda_data(x, 5, route=route) == base


@pytest.mark.parametrize("x", CORPUS)
def test_opposite_structure(ring, x):
    s = ring.lambda_series(x, 8, "sym")
    a = ring.lambda_series(x, 8, "alt")
    assert opposite(a, 8) == s


@pytest.mark.parametrize("x,y", [("L", "L"), ("a", "b"), ("1 + L", "a"), ("c", "d")])
def test_special_pairs(ring, x, y):
    rep = verify_special_pair(ring, x, y, 4)
    assert rep.passed, rep.witness
    assert rep.checks


def test_pieri_and_decomposition(ring):
    x = "a + c"
    for i in range(1, 4):
        for j in range(1, 5 - i):
            lhs = ring.sym(i, x) * ring.alt(j, x)
            rhs = ring.schur((i + 1,) + (1,) * (j - 1), x) + ring.schur((i,) + (1,) * j, x)
            assert lhs == rhs
    assert ring.element(x) ** 3 == ring.schur((3,), x) + 2 * ring.schur((2, 1), x) + ring.schur((1, 1, 1), x)


# -- properties ------------------------------------------------------------------------

TERMS = ["1", "L", "L^-1", "a", "b", "c", "L*a", "a*b", "c*a", "d", "u"]
expressions = st.lists(st.tuples(st.integers(-2, 2), st.sampled_from(TERMS)), min_size=1, max_size=3).map(
    lambda ts: " + ".join(f"({k})*{t}" for k, t in ts)
)


@settings(max_examples=40, deadline=None)
@given(expressions)
def test_property_opposite(x):
    ring = corpus_ring()
    s = ring.lambda_series(x, 6, "sym")
    a = ring.lambda_series(x, 6, "alt")
    assert opposite(s, 6) == a


@settings(max_examples=30, deadline=None)
@given(expressions, st.sampled_from(["sym", "alt"]))
def test_property_line_oracle(x, family):
    ring = corpus_ring()
    got = ring.lambda_series(x, 4, family)
    want = line_series(realize(ring, x), family, 4)
    assert [realize(ring, g) for g in got] == want


@settings(max_examples=25, deadline=None)
@given(expressions, expressions)
def test_property_additivity(x, y):
    ring = corpus_ring()
    sx, sy = ring.lambda_series(x, 4, "sym"), ring.lambda_series(y, 4, "sym")
    sxy = ring.lambda_series(ring.element(x) + ring.element(y), 4, "sym")
    for n in range(5):
        assert sxy[n] == ring.normalize(sum((sx[i] * sy[n - i] for i in range(n + 1)), MultiPoly.zero(ring.vars)))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["a", "c", "a*b", "1 + a", "c - L"]), st.integers(-2, 3))
def test_property_tate_twist(x, k):
    ring = corpus_ring()
    base = ring.lambda_series(x, 4, "alt")
    twisted = ring.lambda_series(ring.tate(k) * ring.element(x), 4, "alt")
    for n in range(5):
        assert twisted[n] == ring.normalize(base[n] * MultiPoly.var(ring.vars, "L", k * n))

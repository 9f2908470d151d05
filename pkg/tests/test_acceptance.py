"""One test per acceptance criterion; each records a PASS/FAIL line."""
import json
import time

from mzeta.algebra import parse_poly
from mzeta.cli import main
from mzeta.document import preset
from mzeta.identities import (
    CORPUS,
    corpus_ring,
    parity_suite,
    product_formula_suite,
    route_suite,
    schur_suite,
    specialness_suite,
)
from mzeta.k0 import ROUTES
from mzeta.universal import p_table, pnr_table, universal_P, universal_Pnr, verify_q_fe
from mzeta.zeta import (
    abelian_motive,
    abelian_surface_blowup_at_point,
    check_fe,
    curve_motive,
    elliptic_motive,
    elliptic_pair_ring,
    paired_variable_check,
    product_motive,
    t_degree,
    verify_abelian,
    verify_curve,
    verify_product,
)


def _finish(record, number, title, checks):
    failed = [label for label, ok in checks if not ok]
    record(number, title, not failed, f"{len(checks)} checks" + (f"; failed: {failed[:3]}" if failed else ""))
    assert not failed, failed


def test_criterion_01_universal_cross_validation(acceptance_line):
    t0 = time.perf_counter()
    checks = [
        ("P_2 pinned", universal_P(2) == parse_poly("s1^2*t2 + s2*t1^2 - 2*s2*t2", p_table(2))),
        ("P_{2,2} pinned", universal_Pnr(2, 2) == parse_poly("s1*s3 - s4", pnr_table(4))),
    ]
    for n in range(1, 6):
        checks.append((f"P_{n}", universal_P(n, "naive") == universal_P(n, "cauchy")))
    for n in range(1, 9):
        for r in range(1, 8 // n + 1):
            checks.append((f"P_{n},{r}", universal_Pnr(n, r, "naive") == universal_Pnr(n, r, "plethysm")))
    elapsed = time.perf_counter() - t0
    checks.append((f"runtime {elapsed:.1f}s < 60s", elapsed < 60))
    _finish(acceptance_line, 1, "universal polynomials: naive = Cauchy / plethysm", checks)


def test_criterion_02_specialness(acceptance_line):
    rep = specialness_suite(8)
    checks = [(c, True) for c in rep.checks] + [(rep.witness or "specialness", rep.passed)]
    assert any("e_4[s[3] s[3]]" in c or "s[3] s[3]" in c for c in rep.checks)
    assert any("e_2[e_4]" in c for c in rep.checks)
    _finish(acceptance_line, 2, "free lambda-ring specialness", checks)


def test_criterion_03_parity(acceptance_line):
    rep = parity_suite(8)
    checks = [(c, True) for c in rep.checks] + [(rep.witness or "parity", rep.passed)]
    assert any("h_2[h_3]" in c for c in rep.checks) and any("e_2[h_4]" in c for c in rep.checks)
    _finish(acceptance_line, 3, "h_m[h_n] (n odd), e_m[h_n] (n even) = P_{m,n}(h)", checks)


def test_criterion_04_products(acceptance_line):
    formulas = product_formula_suite(4)
    routes = route_suite(6)
    ring = corpus_ring()
    spot = [ring.sym(2, "a*b", route=r).render() for r in ROUTES]
    checks = [
        ("two-alphabet product formulas to degree 4", formulas.passed),
        ("route independence to degree 6", routes.passed),
        ("Sym^2(ab) on every route", spot == ["a^2*b^2 - L*a^2 - L*b^2 + 2*L^2"] * len(ROUTES)),
    ]
    _finish(acceptance_line, 4, "product identities and route independence", checks)


def test_criterion_05_abelian(acceptance_line):
    checks = []
    for g, limit in ((1, 5), (2, 300)):
        t0 = time.perf_counter()
        reports = verify_abelian(g)
        elapsed = time.perf_counter() - t0
        z = abelian_motive(g).zeta()
        half = 2 ** (2 * g - 1)
        checks += [
            (f"g={g} all factor checks", all(r.passed for r in reports)),
            (f"g={g} e = f = {half}", z.e == z.f == half == t_degree(z.numerator) == t_degree(z.denominator_arg)),
            (f"g={g} FE on P^A", check_fe(z.numerator, g, half).passed),
            (f"g={g} FE on Q^A", check_fe(z.denominator_arg, g, half).passed),
            (f"g={g} runtime {elapsed:.2f}s < {limit}s", elapsed < limit),
        ]
    for g in range(1, 4):
        for n in range(0, 2 * g + 1):
            checks.append((f"q^{g}_{n}", verify_q_fe(g, n).passed))
    _finish(acceptance_line, 5, "abelian varieties g = 1, 2", checks)


def test_criterion_06_curves(acceptance_line):
    checks = []
    for g in range(0, 4):
        reports = verify_curve(g)
        numerator = curve_motive(g).zeta().numerator
        checks += [
            (f"g={g} all checks", all(r.passed for r in reports)),
            (f"g={g} degree {2 * g}", t_degree(numerator) == 2 * g),
            (f"g={g} Kapranov exponent", reports[-1].passed and reports[-1].l_exponent == 1 - g),
        ]
    _finish(acceptance_line, 6, "curves g <= 3: degree 2g and functional equation", checks)


def test_criterion_07_products_of_motives(acceptance_line):
    ring = elliptic_pair_ring()
    x, y = elliptic_motive(ring, "a"), elliptic_motive(ring, "b")
    rep = verify_product(x, y)
    minus_minus = next(s for s in rep.sub if s.subject.startswith("Q[E(a)- E(b)-]"))
    checks = [
        ("verify_product", rep.passed),
        ("deg Q(minus x minus) = 4, weight 2", (minus_minus.degree, minus_minus.weight, minus_minus.passed) == (4, 2, True)),
        ("product bounds (8, 8) = abelian surface", product_motive(x, y).bounds() == abelian_motive(2).bounds() == (8, 8)),
        ("paired-variable model", paired_variable_check().passed),
    ]
    _finish(acceptance_line, 7, "elliptic x elliptic product", checks)


def test_criterion_08_blowup(acceptance_line):
    _, rep = abelian_surface_blowup_at_point()
    q = next(s for s in rep.sub if s.subject.startswith("Q["))
    checks = [("blow-up FE", rep.passed), ("degree 9, L-exponent 9, weight 2", (q.degree, q.l_exponent, q.weight) == (9, 9, 2))]
    _finish(acceptance_line, 8, "abelian surface blown up in a point", checks)


def test_criterion_09_opposite(acceptance_line):
    ring = corpus_ring()
    checks = [("corpus has >= 20 expressions with negatives and twists",
               len(CORPUS) >= 20 and any(x.startswith("-") for x in CORPUS) and "L^-1" in CORPUS)]
    for x in CORPUS:
        prod = ring.sym_series(x, 10) * ring.alt_series(x, 10).at_minus_t()
        checks.append((x, prod.is_one()))
    _finish(acceptance_line, 9, "Sym_T(x) Alt_{-T}(x) = 1 to order 10", checks)


def test_criterion_10_schur(acceptance_line):
    rep = schur_suite()
    labels = " ".join(rep.checks)
    checks = [
        ("schur suite", rep.passed),
        ("decomposition n <= 4 covered", "^4 = sum f^la S_la" in labels),
        ("Pieri i + j <= 5 covered", any("Sym^1" in c and "Alt^4" in c for c in rep.checks)),
        ("Tate twist covered", "L *" in labels or "L*" in labels),
    ]
    _finish(acceptance_line, 10, "Schur layer: decomposition, Pieri, Tate twist", checks)


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_criterion_11_cli(acceptance_line, capsys, tmp_path):
    src = tmp_path / "ell.yaml"
    src.write_text(preset("elliptic").dump())
    code, first = _run(capsys, "doc", str(src))
    (tmp_path / "again.yaml").write_text(first)
    round_trip = code == 0 and _run(capsys, "doc", str(tmp_path / "again.yaml"))[1] == first

    deterministic = _run(capsys, "--json", "verify", "product") == _run(capsys, "--json", "verify", "product")

    bad = tmp_path / "bad.yaml"
    bad.write_text("atoms: [{name: h, parity: minus, bound: 2, images: {2: L}}]\n"
                   "motives:\n  B: {plus: '1 + L^2', minus: h, weight: 1}\n  G: {plus: '1 + L', minus: h, weight: 1}\n")
    exit_fail = _run(capsys, "verify", "product", str(bad), "--x", "B", "--y", "G")[0]
    exit_usage = _run(capsys, "verify", "abelian", "--g", "0")[0]

    fresh = tmp_path / "cache"
    code, out = _run(capsys, "--json", "verify", "abelian", "--g", "1", "--cache-dir", str(fresh))
    data = json.loads(out)
    checks = [
        ("document round-trip", round_trip),
        ("deterministic reports", deterministic),
        ("exit 0/1/2", (code, exit_fail, exit_usage) == (0, 1, 2)),
        ("verify abelian --g 1 from a fresh cache", data["status"] == "pass" and data["cache"]["entries"] > 0),
    ]
    _finish(acceptance_line, 11, "command-line contract", checks)

import pytest

from mzeta.errors import UsageError
from mzeta.identities import (
    CORPUS,
    SUITES,
    IdentityReport,
    corpus_ring,
    opposite_suite,
    route_suite,
    run_identities,
    schur_suite,
)
from mzeta.k0 import AtomSpec, K0Ring


@pytest.mark.parametrize("name", list(SUITES))
def test_suite_passes(name):
    (rep,) = run_identities(6, [name])
    assert rep.passed, rep.witness
    assert rep.checks and rep.witness is None


def test_report_records_first_failure():
    rep = IdentityReport("demo")
    assert rep.check("one", 1, 1)
    assert not rep.check("two", 1, 2)
    rep.check("three", 3, 4)
    assert not rep.passed and rep.witness == "two: 1 != 2"
    assert rep.as_dict()["checks"] == ["one", "two", "three"]


def test_corpus_size_and_content():
    assert len(CORPUS) >= 20
    assert any(x.startswith("-") for x in CORPUS)
    assert any("L^-1" in x or "L*" in x for x in CORPUS)


def test_opposite_suite_with_declared_images():
    ring = K0Ring([AtomSpec("a", "plus", 2, {2: "L"})])
    assert opposite_suite(6, ring, ("a", "a^2 - L")).passed


class _SkewedRing(K0Ring):
    """Adds L to every Alt^2, which breaks the opposite relation."""

    def lambda_series(self, x, r, family, route=None):
        out = super().lambda_series(x, r, family, route)
        if family == "alt" and r >= 2:
            out[2] = out[2] + self.tate().poly
        return out


def test_opposite_suite_detects_corruption():
    rep = opposite_suite(4, _SkewedRing([AtomSpec("a", "minus", 2, {2: "L"})]), ("a",))
    assert not rep.passed and rep.witness


def test_route_suite_on_custom_corpus():
    assert route_suite(4, corpus_ring(), ("a*b", "c*c")).passed


def test_schur_suite_on_custom_corpus():
    assert schur_suite(corpus_ring(), ("a",)).passed


def test_unknown_suite():
    with pytest.raises(UsageError):
        run_identities(6, ["nonsense"])
    with pytest.raises(UsageError):
        run_identities(0)

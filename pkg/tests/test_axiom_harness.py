import json

import pytest

from staralg import (
    AxiomReport,
    GridFunction,
    StarPolynomial,
    StarReal,
    SUITES,
    UnsupportedSuiteError,
    broken_involution,
    broken_mul,
    broken_norm,
    broken_zero,
    emit_report,
    grid_algebra,
    make_disk_domain,
    pair_of,
    polynomial_algebra,
    random_sample,
    report_to_dict,
    run_axiom_suite,
    scalar_algebra,
)

IE = pair_of("identity", "exp")
TRIALS = 60  # enough to trip every mutant; the acceptance tests run 500


def scalar(pair):
    return scalar_algebra(pair)


def grid(pair):
    return grid_algebra(make_disk_domain(pair, 2, 8))


def test_all_suites_pass_on_scalar(pair):
    A = scalar(pair)
    for suite in SUITES:
        report = run_axiom_suite(suite, A, trials=TRIALS, seed=3)
        assert report.passed, (suite, report.counterexample)
        assert report.worst_residual <= 1e-9


def test_applicable_suites_pass_on_grid(pair):
    A = grid(pair)
    for suite in ("vector-space", "norm", "normed-algebra", "involution", "c-star"):
        report = run_axiom_suite(suite, A, trials=30, seed=4)
        assert report.passed, (suite, report.counterexample)


def test_vector_space_passes_on_polynomials():
    P = polynomial_algebra(make_disk_domain(IE, 2, 8))
    for suite in ("vector-space", "norm", "normed-algebra"):
        report = run_axiom_suite(suite, P, trials=30, seed=5)
        assert report.passed, (suite, report.counterexample)
    # the inverse law cannot run here and says so
    rep = run_axiom_suite("vector-space", P, trials=5, seed=5)
    assert any("skipped" in n for n in rep.notes)


def test_field_suite_needs_the_scalar_carrier():
    with pytest.raises(UnsupportedSuiteError):
        run_axiom_suite("field", grid(IE), trials=5)


def test_involution_suite_needs_an_involution():
    P = polynomial_algebra(make_disk_domain(IE, 1, 4))
    with pytest.raises(UnsupportedSuiteError):
        run_axiom_suite("involution", P, trials=5)


def test_unknown_suite_rejected():
    with pytest.raises(UnsupportedSuiteError):
        run_axiom_suite("monoid", scalar(IE), trials=5)


def test_broken_zero_fails_vector_space(pair):
    report = run_axiom_suite("vector-space", broken_zero(scalar(pair)), trials=TRIALS)
    assert not report.passed
    assert report.counterexample is not None


def test_broken_norm_fails_norm_suite(pair):
    report = run_axiom_suite("norm", broken_norm(scalar(pair)), trials=TRIALS)
    assert not report.passed
    assert report.counterexample["law"] in ("zero-norm", "homogeneity")


def test_broken_mul_fails_normed_algebra(pair):
    report = run_axiom_suite("normed-algebra", broken_mul(scalar(pair)), trials=TRIALS)
    assert not report.passed


def test_broken_involution_fails_involution_and_cstar(pair):
    for mutant_base in (scalar(pair), grid(pair)):
        mutant = broken_involution(mutant_base)
        for suite in ("involution", "c-star"):
            report = run_axiom_suite(suite, mutant, trials=TRIALS, seed=8)
            assert not report.passed, (mutant.name, suite)
            # the identity involution is linear, not conjugate linear
            assert report.counterexample["law"] == "star-conjugate-linear"


def test_broken_mul_still_satisfies_distributivity():
    # scaling the product by 2 preserves distributivity; only the unit
    # and submultiplicative laws notice, which is why both are checked
    report = run_axiom_suite("normed-algebra", broken_mul(scalar(IE)), trials=TRIALS)
    assert report.counterexample["law"] in ("submultiplicative", "unit-laws")


def test_reports_are_deterministic(pair):
    a = run_axiom_suite("c-star", scalar(pair), trials=40, seed=11)
    b = run_axiom_suite("c-star", scalar(pair), trials=40, seed=11)
    assert a == b
    c = run_axiom_suite("c-star", scalar(pair), trials=40, seed=12)
    assert c.worst_residual != a.worst_residual


def test_report_json_schema():
    report = run_axiom_suite("norm", scalar(IE), trials=10, seed=1)
    doc = json.loads(emit_report([report], "json"))
    assert doc["schema_version"] == 1
    assert doc["overall"] == "ok"
    entry = doc["reports"][0]
    assert list(entry.keys()) == [
        "schema_version",
        "suite",
        "pair",
        "trials",
        "tolerance",
        "passed",
        "worst_residual",
        "counterexample",
    ]
    assert entry["pair"] == ["identity", "exp"]
    assert entry["trials"] == 10
    # notes never leak into the serialized form
    assert "notes" not in entry


def test_counterexample_serializes_preimages():
    report = run_axiom_suite("norm", broken_norm(scalar(IE)), trials=10, seed=2)
    assert not report.passed
    # must survive a strict JSON round trip
    blob = emit_report([report], "json")
    back = json.loads(blob)
    assert back["overall"] == "fail"
    assert back["reports"][0]["counterexample"]["law"] == report.counterexample["law"]


def test_emit_report_text_mode():
    report = run_axiom_suite("vector-space", grid(IE), trials=5, seed=3)
    text = emit_report([report], "text")
    assert "suite=vector-space" in text
    assert "PASS" in text
    assert "note:" in text  # the skipped inverse law is surfaced
    assert text.endswith("overall: ok")
    with pytest.raises(ValueError):
        emit_report([report], "yaml")


def test_random_sample_kinds(pair):
    r = random_sample("star-real", pair, seed=1)
    assert isinstance(r, StarReal) and r.gen == pair.alpha
    c = random_sample("star-complex", pair, seed=1)
    assert c.pair == pair
    g = random_sample("grid-function", pair, seed=1)
    assert isinstance(g, GridFunction) and len(g.values) == 17
    p = random_sample("polynomial", pair, seed=1, degree=4)
    assert isinstance(p, StarPolynomial) and p.degree == 4
    with pytest.raises(ValueError):
        random_sample("matrix", pair)
    with pytest.raises(ValueError):
        random_sample("star-real", pair, bound=1e4)


def test_random_sample_is_seed_deterministic(pair):
    a = random_sample("star-complex", pair, seed=9)
    b = random_sample("star-complex", pair, seed=9)
    assert a == b
    c = random_sample("star-complex", pair, seed=10)
    assert a != c


def test_report_class_is_frozen():
    r = AxiomReport("norm", ("identity", "exp"), 1, 1e-9, True, 0.0)
    with pytest.raises(Exception):
        r.passed = False
    assert report_to_dict(r)["passed"] is True

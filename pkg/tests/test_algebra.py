import math
import random

import pytest

from staralg import (
    DomainMismatchError,
    EvaluationIdeal,
    GridFunction,
    MissingInvolutionError,
    StarPolynomial,
    approx_eq,
    c_conj,
    c_mul,
    c_norm,
    classify_element,
    coordinate_function,
    fn_add,
    fn_involution,
    fn_mul,
    fn_pointwise,
    fn_scalar_mul,
    from_preimages,
    grid_algebra,
    grid_constant,
    hermitian_parts,
    ideal_membership,
    ideal_subset,
    make_disk_domain,
    make_polynomial,
    norm_ball_subset,
    one,
    pair_of,
    poly_eval,
    poly_mul,
    poly_to_grid,
    polynomial_algebra,
    polynomial_subset,
    quotient_norm,
    scalar_algebra,
    subalgebra_closure_check,
    sup_norm,
    zero,
)

IE = pair_of("identity", "exp")


def test_disk_domain_shapes(pair):
    assert len(make_disk_domain(pair, 1, 4)) == 5
    assert len(make_disk_domain(pair, 2, 8)) == 17
    dom = make_disk_domain(pair, 2, 8)
    # all points inside the radius-1/2 disk, origin included
    mods = [abs(p.as_complex) for p in dom.points]
    assert min(mods) == 0.0
    assert max(mods) <= 0.5 + 1e-12
    assert dom.index_of(from_preimages(pair, 0.0, 0.0)) == 0
    # matching is tolerant at 1e-9 on preimages
    assert dom.index_of(from_preimages(pair, -0.5, 0.0)) == dom.index_of(
        from_preimages(pair, -0.5, 1e-12)
    )
    with pytest.raises(ValueError):
        dom.index_of(from_preimages(pair, 0.123, 0.456))


def test_disk_domain_rejects_degenerate():
    with pytest.raises(ValueError):
        make_disk_domain(IE, 0, 8)
    with pytest.raises(ValueError):
        make_disk_domain(IE, 2, 2)


def test_pointwise_ops_and_sup_norm():
    dom = make_disk_domain(IE, 1, 4)
    f = coordinate_function(dom)
    g = grid_constant(dom, one(IE))
    h = fn_add(f, g)  # z + 1
    # sup |z + 1| over the lattice: the point z = 1/2 gives 3/2
    assert sup_norm(h).preimage == pytest.approx(1.5, rel=1e-13)
    prod = fn_mul(h, h)
    assert sup_norm(prod).preimage == pytest.approx(2.25, rel=1e-13)
    scaled = fn_scalar_mul(from_preimages(IE, 0.0, 2.0), f)  # 2i * z
    assert sup_norm(scaled).preimage == pytest.approx(1.0, rel=1e-13)
    starred = fn_involution(f)
    assert starred.values[2].preimages == pytest.approx(
        (f.values[2].preimages[0], -f.values[2].preimages[1]), abs=1e-12
    )


def test_fn_pointwise_dispatch():
    dom = make_disk_domain(IE, 1, 4)
    f = coordinate_function(dom)
    g = grid_constant(dom, one(IE))
    assert fn_pointwise("add", f, g).values == fn_add(f, g).values
    assert fn_pointwise("mul", f, g).values == fn_mul(f, g).values
    lam = from_preimages(IE, 2.0, 0.0)
    assert fn_pointwise("scalar_mul", lam, f).values == fn_scalar_mul(lam, f).values
    assert fn_pointwise("involution", f).values == fn_involution(f).values
    with pytest.raises(ValueError):
        fn_pointwise("pow", f, g)


def test_domain_mismatch_rejected():
    f = coordinate_function(make_disk_domain(IE, 1, 4))
    g = coordinate_function(make_disk_domain(IE, 2, 8))
    with pytest.raises(DomainMismatchError):
        fn_add(f, g)


def test_sup_norm_is_a_beta_value():
    dom = make_disk_domain(pair_of("identity", "exp"), 1, 4)
    n = sup_norm(coordinate_function(dom))
    assert n.gen.name == "exp"
    assert n.preimage == pytest.approx(0.5, abs=1e-14)
    assert n.image == pytest.approx(math.exp(0.5), rel=1e-14)


def test_polynomial_horner_matches_pullback(pair):
    rng = random.Random(5)
    coeffs = [
        from_preimages(pair, rng.uniform(-2, 2), rng.uniform(-2, 2))
        for _ in range(5)
    ]
    p = StarPolynomial(pair, tuple(coeffs))
    at = from_preimages(pair, 0.4, -0.3)
    got = poly_eval(p, at).as_complex
    zc = at.as_complex
    want = sum(c.as_complex * zc**k for k, c in enumerate(coeffs))
    assert abs(got - want) <= 1e-12 * max(1.0, abs(want))


def test_poly_mul_matches_classical(pair):
    p = StarPolynomial(
        pair, (from_preimages(pair, 1.0, 0.0), from_preimages(pair, 0.0, 1.0))
    )  # 1 + i z
    q = StarPolynomial(
        pair, (from_preimages(pair, 2.0, 0.0), from_preimages(pair, 1.0, 0.0))
    )  # 2 + z
    prod = poly_mul(p, q)
    # (1 + i z)(2 + z) = 2 + (1 + 2i) z + i z^2
    assert prod.coefficients[0].preimages == pytest.approx((2.0, 0.0), abs=1e-12)
    assert prod.coefficients[1].preimages == pytest.approx((1.0, 2.0), abs=1e-12)
    assert prod.coefficients[2].preimages == pytest.approx((0.0, 1.0), abs=1e-12)


def test_make_polynomial_trims():
    p = make_polynomial(
        IE,
        (
            from_preimages(IE, 1.0, 0.0),
            from_preimages(IE, 2.0, 0.0),
            from_preimages(IE, 0.0, 0.0),
        ),
    )
    assert p.degree == 1


def test_poly_to_grid_and_ideal():
    dom = make_disk_domain(IE, 2, 8)
    # p(z) = z - 1/2 vanishes at the grid point 1/2
    p = StarPolynomial(
        IE, (from_preimages(IE, -0.5, 0.0), from_preimages(IE, 1.0, 0.0))
    )
    f = poly_to_grid(p, dom)
    at = from_preimages(IE, 0.5, 0.0)
    ideal = EvaluationIdeal(dom, at)
    assert ideal_membership(ideal, f)
    assert quotient_norm(f, ideal).preimage == pytest.approx(0.0, abs=1e-12)
    g = poly_to_grid(
        StarPolynomial(IE, (from_preimages(IE, 0.25, 0.0),)), dom
    )
    assert not ideal_membership(ideal, g)
    assert quotient_norm(g, ideal).preimage == pytest.approx(0.25, rel=1e-13)


def test_evaluation_ideal_requires_grid_point():
    dom = make_disk_domain(IE, 1, 4)
    with pytest.raises(ValueError):
        EvaluationIdeal(dom, from_preimages(IE, 0.3, 0.3))


def test_classify_scalar_elements(pair):
    A = scalar_algebra(pair)
    herm = from_preimages(pair, 1.5, 0.0)
    cls = classify_element(A, herm)
    assert cls.hermitian and cls.normal and not cls.unitary
    # unit-modulus element: unitary and normal, not hermitian
    u = from_preimages(pair, math.cos(0.7), math.sin(0.7))
    cls = classify_element(A, u)
    assert cls.unitary and cls.normal and not cls.hermitian
    # every scalar is normal (the field commutes)
    anyv = from_preimages(pair, 1.1, -2.2)
    assert classify_element(A, anyv).normal


def test_classify_grid_elements():
    dom = make_disk_domain(IE, 1, 4)
    A = grid_algebra(dom)
    # real-axis-valued functions are hermitian
    f = GridFunction(
        dom, tuple(from_preimages(IE, float(k), 0.0) for k in range(len(dom)))
    )
    assert classify_element(A, f).hermitian
    # pointwise unit-modulus functions are unitary
    u = GridFunction(
        dom,
        tuple(
            from_preimages(IE, math.cos(0.3 * k), math.sin(0.3 * k))
            for k in range(len(dom))
        ),
    )
    cls = classify_element(A, u)
    assert cls.unitary and cls.normal


def test_classify_requires_involution():
    dom = make_disk_domain(IE, 1, 4)
    P = polynomial_algebra(dom)
    with pytest.raises(MissingInvolutionError):
        classify_element(P, P.unit)


def test_hermitian_parts_scalar_oracle(pair):
    A = scalar_algebra(pair)
    x = from_preimages(pair, 3.0, 4.0)
    u, v = hermitian_parts(A, x)
    assert u.preimages == pytest.approx((3.0, 0.0), abs=1e-12)
    assert v.preimages == pytest.approx((4.0, 0.0), abs=1e-12)
    assert classify_element(A, u).hermitian
    assert classify_element(A, v).hermitian
    # x = u + i v reconstructs
    i_v = c_mul(from_preimages(pair, 0.0, 1.0), v)
    assert approx_eq(A.add(u, i_v), x, rel=1e-12)


def test_hermitian_parts_grid(pair):
    dom = make_disk_domain(pair, 1, 4)
    A = grid_algebra(dom)
    rng = random.Random(11)
    f = A.sample(rng)
    u, v = hermitian_parts(A, f)
    assert classify_element(A, u).hermitian
    assert classify_element(A, v).hermitian
    iv = A.scalar_mul(from_preimages(pair, 0.0, 1.0), v)
    assert A.distance(A.add(u, iv), f) <= 1e-9


def test_polynomial_subset_closed():
    dom = make_disk_domain(IE, 2, 8)
    A = grid_algebra(dom)
    report = subalgebra_closure_check(
        A, polynomial_subset(dom), trials=120, seed=4
    )
    assert report.passed, report.counterexample


def test_ideal_subset_closed():
    dom = make_disk_domain(IE, 2, 8)
    A = grid_algebra(dom)
    ideal = EvaluationIdeal(dom, from_preimages(IE, 0.5, 0.0))
    report = subalgebra_closure_check(A, ideal_subset(ideal), trials=120, seed=5)
    assert report.passed, report.counterexample


def test_norm_ball_not_closed_under_addition():
    dom = make_disk_domain(IE, 1, 4)
    A = grid_algebra(dom)
    report = subalgebra_closure_check(A, norm_ball_subset(dom), trials=60, seed=6)
    assert not report.passed
    assert report.counterexample["law"].startswith("closed-under")


def test_scalar_conj_is_the_scalar_involution(pair):
    A = scalar_algebra(pair)
    x = from_preimages(pair, 1.25, -0.5)
    assert approx_eq(A.involution(x), c_conj(x))
    assert c_norm(A.involution(x)).preimage == pytest.approx(
        c_norm(x).preimage, rel=1e-13
    )


def test_algebra_zero_and_unit(pair):
    A = scalar_algebra(pair)
    assert A.zero.preimages == (0.0, 0.0)
    assert A.unit.preimages == (1.0, 0.0)
    dom = make_disk_domain(pair, 1, 4)
    G = grid_algebra(dom)
    assert sup_norm(G.unit).preimage == pytest.approx(1.0, abs=1e-14)
    assert sup_norm(G.zero).preimage == 0.0
    assert approx_eq(G.zero.values[0], zero(pair))

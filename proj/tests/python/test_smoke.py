import cmath
import json
import math

import pytest

import hypermix as hx


def all_ops():
    return [
        hx.OperatorConfig.derivative(),
        hx.OperatorConfig.laplacian(),
        hx.OperatorConfig.translation_lp(2.0, "1/2", 2.0),
        hx.OperatorConfig.translation_c0(2.0, "1/2"),
    ]


def sample_element(space):
    literals = {
        hx.SpaceKind.hardy: "1 + 2*z^3 - i*z",
        hx.SpaceKind.bivar_poly: "X(2)Y(1) - 3*X(0)Y(0)",
        hx.SpaceKind.translation_lp: "chi(0,2) + 2*chi(1/2,1)",
        hx.SpaceKind.translation_c0: "ramp",
    }
    return hx.parse_element_literal(space, literals[space.kind])


def test_right_inverse_every_family():
    for op in all_ops():
        space = op.space()
        f = sample_element(space)
        back = hx.apply_T(op, hx.apply_S(op, f))
        assert hx.distance(space, back, f) <= 1e-12


def test_translation_right_inverse_is_exact():
    op = hx.OperatorConfig.translation_lp(4.0, "1/3", 1.0)
    space = op.space()
    f = hx.parse_element_literal(space, "chi(0,2)")
    deep = hx.iterate(op, 16, hx.iterate(op, 16, f, use_S=True))
    assert hx.distance(space, deep, f) == 0.0


def test_frozen_norms():
    space = hx.Space.bivar_poly()
    assert hx.norm(space, hx.BivarPoly.monomial(1, 1)) == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert hx.norm(space, hx.BivarPoly.monomial(2, 2)) == pytest.approx(0.05, abs=1e-15)


def test_hm_witnesses_frozen():
    space = hx.Space.hardy()
    ball = hx.BallSpec(space, hx.TaylorCoeffs([]), 0.5)
    target = hx.parse_element_literal(space, "1")
    ws = hx.hm_witnesses(hx.OperatorConfig.derivative(), ball, target, n_max=10)
    assert ws.first_index == 3
    assert ws.bound_mode == hx.BoundMode.analytic
    assert len(ws.certificates) == 8
    first = ws.certificates[0]
    # u_3 = S^3(1) = z^3/6: inside the ball with a sixth of slack to spare.
    assert first.u_n.coeff(3) == pytest.approx(1.0 / 6.0, abs=1e-15)
    assert first.delta == pytest.approx(1.0 / 6.0, abs=1e-15)
    assert first.residual == 0.0
    assert all(c.inside for c in ws.certificates)


def test_zero_witness_saturates_exactly():
    op = hx.OperatorConfig.translation_lp(2.0, "1", 1.0)
    space = op.space()
    center = hx.parse_element_literal(space, "chi(0,3)")
    ws = hx.zero_witness(op, hx.BallSpec(space, center, 0.5), n_max=8)
    assert ws.first_index == 3
    assert ws.certificates[-1].delta == 0.0


def test_periodic_vector_frozen():
    pv = hx.periodic_vector_derivative(2, 2)
    assert pv.lam == pytest.approx(-1.0 + 0.0j, abs=1e-15)
    assert pv.defect == pytest.approx(math.sqrt(1.25), abs=1e-12)
    assert pv.f.coeffs == pytest.approx([1.0, -1.0, 0.5], abs=1e-15)


def test_leading_polynomials_exact_coefficient():
    ball = hx.BallSpec(hx.Space.hardy(), hx.TaylorCoeffs([]), 0.5)
    ls = hx.leading_polynomials(2 + 1j, ball, n_max=8)
    for n, poly in zip(range(ls.first_index, 9), ls.polynomials):
        assert poly.degree() == n
        assert poly.coeff(n) == (2 + 1j) / math.factorial(n)
    with pytest.raises(ValueError):
        hx.leading_polynomials(0j, ball)


def test_criterion_table_and_csv():
    op = hx.OperatorConfig.derivative()
    one = hx.TaylorCoeffs([1.0])
    table = hx.hm_criterion_table(op, one, one, 14)
    assert table.pass_
    assert len(table.rows) == 14
    lines = table.csv().splitlines()
    assert lines[0] == "n,s_norm,kernel_gap,combined"
    assert len(lines) == 15


def test_kernel_saturation():
    op = hx.OperatorConfig.derivative()
    f = hx.TaylorCoeffs([0.0, 0.0, 0.0, 2.0])
    assert hx.kernel_saturation_index(op, f) == 4
    rows = hx.gk_density_table(op, f, 6)
    assert [r.saturated for r in rows] == [False, False, False, True, True, True]
    assert hx.is_in_kernel(op, f, 4)
    assert not hx.is_in_kernel(op, f, 3)


def test_json_round_trip_matches_canonical_form():
    space = hx.Space.translation_lp(2.0, "1/2", 1.0)
    f = hx.parse_element_literal(space, "chi(0,1) - chi(1/2,1)")
    text = hx.element_json(space, f)
    doc = json.loads(text)
    assert set(doc) == {"space", "data"}
    space2, f2 = hx.element_from_json(text)
    assert space2 == space
    assert hx.distance(space, f, f2) == 0.0
    # Canonical text is stable under a round trip.
    assert hx.element_json(space2, f2) == text


def test_ball_and_op_json_round_trip():
    op = hx.OperatorConfig.translation_c0(3.0, "2/3")
    assert hx.op_from_json(hx.op_json(op)) == op
    space = op.space()
    ball = hx.BallSpec(space, hx.parse_element_literal(space, "ramp"), 0.25)
    ball2 = hx.ball_from_json(hx.ball_json(ball))
    assert ball2.radius == 0.25
    assert hx.distance(space, ball.center, ball2.center) == 0.0


def test_error_surfaces():
    space = hx.Space.hardy()
    with pytest.raises(ValueError):
        hx.parse_element_literal(space, "2*z^")
    with pytest.raises(ValueError):
        hx.BallSpec(space, hx.TaylorCoeffs([]), 0.0)
    with pytest.raises(hx.SpaceMismatchError):
        hx.norm(space, hx.BivarPoly.monomial(0, 0))
    with pytest.raises(hx.SpaceMismatchError):
        hx.scale(hx.Space.bivar_poly(), 1j, hx.BivarPoly.monomial(0, 0))


def test_no_witness_keeps_delta_profile():
    ball = hx.BallSpec(hx.Space.hardy(), hx.TaylorCoeffs([]), 0.5)
    target = hx.TaylorCoeffs([1.0])
    with pytest.raises(hx.NoWitnessInRange) as info:
        hx.hm_witnesses(hx.OperatorConfig.derivative(), ball, target, n_max=2)
    deltas = dict(info.value.deltas)
    assert deltas[2] == pytest.approx(0.5, abs=1e-15)


def test_capacity_error_reports_safe_iterations():
    op = hx.OperatorConfig.derivative()
    tall = hx.TaylorCoeffs.monomial(200)
    with pytest.raises(hx.CapacityError) as info:
        hx.iterate(op, 200, tall)
    assert 0 < info.value.max_safe_k < 200


def test_verify_suite_passes():
    results = hx.run_verify_suite()
    assert hx.all_passed(results)
    assert len(results) >= 10

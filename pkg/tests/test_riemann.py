import math

import numpy as np
import pytest

from filmwaves import (
    State,
    WaveFamily,
    WavePattern,
    classify,
    classify_wave4,
    intermediate_states,
    lax_admissible,
    rh_residual,
    sample,
    sample_profile,
    solve,
    solve_gm,
    to_invariants,
)
from oracles import (
    bisect_oracle,
    random_solvable_pair,
    reachable_fb_limit,
    solve_lower_pair,
)


def reference_gm_oracle(left, right):
    """Test-local bisection on the middle-state residual (rarefaction case)."""
    u_l, v_l, u_r = left.fb, left.gq, right.fb
    g_l, q_l = left.g, left.q

    def residual(g):
        return g * g * q_l - math.sqrt(g * g_l) * (u_l + v_l) + u_r * g_l

    g_stat = (math.sqrt(g_l) * (u_l + v_l) / (4.0 * q_l)) ** (2.0 / 3.0)
    return bisect_oracle(residual, min(g_stat, g_l), max(g_stat, g_l))


def test_classify(ref_left, ref_right):
    assert classify(ref_left, ref_right) is WaveFamily.RAREF2  # 2.34 >= 1.116
    assert classify(ref_right, ref_left) is WaveFamily.SHOCK2
    assert classify(ref_left, ref_left) is WaveFamily.RAREF2


def test_solve_gm_reference_data(ref_left, ref_right):
    u_l, v_l, u_r = ref_left.fb, ref_left.gq, ref_right.fb
    g_l, q_l = ref_left.g, ref_left.q

    def residual(g):
        return g * g * q_l - math.sqrt(g * g_l) * (u_l + v_l) + u_r * g_l

    g_stat = (math.sqrt(g_l) * (u_l + v_l) / (4.0 * q_l)) ** (2.0 / 3.0)
    assert g_stat == pytest.approx(0.9875, abs=2e-4)
    assert residual(g_l) == pytest.approx(2.6928, abs=1e-10)  # g_l (u_r - u_l)
    assert residual(g_stat) == pytest.approx(-2.1657, abs=1e-3)

    g_m = solve_gm(ref_left, ref_right)
    oracle = reference_gm_oracle(ref_left, ref_right)
    assert g_m == pytest.approx(oracle, abs=1e-10)
    assert g_m == pytest.approx(1.7845, abs=1e-4)
    assert abs(residual(g_m)) <= 1e-10


def test_solve_gm_equal_states(ref_left):
    assert solve_gm(ref_left, ref_left) == ref_left.g


def test_solve_gm_shock_case(ref_left, ref_right):
    # swapped data: decreasing lower product, cubic residual
    left, right = ref_right, ref_left
    u_l, u_r = left.fb, right.fb
    g_l, q_l, v_l = left.g, left.q, left.gq
    s = math.sqrt(u_l * u_r)

    def residual(g):
        return q_l * g**3 + g * g_l * (u_r - u_l - s) - g_l**2 * (v_l + u_l - u_r - s)

    assert residual(g_l) == pytest.approx(2.0 * g_l**2 * (u_r - u_l), rel=1e-12)
    assert residual(g_l) < 0.0
    g_m = solve_gm(left, right)
    assert g_m > g_l
    hi = g_l
    while residual(hi) < 0.0:
        hi *= 2.0
    oracle = bisect_oracle(residual, g_l, hi)
    assert g_m == pytest.approx(oracle, abs=1e-10)
    scale = max(abs(residual(0.5 * g_m)), 1.0)
    assert abs(residual(g_m)) <= 1e-12 * scale


def test_intermediate_states_reference_data(ref_left, ref_right):
    g_m = solve_gm(ref_left, ref_right)
    left_star, mid_star, right_star = intermediate_states(ref_left, ref_right, g_m)
    # independent radical evaluation
    f_ls = math.sqrt(1.116 * 1.5 / 1.56)
    assert left_star == pytest.approx((f_ls, 1.116 / f_ls, 2.2, 2.5), rel=1e-12)
    assert mid_star == pytest.approx((1.5, 1.56, g_m, g_m * 2.5 / 2.2), rel=1e-12)
    g_rs = g_m * math.sqrt(2.5 * 1.7 / (2.2 * 0.9))
    q_rs = g_m * math.sqrt(2.5 * 0.9 / (2.2 * 1.7))
    assert right_star == pytest.approx((1.5, 1.56, g_rs, q_rs), rel=1e-12)
    # ballpark agreement with the coarse published digits
    assert np.allclose(left_star, (1.0359, 1.0773, 2.2, 2.5), atol=2e-4)
    assert np.allclose(right_star, (1.5, 1.56, 2.6145, 1.3841), atol=2e-4)


def test_intermediate_states_continuity_constraints(rng):
    for _ in range(30):
        left, right = random_solvable_pair(rng)
        g_m = solve_gm(left, right)
        left_star, mid_star, right_star = intermediate_states(left, right, g_m)
        assert left_star.fb == pytest.approx(left.fb, rel=1e-12)  # across wave 1
        assert (mid_star.f, mid_star.b) == (right.f, right.b)  # across waves 3, 4
        assert (right_star.f, right_star.b) == (right.f, right.b)
        assert mid_star.gq == pytest.approx(right_star.gq, rel=1e-12)  # across wave 3
        assert right_star.q / right_star.g == pytest.approx(
            right.q / right.g, rel=1e-12
        )  # shared field-4 locus


def test_intermediate_states_equal_data(ref_left):
    stars = intermediate_states(ref_left, ref_left, ref_left.g)
    for star in stars:
        assert np.allclose(star, ref_left, rtol=1e-14)


def test_classify_wave4_reference_data(ref_left, ref_right):
    g_m = solve_gm(ref_left, ref_right)
    threshold = math.sqrt(2.2 * 1.7 * 0.9 / 2.5)
    assert threshold == pytest.approx(1.1603, abs=1e-4)
    assert g_m > threshold
    assert classify_wave4(ref_left, ref_right, g_m) is WaveFamily.SHOCK4
    assert classify_wave4(ref_left, ref_right, threshold) is WaveFamily.RAREF4
    assert classify_wave4(ref_left, ref_left, ref_left.g) is WaveFamily.RAREF4


def test_solve_reference_structure(ref_left, ref_right):
    fan = solve(ref_left, ref_right)
    assert fan.pattern is WavePattern.R2_S4
    assert fan.pattern.sequence == "J1+R2+J3+S4"
    s1, head2, tail2, s3, s4, s4b = fan.speeds
    assert s1 == pytest.approx(0.558, abs=1e-12)
    assert (head2, tail2) == pytest.approx((1.674, 3.51), abs=1e-12)
    g_m = reference_gm_oracle(ref_left, ref_right)
    assert s3 == pytest.approx(2.34 + g_m * (g_m * 2.5 / 2.2) / 2.0, abs=1e-9)
    assert s4 == s4b
    assert s4 == pytest.approx(6.0907, abs=1e-4)
    assert len(fan.warnings) == 1 and "right state" in fan.warnings[0]
    assert np.all(np.diff(fan.speeds) >= 0)


def test_shock_branch_matches_wavecurve_parameterization(ref_left, ref_right):
    # the field-2 shock appears twice in the code base: as a wave curve
    # (cubic in the unknown g, parameterized from its own left state) and
    # inside the assembled fan (cubic in g_M* in terms of the original
    # data); both must land on the same middle state and speed
    from filmwaves import shock2

    fan = solve(ref_right, ref_left)  # swapped data: decreasing fb
    assert fan.pattern in (WavePattern.S2_S4, WavePattern.S2_R4)
    wave2 = fan.waves[1]
    curve = shock2(fan.left_star, ref_left.fb)
    assert np.allclose(curve.right, fan.mid_star, rtol=1e-11)
    assert curve.speed == pytest.approx(wave2.speed, rel=1e-13)


def test_solve_equal_states(ref_left):
    fan = solve(ref_left, ref_left)
    for xi in (-1.0, 0.0, 0.557, 1.0, 5.0, 100.0):
        assert np.allclose(sample(fan, xi), ref_left, rtol=1e-13)


def test_all_speeds_positive(rng):
    for _ in range(30):
        fan = solve(*random_solvable_pair(rng))
        assert all(s > 0.0 for s in fan.speeds)


def test_strict_data_never_warns_or_misorders(rng):
    for _ in range(100):
        fan = solve(*random_solvable_pair(rng))
        assert fan.warnings == ()
        assert np.all(np.diff(fan.speeds) >= -1e-12 * max(fan.speeds))


def test_positive_only_data_warns_not_raises():
    # near-constant data with fb > gq swaps the middle speeds; must come
    # back as a warning, not an exception
    left = State(1.0, 1.5, 1.0, 0.3)
    right = State(1.0, 1.45, 1.0, 0.32)
    fan = solve(left, right)
    assert any("not strictly admissible" in w for w in fan.warnings)
    assert any("not monotone" in w for w in fan.warnings)
    assert sample(fan, 0.0) == left


def test_unreachable_spreading_data_reports_no_root():
    # a field-2 fan cannot stretch past the resonant boundary; data
    # demanding more has no classical four-wave solution, and the solver
    # reports the failed bracket instead of fabricating a state
    left = State(1.0, 1.0, 1.0, 2.0)
    limit = reachable_fb_limit(left)
    u_r = 3.0 * limit
    right = State(math.sqrt(u_r), math.sqrt(u_r), 1.0, 1.5 * u_r)
    from filmwaves import BracketError

    with pytest.raises(BracketError):
        solve(left, right)


def test_sample_outside_fan(ref_left, ref_right):
    fan = solve(ref_left, ref_right)
    assert sample(fan, -1.0) == ref_left
    assert sample(fan, 0.0) == ref_left  # all wave speeds positive
    assert sample(fan, 1e9) == ref_right


def test_sample_inside_spreading_wave(ref_left, ref_right):
    fan = solve(ref_left, ref_right)
    st = sample(fan, 2.5)
    assert st.fb == pytest.approx(5.0 / 3.0, rel=1e-12)
    assert st.f / st.b == pytest.approx(1.5 / 1.56, rel=1e-12)
    w = to_invariants(st)
    w_star = to_invariants(fan.left_star)
    assert w.eta == pytest.approx(w_star.eta, rel=1e-10)


def test_sample_adjacent_to_waves(ref_left, ref_right):
    fan = solve(ref_left, ref_right)
    s1, head2, tail2, s3, s4, _ = fan.speeds
    eps = 1e-11
    pairs = [
        (s1 - eps, fan.left), (s1 + eps, fan.left_star),
        (head2 - eps, fan.left_star), (tail2 + eps, fan.mid_star),
        (s3 - eps, fan.mid_star), (s3 + eps, fan.right_star),
        (s4 - eps, fan.right_star), (s4 + eps, fan.right),
    ]
    for xi, expected in pairs:
        assert np.allclose(sample(fan, xi), expected, rtol=1e-10)
    # fan edges blend into the adjacent constants
    assert np.allclose(sample(fan, head2 + eps), fan.left_star, rtol=1e-8)
    assert np.allclose(sample(fan, tail2 - eps), fan.mid_star, rtol=1e-8)


def test_fan_interior_invariants(rng):
    # field-2 fans hold all three field-2 invariants; field-4 fans hold
    # f, b exactly and the ratio q/g
    fan = solve(State(1.0, 0.8, 1.3, 1.4), State(1.2, 0.875, 1.1, 2.2))
    w2 = fan.waves[1]
    assert w2.family is WaveFamily.RAREF2
    w_ref = to_invariants(fan.left_star)
    for xi in np.linspace(w2.fan[0], w2.fan[1], 100):
        w = to_invariants(sample(fan, xi))
        assert w.xi == pytest.approx(w_ref.xi, rel=1e-10)
        assert w.tau == pytest.approx(w_ref.tau, rel=1e-10)
        assert w.eta == pytest.approx(w_ref.eta, rel=1e-10)
    w4 = fan.waves[3]
    if w4.family is WaveFamily.RAREF4:
        for xi in np.linspace(w4.fan[0], w4.fan[1], 100):
            st = sample(fan, xi)
            assert (st.f, st.b) == (fan.right_star.f, fan.right_star.b)
            assert st.q / st.g == pytest.approx(
                fan.right_star.q / fan.right_star.g, rel=1e-12
            )


def test_weak_solution_properties(rng):
    for _ in range(40):
        left, right = random_solvable_pair(rng)
        fan = solve(left, right)
        for wave in fan.waves:
            if wave.is_discontinuity:
                res = np.max(np.abs(rh_residual(wave.left, wave.right, wave.speed)))
                scale = max(
                    1.0, float(np.max(np.abs(np.asarray(wave.right) - np.asarray(wave.left))))
                ) * max(1.0, abs(wave.speed))
                assert res <= 1e-10 * scale
                if wave.family in (WaveFamily.SHOCK2, WaveFamily.SHOCK4):
                    assert lax_admissible(wave)


def test_scaling_symmetry(ref_left, ref_right):
    # (f, b) -> (a f, b / a) keeps fb fixed, so speeds and the upper-layer
    # wave structure must be unchanged
    a = 1.7
    scaled_l = State(a * ref_left.f, ref_left.b / a, ref_left.g, ref_left.q)
    scaled_r = State(a * ref_right.f, ref_right.b / a, ref_right.g, ref_right.q)
    fan = solve(ref_left, ref_right)
    fan_s = solve(scaled_l, scaled_r)
    assert np.allclose(fan.speeds, fan_s.speeds, rtol=1e-12)
    for st, st_s in zip(
        (fan.left_star, fan.mid_star, fan.right_star),
        (fan_s.left_star, fan_s.mid_star, fan_s.right_star),
    ):
        assert (st.g, st.q) == pytest.approx((st_s.g, st_s.q), rel=1e-12)


@pytest.mark.parametrize("swap", [False, True])
def test_thin_upper_layer_matches_two_component_solver(swap):
    # with the upper layer nearly absent, the lower pair must follow the
    # standalone 2-component system
    eps = 1e-6
    lower_l, lower_r = (1.24, 0.90), (1.5, 1.56)
    if swap:
        lower_l, lower_r = lower_r, lower_l
    left = State(lower_l[0], lower_l[1], eps, eps)
    right = State(lower_r[0], lower_r[1], eps, eps)
    fan = solve(left, right)
    sample2 = solve_lower_pair(*lower_l, *lower_r)
    for xi in np.linspace(0.0, 6.0, 121):
        st = sample(fan, xi)
        h, c = sample2(xi)
        assert st.f == pytest.approx(h, abs=1e-4)
        assert st.b == pytest.approx(c, abs=1e-4)


def test_sample_profile_time_zero(ref_left, ref_right):
    fan = solve(ref_left, ref_right)
    xs = np.array([-1.0, -0.1, 0.1, 2.0])
    rows = sample_profile(fan, xs, 0.0)
    assert np.allclose(rows[0], ref_left) and np.allclose(rows[1], ref_left)
    assert np.allclose(rows[2], ref_right) and np.allclose(rows[3], ref_right)

import math

import pytest
from hypothesis import given, settings, strategies as st

from hornsat import (
    DomainError,
    InvalidParamsError,
    MeanFieldState,
    NoCriticalPointError,
    critical_d1,
    flow_at,
    predict_h,
    recursion_step,
)

# frozen high-precision values (mpmath, 50 digits)
D1_STAR_3 = 0.098257422037058488
D1_STAR_2 = 0.175639364649935927
EXP_D1_STEP = 0.017838967641699282  # 1 - exp(-0.018)


class TestFlow:
    def test_t0_with_zero_units_returns_initial(self):
        s = flow_at(0.0, MeanFieldState(n=100.0, d1=0.0, d2=0.0, d3=2.5))
        assert (s.n, s.d1, s.d2, s.d3) == (100.0, 0.0, 0.0, 2.5)

    def test_derived_point(self):
        s = flow_at(0.1, MeanFieldState(n=1e6, d1=0.1, d2=0.0, d3=1.8))
        assert math.isclose(s.d1, EXP_D1_STEP, rel_tol=1e-12)
        assert math.isclose(s.d2, 0.324, rel_tol=1e-12)
        assert math.isclose(s.d3, 1.458, rel_tol=1e-12)
        assert math.isclose(s.n, 9e5, rel_tol=1e-12)

    def test_t0_identity_without_longer_clauses(self):
        s = flow_at(0.0, MeanFieldState(n=10.0, d1=0.37, d2=0.0, d3=0.0))
        assert s.d1 == 0.37

    @pytest.mark.parametrize("t", [1.0, 1.5, -0.01])
    def test_domain(self, t):
        with pytest.raises(DomainError):
            flow_at(t, MeanFieldState(n=1.0, d1=0.1, d2=0.0, d3=1.0))


class TestRecursion:
    def test_zero_unit_fixed_point(self):
        s = recursion_step(MeanFieldState(n=1000.0, d1=0.0, d2=0.0, d3=1.8))
        assert (s.n, s.d1, s.d2, s.d3) == (1000.0, 0.0, 0.0, 1.8)

    def test_no_three_clauses_kills_units(self):
        s = recursion_step(MeanFieldState(n=1000.0, d1=0.5, d2=0.0, d3=0.0))
        assert (s.n, s.d1, s.d2, s.d3) == (500.0, 0.0, 0.0, 0.0)

    def test_derived_step(self):
        s = recursion_step(MeanFieldState(n=1e6, d1=0.1, d2=0.0, d3=1.8))
        assert math.isclose(s.n, 9e5, rel_tol=1e-15)
        assert math.isclose(s.d1, EXP_D1_STEP, rel_tol=1e-12)
        assert math.isclose(s.d2, 0.324, rel_tol=1e-12)
        assert math.isclose(s.d3, 1.458, rel_tol=1e-12)

    @given(
        st.floats(0.001, 0.999),
        st.floats(0.0, 3.0),
        st.floats(0.0, 4.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_matches_flow_at_t_equals_d1(self, d1, d2, d3):
        state = MeanFieldState(n=1e6, d1=d1, d2=d2, d3=d3)
        stepped = recursion_step(state)
        flowed = flow_at(d1, state)
        assert stepped.n == flowed.n
        assert stepped.d2 == flowed.d2
        assert stepped.d3 == flowed.d3
        assert stepped.d1 == 1.0 - math.exp(-d1 * (d2 + d1 * d3))

    @given(st.floats(0.0, 0.999), st.floats(0.0, 3.0), st.floats(0.0, 4.0))
    @settings(max_examples=100, deadline=None)
    def test_n_and_d3_non_increasing_d1_in_unit_interval(self, d1, d2, d3):
        state = MeanFieldState(n=1e6, d1=d1, d2=d2, d3=d3)
        for _ in range(5):
            nxt = recursion_step(state)
            assert nxt.n <= state.n
            assert nxt.d3 <= state.d3
            assert 0.0 <= nxt.d1 < 1.0
            state = nxt


class TestPredictH:
    def test_zero_units_terminates_immediately(self):
        assert predict_h(1e9, 0.0, 5.0) == (0, True)

    def test_initial_below_one_unit(self):
        assert predict_h(5, 0.1, 1.8) == (0, True)

    def test_golden_off_critical(self):
        assert predict_h(1e6, 0.1, 1.8) == (12, True)
        assert predict_h(2**14, 0.1, 1.8) == (7, True)
        assert predict_h(1e5, 0.1, 1.8) == (9, True)

    def test_critical_much_deeper_than_off_critical(self):
        h_crit, terminated = predict_h(1e6, critical_d1(3.0), 3.0)
        assert terminated
        h_off = predict_h(1e6, 0.1, 1.8)[0]
        assert h_crit >= 10 * h_off
        assert 400 <= h_crit <= 1500  # ~sqrt(n) growth at the float-precision critical point

    def test_max_iters_reported(self):
        h, terminated = predict_h(1e6, 0.1, 1.8, max_iters=5)
        assert (h, terminated) == (5, False)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(n=0.5, d1=0.1, d3=1.0),
            dict(n=10, d1=1.0, d3=1.0),
            dict(n=10, d1=-0.1, d3=1.0),
            dict(n=10, d1=0.1, d3=-1.0),
            dict(n=10, d1=0.1, d3=1.0, max_iters=-1),
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidParamsError):
            predict_h(**kwargs)

    @pytest.mark.parametrize("d1,d3", [(0.3, 0.5), (0.6, 1.5), (0.2, 1.9)])
    def test_unit_mass_eventually_strictly_decreasing_subcritical(self, d1, d3):
        state = MeanFieldState(n=1e6, d1=d1, d2=0.0, d3=d3)
        masses = [state.d1 * state.n]
        while state.d1 * state.n >= 1.0:
            state = recursion_step(state)
            masses.append(state.d1 * state.n)
        tail = masses[max(1, len(masses) // 4):]
        assert all(a > b for a, b in zip(tail, tail[1:]))


class TestCriticalD1:
    def test_reference_values(self):
        assert abs(critical_d1(3.0) - 0.0983) <= 0.0005
        assert math.isclose(critical_d1(3.0), D1_STAR_3, rel_tol=1e-12)
        assert math.isclose(critical_d1(2.0), D1_STAR_2, rel_tol=1e-12)

    def test_d3_2_closed_form(self):
        # t0 = 1/2, so d1* = 1 - e^0.5 / 2
        assert math.isclose(critical_d1(2.0), 1.0 - math.exp(0.5) / 2.0, rel_tol=1e-15)

    def test_below_two_has_no_critical_point(self):
        with pytest.raises(NoCriticalPointError):
            critical_d1(1.9)

    def test_decreasing_and_continuous_on_grid(self):
        grid = [2.0 + 0.01 * k for k in range(1801)]  # up to d3 = 20
        values = [critical_d1(d3) for d3 in grid]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert max(abs(a - b) for a, b in zip(values, values[1:])) < 5e-3

import math

import numpy as np
import pytest

from pulsepair.errors import OutOfWindow, ResonanceRequired
from pulsepair.pulses import (
    CoefficientMode,
    PulseShape,
    PulseSpec,
    coefficient_map,
    envelope,
    exp_coefficients,
    exp_intermediates,
    pulse_angle,
    rect_coefficients,
    rect_intermediates,
    rotation_matrix,
    undriven_coefficients,
)

import oracles

LITERAL = CoefficientMode.LITERAL
UNITARY = CoefficientMode.UNITARY


class TestPulseSpec:
    def test_factories_set_shapes(self):
        assert PulseSpec.rectangular(1.0, duration=2.0).shape is PulseShape.RECTANGULAR
        assert PulseSpec.exponential(1.0, 0.5).shape is PulseShape.EXPONENTIAL
        assert PulseSpec.none().shape is PulseShape.NONE

    def test_rectangular_requires_positive_duration(self):
        with pytest.raises(ValueError):
            PulseSpec.rectangular(1.0, duration=0.0)
        with pytest.raises(ValueError):
            PulseSpec.rectangular(1.0, duration=-1.0)

    def test_exponential_requires_positive_width(self):
        with pytest.raises(ValueError):
            PulseSpec.exponential(1.0, 0.0)

    def test_exponential_rejects_detuning(self):
        with pytest.raises(ResonanceRequired):
            PulseSpec(shape=PulseShape.EXPONENTIAL, omega0=1.0, delta=0.3, gamma_p=1.0)

    def test_negative_rabi_frequency_rejected(self):
        with pytest.raises(ValueError):
            PulseSpec.rectangular(-1.0, duration=1.0)

    def test_undriven_spec_must_be_empty(self):
        with pytest.raises(ValueError):
            PulseSpec(shape=PulseShape.NONE, omega0=1.0)


class TestEnvelope:
    def test_rectangle_window(self):
        p = PulseSpec.rectangular(1.0, duration=2.0)
        assert envelope(p, 1.0) == 1.0
        assert envelope(p, 0.0) == 1.0
        assert envelope(p, 2.0) == 1.0
        assert envelope(p, 2.0001) == 0.0
        assert envelope(p, -0.5) == 0.0

    def test_exponential_decay(self):
        assert envelope(PulseSpec.exponential(1.0, 1.0), 0.0) == 1.0
        assert envelope(PulseSpec.exponential(1.0, 2.0), 1.0) == pytest.approx(
            0.1353352832366127, abs=1e-15
        )
        assert envelope(PulseSpec.exponential(1.0, 2.0), -0.1) == 0.0

    def test_none_is_identically_zero(self):
        for t in (-1.0, 0.0, 3.7):
            assert envelope(PulseSpec.none(), t) == 0.0


class TestPulseAngle:
    def test_starts_at_zero(self):
        assert pulse_angle(PulseSpec.exponential(3.0, 0.7), 0.0) == 0.0

    def test_saturates_at_rabi_over_width(self):
        p = PulseSpec.exponential(5.0, 1.0)
        assert pulse_angle(p, 1000.0) == pytest.approx(5.0, abs=1e-15)

    def test_monotone_and_bounded(self):
        p = PulseSpec.exponential(4.0, 0.5)
        ts = np.linspace(0.0, 30.0, 400)
        lams = [pulse_angle(p, t) for t in ts]
        assert all(b >= a for a, b in zip(lams, lams[1:]))
        assert lams[-1] <= 4.0 / 0.5

    def test_rejects_other_shapes(self):
        with pytest.raises(ValueError):
            pulse_angle(PulseSpec.rectangular(1.0, duration=1.0), 0.5)


def test_rotation_matrix_is_proper_orthogonal():
    rng = np.random.default_rng(5)
    for _ in range(50):
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        r = rotation_matrix(axis, rng.uniform(-8.0, 8.0))
        assert np.abs(r.T @ r - np.eye(3)).max() < 1e-12
        assert np.linalg.det(r) == pytest.approx(1.0, abs=1e-12)


def test_rotation_matrix_x_quarter_turn():
    r = rotation_matrix((1.0, 0.0, 0.0), math.pi / 2.0)
    expected = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]])
    assert np.abs(r - expected).max() < 1e-15


class TestRectIntermediates:
    def test_start_values(self):
        # c_plus(0) = 1 exactly: the two prefactors average to one
        for delta in (0.0, 0.7, -2.5):
            ic = rect_intermediates(PulseSpec.rectangular(1.3, 4.0, delta=delta), 0.0)
            assert ic.c_plus == 1.0 + 0.0j
            assert ic.c_minus == 0.0j
            assert ic.c_z == 0.0j

    def test_window_enforced(self):
        p = PulseSpec.rectangular(1.0, duration=1.0)
        with pytest.raises(OutOfWindow):
            rect_intermediates(p, 1.5)
        with pytest.raises(OutOfWindow):
            rect_intermediates(p, -0.1)

    def test_requires_rectangular(self):
        with pytest.raises(ValueError):
            rect_intermediates(PulseSpec.exponential(1.0, 1.0), 0.5)


class TestRectCoefficients:
    def test_full_cycle_is_identity(self):
        t = 2.0 * math.pi
        m = rect_coefficients(PulseSpec.rectangular(1.0, duration=t), t, UNITARY)
        assert np.abs(m.matrix - np.eye(3)).max() < 1e-12

    def test_resonant_quarter_cycle_d_row(self):
        t = math.pi / 2.0
        m = rect_coefficients(PulseSpec.rectangular(1.0, duration=t), t, UNITARY)
        assert np.abs(m.d_row - np.array([0.0, 1.0, 0.0])).max() < 1e-12

    def test_detuned_half_turn_anchor(self):
        # delta = omega0, Omega1 t = pi: rotation by pi about (1,0,1)/sqrt(2)
        om = 1.0
        om1 = math.hypot(om, om)
        t = math.pi / om1
        m = rect_coefficients(PulseSpec.rectangular(om, duration=t, delta=om), t, UNITARY)
        expected = np.array([[0.0, 0.0, 1.0], [0.0, -1.0, 0.0], [1.0, 0.0, 0.0]])
        assert np.abs(m.matrix.real - expected).max() < 1e-12
        oracle = oracles.heisenberg_rotation(oracles.rect_propagator(om, om, t))
        assert np.abs(m.matrix.real - oracle).max() < 1e-12

    def test_unitary_map_matches_propagator_oracle(self):
        rng = np.random.default_rng(21)
        for _ in range(80):
            om = rng.uniform(0.05, 4.0)
            dl = rng.uniform(-4.0, 4.0)
            t = rng.uniform(0.0, 20.0)
            m = rect_coefficients(PulseSpec.rectangular(om, duration=25.0, delta=dl), t, UNITARY)
            oracle = oracles.heisenberg_rotation(oracles.rect_propagator(om, dl, t))
            assert np.abs(m.matrix.real - oracle).max() < 1e-11

    def test_unitary_d_row_equals_published_formulas(self):
        rng = np.random.default_rng(22)
        for _ in range(200):
            om = rng.uniform(0.05, 4.0)
            dl = rng.uniform(-4.0, 4.0)
            t = rng.uniform(0.0, 20.0)
            m = rect_coefficients(PulseSpec.rectangular(om, duration=25.0, delta=dl), t, UNITARY)
            om1 = math.hypot(om, dl)
            d = np.array(
                [
                    dl * om / om1**2 * (1.0 - math.cos(om1 * t)),
                    om / om1 * math.sin(om1 * t),
                    (om / om1) ** 2 * (math.cos(om1 * t) + (dl / om) ** 2),
                ]
            )
            assert np.abs(m.d_row.real - d).max() < 1e-12

    def test_resonant_period_property(self):
        om = 1.7
        period = 2.0 * math.pi / om
        p = PulseSpec.rectangular(om, duration=40.0)
        for t in (0.3, 1.1, 2.9):
            a = rect_coefficients(p, t, UNITARY).matrix
            b = rect_coefficients(p, t + period, UNITARY).matrix
            assert np.abs(a - b).max() < 1e-10

    def test_zero_drive_gives_identity(self):
        m = rect_coefficients(PulseSpec.rectangular(0.0, duration=1.0), 0.7, UNITARY)
        assert np.array_equal(m.matrix, np.eye(3))
        m = rect_coefficients(PulseSpec.rectangular(0.0, duration=1.0), 0.7, LITERAL)
        assert np.array_equal(m.matrix, np.eye(3))

    def test_literal_shares_a_and_d_rows_with_unitary(self):
        rng = np.random.default_rng(23)
        for _ in range(60):
            om = rng.uniform(0.05, 4.0)
            dl = rng.uniform(-4.0, 4.0)
            t = rng.uniform(0.0, 20.0)
            p = PulseSpec.rectangular(om, duration=25.0, delta=dl)
            lit = rect_coefficients(p, t, LITERAL)
            uni = rect_coefficients(p, t, UNITARY)
            assert np.abs(lit.a_row - uni.a_row).max() < 1e-12
            assert np.abs(lit.d_row - uni.d_row).max() < 1e-12
            assert np.isfinite(lit.matrix).all()

    def test_literal_b_row_structure(self):
        # the printed relations tie the whole B row to B_x and A_z
        p = PulseSpec.rectangular(1.0, duration=10.0, delta=0.8)
        m = rect_coefficients(p, 2.3, LITERAL)
        assert m.b_row[1] == 1j * m.b_row[0]
        assert m.b_row[2] == -1j * m.a_row[2]
        assert abs(m.b_row[2].imag) > 1e-3  # genuinely complex when detuned


class TestExpCoefficients:
    def test_time_zero_is_identity(self):
        m = exp_coefficients(PulseSpec.exponential(5.0, 1.0), 0.0, UNITARY)
        assert np.abs(m.matrix - np.eye(3)).max() == 0.0

    def test_long_time_d_row_saturates(self):
        m = exp_coefficients(PulseSpec.exponential(5.0, 1.0), 1000.0, UNITARY)
        expected = np.array([0.0, math.sin(5.0), math.cos(5.0)])
        assert np.abs(m.d_row.real - expected).max() < 1e-12

    def test_two_parameter_sets_reaching_the_same_angle(self):
        # ratio 10 at gamma t = ln 2 accumulates the same 5 rad as ratio 5
        # fully decayed
        late = exp_coefficients(PulseSpec.exponential(5.0, 1.0), 1000.0, UNITARY)
        half = exp_coefficients(PulseSpec.exponential(10.0, 1.0), math.log(2.0), UNITARY)
        assert np.abs(late.matrix - half.matrix).max() < 1e-12

    def test_unitary_is_x_rotation_by_pulse_angle(self):
        p = PulseSpec.exponential(3.0, 0.8)
        for t in (0.1, 0.9, 4.0):
            lam = pulse_angle(p, t)
            m = exp_coefficients(p, t, UNITARY)
            assert np.abs(m.matrix.real - rotation_matrix((1, 0, 0), lam)).max() < 1e-14
            oracle = oracles.heisenberg_rotation(oracles.exp_propagator(3.0, 0.8, t))
            assert np.abs(m.matrix.real - oracle).max() < 1e-12

    def test_intermediates_follow_stated_forms(self):
        p = PulseSpec.exponential(2.0, 1.0)
        ic = exp_intermediates(p, 0.7)
        lam = pulse_angle(p, 0.7)
        assert ic.c_plus == pytest.approx(0.5 * (1.0 + math.cos(lam)), abs=1e-15)
        assert ic.c_minus == pytest.approx(0.5 * (1.0 - math.cos(lam)), abs=1e-15)
        assert ic.c_z == pytest.approx(-1j * math.sin(lam), abs=1e-15)

    def test_literal_map_is_real_on_resonance(self):
        m = exp_coefficients(PulseSpec.exponential(5.0, 1.0), 1.3, LITERAL)
        assert np.abs(m.matrix.imag).max() == 0.0

    def test_negative_time_rejected(self):
        with pytest.raises(OutOfWindow):
            exp_coefficients(PulseSpec.exponential(1.0, 1.0), -0.2)


def test_undriven_map_is_identity_in_both_modes():
    for mode in (UNITARY, LITERAL):
        m = undriven_coefficients(mode)
        assert np.array_equal(m.matrix, np.eye(3))
        assert np.linalg.det(m.matrix.real) == 1.0


def test_coefficient_map_dispatches_by_shape():
    t = 1.0
    rect = coefficient_map(PulseSpec.rectangular(1.0, duration=2.0), t)
    exp = coefficient_map(PulseSpec.exponential(1.0, 1.0), t)
    none = coefficient_map(PulseSpec.none(), t)
    assert rect.mode is UNITARY
    assert not np.array_equal(rect.matrix, np.eye(3))
    assert not np.array_equal(exp.matrix, np.eye(3))
    assert np.array_equal(none.matrix, np.eye(3))


def test_unitary_mode_matrices_are_proper_rotations():
    rng = np.random.default_rng(31)
    for _ in range(1000):
        if rng.random() < 0.5:
            om = rng.uniform(0.0, 4.0)
            dl = rng.uniform(-4.0, 4.0)
            t = rng.uniform(0.0, 30.0)
            p = PulseSpec.rectangular(om, duration=30.0, delta=dl)
        else:
            p = PulseSpec.exponential(rng.uniform(0.0, 8.0), rng.uniform(0.2, 2.0))
            t = rng.uniform(0.0, 30.0)
        m = coefficient_map(p, t, UNITARY).matrix
        assert np.abs(m.imag).max() < 1e-12
        r = m.real
        assert np.abs(r.T @ r - np.eye(3)).max() < 1e-10
        assert abs(np.linalg.det(r) - 1.0) < 1e-10

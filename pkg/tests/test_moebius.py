import math

import pytest
from hypothesis import given, strategies as st

from superq import moebius
from superq.moebius import BlochPoint, CartesianBloch, ExtendedComplex


class TestExtendedComplex:
    def test_canonical_form(self):
        z = ExtendedComplex(2.0 + 1.0j, -3.0j)
        assert abs(z.u) ** 2 + abs(z.v) ** 2 == pytest.approx(1.0, abs=1e-15)
        assert z.v.imag == 0.0
        assert z.v.real >= 0.0

    def test_infinity_is_canonical(self):
        inf = ExtendedComplex.infinity()
        assert inf.is_infinite
        assert inf.u == 1.0
        assert inf.v == 0.0

    def test_from_value_round_trip(self):
        for zeta in (0.5, -2.0 + 1.0j, 1e-8j, 3e7):
            z = ExtendedComplex.from_value(zeta)
            assert abs(z.value - zeta) <= 1e-14 * abs(zeta)

    @given(st.complex_numbers(min_magnitude=1e-6, max_magnitude=1e6, allow_nan=False, allow_infinity=False))
    def test_round_trip_property(self, zeta):
        z = ExtendedComplex.from_value(zeta)
        assert abs(z.value - zeta) <= 1e-13 * abs(zeta)

    def test_canonicalization_idempotent(self):
        z = ExtendedComplex(0.3 - 0.7j, 1.1 + 0.2j)
        again = ExtendedComplex(z.u, z.v)
        assert abs(again.u - z.u) <= 2e-16
        assert abs(again.v - z.v) <= 2e-16

    def test_zero_pair_rejected(self):
        with pytest.raises(ValueError):
            ExtendedComplex(0.0, 0.0)

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            ExtendedComplex.from_value(complex("nan"))

    def test_inf_value_maps_to_pole(self):
        assert ExtendedComplex.from_value(complex("inf")).is_infinite

    def test_no_finite_value_at_pole(self):
        with pytest.raises(ValueError):
            ExtendedComplex.infinity().value

    def test_mod_sq(self):
        assert ExtendedComplex.from_value(2.0).mod_sq == pytest.approx(4.0, rel=1e-14)
        assert math.isinf(ExtendedComplex.infinity().mod_sq)


class TestBlochPoint:
    def test_theta_range_enforced(self):
        with pytest.raises(ValueError):
            BlochPoint(-0.1, 0.0)
        with pytest.raises(ValueError):
            BlochPoint(3.2, 0.0)

    def test_phi_reduced_mod_two_pi(self):
        point = BlochPoint(1.0, 7.0)
        assert 0.0 <= point.phi < 2.0 * math.pi
        assert point.phi == pytest.approx(7.0 - 2.0 * math.pi)

    def test_phi_zero_at_poles(self):
        assert BlochPoint(0.0, 1.5).phi == 0.0
        assert BlochPoint(math.pi, 1.5).phi == 0.0


class TestProjection:
    def test_origin_maps_to_north_pole(self):
        point = moebius.zeta_to_bloch(ExtendedComplex.from_value(0.0))
        assert (point.theta, point.phi) == (0.0, 0.0)

    def test_pole_maps_to_south_pole(self):
        point = moebius.zeta_to_bloch(ExtendedComplex.infinity())
        assert (point.theta, point.phi) == (math.pi, 0.0)

    def test_unit_real_maps_to_equator(self):
        point = moebius.zeta_to_bloch(ExtendedComplex.from_value(1.0))
        assert point.theta == pytest.approx(math.pi / 2, abs=1e-15)
        assert point.phi == 0.0

    def test_unit_imaginary_phase(self):
        point = moebius.zeta_to_bloch(ExtendedComplex.from_value(1.0j))
        assert point.phi == pytest.approx(math.pi / 2, abs=1e-15)

    def test_south_pole_inverse(self):
        assert moebius.bloch_to_zeta(BlochPoint(math.pi, 0.3)).is_infinite

    def test_equator_pi_maps_to_minus_one(self):
        zeta = moebius.bloch_to_zeta(BlochPoint(math.pi / 2, math.pi))
        assert abs(zeta.value - (-1.0)) <= 1e-15

    def test_round_trip_grid(self):
        worst = 0.0
        for i in range(10):
            for j in range(10):
                theta = math.pi * i / 9
                phi = 2.0 * math.pi * j / 10
                point = BlochPoint(theta, phi)
                back = moebius.zeta_to_bloch(moebius.bloch_to_zeta(point))
                worst = max(worst, abs(back.theta - point.theta), abs(back.phi - point.phi))
        assert worst <= 1e-12

    @given(
        st.floats(min_value=0.01, max_value=math.pi - 0.01),
        st.floats(min_value=0.0, max_value=2.0 * math.pi - 1e-9),
    )
    def test_round_trip_property(self, theta, phi):
        point = BlochPoint(theta, phi)
        back = moebius.zeta_to_bloch(moebius.bloch_to_zeta(point))
        assert abs(back.theta - point.theta) <= 1e-12
        assert abs(back.phi - point.phi) <= 1e-9 * (1.0 + point.phi)

    def test_no_nan_at_poles(self):
        for zeta in (ExtendedComplex.from_value(0.0), ExtendedComplex.infinity()):
            point = moebius.zeta_to_bloch(zeta)
            cart = moebius.bloch_cartesian(point)
            assert math.isfinite(cart.x) and math.isfinite(cart.y) and math.isfinite(cart.z)
            assert not zeta.is_infinite or moebius.bloch_to_zeta(point).is_infinite


class TestCartesian:
    def test_north_pole(self):
        cart = moebius.bloch_cartesian(BlochPoint(0.0, 0.0))
        assert (cart.x, cart.y, cart.z) == (0.0, 0.0, 1.0)

    def test_equator_diagonal(self):
        cart = moebius.bloch_cartesian(BlochPoint(math.pi / 2, math.pi / 4))
        assert cart.x == pytest.approx(math.sqrt(2) / 2, abs=1e-15)
        assert cart.y == pytest.approx(math.sqrt(2) / 2, abs=1e-15)
        assert cart.z == pytest.approx(0.0, abs=1e-15)

    def test_half_angle_height_identity(self):
        for i in range(50):
            theta = math.pi * i / 49
            cart = moebius.bloch_cartesian(BlochPoint(theta, 0.9))
            assert abs(2.0 * math.sin(theta / 2) ** 2 - (1.0 - cart.z)) <= 1e-14

    def test_unit_norm_enforced(self):
        with pytest.raises(ValueError):
            CartesianBloch(1.0, 1.0, 1.0)


class TestConcurrenceCircle:
    def test_equator_is_maximally_entangled(self):
        assert moebius.concurrence_circle(math.pi / 2) == (1.0, math.cos(math.pi / 2))

    def test_north_pole_is_separable(self):
        assert moebius.concurrence_circle(0.0) == (0.0, 1.0)

    def test_thirty_degrees(self):
        c, z = moebius.concurrence_circle(math.pi / 6)
        assert c == pytest.approx(0.5, abs=1e-15)
        assert z == pytest.approx(math.sqrt(3) / 2, abs=1e-15)

    def test_range_enforced(self):
        with pytest.raises(ValueError):
            moebius.concurrence_circle(-0.5)

    def test_height_equals_sqrt_complement_on_upper_half(self):
        for i in range(8):
            theta1 = 0.5 * math.pi * i / 7
            c, z = moebius.concurrence_circle(theta1)
            assert abs(z - math.sqrt(1.0 - c * c)) <= 1e-12

    def test_homogeneous_concurrence_matches_projection(self):
        values = [0.0, 0.3, 1.0, 2.5, 1.0j, -0.7 + 0.2j]
        points = [ExtendedComplex.from_value(v) for v in values]
        points.append(ExtendedComplex.infinity())
        for zeta in points:
            theta1 = moebius.zeta_to_bloch(zeta).theta
            homogeneous = 2.0 * abs(zeta.u) * zeta.v.real
            assert abs(homogeneous - math.sin(theta1)) <= 1e-12

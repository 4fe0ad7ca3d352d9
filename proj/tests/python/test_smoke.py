"""Python binding smoke tests (the quantitative suites live in C++)."""

import cmath
import math

import pytest

import abtk


def test_special_functions():
    assert abs(abtk.complex_gamma(1.0) - 1.0) < 1e-13
    assert abs(abtk.complex_gamma(0.5) - math.sqrt(math.pi)) < 1e-13
    assert abs(abtk.parabolic_cylinder_d(0.0, 2.0) - math.exp(-1.0)) < 1e-13
    with pytest.raises(ValueError):
        abtk.complex_gamma(-2.0)


def test_theta_and_rays():
    ray = abtk.ray_from_xt(-1.0, 1.0, 4.0)
    assert ray.z0 == pytest.approx(1.0)
    assert abtk.theta(1.0 + 0j, ray) == pytest.approx(0.5)
    z0, mz0 = abtk.critical_points(-2.0, 1.0, 1.0)
    assert z0 == pytest.approx(math.sqrt(0.5))
    assert mz0 == -z0


def test_zero_profile_pipeline():
    data = abtk.make_initial_data("zero", 0.0, 20.0, 512)
    sd = abtk.reflection(data, abtk.make_z_grid(3.0, 121, 0.05), 0, False)
    assert all(v == 0 for v in sd.r)
    sol = abtk.evaluate_asymptotics(sd, -1.0, 4.0, 16.0)
    assert sol.A_leading == 0
    assert sol.B_leading == 0.0
    assert sol.error_order == "O(t^-1)"


def test_sech_scattering_invariants():
    data = abtk.make_initial_data("sech", 0.3, 20.0, 1024)
    sd = abtk.reflection(data, abtk.make_z_grid(3.0, 121, 0.05), 0, False)
    worst = max(
        abs(abs(s11) ** 2 - abs(s21) ** 2 - 1.0)
        for s11, s21 in zip(sd.s11, sd.s21)
    )
    assert worst < 1e-6
    assert max(abs(v) for v in sd.r) < 1.0
    assert sd.h11_norm > 0


def test_local_model_modulus_identity():
    data = abtk.make_initial_data("sech", 0.3, 20.0, 1024)
    sd = abtk.reflection(data, abtk.make_z_grid(3.0, 241, 0.05), 0, False)
    ray = abtk.ray_from_z0(-1.0, 1.0, 25.0)
    dd = abtk.build_delta_data(sd, 1.0)
    lm = abtk.build_local_model(sd, dd, ray)
    assert abs(abs(lm.beta12_plus) ** 2 - lm.nu_plus) < 1e-9
    assert abs(abs(lm.beta12_minus) ** 2 - lm.nu_minus) < 1e-9
    a = abtk.leading_A(lm, ray)
    assert abs(a) <= 4.0 * math.sqrt(1.0 / 25.0) * (
        math.sqrt(lm.nu_plus) + math.sqrt(lm.nu_minus)
    )


def test_delta_properties():
    data = abtk.make_initial_data("sech", 0.3, 20.0, 1024)
    sd = abtk.reflection(data, abtk.make_z_grid(3.0, 241, 0.05), 0, False)
    dd = abtk.build_delta_data(sd, 1.0)
    assert abs(abs(dd.delta0_plus) - 1.0) < 1e-10
    assert abs(abs(abtk.delta(2.0 + 0j, dd)) - 1.0) < 1e-10
    dp, dm = abtk.delta_boundary(0.42, dd)
    ra = abs(sd.r_at(0.42))
    assert abs(dp / dm - (1.0 - ra * ra)) < 1e-5


def test_short_evolution_runs():
    data = abtk.make_initial_data("sech", 0.3, 20.0, 512)
    cfg = abtk.EvolveConfig()
    cfg.dt = 0.05
    cfg.t_end = 0.5
    out = abtk.evolve(data, abtk.ModelParameters(), cfg)
    assert out.t == pytest.approx(0.5)
    assert max(abs(b) for b in out.B) < 0.1

"""Pseudo-spectral solver: constraints, oracles, reversibility, IO."""

import numpy as np
import pytest

from chimaxwell.chi_solver import (
    C_LIGHT,
    Diagnostics,
    FieldState,
    Grid,
    SpectralSpace,
    cfl_bound,
    diagnostics,
    init_state,
    load_snapshot,
    run,
    save_snapshot,
    step,
    write_diagnostics_csv,
)
from chimaxwell.errors import CFLViolation, InconsistentScenario

TWO_PI = 2.0 * np.pi


def vacuum_scenario(modes, helicity=-1, amplitude=1.0):
    return {"type": "vacuum_planewave",
            "params": {"k": modes, "helicity": helicity, "amplitude": amplitude}}


def gaussian_scenario(width, amplitude=1.0):
    return {"type": "chi_gaussian", "params": {"width": width, "amplitude": amplitude}}


def state_norm(state):
    return np.sqrt(np.mean(state.e**2 + state.b**2)
                   + np.mean(state.chi_re**2 + state.chi_im**2)
                   + np.mean(state.chi_re_t**2 + state.chi_im_t**2))


def state_distance(a, b):
    return np.sqrt(
        np.mean((a.e - b.e)**2 + (a.b - b.b)**2)
        + np.mean((a.chi_re - b.chi_re)**2 + (a.chi_im - b.chi_im)**2)
        + np.mean((a.chi_re_t - b.chi_re_t)**2 + (a.chi_im_t - b.chi_im_t)**2)
    )


class TestGrid:
    def test_rejects_non_power_of_two(self):
        with pytest.raises(ValueError):
            Grid(12, 1.0, dims=1)

    def test_rejects_small_grid(self):
        with pytest.raises(ValueError):
            Grid(4, 1.0, dims=1)

    def test_rejects_2d(self):
        with pytest.raises(ValueError):
            Grid(16, 1.0, dims=2)

    def test_cfl_formula(self):
        g = Grid(64, TWO_PI, dims=3)
        assert cfl_bound(g) == pytest.approx(0.5 * g.dx / (C_LIGHT * np.sqrt(3.0)))


class TestSpectralOperators:
    def band_limited_field(self, space, seed):
        # random field supported on low modes only
        rng = np.random.default_rng(seed)
        f = np.zeros(space.grid.shape)
        coords = space.coordinates()
        for _ in range(5):
            m = rng.integers(-4, 5, 3)
            kvec = 2 * np.pi * m / space.grid.length
            phase = kvec[0] * coords[0] + kvec[1] * coords[1] + kvec[2] * coords[2]
            f = f + rng.normal() * np.cos(phase + rng.uniform(0, TWO_PI))
        return f

    @pytest.mark.parametrize("dims", [1, 3])
    def test_rot_grad_is_machine_zero(self, dims):
        g = Grid(32 if dims == 3 else 256, TWO_PI, dims=dims)
        space = SpectralSpace(g)
        f = self.band_limited_field(space, 30 + dims)
        residual = np.sqrt(np.mean(np.abs(space.curl(space.grad(f)))**2))
        assert residual <= 1e-12

    def test_div_curl_is_machine_zero(self):
        g = Grid(32, TWO_PI, dims=3)
        space = SpectralSpace(g)
        v = np.stack([self.band_limited_field(space, 40 + i) for i in range(3)])
        assert np.sqrt(np.mean(space.div(space.curl(v))**2)) <= 1e-12

    def test_poisson_solve_inverts_laplacian(self):
        g = Grid(32, TWO_PI, dims=3)
        space = SpectralSpace(g)
        f = self.band_limited_field(space, 50)
        f -= f.mean()
        phi = space.solve_poisson(f)
        assert np.max(np.abs(space.laplacian(phi) - f)) <= 1e-11
        assert abs(phi.mean()) <= 1e-13

    def test_spectral_derivative_exact_for_single_mode(self):
        g = Grid(64, TWO_PI, dims=1)
        space = SpectralSpace(g)
        z = space.coordinates()[2]
        f = np.sin(3 * z)
        assert np.max(np.abs(space.grad(f)[2] - 3 * np.cos(3 * z))) <= 1e-12


class TestInitState:
    def test_vacuum_planewave_constraints(self):
        g = Grid(32, TWO_PI, dims=3)
        state = init_state(g, vacuum_scenario([0, 0, 1]))
        d = diagnostics(state)
        assert d.gauss_e_residual <= 1e-12
        assert d.gauss_b_residual <= 1e-12

    def test_gaussian_poisson_oracle(self):
        # independent check: div E must equal -(1/c) d/dt chi_re pointwise
        g = Grid(64, TWO_PI, dims=1)
        state = init_state(g, gaussian_scenario(TWO_PI / 16))
        space = SpectralSpace(g)
        lhs = space.div(state.e)
        rhs = -state.chi_re_t / C_LIGHT
        assert np.max(np.abs(lhs - rhs)) <= 1e-10

    def test_custom_monopole_data_rejected(self):
        g = Grid(16, TWO_PI, dims=1)
        z = SpectralSpace(g).coordinates()[2]
        b = np.zeros((3, g.n))
        b[2] = np.sin(z)  # div B != 0 with Im chi = 0
        with pytest.raises(InconsistentScenario):
            init_state(g, {"type": "custom", "params": {"b": b}})

    def test_complex_chi_needs_flag(self):
        g = Grid(16, TWO_PI, dims=1)
        chi_im = 0.1 * np.ones(g.n)
        scenario = {"type": "custom", "params": {"chi_im": chi_im}}
        with pytest.raises(InconsistentScenario):
            init_state(g, scenario, chi_mode="real")
        state = init_state(g, scenario, chi_mode="complex")
        assert np.all(state.chi_im == 0.1)

    def test_unknown_scenario_type(self):
        with pytest.raises(ValueError):
            init_state(Grid(16, 1.0, dims=1), {"type": "nope"})


class TestStep:
    def test_cfl_violation_raised(self):
        g = Grid(16, TWO_PI, dims=1)
        state = init_state(g, vacuum_scenario([1]))
        with pytest.raises(CFLViolation):
            step(state, 10.0 * cfl_bound(g))

    def test_uniform_static_fields_unchanged(self):
        g = Grid(16, TWO_PI, dims=3)
        e = np.ones((3, *g.shape)) * np.array([0.3, -0.2, 0.9])[:, None, None, None]
        b = np.ones((3, *g.shape)) * 0.5
        state = init_state(g, {"type": "custom", "params": {"e": e, "b": b}})
        out = step(state, cfl_bound(g))
        assert np.max(np.abs(out.e - e)) <= 1e-14
        assert np.max(np.abs(out.b - b)) <= 1e-14

    def test_time_reversal(self):
        # reversal error is RK4 amplitude loss ~ (k dt)^6 / 72 per step pair,
        # so the 1e-9 contract needs a step below the stability bound
        g = Grid(32, TWO_PI, dims=1)
        state = init_state(g, gaussian_scenario(TWO_PI / 10))
        dt = cfl_bound(g) / 8.0
        fwd = step(step(state, dt), dt)
        back = step(step(fwd, -dt), -dt)
        assert state_distance(back, state) <= 1e-9 * state_norm(state)
        assert back.t == pytest.approx(0.0, abs=1e-15)

    def test_linearity_of_evolution(self):
        g = Grid(16, TWO_PI, dims=1)
        s1 = init_state(g, vacuum_scenario([1]))
        s2 = init_state(g, {"type": "chi_planewave", "params": {"k": [2], "amplitude": 0.5}})
        a, b = 1.3, -0.6
        combo = FieldState(
            g, 0.0,
            a * s1.e + b * s2.e, a * s1.b + b * s2.b,
            a * s1.chi_re + b * s2.chi_re, a * s1.chi_im + b * s2.chi_im,
            a * s1.chi_re_t + b * s2.chi_re_t, a * s1.chi_im_t + b * s2.chi_im_t,
        )
        dt = cfl_bound(g)
        lhs = step(combo, dt)
        r1, r2 = step(s1, dt), step(s2, dt)
        assert np.max(np.abs(lhs.e - (a * r1.e + b * r2.e))) <= 1e-10
        assert np.max(np.abs(lhs.chi_re - (a * r1.chi_re + b * r2.chi_re))) <= 1e-10


class TestVacuumReduction:
    def test_plane_wave_returns_after_one_period(self):
        g = Grid(64, TWO_PI, dims=1)
        period = g.length / C_LIGHT  # lowest mode: omega = c k = 2 pi / L
        final, diags, snaps = run(g, vacuum_scenario([1]), period, period / 256,
                                  output_every=0)
        init = snaps[0]
        err = state_distance(final, init) / state_norm(init)
        assert err <= 1e-6

    def test_gauss_constraints_over_long_run(self):
        g = Grid(32, TWO_PI, dims=3)
        dt = cfl_bound(g)
        final, diags, _ = run(g, vacuum_scenario([0, 0, 1]), 1000 * dt, dt,
                              output_every=100, keep_snapshots=False)
        assert max(d.gauss_e_residual for d in diags) <= 1e-9
        assert max(d.gauss_b_residual for d in diags) <= 1e-9

    def test_measured_dispersion(self):
        # project the complex field combination on the excited mode and fit
        # the phase slope: omega must come out at c |k|
        g = Grid(32, TWO_PI, dims=1)
        period = g.length / C_LIGHT
        final, diags, snaps = run(g, vacuum_scenario([1]), period, period / 128,
                                  output_every=8)
        z = SpectralSpace(g).coordinates()[2]
        mode = np.exp(-1j * z)
        amps, times = [], []
        for snap in snaps:
            psi = snap.e[0] - 1j * snap.b[0]
            amps.append(np.mean(psi * mode))
            times.append(snap.t)
        phases = np.unwrap(np.angle(np.array(amps)))
        omega = -np.polyfit(times, phases, 1)[0]
        assert abs(omega / (C_LIGHT * 1.0) - 1.0) <= 1e-6


class TestChiDynamics:
    def test_chi_planewave_matches_closed_form(self):
        # chi = cos(kz - ckt) drives a longitudinal E_z = cos(kz - ckt)
        g = Grid(64, TWO_PI, dims=1)
        k = 2 * np.pi / g.length
        t_end = 0.7 * g.length / C_LIGHT
        final, _, _ = run(g, {"type": "chi_planewave", "params": {"k": [1]}},
                          t_end, g.length / (256 * C_LIGHT), output_every=0)
        z = SpectralSpace(g).coordinates()[2]
        analytic = np.cos(k * z - C_LIGHT * k * final.t)
        assert np.max(np.abs(final.e[2] - analytic)) <= 1e-6
        assert np.max(np.abs(final.chi_re - analytic)) <= 1e-6
        assert np.max(np.abs(final.e[0])) <= 1e-12
        assert np.max(np.abs(final.b)) <= 1e-12

    def test_gaussian_constraints_and_identities(self):
        g = Grid(32, TWO_PI, dims=3)
        final, diags, _ = run(g, gaussian_scenario(TWO_PI / 10), g.length,
                              output_every=10, keep_snapshots=False)
        assert max(d.gauss_e_residual for d in diags) <= 1e-8
        assert max(d.gauss_b_residual for d in diags) <= 1e-10  # no monopoles
        assert max(d.curl_j_residual for d in diags) <= 1e-12
        assert max(d.continuity_residual for d in diags) <= 1e-9

    def test_energy_conserved(self):
        g = Grid(32, TWO_PI, dims=1)
        dt = 0.5 * cfl_bound(g)
        _, diags, _ = run(g, gaussian_scenario(TWO_PI / 10), g.length, dt,
                          output_every=50)
        drift = abs(diags[-1].energy - diags[0].energy) / abs(diags[0].energy)
        assert drift <= 1e-5

    def test_constraint_growth_per_step(self):
        g = Grid(64, TWO_PI, dims=1)
        dt = cfl_bound(g)
        _, diags, _ = run(g, gaussian_scenario(TWO_PI / 10), 100 * dt, dt,
                          output_every=1, keep_snapshots=False)
        worst_jump = max(
            abs(b.gauss_e_residual - a.gauss_e_residual)
            for a, b in zip(diags, diags[1:])
        )
        assert worst_jump <= 1e-11

    def test_thousand_step_identities(self):
        g = Grid(64, TWO_PI, dims=1)
        dt = cfl_bound(g)
        _, diags, _ = run(g, gaussian_scenario(TWO_PI / 10), 1000 * dt, dt,
                          output_every=100, keep_snapshots=False)
        assert max(d.gauss_e_residual for d in diags) <= 1e-9
        assert max(d.continuity_residual for d in diags) <= 1e-9
        assert max(d.curl_j_residual for d in diags) <= 1e-12


class TestRunAndIO:
    def test_output_every_zero_keeps_endpoints(self):
        g = Grid(16, TWO_PI, dims=1)
        final, diags, snaps = run(g, vacuum_scenario([1]), 10 * cfl_bound(g),
                                  output_every=0)
        assert len(snaps) == 2
        assert snaps[0].t == 0.0
        assert snaps[-1].t == pytest.approx(final.t)

    def test_run_is_deterministic(self):
        g = Grid(32, TWO_PI, dims=1)
        out1 = run(g, gaussian_scenario(TWO_PI / 10), 5 * cfl_bound(g))
        out2 = run(g, gaussian_scenario(TWO_PI / 10), 5 * cfl_bound(g))
        assert np.array_equal(out1[0].e, out2[0].e)
        assert np.array_equal(out1[0].chi_re_t, out2[0].chi_re_t)
        assert out1[1][-1] == out2[1][-1]

    def test_snapshot_roundtrip_bit_faithful(self, tmp_path):
        g = Grid(16, TWO_PI, dims=3)
        state = init_state(g, gaussian_scenario(TWO_PI / 8))
        save_snapshot(state, tmp_path / "snap")
        loaded = load_snapshot(tmp_path / "snap")
        for name in ("e", "b", "chi_re", "chi_im", "chi_re_t", "chi_im_t"):
            assert np.array_equal(getattr(state, name), getattr(loaded, name))
        assert loaded.t == state.t
        assert loaded.grid == g

    def test_run_writes_files(self, tmp_path):
        g = Grid(16, TWO_PI, dims=1)
        run(g, vacuum_scenario([1]), 4 * cfl_bound(g), output_every=2,
            out_dir=tmp_path)
        assert (tmp_path / "diagnostics.csv").exists()
        assert (tmp_path / "snapshot_000000.bin").exists()
        assert (tmp_path / "snapshot_000000.json").exists()

    def test_diagnostics_csv_roundtrip(self, tmp_path):
        diags = [Diagnostics(0.125, 1e-12, 2e-13, 3.7e-16, 0.0, 42.0625),
                 Diagnostics(0.25, 1.1e-12, 0.0, 1e-16, 0.0, 42.0624999)]
        path = tmp_path / "d.csv"
        write_diagnostics_csv(path, diags)
        lines = path.read_text().strip().split("\n")
        assert lines[0] == "t,gauss_e,gauss_b,curl_j,continuity,energy"
        values = [float(v) for v in lines[1].split(",")]
        assert values == [0.125, 1e-12, 2e-13, 3.7e-16, 0.0, 42.0625]

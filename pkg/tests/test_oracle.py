import math

import numpy as np
import pytest

from cavent import (
    CoherentParams,
    NumericsError,
    ParameterError,
    SqueezedParams,
    assemble_rho,
    coherent_distribution,
    concurrence,
    gamma_coefficients,
    quartic_eigenvalues,
    spin_flipped,
    squeezed_distribution,
    symmetric_eigen,
    trace_out_field,
    tripartite_state,
)


@pytest.fixture
def vacuum():
    return coherent_distribution(CoherentParams(0.0))


class TestTripartiteState:
    def test_zero_angle_keeps_atoms_excited(self):
        dist = coherent_distribution(CoherentParams(1.0))
        state = tripartite_state(dist, 0.0)
        expected = np.sqrt(dist.probs)
        assert np.max(np.abs(state.amps[0, 0, : len(expected)] - expected)) == 0.0
        assert np.max(np.abs(state.amps[0, 1])) == 0.0
        assert np.max(np.abs(state.amps[1, 0])) == 0.0
        assert np.max(np.abs(state.amps[1, 1])) == 0.0

    def test_vacuum_has_four_branches(self, vacuum):
        gt = 0.8
        state = tripartite_state(vacuum, gt)
        c1, s1 = math.cos(gt), math.sin(gt)
        c2, s2 = math.cos(math.sqrt(2.0) * gt), math.sin(math.sqrt(2.0) * gt)
        assert state.amps[0, 0, 0] == pytest.approx(c1 * c1, abs=1e-15)
        assert state.amps[0, 1, 1] == pytest.approx(c1 * s1, abs=1e-15)
        assert state.amps[1, 0, 1] == pytest.approx(c2 * s1, abs=1e-15)
        assert state.amps[1, 1, 2] == pytest.approx(s1 * s2, abs=1e-15)
        assert np.count_nonzero(state.amps) == 4

    @pytest.mark.parametrize(
        "alpha,r,gt", [(1.0, 0.0, 0.6), (math.sqrt(0.3), 0.0, 3.1), (2.0, 0.7, 1.4)]
    )
    def test_unit_norm(self, alpha, r, gt):
        dist = squeezed_distribution(SqueezedParams(alpha, r))
        state = tripartite_state(dist, gt)
        assert state.norm_squared() == pytest.approx(1.0, abs=1e-10)

    def test_branch_photon_offsets(self):
        # eg/ge branches live one photon above the source index, gg two above
        dist = coherent_distribution(CoherentParams(0.9))
        state = tripartite_state(dist, 1.1)
        assert state.amps[0, 1, 0] == 0.0
        assert state.amps[1, 0, 0] == 0.0
        assert np.max(np.abs(state.amps[1, 1, :2])) == 0.0

    def test_rejects_negative_angle(self, vacuum):
        with pytest.raises(ParameterError):
            tripartite_state(vacuum, -1.0)


class TestTraceOutField:
    def test_zero_angle(self):
        dist = coherent_distribution(CoherentParams(1.0))
        rho = trace_out_field(tripartite_state(dist, 0.0))
        assert rho[0, 0] == pytest.approx(1.0, abs=1e-12)
        assert np.max(np.abs(rho - np.diag(np.diag(rho)))) == 0.0

    def test_vacuum_x_shape(self, vacuum):
        # only the eg/ge branches share a photon index, so a single coherence
        rho = trace_out_field(tripartite_state(vacuum, 0.8))
        off = rho - np.diag(np.diag(rho))
        mask = np.zeros((4, 4), dtype=bool)
        mask[1, 2] = mask[2, 1] = True
        assert abs(rho[1, 2]) > 1e-3
        assert np.all(off[~mask] == 0.0)
        assert np.trace(rho) == pytest.approx(1.0, abs=1e-12)

    def test_matches_analytic_route(self):
        dist = coherent_distribution(CoherentParams(1.0))
        rho_sum = assemble_rho(gamma_coefficients(dist, 0.7))
        rho_oracle = trace_out_field(tripartite_state(dist, 0.7))
        assert np.max(np.abs(rho_sum - rho_oracle)) < 1e-10

    def test_is_gram_symmetric(self):
        dist = squeezed_distribution(SqueezedParams(1.5, 0.4))
        rho = trace_out_field(tripartite_state(dist, 2.3))
        assert np.array_equal(rho, rho.T)


class TestQuarticEigenvalues:
    def test_diagonal(self):
        assert np.array_equal(
            quartic_eigenvalues(np.diag([1.0, 2.0, 3.0, 4.0])), [4.0, 3.0, 2.0, 1.0]
        )

    def test_product_state_product_is_nilpotent(self, product_state):
        m = product_state @ spin_flipped(product_state)
        assert np.max(np.abs(m)) == 0.0
        assert np.max(np.abs(quartic_eigenvalues(m))) < 1e-12

    def test_bell_projector(self, bell_state):
        values = quartic_eigenvalues(bell_state @ spin_flipped(bell_state))
        assert values[0] == pytest.approx(1.0, abs=1e-12)
        assert np.max(np.abs(values[1:])) < 1e-12

    def test_werner_triple_root(self, make_werner):
        rho = make_werner(0.5)
        values = quartic_eigenvalues(rho @ spin_flipped(rho))
        assert values[0] == pytest.approx(0.390625, abs=1e-10)
        assert np.max(np.abs(values[1:] - 0.015625)) < 1e-10

    def test_rejects_complex_spectrum(self):
        rotation = np.zeros((4, 4))
        rotation[0, 1], rotation[1, 0] = -1.0, 1.0  # eigenvalues +-i
        rotation[2, 2], rotation[3, 3] = 0.1, 0.2
        with pytest.raises(NumericsError):
            quartic_eigenvalues(rotation)

    def test_route_agreement_on_random_density_matrices(self, make_random_density):
        rng = np.random.default_rng(5)
        worst = 0.0
        for _ in range(50):
            rho = make_random_density(rng)
            values, vectors = symmetric_eigen(rho)
            root = (vectors * np.sqrt(np.clip(values, 0.0, None))) @ vectors.T
            product = root @ spin_flipped(rho) @ root
            lam, _ = symmetric_eigen(0.5 * (product + product.T))
            lam = np.clip(lam, 0.0, None)
            quartic = quartic_eigenvalues(rho @ spin_flipped(rho))
            worst = max(worst, float(np.max(np.abs(quartic - lam))))
        assert worst < 1e-8


class TestFullPipelineEquivalence:
    @pytest.mark.parametrize(
        "alpha,r", [(0.0, 0.0), (1.0, 0.0), (0.17, 0.5), (math.sqrt(50.0 - math.sinh(1.0) ** 2), 1.0)]
    )
    def test_concurrence_agreement(self, alpha, r):
        dist = squeezed_distribution(SqueezedParams(alpha, r), 1e-14)
        for gt in np.linspace(0.0, 10.0, 9):
            gt = float(gt)
            rho_sum = assemble_rho(gamma_coefficients(dist, gt))
            rho_oracle = trace_out_field(tripartite_state(dist, gt))
            assert abs(concurrence(rho_sum) - concurrence(rho_oracle)) < 1e-8

    @pytest.mark.parametrize(
        "alpha,r", [(math.sqrt(0.3), 0.0), (0.17, 0.5), (math.sqrt(50.0 - math.sinh(1.0) ** 2), 1.0)]
    )
    def test_eigen_oracle_agreement_and_spectrum_reality(self, alpha, r):
        # both eigenvalue routes applied to rho * rho~ across the sweep grid,
        # and the symmetrized-product spectrum stays nonnegative up to roundoff
        dist = squeezed_distribution(SqueezedParams(alpha, r), 1e-14)
        for gt in np.linspace(0.0, 10.0, 17):
            rho = assemble_rho(gamma_coefficients(dist, float(gt)))
            values, vectors = symmetric_eigen(rho)
            root = (vectors * np.sqrt(np.clip(values, 0.0, None))) @ vectors.T
            product = root @ spin_flipped(rho) @ root
            lam, _ = symmetric_eigen(0.5 * (product + product.T))
            assert lam.min() >= -1e-10
            quartic = quartic_eigenvalues(rho @ spin_flipped(rho))
            assert np.max(np.abs(quartic - np.clip(lam, 0.0, None))) < 1e-8

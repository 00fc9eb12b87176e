import numpy as np
import pytest

from dwigner.channels import (
    InvalidChannelError,
    KrausChannel,
    adjoint_form_report,
    apply_channel,
    channel_wigner,
    depolarizing_channel,
    fano_sqrt_decomposition,
    fourier_conjugate_channel,
    identity_channel,
    point_sqrt_factor,
    stochastic_channel,
    unitary_propagator,
)
from dwigner.matrix_core import (
    DimMismatchError,
    NotUnitaryError,
    adjoint,
    hermitian_eig,
    max_abs,
    trace_product,
)
from dwigner.phase_space import (
    fourier_matrix,
    full_points,
    point_operator,
    point_operator_stack,
)
from dwigner.sampling import random_density, random_kraus_channel, random_unitary
from dwigner.wigner import basis_state, density_from_state, wigner_table


def stochastic_2x2(p11, p12):
    return np.array([[p11, p12], [1 - p11, 1 - p12]])


class TestKrausChannel:
    def test_requires_operators(self):
        with pytest.raises(ValueError):
            KrausChannel([])

    def test_requires_matching_shapes(self):
        with pytest.raises(DimMismatchError):
            KrausChannel([np.eye(2), np.eye(3)])

    def test_completeness_residual(self):
        assert identity_channel(3).completeness_residual() <= 1e-15
        broken = KrausChannel([0.5 * np.eye(2)])
        assert broken.completeness_residual() == pytest.approx(0.75)

    def test_stochastic_requires_column_stochastic(self):
        with pytest.raises(ValueError):
            stochastic_channel(np.array([[0.5, 0.5], [0.4, 0.5]]))
        with pytest.raises(ValueError):
            stochastic_channel(np.array([[1.2, 0.0], [-0.2, 1.0]]))


class TestApplyChannel:
    def test_identity(self):
        rng = np.random.default_rng(1)
        rho = random_density(3, rng)
        assert max_abs(apply_channel(identity_channel(3), rho) - rho) <= 1e-15

    def test_stochastic_action_on_diagonal(self):
        # multiply the four explicit 2x2 Kraus terms by hand
        p11, p12, r = 0.7, 0.4, 0.3
        p = stochastic_2x2(p11, p12)
        rho = np.diag([r, 1 - r]).astype(complex)
        expected = np.zeros((2, 2), dtype=complex)
        for i in range(2):
            for j in range(2):
                v = np.zeros((2, 2), dtype=complex)
                v[i, j] = np.sqrt(p[i, j])
                expected += v @ rho @ adjoint(v)
        out = apply_channel(stochastic_channel(p), rho)
        assert max_abs(out - expected) <= 1e-15
        np.testing.assert_allclose(
            np.diag(out).real,
            [p11 * r + p12 * (1 - r), (1 - p11) * r + (1 - p12) * (1 - r)],
            atol=1e-12,
        )

    def test_stochastic_erases_coherences(self):
        p = stochastic_2x2(0.6, 0.2)
        rho = np.array([[0.5, 0.3 + 0.1j], [0.3 - 0.1j, 0.5]])
        out = apply_channel(stochastic_channel(p), rho)
        assert abs(out[0, 1]) <= 1e-15

    @pytest.mark.parametrize("n", (2, 3, 4))
    def test_depolarizing(self, n):
        rng = np.random.default_rng(n)
        rho = random_density(n, rng)
        out = apply_channel(depolarizing_channel(n), rho)
        assert max_abs(out - np.eye(n) / n) <= 1e-12

    @pytest.mark.parametrize("n", (2, 4))
    def test_preserves_density_contract(self, n):
        rng = np.random.default_rng(10 + n)
        ch = random_kraus_channel(n, 3, rng)
        out = apply_channel(ch, random_density(n, rng))
        assert max_abs(out - adjoint(out)) <= 1e-12
        assert np.trace(out).real == pytest.approx(1.0, abs=1e-10)
        assert np.linalg.eigvalsh(out).min() >= -1e-10

    def test_rejects_invalid_channel(self):
        broken = KrausChannel([0.9 * np.eye(2)])
        with pytest.raises(InvalidChannelError):
            apply_channel(broken, np.eye(2) / 2)

    def test_rejects_dim_mismatch(self):
        with pytest.raises(DimMismatchError):
            apply_channel(identity_channel(2), np.eye(3) / 3)


class TestChannelWigner:
    def test_identity_channel(self):
        rho = density_from_state(basis_state(0, 2))
        assert max_abs(channel_wigner(identity_channel(2), rho) - wigner_table(rho)) <= 1e-12

    @pytest.mark.parametrize("n", (2, 4))
    def test_commutes_with_apply(self, n):
        rng = np.random.default_rng(20 + n)
        for terms in (2, 3, 4):
            ch = random_kraus_channel(n, terms, rng)
            rho = random_density(n, rng)
            fused = channel_wigner(ch, rho)
            direct = wigner_table(apply_channel(ch, rho))
            assert max_abs(fused - direct) <= 1e-12

    def test_stationary_input(self):
        # symmetric P has the uniform vector as its fixed point
        p = stochastic_2x2(0.7, 0.3)
        rho = np.eye(2, dtype=complex) / 2
        w_in = wigner_table(rho)
        w_out = channel_wigner(stochastic_channel(p), rho)
        assert max_abs(w_out - w_in) <= 1e-12

    def test_output_odd_rows_vanish_for_stochastic(self):
        # stochastic channels produce position-diagonal outputs
        p = stochastic_2x2(0.6, 0.1)
        rho = density_from_state((basis_state(0, 2) + 1j * basis_state(1, 2)) / np.sqrt(2))
        w_out = channel_wigner(stochastic_channel(p), rho)
        assert max_abs(w_out[1::2, :]) <= 1e-12


class TestUnitaryPropagator:
    def test_rejects_non_unitary(self):
        with pytest.raises(NotUnitaryError):
            unitary_propagator(np.diag([1.0, 2.0]))

    def test_identity_acts_as_identity_on_tables(self):
        rng = np.random.default_rng(31)
        prop = unitary_propagator(np.eye(2))
        for _ in range(3):
            w = wigner_table(random_density(2, rng))
            assert max_abs(prop.apply(w) - w) <= 1e-12

    def test_fourier_on_ket(self):
        f = fourier_matrix(2)
        rho = density_from_state(basis_state(0, 2))
        evolved = unitary_propagator(f).apply(wigner_table(rho))
        direct = wigner_table(f @ rho @ adjoint(f))
        assert max_abs(evolved - direct) <= 1e-12

    @pytest.mark.parametrize("n", (2, 4))
    def test_random_unitaries(self, n):
        rng = np.random.default_rng(37 + n)
        for _ in range(5):
            u = random_unitary(n, rng)
            prop = unitary_propagator(u)
            rho = random_density(n, rng)
            evolved = prop.apply(wigner_table(rho))
            direct = wigner_table(u @ rho @ adjoint(u))
            assert max_abs(evolved - direct) <= 1e-9

    def test_propagator_entries_real_shape(self):
        prop = unitary_propagator(fourier_matrix(2))
        assert prop.z.shape == (16, 16)
        assert prop.z.dtype == float

    def test_apply_rejects_wrong_shape(self):
        prop = unitary_propagator(np.eye(2))
        with pytest.raises(DimMismatchError):
            prop.apply(np.zeros((6, 6)))

    def test_gamma_invariance_n2(self):
        # literal triple contraction of Z against the full kernel tensor
        rng = np.random.default_rng(41)
        u = random_unitary(2, rng)
        z = unitary_propagator(u).z
        stack = point_operator_stack(2)
        pairs = np.einsum("bij,cjk->bcik", stack, stack)
        gamma_full = np.einsum("aij,bcji->abc", stack, pairs)
        for _ in range(8):
            ia, ib, ic = rng.integers(0, 16, size=3)
            contracted = np.einsum(
                "a,b,c,abc->", z[ia], z[ib], z[ic], gamma_full
            )
            assert abs(contracted - gamma_full[ia, ib, ic]) <= 1e-8


class TestFourierConjugation:
    def test_identity_conjugation(self):
        ch = stochastic_channel(stochastic_2x2(0.5, 0.5))
        conj = fourier_conjugate_channel(ch, np.eye(2))
        for v, w in zip(ch.kraus, conj.kraus):
            assert max_abs(v - w) <= 1e-15

    def test_printed_operators(self):
        p11, p12 = 0.7, 0.4
        p21, p22 = 1 - p11, 1 - p12
        ch = stochastic_channel(stochastic_2x2(p11, p12))
        conj = fourier_conjugate_channel(ch, fourier_matrix(2))
        expected = [
            np.sqrt(p11) / 2 * np.array([[1, 1], [1, 1]]),
            np.sqrt(p12) / 2 * np.array([[1, -1], [1, -1]]),
            np.sqrt(p21) / 2 * np.array([[1, 1], [-1, -1]]),
            np.sqrt(p22) / 2 * np.array([[1, -1], [-1, 1]]),
        ]
        for v, e in zip(conj.kraus, expected):
            assert max_abs(v - e) <= 1e-12

    def test_printed_composite(self):
        rng = np.random.default_rng(43)
        f = fourier_matrix(2)
        for _ in range(10):
            p11, p12 = rng.uniform(0, 1, size=2)
            rho11 = rng.uniform(0, 1)
            off = rng.uniform(-0.3, 0.3) + 1j * rng.uniform(-0.3, 0.3)
            rho = np.array([[rho11, off], [np.conj(off), 1 - rho11]])
            ch = stochastic_channel(stochastic_2x2(p11, p12))
            lhs = f @ apply_channel(ch, rho) @ adjoint(f)
            x = p11 * rho11 + p12 * (1 - rho11) - 0.5
            expected = np.array([[0.5, x], [x, 0.5]])
            assert max_abs(lhs - expected) <= 1e-12

    @pytest.mark.parametrize("n", (2, 4))
    def test_diagram_commutes(self, n):
        rng = np.random.default_rng(47 + n)
        f = fourier_matrix(n)
        ch = random_kraus_channel(n, 3, rng)
        conj = fourier_conjugate_channel(ch, f)
        assert conj.completeness_residual() <= 1e-10
        for _ in range(5):
            rho = random_density(n, rng)
            lhs = f @ apply_channel(ch, rho) @ adjoint(f)
            rhs = apply_channel(conj, f @ rho @ adjoint(f))
            assert max_abs(lhs - rhs) <= 1e-12

    def test_rejects_non_unitary(self):
        with pytest.raises(NotUnitaryError):
            fourier_conjugate_channel(identity_channel(2), np.diag([1.0, 2.0]))

    def test_rejects_dim_mismatch(self):
        with pytest.raises(DimMismatchError):
            fourier_conjugate_channel(identity_channel(2), np.eye(3))


class TestSqrtDecomposition:
    @pytest.mark.parametrize("n", (2, 4))
    def test_square_root_property(self, n):
        for q, p in full_points(n):
            s = point_sqrt_factor(q, p, n)
            assert max_abs(s @ s - point_operator(q, p, n)) <= 1e-10

    def test_origin_factor_n2(self):
        assert max_abs(point_sqrt_factor(0, 0, 2) - np.eye(2) / 2) <= 1e-12

    def test_identity_channel_reduction(self):
        rng = np.random.default_rng(53)
        rho = random_density(2, rng)
        w = wigner_table(rho)
        ch = identity_channel(2)
        for q, p in full_points(2):
            ms, s = fano_sqrt_decomposition(ch, q, p)
            value = trace_product([s, rho, s])
            assert abs(value - w[q, p]) <= 1e-12

    @pytest.mark.parametrize("n", (2, 4))
    def test_cyclic_identity_exhaustive(self, n):
        rng = np.random.default_rng(59 + n)
        ch = random_kraus_channel(n, 3, rng)
        rho = random_density(n, rng)
        w_out = channel_wigner(ch, rho)
        for q, p in full_points(n):
            _, s = fano_sqrt_decomposition(ch, q, p)
            value = sum(
                trace_product([s, v, rho, adjoint(v), s]) for v in ch.kraus
            )
            assert abs(value - w_out[q, p]) <= 1e-10

    def test_adjoint_form_on_psd_points(self):
        rng = np.random.default_rng(61)
        ch = random_kraus_channel(2, 2, rng)
        rho = random_density(2, rng)
        w_out = channel_wigner(ch, rho)
        psd_seen = 0
        for q, p in full_points(2):
            eigs = hermitian_eig(point_operator(q, p, 2)).eigenvalues
            if eigs[0] < -1e-12:
                continue
            psd_seen += 1
            ms, _ = fano_sqrt_decomposition(ch, q, p)
            value = sum(trace_product([mi, rho, adjoint(mi)]) for mi in ms)
            assert abs(value - w_out[q, p]) <= 1e-10
        assert psd_seen > 0

    def test_report_structure(self):
        rng = np.random.default_rng(67)
        ch = random_kraus_channel(2, 3, rng)
        rho = random_density(2, rng)
        report = adjoint_form_report(ch, rho)
        assert len(report) == 16
        assert {"q", "p", "min_eigenvalue", "psd", "cyclic_residual", "adjoint_residual"} <= set(
            report[0]
        )
        assert max(row["cyclic_residual"] for row in report) <= 1e-10
        non_psd = [row for row in report if not row["psd"]]
        assert non_psd, "the 2x2 lattice has points with a negative eigenvalue"
        # adjoint form evaluates tr(|A| Lambda(rho)); record, do not assert zero
        assert all(np.isfinite(row["adjoint_residual"]) for row in non_psd)

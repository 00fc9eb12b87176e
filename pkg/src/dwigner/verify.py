"""Seeded self-verification of the package's structural identities.

``run_checks(n, seed)`` exercises every invariant the library relies on at
one even dimension: Weyl algebra, phase-point operator structure, Wigner
table properties, reconstruction, marginals, line projectors, purity, and
channel/propagator consistency.  Each check reports a measured residual
against its tolerance; the CLI turns the outcomes into pass/fail lines.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import channels, phase_space, sampling, weyl, wigner
from .matrix_core import adjoint, max_abs, trace_product


@dataclass
class CheckOutcome:
    name: str
    passed: bool
    detail: str


def _residual_outcome(name: str, residual: float, tol: float) -> CheckOutcome:
    return CheckOutcome(
        name=name,
        passed=residual <= tol,
        detail=f"residual {residual:.3e} (tol {tol:.1e})",
    )


def _check_weyl_commutation(n, rng):
    worst = 0.0
    for cfg in (weyl.WeylConfig(n), weyl.WeylConfig(n, alpha_u=0.3, alpha_v=0.7)):
        u = weyl.clock_operator(cfg)
        v = weyl.shift_operator(cfg)
        for n1 in range(n):
            for n2 in range(n):
                lhs = np.linalg.matrix_power(u, n1) @ np.linalg.matrix_power(v, n2)
                rhs = np.exp(2j * np.pi * n1 * n2 / n) * (
                    np.linalg.matrix_power(v, n2) @ np.linalg.matrix_power(u, n1)
                )
                worst = max(worst, max_abs(lhs - rhs))
    return _residual_outcome("weyl.commutation", worst, 1e-12)


def _check_weyl_orthogonality(n, rng):
    cfg = weyl.WeylConfig(n)
    ops = {(a, b): weyl.weyl_operator(cfg, a, b) for a in range(n) for b in range(n)}
    worst = 0.0
    for na, wa in ops.items():
        for nb, wb in ops.items():
            expected = n if na == nb else 0.0
            worst = max(worst, abs(trace_product([adjoint(wa), wb]) - expected))
    return _residual_outcome("weyl.orthogonality", worst, 1e-12)


def _check_weyl_adjoint(n, rng):
    cfg = weyl.WeylConfig(n)
    worst = 0.0
    for n1 in range(n):
        for n2 in range(n):
            worst = max(
                worst,
                max_abs(
                    adjoint(weyl.weyl_operator(cfg, n1, n2))
                    - weyl.weyl_operator(cfg, -n1, -n2)
                ),
            )
    return _residual_outcome("weyl.adjoint", worst, 1e-12)


def _check_weyl_roundtrip(n, rng):
    cfg = weyl.WeylConfig(n)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    back = weyl.weyl_synthesize(cfg, weyl.weyl_expand(cfg, a))
    return _residual_outcome("weyl.expand_roundtrip", max_abs(back - a), 1e-10)


def _check_point_hermiticity(n, rng):
    worst = 0.0
    for q, p in phase_space.full_points(n):
        a = phase_space.point_operator(q, p, n)
        worst = max(worst, max_abs(a - adjoint(a)))
    return _residual_outcome("phase_space.point_hermiticity", worst, 1e-12)


def _check_point_fourier_form(n, rng):
    # quadruple-sum construction vs the closed form, exhaustively
    two_n = 2 * n
    t_stack = np.stack(
        [
            phase_space.translation_operator(lam, lam2, n)
            for lam in range(two_n)
            for lam2 in range(two_n)
        ]
    )
    lam = np.repeat(np.arange(two_n), two_n)
    lam2 = np.tile(np.arange(two_n), two_n)
    worst = 0.0
    for q, p in phase_space.full_points(n):
        phases = np.exp(-2j * np.pi * (lam2 * q - lam * p) / two_n)
        summed = np.einsum("l,lij->ij", phases, t_stack) / (two_n**2)
        worst = max(worst, max_abs(summed - phase_space.point_operator(q, p, n)))
    return _residual_outcome("phase_space.point_fourier_form", worst, 1e-10)


def _check_point_symmetry(n, rng):
    worst = 0.0
    for q in range(n):
        for p in range(n):
            base = phase_space.point_operator(q, p, n)
            for sq in (0, 1):
                for sp in (0, 1):
                    shifted = phase_space.point_operator(q + sq * n, p + sp * n, n)
                    sign = (-1.0) ** ((sp * q + sq * p + sq * sp * n) % 2)
                    worst = max(worst, max_abs(shifted - sign * base))
    return _residual_outcome("phase_space.point_symmetry", worst, 1e-12)


def _check_point_orthogonality(n, rng):
    worst = 0.0
    for qa, pa in phase_space.core_points(n):
        a = phase_space.point_operator(qa, pa, n)
        for qb, pb in phase_space.core_points(n):
            b = phase_space.point_operator(qb, pb, n)
            expected = (
                1.0
                / (4 * n)
                * ((qb - qa) % n == 0)
                * ((pb - pa) % n == 0)
            )
            worst = max(worst, abs(trace_product([a, b]) - expected))
    return _residual_outcome("phase_space.point_orthogonality", worst, 1e-12)


def _check_reflection_fourier(n, rng):
    f = phase_space.fourier_matrix(n)
    r = phase_space.reflection_operator(n)
    u = phase_space.position_shift(n)
    v = phase_space.momentum_shift(n)
    worst = max_abs(f @ f - r)
    worst = max(worst, max_abs(u @ r - r @ adjoint(u)))
    worst = max(worst, max_abs(v @ r - r @ adjoint(v)))
    return _residual_outcome("phase_space.reflection_fourier", worst, 1e-12)


def _check_translation_power(n, rng):
    worst = 0.0
    for q, p in ((1, 0), (0, 1), (1, 1), (1, 2)):
        t = phase_space.translation_operator(q, p, n)
        power = np.eye(n, dtype=complex)
        for lam in range(2 * n):
            worst = max(
                worst,
                max_abs(phase_space.translation_operator(lam * q, lam * p, n) - power),
            )
            power = power @ t
    return _residual_outcome("phase_space.translation_power", worst, 1e-12)


def _check_line_projectors(n, rng):
    worst = 0.0
    for n1, n2 in ((1, 0), (0, 1), (1, 1)):
        for n3 in range(2 * n):
            proj = phase_space.line_projector(phase_space.PhaseLine(n1, n2, n3, n))
            worst = max(worst, max_abs(proj - adjoint(proj)))
            worst = max(worst, max_abs(proj @ proj - proj))
    return _residual_outcome("phase_space.line_projector_idempotent", worst, 1e-10)


def _check_table_realness(n, rng):
    stack = phase_space.point_operator_stack(n)
    worst = 0.0
    for _ in range(5):
        rho = sampling.random_density(n, rng)
        values = np.einsum("aij,ji->a", stack, rho)
        worst = max(worst, max_abs(values.imag))
    return _residual_outcome("wigner.table_realness", worst, 1e-12)


def _check_lemma_vs_trace(n, rng):
    worst = 0.0
    for _ in range(5):
        rho = sampling.random_density(n, rng)
        worst = max(
            worst,
            max_abs(
                wigner.wigner_table(rho, method="trace")
                - wigner.wigner_table(rho, method="lemma")
            ),
        )
    return _residual_outcome("wigner.lemma_vs_trace", worst, 1e-10)


def _check_odd_rows(n, rng):
    # entrywise vanishing holds for position-diagonal states; for general
    # states only the odd row/column sums vanish (see _check_marginals)
    worst = 0.0
    diag = rng.random(n)
    rho = np.diag(diag / diag.sum()).astype(complex)
    worst = max(worst, max_abs(wigner.wigner_table(rho)[1::2, :]))
    for q0 in range(n):
        w = wigner.wigner_table(wigner.density_from_state(wigner.basis_state(q0, n)))
        worst = max(worst, max_abs(w[1::2, :]))
    return _residual_outcome("wigner.odd_rows_diagonal_states", worst, 1e-12)


def _check_symmetry_extension(n, rng):
    worst = 0.0
    for _ in range(5):
        w = wigner.wigner_table(sampling.random_density(n, rng))
        worst = max(worst, wigner.symmetry_residual(w))
    core = rng.standard_normal((n, n))
    ext = wigner.extend_by_symmetry(core)
    worst = max(worst, max_abs(wigner.restrict_to_core(ext) - core))
    return _residual_outcome("wigner.symmetry_extension", worst, 1e-12)


def _check_marginals(n, rng):
    f = phase_space.fourier_matrix(n)
    worst = 0.0
    for _ in range(10):
        rho = sampling.random_density(n, rng)
        w = wigner.wigner_table(rho)
        pos = wigner.marginal_position(w)
        mom = wigner.marginal_momentum(w)
        worst = max(worst, max_abs(pos - np.diag(rho).real))
        worst = max(worst, max_abs(mom - np.diag(adjoint(f) @ rho @ f).real))
        odd_rows = np.array([w[2 * q + 1, :].sum() for q in range(n)])
        odd_cols = np.array([w[:, 2 * p + 1].sum() for p in range(n)])
        worst = max(worst, max_abs(odd_rows), max_abs(odd_cols))
    return _residual_outcome("wigner.marginals", worst, 1e-10)


def _check_w_transform(n, rng):
    worst = 0.0
    for _ in range(5):
        psi = sampling.random_state_vector(n, rng)
        phi = wigner.w_transform(psi)
        worst = max(worst, max_abs(phi[:n] - wigner.momentum_distribution(psi)))
    return _residual_outcome("wigner.w_transform", worst, 1e-10)


def _check_overlap(n, rng):
    worst = 0.0
    for _ in range(5):
        rho1 = sampling.random_density(n, rng)
        rho2 = sampling.random_density(n, rng)
        lhs = np.trace(rho1 @ rho2).real
        rhs = wigner.table_overlap(wigner.wigner_table(rho1), wigner.wigner_table(rho2))
        worst = max(worst, abs(lhs - rhs))
    return _residual_outcome("wigner.overlap_identity", worst, 1e-10)


def _check_mixing(n, rng):
    rho1 = sampling.random_density(n, rng)
    rho2 = sampling.random_density(n, rng)
    a = 0.25
    mixed = wigner.wigner_table(a * rho1 + (1 - a) * rho2)
    combo = a * wigner.wigner_table(rho1) + (1 - a) * wigner.wigner_table(rho2)
    worst = max_abs(mixed - combo)
    outcome = _residual_outcome("wigner.affine_mixing", worst, 1e-12)
    if not outcome.passed:
        return outcome
    # amplitude superposition must NOT mix affinely
    psi = wigner.superposition_state(0, 1, 0.0, n)
    w_psi = wigner.wigner_table(wigner.density_from_state(psi))
    w_avg = 0.5 * (wigner.wigner_pure_position(0, n) + wigner.wigner_pure_position(1, n))
    gap = max_abs(w_psi - w_avg)
    if gap <= 1e-6:
        return CheckOutcome(
            name="wigner.affine_mixing",
            passed=False,
            detail=f"superposition table coincides with the mixture (gap {gap:.3e})",
        )
    return CheckOutcome(
        name="wigner.affine_mixing",
        passed=True,
        detail=f"residual {worst:.3e} (tol 1.0e-12), superposition gap {gap:.3e}",
    )


def _check_reconstruction(n, rng):
    worst = 0.0
    for _ in range(10):
        rho = sampling.random_density(n, rng)
        w = wigner.wigner_table(rho)
        via_core = wigner.reconstruct(w, formula="core")
        via_full = wigner.reconstruct(w, formula="full")
        worst = max(worst, max_abs(via_core - via_full))
        worst = max(worst, max_abs(via_core - rho))
        worst = max(worst, max_abs(wigner.wigner_table(via_core) - w))
    return _residual_outcome("wigner.reconstruction", worst, 1e-10)


def _check_purity(n, rng):
    worst_pure = 0.0
    for _ in range(3):
        rho = sampling.random_pure_density(n, rng)
        worst_pure = max(worst_pure, wigner.purity_residual(wigner.wigner_table(rho)))
    mixed = wigner.purity_residual(wigner.wigner_table(np.eye(n) / n))
    passed = worst_pure <= 1e-8 and mixed > 0.0
    return CheckOutcome(
        name="wigner.purity_constraint",
        passed=passed,
        detail=f"pure residual {worst_pure:.3e} (tol 1.0e-08), mixed residual {mixed:.3e} (> 0 required)",
    )


def _check_channel_commutation(n, rng):
    worst = 0.0
    for terms in (2, 3, 4):
        ch = sampling.random_kraus_channel(n, terms, rng)
        rho = sampling.random_density(n, rng)
        direct = wigner.wigner_table(channels.apply_channel(ch, rho))
        fused = channels.channel_wigner(ch, rho)
        worst = max(worst, max_abs(direct - fused))
    return _residual_outcome("channels.wigner_commutation", worst, 1e-12)


def _check_propagator(n, rng):
    worst = 0.0
    us = [np.eye(n, dtype=complex), phase_space.fourier_matrix(n)]
    us.extend(sampling.random_unitary(n, rng) for _ in range(3))
    for u in us:
        prop = channels.unitary_propagator(u)
        rho = sampling.random_density(n, rng)
        w = wigner.wigner_table(rho)
        evolved = prop.apply(w)
        direct = wigner.wigner_table(u @ rho @ adjoint(u))
        worst = max(worst, max_abs(evolved - direct))
    return _residual_outcome("channels.propagator_action", worst, 1e-9)


def _check_gamma_invariance(n, rng):
    u = sampling.random_unitary(n, rng)
    prop = channels.unitary_propagator(u)
    stack = phase_space.point_operator_stack(n)
    count = 4 * n * n
    if n == 2:
        pairs = np.einsum("bij,cjk->bcik", stack, stack)
        gamma_full = np.einsum("aij,bcji->abc", stack, pairs)
        worst = 0.0
        for _ in range(6):
            ia, ib, ic = (int(rng.integers(count)) for _ in range(3))
            contracted = np.einsum(
                "a,b,c,abc->", prop.z[ia], prop.z[ib], prop.z[ic], gamma_full
            )
            worst = max(worst, abs(contracted - gamma_full[ia, ib, ic]))
    else:
        # same contraction with the inner sums over the lattice regrouped
        worst = 0.0
        for _ in range(6):
            ia, ib, ic = (int(rng.integers(count)) for _ in range(3))
            ms = [np.einsum("a,aij->ij", prop.z[i], stack) for i in (ia, ib, ic)]
            direct = trace_product([stack[ia], stack[ib], stack[ic]])
            worst = max(worst, abs(trace_product(ms) - direct))
    return _residual_outcome("channels.gamma_invariance", worst, 1e-8)


def _check_fourier_conjugation(n, rng):
    f = phase_space.fourier_matrix(n)
    worst = 0.0
    for terms in (2, 3):
        ch = sampling.random_kraus_channel(n, terms, rng)
        conj = channels.fourier_conjugate_channel(ch, f)
        worst = max(worst, conj.completeness_residual())
        rho = sampling.random_density(n, rng)
        lhs = f @ channels.apply_channel(ch, rho) @ adjoint(f)
        rhs = channels.apply_channel(conj, f @ rho @ adjoint(f))
        worst = max(worst, max_abs(lhs - rhs))
    return _residual_outcome("channels.fourier_conjugation", worst, 1e-12)


def _check_sqrt_decomposition(n, rng):
    ch = sampling.random_kraus_channel(n, 3, rng)
    rho = sampling.random_density(n, rng)
    report = channels.adjoint_form_report(ch, rho)
    worst_cyclic = max(row["cyclic_residual"] for row in report)
    worst_psd_adjoint = max(
        (row["adjoint_residual"] for row in report if row["psd"]), default=0.0
    )
    worst = max(worst_cyclic, worst_psd_adjoint)
    return _residual_outcome("channels.sqrt_decomposition", worst, 1e-10)


CHECKS = (
    _check_weyl_commutation,
    _check_weyl_orthogonality,
    _check_weyl_adjoint,
    _check_weyl_roundtrip,
    _check_point_hermiticity,
    _check_point_fourier_form,
    _check_point_symmetry,
    _check_point_orthogonality,
    _check_reflection_fourier,
    _check_translation_power,
    _check_line_projectors,
    _check_table_realness,
    _check_lemma_vs_trace,
    _check_odd_rows,
    _check_symmetry_extension,
    _check_marginals,
    _check_w_transform,
    _check_overlap,
    _check_mixing,
    _check_reconstruction,
    _check_purity,
    _check_channel_commutation,
    _check_propagator,
    _check_gamma_invariance,
    _check_fourier_conjugation,
    _check_sqrt_decomposition,
)


def run_checks(n: int, seed: int = 0) -> list[CheckOutcome]:
    """Run every registered check at dimension ``n`` with one seeded generator."""
    if n < 2 or n % 2 != 0:
        raise ValueError(f"N must be even and >= 2, got {n}")
    rng = np.random.default_rng(seed)
    return [check(n, rng) for check in CHECKS]

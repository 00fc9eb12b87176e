"""Kraus channels and their action on states and Wigner tables.

A channel is a finite family of N x N matrices V_i with
sum_i V_i* V_i = I, acting as rho -> sum_i V_i rho V_i*.  The module also
provides the phase-space propagator of a unitary,

    Z[alpha, beta] = N tr(A(alpha) U A(beta) U*),

a real 4N^2 x 4N^2 matrix that implements conjugation by U directly on
Wigner tables, the Fourier-conjugated channel with Kraus operators
F V_i F*, and the per-point square-root decomposition M_i = sqrt(A) V_i
that turns a channel's Wigner value into a sum of traces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matrix_core import (
    DimMismatchError,
    adjoint,
    as_complex_matrix,
    hermitian_eig,
    max_abs,
    validate_unitary,
)
from .phase_space import _point_stack_full, full_points, point_operator
from .wigner import NonHermitianResultError, wigner_table


class InvalidChannelError(ValueError):
    """Kraus family fails the trace-preservation identity."""


@dataclass
class KrausChannel:
    """A finite Kraus family of equal-sized square matrices."""

    kraus: list[np.ndarray]
    n: int = field(init=False)

    def __post_init__(self) -> None:
        if not self.kraus:
            raise ValueError("channel needs at least one Kraus operator")
        ops = [as_complex_matrix(v) for v in self.kraus]
        dim = ops[0].shape[0]
        for v in ops:
            if v.shape != (dim, dim):
                raise DimMismatchError(
                    f"Kraus operators must all be {dim}x{dim}, got {v.shape}"
                )
        self.kraus = ops
        self.n = dim

    def completeness_residual(self) -> float:
        """Max-norm deviation of sum_i V_i* V_i from the identity."""
        total = sum(adjoint(v) @ v for v in self.kraus)
        return max_abs(total - np.eye(self.n))


def identity_channel(n: int) -> KrausChannel:
    return KrausChannel([np.eye(n, dtype=complex)])


def stochastic_channel(p_matrix) -> KrausChannel:
    """Channel with Kraus operators sqrt(P[i, j]) |i><j| for a column-stochastic P.

    Acting on a state it replaces the diagonal d with P @ d and erases all
    off-diagonal entries.
    """
    p = np.asarray(p_matrix, dtype=float)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise ValueError(f"expected a square stochastic matrix, got shape {p.shape}")
    if np.any(p < 0) or max_abs(p.sum(axis=0) - 1.0) > 1e-12:
        raise ValueError("matrix must be column stochastic (nonnegative, columns sum to 1)")
    n = p.shape[0]
    ops = []
    for i in range(n):
        for j in range(n):
            v = np.zeros((n, n), dtype=complex)
            v[i, j] = np.sqrt(p[i, j])
            ops.append(v)
    return KrausChannel(ops)


def depolarizing_channel(n: int) -> KrausChannel:
    """Channel with Kraus operators |i><j| / sqrt(N); sends every state to I/N."""
    ops = []
    for i in range(n):
        for j in range(n):
            v = np.zeros((n, n), dtype=complex)
            v[i, j] = 1.0 / np.sqrt(n)
            ops.append(v)
    return KrausChannel(ops)


def apply_channel(channel: KrausChannel, rho, completeness_tol: float = 1e-8) -> np.ndarray:
    """sum_i V_i rho V_i*; validates dimensions and trace preservation."""
    m = as_complex_matrix(rho)
    if m.shape != (channel.n, channel.n):
        raise DimMismatchError(
            f"state is {m.shape}, channel acts on {channel.n}x{channel.n}"
        )
    residual = channel.completeness_residual()
    if residual > completeness_tol:
        raise InvalidChannelError(
            f"channel is not trace preserving (residual {residual:.3e})"
        )
    out = np.zeros_like(m)
    for v in channel.kraus:
        out += v @ m @ adjoint(v)
    return out


def channel_wigner(channel: KrausChannel, rho, completeness_tol: float = 1e-8) -> np.ndarray:
    """Wigner table of the channel output, accumulated term by term.

    Each Kraus term V_i rho V_i* contributes its own table; by linearity the
    sum equals ``wigner_table(apply_channel(channel, rho))`` up to roundoff.
    """
    m = as_complex_matrix(rho)
    if m.shape != (channel.n, channel.n):
        raise DimMismatchError(
            f"state is {m.shape}, channel acts on {channel.n}x{channel.n}"
        )
    residual = channel.completeness_residual()
    if residual > completeness_tol:
        raise InvalidChannelError(
            f"channel is not trace preserving (residual {residual:.3e})"
        )
    out = np.zeros((2 * channel.n, 2 * channel.n))
    for v in channel.kraus:
        out += wigner_table(v @ m @ adjoint(v))
    return out


@dataclass
class PhasePropagator:
    """Real matrix acting on flattened Wigner tables, row-major grid order."""

    n: int
    z: np.ndarray

    def apply(self, table) -> np.ndarray:
        w = np.asarray(table, dtype=float)
        if w.shape != (2 * self.n, 2 * self.n):
            raise DimMismatchError(
                f"expected a {2 * self.n}x{2 * self.n} table, got shape {w.shape}"
            )
        return (self.z @ w.reshape(-1)).reshape(2 * self.n, 2 * self.n)


def unitary_propagator(u, imag_tol: float = 1e-12) -> PhasePropagator:
    """Z[alpha, beta] = N tr(A(alpha) U A(beta) U*) for a unitary U.

    Applying Z to the table of rho yields the table of U rho U*.  The
    entries are real; an imaginary residue above ``imag_tol`` raises.
    """
    mat = validate_unitary(u)
    n = mat.shape[0]
    stack = _point_stack_full(n)
    conjugated = np.einsum("ij,ajk,lk->ail", mat, stack, np.conj(mat))
    z = n * np.einsum("aij,bji->ab", stack, conjugated)
    residue = max_abs(z.imag)
    if residue > imag_tol:
        raise NonHermitianResultError(
            f"propagator has imaginary residue {residue:.3e}"
        )
    return PhasePropagator(n=n, z=z.real.copy())


def fourier_conjugate_channel(channel: KrausChannel, f) -> KrausChannel:
    """Channel with Kraus operators F V_i F*; makes F o Lambda = G o F."""
    mat = validate_unitary(f)
    if mat.shape != (channel.n, channel.n):
        raise DimMismatchError(
            f"conjugating unitary is {mat.shape}, channel acts on "
            f"{channel.n}x{channel.n}"
        )
    return KrausChannel([mat @ v @ adjoint(mat) for v in channel.kraus])


def point_sqrt_factor(q: int, p: int, n: int) -> np.ndarray:
    """S with S @ S = A(q, p), from principal square roots of the eigenvalues.

    A(q, p) can have negative eigenvalues, in which case S picks up
    imaginary eigenvalues and is no longer Hermitian; S @ S = A holds
    regardless.
    """
    decomp = hermitian_eig(point_operator(q, p, n))
    roots = np.sqrt(decomp.eigenvalues.astype(complex))
    return (decomp.eigenvectors * roots) @ adjoint(decomp.eigenvectors)


def fano_sqrt_decomposition(
    channel: KrausChannel, q: int, p: int
) -> tuple[list[np.ndarray], np.ndarray]:
    """Operators M_i = S V_i with S the square-root factor of A(q, p).

    The cyclic identity sum_i tr(S V_i rho V_i* S) = W_{channel(rho)}(q, p)
    holds at every lattice point.  The adjoint form sum_i tr(M_i rho M_i*)
    agrees with it exactly when A(q, p) is positive semidefinite (S is then
    Hermitian); off the PSD cone it evaluates sum_i tr(|A| V_i rho V_i*)
    instead, so the two forms differ.
    """
    s = point_sqrt_factor(q, p, channel.n)
    return [s @ v for v in channel.kraus], s


def adjoint_form_report(channel: KrausChannel, rho, psd_tol: float = 1e-12) -> list[dict]:
    """Per-grid-point comparison of the two decomposition identities.

    For every lattice point, records the minimum eigenvalue of A(q, p),
    whether A is PSD at ``psd_tol``, and the absolute residuals of the
    cyclic form sum tr(S V rho V* S) and the adjoint form sum tr(M rho M*)
    against the channel-output Wigner value.
    """
    m = as_complex_matrix(rho)
    out_table = channel_wigner(channel, m)
    rows = []
    for q, p in full_points(channel.n):
        decomp = hermitian_eig(point_operator(q, p, channel.n))
        min_eig = float(decomp.eigenvalues[0])
        ms, s = fano_sqrt_decomposition(channel, q, p)
        cyclic = sum(np.trace(s @ v @ m @ adjoint(v) @ s) for v in channel.kraus)
        adj = sum(np.trace(mi @ m @ adjoint(mi)) for mi in ms)
        w = out_table[q, p]
        rows.append(
            {
                "q": q,
                "p": p,
                "min_eigenvalue": min_eig,
                "psd": bool(min_eig >= -psd_tol),
                "cyclic_residual": float(abs(cyclic - w)),
                "adjoint_residual": float(abs(adj - w)),
            }
        )
    return rows

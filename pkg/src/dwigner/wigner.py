"""Discrete Wigner tables for density operators on an even-dimensional space.

A Wigner table is a real 2N x 2N array W with W[q, p] = tr(A(q, p) rho),
where A is the phase-point operator of :mod:`dwigner.phase_space`.  Rows
are indexed by q, columns by p.  Key structural facts, all enforced or
checked here:

* the full table is determined by its N x N core through the sign rule
  W[q + sq*N, p + sp*N] = W[q, p] * (-1)^(sp*q + sq*p + sq*sp*N);
* summing row 2q gives the position probability <q|rho|q>, summing column
  2p gives the momentum probability, and odd-index sums vanish;
* rows with odd q vanish entrywise for states diagonal in the position
  basis; coherences between positions live exactly there;
* rho is recovered as 4N * sum over the core (or N * sum over the full
  lattice) of W(alpha) A(alpha).

The trace against the point operator is the ground-truth evaluation; the
faster matrix-element sum

    W[q, p] = (1/2N) sum_m rho[(q - m) mod N, m] exp(i*pi*p*(2m - q)/N)

is an exactly equivalent path kept for cross-validation (``method="lemma"``).
"""

from __future__ import annotations

import numpy as np

from .matrix_core import as_complex_matrix, max_abs
from .phase_space import (
    _point_stack_core,
    _point_stack_full,
    fourier_matrix,
    gamma_tensor,
    point_operator,
)

PURITY_PREFACTOR_SCALE = 16  # prefactor 16*N^2; fixed by the brute-force oracle in the tests


class OddDimensionError(ValueError):
    """Wigner tables are only defined here for even N."""


class NonHermitianResultError(ValueError):
    """A table evaluation produced a non-negligible imaginary part."""


class InconsistentTableError(ValueError):
    """A table violates the core-extension symmetry relation."""


class DegenerateSuperpositionError(ValueError):
    """Two-term superposition with coinciding basis indices."""


class NotNormalizedError(ValueError):
    """State amplitudes do not satisfy the normalization constraint."""


def _require_even(n: int) -> None:
    if n < 2 or n % 2 != 0:
        raise OddDimensionError(f"dimension must be even and >= 2, got {n}")


def table_dimension(table) -> int:
    """Recover N from a 2N x 2N table, validating the shape."""
    w = np.asarray(table, dtype=float)
    if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] % 2 != 0:
        raise ValueError(f"expected a 2N x 2N table, got shape {w.shape}")
    return w.shape[0] // 2


def wigner_table(rho, method: str = "trace", imag_tol: float = 1e-10) -> np.ndarray:
    """Wigner table of a density operator (or any Hermitian matrix).

    ``method`` selects the evaluation path: ``"trace"`` contracts rho with
    the stack of point operators, ``"lemma"`` uses the closed matrix-element
    sum.  Both agree to roundoff; the trace path is the reference.

    Raises OddDimensionError for odd N and NonHermitianResultError if the
    imaginary residue of the evaluation exceeds ``imag_tol`` (which signals
    a non-Hermitian input or an operator bug upstream).
    """
    m = as_complex_matrix(rho)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    _require_even(n)
    if method == "trace":
        values = np.einsum("aij,ji->a", _point_stack_full(n), m).reshape(2 * n, 2 * n)
    elif method == "lemma":
        values = _table_lemma(m)
    else:
        raise ValueError(f"method must be 'trace' or 'lemma', got {method!r}")
    residue = max_abs(values.imag)
    if residue > imag_tol:
        raise NonHermitianResultError(
            f"imaginary residue {residue:.3e} exceeds {imag_tol:g}"
        )
    return values.real.copy()


def _table_lemma(rho: np.ndarray) -> np.ndarray:
    n = rho.shape[0]
    w = np.zeros((2 * n, 2 * n), dtype=complex)
    for q in range(2 * n):
        elements = np.array([rho[(q - m) % n, m] for m in range(n)])
        for p in range(2 * n):
            # phase exponents i*pi*p*(2m - q)/N with integer 2m - q
            phases = np.exp(1j * np.pi * p * (2 * np.arange(n) - q) / n)
            w[q, p] = np.dot(elements, phases) / (2 * n)
    return w


def basis_state(q0: int, n: int) -> np.ndarray:
    """Position basis vector |q0> of dimension N."""
    if not 0 <= q0 < n:
        raise IndexError(f"basis index {q0} out of range for dimension {n}")
    v = np.zeros(n, dtype=complex)
    v[q0] = 1.0
    return v


def superposition_state(q0: int, q1: int, phi: float, n: int) -> np.ndarray:
    """Normalized two-term superposition (|q0> + exp(-i*phi) |q1>)/sqrt(2)."""
    if q0 == q1:
        raise DegenerateSuperpositionError(f"superposition indices coincide: {q0}")
    return (basis_state(q0, n) + np.exp(-1j * phi) * basis_state(q1, n)) / np.sqrt(2.0)


def density_from_state(psi) -> np.ndarray:
    """Rank-1 density operator |psi><psi| of a normalized state vector."""
    v = np.asarray(psi, dtype=complex)
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > 1e-12:
        raise NotNormalizedError(f"state vector has norm {norm:.15g}")
    return np.outer(v, np.conj(v))


def wigner_pure_position(q0: int, n: int) -> np.ndarray:
    """Closed-form table of the position eigenstate |q0><q0|.

    Supported on two rows: constant 1/2N on q = 2*q0 and alternating
    (-1)^p / 2N on the mirror row q = 2*q0 + N (mod 2N), the interference
    fringe of the periodic boundary.  Identical to
    ``wigner_table(|q0><q0|)`` to machine precision.
    """
    _require_even(n)
    if not 0 <= q0 < n:
        raise IndexError(f"basis index {q0} out of range for dimension {n}")
    w = np.zeros((2 * n, 2 * n))
    w[(2 * q0) % (2 * n), :] = 1.0 / (2 * n)
    signs = np.where(np.arange(2 * n) % 2 == 0, 1.0, -1.0)
    w[(2 * q0 + n) % (2 * n), :] = signs / (2 * n)
    return w


def wigner_superposition(q0: int, q1: int, phi: float, n: int) -> np.ndarray:
    """Closed-form table of (|q0> + exp(-i*phi)|q1>)/sqrt(2).

    Average of the two position-eigenstate tables plus the interference
    term, which lives on rows with q0 + q1 - q = 0 (mod N) and there equals

        (1/N) * (-1)^(p*(q0+q1-q)/N) * cos(pi*p*(q1 - q0)/N + phi),

    a form derived from the matrix-element sum and identical to the trace
    evaluation of the rank-1 density matrix.
    """
    _require_even(n)
    if q0 == q1:
        raise DegenerateSuperpositionError(f"superposition indices coincide: {q0}")
    if not (0 <= q0 < n and 0 <= q1 < n):
        raise IndexError(f"basis indices ({q0}, {q1}) out of range for dimension {n}")
    w = 0.5 * (wigner_pure_position(q0, n) + wigner_pure_position(q1, n))
    for q in range(2 * n):
        q_tilde = q0 + q1 - q
        if q_tilde % n != 0:
            continue
        mirror = q_tilde // n
        for p in range(2 * n):
            sign = -1.0 if (mirror * p) % 2 else 1.0
            delta = sign * np.cos(np.pi * p * (q1 - q0) / n + phi) / n
            w[q, p] += 0.5 * delta
    return w


def superposition_cross_term(
    a: complex, b: complex, q: int, p: int, n: int, q0: int = 0, q1: int = 1
) -> float:
    """Interference contribution 2*Re(a*conj(b)*<q1|A(q,p)|q0>) of a|q0>+b|q1>."""
    if abs(abs(a) ** 2 + abs(b) ** 2 - 1.0) > 1e-12:
        raise NotNormalizedError(
            f"amplitudes not normalized: |a|^2+|b|^2 = {abs(a)**2 + abs(b)**2:.15g}"
        )
    element = point_operator(q, p, n)[q1, q0]
    return float(2.0 * np.real(a * np.conj(b) * element))


def symmetry_residual(table) -> float:
    """Max deviation of a table from its own core extension."""
    w = np.asarray(table, dtype=float)
    n = table_dimension(w)
    return max_abs(w - extend_by_symmetry(w[:n, :n]))


def restrict_to_core(table) -> np.ndarray:
    """The independent N x N core of a 2N x 2N table."""
    w = np.asarray(table, dtype=float)
    n = table_dimension(w)
    return w[:n, :n].copy()


def extend_by_symmetry(core) -> np.ndarray:
    """Fill the 2N x 2N table from its N x N core via the sign rule."""
    c = np.asarray(core, dtype=float)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise ValueError(f"expected a square core, got shape {c.shape}")
    n = c.shape[0]
    _require_even(n)
    q = np.arange(n)[:, None]
    p = np.arange(n)[None, :]
    w = np.empty((2 * n, 2 * n))
    for sq in (0, 1):
        for sp in (0, 1):
            signs = np.where((sp * q + sq * p + sq * sp * n) % 2 == 0, 1.0, -1.0)
            w[sq * n : (sq + 1) * n, sp * n : (sp + 1) * n] = c * signs
    return w


def reconstruct(table, formula: str = "core", symmetry_tol: float = 1e-8) -> np.ndarray:
    """Density operator from its Wigner table.

    ``formula="core"`` evaluates 4N * sum over the N x N core of
    W(alpha) A(alpha); ``formula="full"`` evaluates N * sum over the whole
    lattice.  The two agree whenever the table satisfies the symmetry
    relation, which is checked first (InconsistentTableError beyond
    ``symmetry_tol``).
    """
    w = np.asarray(table, dtype=float)
    n = table_dimension(w)
    residual = symmetry_residual(w)
    if residual > symmetry_tol:
        raise InconsistentTableError(
            f"table violates the symmetry relation (residual {residual:.3e})"
        )
    if formula == "core":
        core = w[:n, :n]
        return 4 * n * np.einsum("a,aij->ij", core.reshape(-1), _point_stack_core(n))
    if formula == "full":
        return n * np.einsum("a,aij->ij", w.reshape(-1), _point_stack_full(n))
    raise ValueError(f"formula must be 'core' or 'full', got {formula!r}")


def marginal_position(table) -> np.ndarray:
    """Position distribution: entry q is the sum of row 2q."""
    w = np.asarray(table, dtype=float)
    n = table_dimension(w)
    return np.array([w[2 * q, :].sum() for q in range(n)])


def marginal_momentum(table) -> np.ndarray:
    """Momentum distribution: entry p is the sum of column 2p."""
    w = np.asarray(table, dtype=float)
    n = table_dimension(w)
    return np.array([w[:, 2 * p].sum() for p in range(n)])


def w_transform(psi) -> np.ndarray:
    """Column sums phi(p) = sum_q W_psi(q, 2p mod 2N) for p = 0 .. 2N-1.

    For a normalized pure state the first N entries reproduce the squared
    Fourier amplitudes |(F psi)(p)|^2; the sequence repeats with period N.
    """
    v = np.asarray(psi, dtype=complex)
    if v.ndim != 1:
        raise ValueError(f"expected a state vector, got shape {v.shape}")
    n = v.shape[0]
    w = wigner_table(density_from_state(v))
    return np.array([w[:, (2 * p) % (2 * n)].sum() for p in range(2 * n)])


def momentum_distribution(psi) -> np.ndarray:
    """|(F psi)(p)|^2, the direct Fourier-side check for the W-transform."""
    v = np.asarray(psi, dtype=complex)
    return np.abs(fourier_matrix(v.shape[0]).conj().T @ v) ** 2


def table_overlap(table1, table2) -> float:
    """N * sum over the full lattice of W1*W2; equals tr(rho1 rho2)."""
    w1 = np.asarray(table1, dtype=float)
    w2 = np.asarray(table2, dtype=float)
    n = table_dimension(w1)
    if w2.shape != w1.shape:
        raise ValueError(f"table shapes differ: {w1.shape} vs {w2.shape}")
    return float(n * np.sum(w1 * w2))


def purity_residual(table) -> float:
    """Deviation of a table from the pure-state quadratic constraint.

    Returns the max over the full lattice of

        | W(alpha) - 16 N^2 * sum_{beta,gamma in core} Gamma(alpha,beta,gamma)
                                                       W(beta) W(gamma) |

    with Gamma the three-point trace kernel.  Vanishes (to roundoff) exactly
    for tables of pure states; strictly positive for properly mixed ones.
    """
    w = np.asarray(table, dtype=float)
    n = table_dimension(w)
    core = w[:n, :n].reshape(-1)
    quad = np.einsum("abc,b,c->a", gamma_tensor(n), core, core)
    prefactor = PURITY_PREFACTOR_SCALE * n * n
    return max_abs(w.reshape(-1) - prefactor * quad)

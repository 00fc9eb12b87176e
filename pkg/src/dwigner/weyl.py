"""Clock and shift unitaries and the discrete Weyl operator basis.

The clock operator U is diagonal with entries exp(2*pi*i*(alpha_u + k)/N);
the shift operator V maps |l> to exp(2*pi*i*alpha_v/N) |l+1 mod N>.  They
obey U^a V^b = exp(2*pi*i*a*b/N) V^b U^a, an orientation this module's
tests confirm by brute-force multiplication.

The Weyl operator attached to an integer pair (n1, n2) is

    W(n1, n2) = exp(-i*pi*n1*n2/N) U^n1 V^n2.

Indices are deliberately NOT reduced mod N here: the family is projective,
and reducing an index can flip the sign of the operator.  Exact-integer
indices keep the adjoint identity W(n)* = W(-n) and the composition law
W(n) W(m) = exp(i*pi*(n1*m2 - n2*m1)/N) W(n+m) true to machine precision.
Restricted to 0 <= n1, n2 < N the operators are orthogonal,
tr(W(n)* W(m)) = N [n == m], and span all N x N matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix_core import DimMismatchError, adjoint, as_complex_matrix


@dataclass(frozen=True)
class WeylConfig:
    """Hilbert dimension plus the two phase offsets in [0, 1]."""

    n: int
    alpha_u: float = 0.0
    alpha_v: float = 0.0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got {self.n}")
        if not 0.0 <= self.alpha_u <= 1.0:
            raise ValueError(f"alpha_u must lie in [0, 1], got {self.alpha_u}")
        if not 0.0 <= self.alpha_v <= 1.0:
            raise ValueError(f"alpha_v must lie in [0, 1], got {self.alpha_v}")


def clock_operator(cfg: WeylConfig) -> np.ndarray:
    """Diagonal clock unitary: entry exp(2*pi*i*(alpha_u + k)/N) at (k, k)."""
    k = np.arange(cfg.n)
    return np.diag(np.exp(2j * np.pi * (cfg.alpha_u + k) / cfg.n))


def shift_operator(cfg: WeylConfig) -> np.ndarray:
    """Cyclic shift unitary: |l> -> exp(2*pi*i*alpha_v/N) |l+1 mod N>."""
    n = cfg.n
    v = np.zeros((n, n), dtype=complex)
    phase = np.exp(2j * np.pi * cfg.alpha_v / n)
    for l in range(n):
        v[(l + 1) % n, l] = phase
    return v


def _int_power(u: np.ndarray, k: int) -> np.ndarray:
    # Repeated multiplication keeps roots of unity exact at these sizes;
    # negative powers use the adjoint since u is unitary.
    base = u if k >= 0 else adjoint(u)
    out = np.eye(u.shape[0], dtype=complex)
    for _ in range(abs(k)):
        out = out @ base
    return out


def symplectic_form(n: tuple[int, int], m: tuple[int, int]) -> int:
    """n1*m2 - n2*m1, the integer symplectic form on index pairs."""
    return n[0] * m[1] - n[1] * m[0]


def weyl_operator(cfg: WeylConfig, n1: int, n2: int) -> np.ndarray:
    """W(n1, n2) = exp(-i*pi*n1*n2/N) U^n1 V^n2 for arbitrary integers."""
    # exp(-i*pi*x/N) has period 2N in x, so reduce the exponent exactly.
    k = (n1 * n2) % (2 * cfg.n)
    phase = np.exp(-1j * np.pi * k / cfg.n)
    return phase * (_int_power(clock_operator(cfg), n1) @ _int_power(shift_operator(cfg), n2))


def weyl_expand(cfg: WeylConfig, a) -> np.ndarray:
    """Coefficients c[n1, n2] = tr(W(n1,n2)* A) / N over 0 <= n1, n2 < N."""
    m = as_complex_matrix(a)
    if m.shape != (cfg.n, cfg.n):
        raise DimMismatchError(f"expected a {cfg.n}x{cfg.n} matrix, got shape {m.shape}")
    coeffs = np.empty((cfg.n, cfg.n), dtype=complex)
    for n1 in range(cfg.n):
        for n2 in range(cfg.n):
            w = weyl_operator(cfg, n1, n2)
            coeffs[n1, n2] = np.trace(adjoint(w) @ m) / cfg.n
    return coeffs


def weyl_synthesize(cfg: WeylConfig, coeffs) -> np.ndarray:
    """Rebuild sum_n c[n] W(n) from a coefficient table over Z_N x Z_N."""
    c = np.asarray(coeffs, dtype=complex)
    if c.shape != (cfg.n, cfg.n):
        raise DimMismatchError(f"expected a {cfg.n}x{cfg.n} coefficient table, got {c.shape}")
    out = np.zeros((cfg.n, cfg.n), dtype=complex)
    for n1 in range(cfg.n):
        for n2 in range(cfg.n):
            out += c[n1, n2] * weyl_operator(cfg, n1, n2)
    return out

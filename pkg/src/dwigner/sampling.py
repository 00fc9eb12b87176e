"""Seeded random states, unitaries, and channels for tests and verification.

All draws go through a caller-supplied ``numpy.random.Generator`` so that
reports are reproducible from a single seed.
"""

from __future__ import annotations

import numpy as np

from .channels import KrausChannel
from .matrix_core import adjoint, hermitian_eig


def _complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_state_vector(n: int, rng: np.random.Generator) -> np.ndarray:
    v = _complex_normal(rng, n)
    return v / np.linalg.norm(v)


def random_pure_density(n: int, rng: np.random.Generator) -> np.ndarray:
    v = random_state_vector(n, rng)
    return np.outer(v, np.conj(v))


def random_density(n: int, rng: np.random.Generator) -> np.ndarray:
    """G G* / tr(G G*) for Gaussian G; PSD and unit trace by construction."""
    g = _complex_normal(rng, (n, n))
    m = g @ adjoint(g)
    return m / np.trace(m).real


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-style unitary from a QR factorization with a fixed phase gauge."""
    q, r = np.linalg.qr(_complex_normal(rng, (n, n)))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_kraus_channel(n: int, k: int, rng: np.random.Generator) -> KrausChannel:
    """k-term channel: Gaussian B_i whitened by (sum B_i* B_i)^(-1/2).

    The whitening makes sum V_i* V_i = I exact up to roundoff.
    """
    bs = [_complex_normal(rng, (n, n)) for _ in range(k)]
    total = sum(adjoint(b) @ b for b in bs)
    vals, vecs = hermitian_eig(total)
    inv_sqrt = (vecs / np.sqrt(vals)) @ adjoint(vecs)
    return KrausChannel([b @ inv_sqrt for b in bs])

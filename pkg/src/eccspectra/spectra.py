"""Eccentricity matrices and their spectra."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConvergenceFailure, OrderTooSmall, ReducibleMatrix
from .graph import DistanceProfile, Graph, distance_profile

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
POWER_TOL = 1e-12


@dataclass(frozen=True)
class EccentricityMatrix:
    m: np.ndarray
    ecc: np.ndarray

    @property
    def n(self) -> int:
        return self.m.shape[0]


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray
    iterations: int
    offdiag_residual: float

    @property
    def largest(self) -> float:
        return float(self.values[0])

    @property
    def least(self) -> float:
        return float(self.values[-1])

    @property
    def spectral_radius(self) -> float:
        """Maximum modulus; equals :attr:`largest` for irreducible matrices."""
        return float(np.max(np.abs(self.values))) if len(self.values) else 0.0


def eccentricity_matrix_from_profile(prof: DistanceProfile) -> EccentricityMatrix:
    dist, ecc = prof.dist, prof.ecc
    keep = dist == np.minimum.outer(ecc, ecc)
    m = np.where(keep, dist, 0)
    np.fill_diagonal(m, 0)
    m.setflags(write=False)
    return EccentricityMatrix(m, ecc)


def eccentricity_matrix(g: Graph) -> EccentricityMatrix:
    return eccentricity_matrix_from_profile(distance_profile(g))


def support_is_connected(em: EccentricityMatrix) -> bool:
    """Whether the nonzero pattern is connected, i.e. the matrix is irreducible."""
    n = em.n
    if n < 2:
        raise OrderTooSmall("irreducibility is only meaningful for n >= 2")
    return _pattern_connected(np.asarray(em.m) != 0)


def _pattern_connected(mask: np.ndarray) -> bool:
    n = mask.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        frontier = mask[frontier].any(axis=0) & ~seen
        seen |= frontier
    return bool(seen.all())


def eigenvalues_symmetric(matrix, rel_tol: float = JACOBI_TOL) -> Spectrum:
    """Full spectrum of a real symmetric matrix by cyclic Jacobi, sorted descending.

    Accepts an :class:`EccentricityMatrix` or any square symmetric array.
    Stops once the off-diagonal Frobenius norm drops below ``rel_tol`` of the
    matrix norm; raises :class:`ConvergenceFailure` after 100 sweeps.
    """
    a = np.asarray(getattr(matrix, "m", matrix), dtype=np.float64)
    if a.shape[0] == 0:
        return Spectrum(np.empty(0), 0, 0.0)
    values, sweeps, off, ok = kernels.jacobi_eigenvalues(a, rel_tol, JACOBI_MAX_SWEEPS)
    if not ok:
        raise ConvergenceFailure(f"Jacobi did not converge in {sweeps} sweeps (off-diagonal {off:.3e})")
    order = np.argsort(-values, kind="stable")
    values = values[order]
    values.setflags(write=False)
    return Spectrum(values, int(sweeps), float(off))


def perron_pair(matrix) -> tuple[float, np.ndarray]:
    """Dominant eigenvalue and entrywise-positive unit eigenvector.

    Shifted power iteration on ``M + sI`` with ``s`` half the largest row sum,
    which separates the Perron root from an eigenvalue of equal modulus at
    its negative.
    """
    a = np.asarray(getattr(matrix, "m", matrix), dtype=np.float64)
    n = a.shape[0]
    if n < 2:
        raise OrderTooSmall("the Perron pair needs n >= 2")
    if not _pattern_connected(a != 0):
        raise ReducibleMatrix("matrix support is disconnected")
    shift = 0.5 * float(np.abs(a).sum(axis=1).max())
    value, vec, it, ok = kernels.power_iteration(a, shift, POWER_TOL)
    if not ok:
        raise ConvergenceFailure(f"power iteration stalled after {it} steps")
    return float(value), np.asarray(vec)


def char_poly_eval(matrix, lam: float) -> float:
    """``det(lam*I - M)`` by Gaussian elimination with partial pivoting."""
    a = np.asarray(getattr(matrix, "m", matrix), dtype=np.float64)
    return kernels.det_partial_pivot(lam * np.eye(a.shape[0]) - a)


def ecc_spectrum(g: Graph) -> Spectrum:
    return eigenvalues_symmetric(eccentricity_matrix(g))

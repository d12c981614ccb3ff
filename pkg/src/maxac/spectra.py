"""Laplacian / adjacency spectra and Sturm-sequence bisection for tridiagonal matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .graph import Graph, is_connected

MULTIPLICITY_TOL = 1e-7
MAX_DENSE_ORDER = 2048


class SpectrumError(ArithmeticError):
    pass


class DisconnectedGraphError(ValueError):
    """Raised for algebraic connectivity of a disconnected graph (it would be 0)."""


@dataclass(frozen=True)
class SpectrumResult:
    eigenvalues: np.ndarray
    multiplicity_tolerance: float = MULTIPLICITY_TOL

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def grouped(self) -> list[tuple[float, int]]:
        """``(value, multiplicity)`` pairs, clustering values closer than the tolerance."""
        groups: list[list[float]] = []
        for x in self.eigenvalues:
            if groups and x - groups[-1][-1] <= self.multiplicity_tolerance:
                groups[-1].append(float(x))
            else:
                groups.append([float(x)])
        return [(sum(g) / len(g), len(g)) for g in groups]

    def matches(self, expected: list[tuple[float, int]], tol: float | None = None) -> bool:
        """Compare against a ``(value, multiplicity)`` multiset."""
        tol = self.multiplicity_tolerance if tol is None else tol
        want = np.sort(np.concatenate([np.full(k, v, dtype=float) for v, k in expected]))
        if len(want) != len(self.eigenvalues):
            return False
        return bool(np.all(np.abs(want - self.eigenvalues) <= tol))


def laplacian(g: Graph) -> np.ndarray:
    """``L = D - A`` as a dense float matrix (exactly symmetric)."""
    lap = np.zeros((g.n, g.n))
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1.0
    lap[np.diag_indices(g.n)] = g.degrees()
    return lap


def symmetric_eigenvalues(m: np.ndarray) -> SpectrumResult:
    """All eigenvalues of a real symmetric matrix, ascending.

    Householder tridiagonalisation followed by implicit QL/QR sweeps (LAPACK
    ``?syev``), which is deterministic for a given input.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DENSE_ORDER:
        raise ValueError(f"dense solver limited to n <= {MAX_DENSE_ORDER}")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not exactly symmetric")
    if m.shape[0] == 0:
        return SpectrumResult(np.zeros(0))
    try:
        w = scipy.linalg.eigvalsh(m, driver="ev", check_finite=True)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - not expected for symmetric input
        raise SpectrumError(str(exc)) from exc
    return SpectrumResult(np.sort(w))


def laplacian_spectrum(g: Graph) -> SpectrumResult:
    return symmetric_eigenvalues(laplacian(g))


def adjacency_spectrum(g: Graph) -> SpectrumResult:
    return symmetric_eigenvalues(g.adjacency_matrix())


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue of a connected graph."""
    if g.n == 1:
        raise DisconnectedGraphError("algebraic connectivity undefined for a single vertex")
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected; algebraic connectivity is 0")
    return float(laplacian_spectrum(g).eigenvalues[1])


def fiedler_pair(g: Graph) -> tuple[float, np.ndarray]:
    w, v = np.linalg.eigh(laplacian(g))
    return float(w[1]), v[:, 1]


# ---------------------------------------------------------------------------
# tridiagonal systems


@dataclass(frozen=True)
class TridiagonalSystem:
    """``K x K`` matrix with diagonal ``(a, d, ..., d, c)``, superdiagonal
    ``(-b, -(d-1), ..., -(d-1))`` and subdiagonal ``(-1, ..., -1)``.

    For ``K == 1`` the single entry is ``c``.
    """

    K: int
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if self.K < 1:
            raise ValueError("K must be >= 1")
        if self.b <= 0:
            raise ValueError("b must be positive for a real symmetrisation")
        if self.d < 3:
            raise ValueError("d must be >= 3")

    def diagonal(self) -> np.ndarray:
        diag = np.full(self.K, float(self.d))
        diag[0] = self.a
        diag[-1] = self.c
        return diag

    def superdiagonal(self) -> np.ndarray:
        sup = np.full(self.K - 1, -float(self.d - 1))
        if self.K > 1:
            sup[0] = -float(self.b)
        return sup

    def dense(self) -> np.ndarray:
        """The (non-symmetric) matrix itself."""
        k = self.K
        m = np.diag(self.diagonal())
        if k > 1:
            m[np.arange(k - 1), np.arange(1, k)] = self.superdiagonal()
            m[np.arange(1, k), np.arange(k - 1)] = -1.0
        return m

    def symmetric_offdiagonal(self) -> np.ndarray:
        # D^-1 M D with D diagonal turns the pair (-u, -1) into (-sqrt(u), -sqrt(u)).
        return -np.sqrt(-self.superdiagonal())

    def symmetric_dense(self) -> np.ndarray:
        off = self.symmetric_offdiagonal()
        m = np.diag(self.diagonal())
        k = self.K
        if k > 1:
            m[np.arange(k - 1), np.arange(1, k)] = off
            m[np.arange(1, k), np.arange(k - 1)] = off
        return m


def sturm_count(diag, off, x: float) -> int:
    """Number of eigenvalues strictly below ``x`` of the symmetric tridiagonal
    matrix with the given diagonal and off-diagonal."""
    count = 0
    q = 1.0
    tiny = 1e-300
    for i, alpha in enumerate(diag):
        if i == 0:
            q = alpha - x
        else:
            q = alpha - x - off[i - 1] * off[i - 1] / q
        if q == 0.0:
            q = -tiny
        if q < 0:
            count += 1
    return count


def _gershgorin(diag, off) -> tuple[float, float]:
    k = len(diag)
    radius = np.zeros(k)
    if k > 1:
        a = np.abs(np.asarray(off, dtype=float))
        radius[:-1] += a
        radius[1:] += a
    return float(np.min(diag - radius)), float(np.max(diag + radius))


def tridiagonal_eigenvalue(diag, off, index: int, tol: float = 1e-12) -> float:
    """The ``index``-th smallest eigenvalue (0-based) by Sturm bisection."""
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    lo, hi = _gershgorin(diag, off)
    lo -= 1e-9 + 1e-12 * abs(lo)
    hi += 1e-9 + 1e-12 * abs(hi)
    # invariant: count(lo) <= index < count(hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if sturm_count(diag, off, mid) > index:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def tridiagonal_eigenvalues(diag, off, tol: float = 1e-12) -> np.ndarray:
    return np.array([tridiagonal_eigenvalue(diag, off, i, tol) for i in range(len(diag))])


def tridiag_smallest_eigenvalue(t: TridiagonalSystem, tol: float = 1e-12) -> float:
    """Smallest eigenvalue of ``t`` via its symmetrised form and Sturm bisection."""
    return tridiagonal_eigenvalue(t.diagonal(), t.symmetric_offdiagonal(), 0, tol)


def fiedler_residual(g: Graph) -> float:
    """``||L 1|| / sqrt(n)``: the all-ones vector should be a null vector."""
    ones = np.ones(g.n) / math.sqrt(g.n)
    return float(np.linalg.norm(laplacian(g) @ ones))

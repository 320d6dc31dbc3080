"""Largest-eigenvalue solvers for the signless Laplacian Q = A + D and the
adjacency matrix A.

Fast path: power iteration on the entrywise-nonnegative matrix, per
connected component (so the iteration always acts on a primitive matrix
and converges geometrically).  Convergence is certified by the residual
||Mx - qx||; on hitting the iteration cap the solver falls back to a full
cyclic-Jacobi decomposition rather than failing silently.  The Jacobi
routine doubles as the independent oracle for the whole spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidVector, Unsupported
from .graphs import Graph, _bits

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10 ** 6


@dataclass(frozen=True)
class SpectralResult:
    """Largest eigenvalue with its certified eigenvector.

    value     largest eigenvalue of the requested matrix
    vector    unit eigenvector, zero outside the winning component
    residual  ||M @ vector - value * vector||_2 at return
    iterations  total power-iteration steps spent (all components)
    method    'iterative' if the winning component converged by power
              iteration, 'full' if it needed the Jacobi fallback
    """

    value: float
    vector: np.ndarray
    residual: float
    iterations: int
    method: str


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u in range(g.n):
        for v in _bits(g.adj[u]):
            a[u, v] = 1.0
    return a


def q_matrix(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    return a + np.diag(a.sum(axis=1))


def _power_largest(m: np.ndarray, tol: float, max_iter: int, x0=None):
    """Power iteration; returns (value, unit vector, residual, iters, converged)."""
    k = m.shape[0]
    if x0 is None:
        x = np.full(k, 1.0 / np.sqrt(k))
    else:
        x = x0 / np.linalg.norm(x0)
    lam = 0.0
    res = np.inf
    it = 0
    while it < max_iter:
        it += 1
        y = m @ x
        lam = float(x @ y)
        res = float(np.linalg.norm(y - lam * x))
        if res <= tol:
            return lam, x, res, it, True
        norm = np.linalg.norm(y)
        if norm == 0.0:
            # x is in the nullspace and the matrix is nonnegative: 0 is top
            return 0.0, x, 0.0, it, True
        x = y / norm
    return lam, x, res, it, False


def _jacobi(m: np.ndarray, with_vectors: bool = True):
    """Cyclic Jacobi sweeps; returns (eigenvalues ascending, vectors or None).

    Sweeps run until the off-diagonal Frobenius mass drops below 1e-14
    relative to the matrix scale; quadratic convergence makes that a
    handful of sweeps at these orders.
    """
    a = np.array(m, dtype=float)
    k = a.shape[0]
    v = np.eye(k) if with_vectors else None
    if k == 1:
        return a.diagonal().copy(), v
    scale = max(1.0, float(np.linalg.norm(a)))
    for _ in range(60):
        strict = a - np.diag(a.diagonal())
        off = float(np.sqrt(np.sum(np.square(strict))))
        if off <= 1e-14 * scale:
            break
        for p in range(k - 1):
            for q in range(p + 1, k):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                if with_vectors:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
    else:
        raise RuntimeError("Jacobi sweeps failed to reduce off-diagonal mass")
    w = a.diagonal().copy()
    order = np.argsort(w, kind="stable")
    if with_vectors:
        return w[order], v[:, order]
    return w[order], None


def _component_matrix(g: Graph, comp_mask: int, which: str) -> tuple[np.ndarray, list[int]]:
    verts = list(_bits(comp_mask))
    pos = {u: i for i, u in enumerate(verts)}
    k = len(verts)
    m = np.zeros((k, k))
    for u in verts:
        for w in _bits(g.adj[u] & comp_mask):
            m[pos[u], pos[w]] = 1.0
    if which == "Q":
        m += np.diag(m.sum(axis=1))
    return m, verts


def _largest_per_component(g: Graph, which: str, tol: float, max_iter: int) -> SpectralResult:
    best_val = 0.0
    best_vec = None
    best_verts: list[int] = [0]
    best_res = 0.0
    best_method = "iterative"
    total_iters = 0
    for comp in g.components():
        if comp.bit_count() == 1:
            continue  # isolated vertex contributes eigenvalue 0
        m, verts = _component_matrix(g, comp, which)
        shift = 0.0
        if which == "A":
            # make the matrix entrywise nonnegative with positive diagonal
            shift = float(m.sum(axis=1).max()) + 1.0
            m = m + shift * np.eye(len(verts))
        val, vec, res, iters, ok = _power_largest(m, tol, max_iter)
        total_iters += iters
        method = "iterative"
        if not ok:
            w, vmat = _jacobi(m)
            val = float(w[-1])
            vec = vmat[:, -1]
            if vec.sum() < 0:
                vec = -vec
            res = float(np.linalg.norm(m @ vec - val * vec))
            method = "full"
        val -= shift
        if best_vec is None or val > best_val:
            best_val, best_vec, best_verts, best_res, best_method = val, vec, verts, res, method
    n = g.n
    vector = np.zeros(n)
    if best_vec is None:
        vector[0] = 1.0  # edgeless graph: eigenvalue 0, any unit vector
    else:
        for i, u in enumerate(best_verts):
            vector[u] = best_vec[i]
    return SpectralResult(best_val, vector, best_res, total_iters, best_method)


def q_index(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    """Largest eigenvalue of the signless Laplacian A + D."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return _largest_per_component(g, "Q", tol, max_iter)


def adjacency_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    """Largest eigenvalue (spectral radius) of the adjacency matrix."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return _largest_per_component(g, "A", tol, max_iter)


def full_spectrum(g: Graph, matrix: str = "Q") -> list[float]:
    """All n eigenvalues of Q or A, ascending, via the Jacobi oracle."""
    if matrix not in ("Q", "A"):
        raise Unsupported(f"matrix must be 'Q' or 'A', got {matrix!r}")
    if g.n > 64:
        raise Unsupported("full decomposition capped at order 64")
    m = q_matrix(g) if matrix == "Q" else adjacency_matrix(g)
    w, _ = _jacobi(m, with_vectors=False)
    return [float(x) for x in w]


def rayleigh_edge_form(g: Graph, x) -> float:
    """Edge sum of (x_i + x_j)^2, the quadratic form of Q at a unit vector."""
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise InvalidVector(f"vector length {x.shape} does not match order {g.n}")
    if abs(float(np.linalg.norm(x)) - 1.0) > 1e-9:
        raise InvalidVector("rayleigh_edge_form requires a unit vector")
    total = 0.0
    for u, v in g.edges():
        total += (x[u] + x[v]) ** 2
    return total

"""Gate distance and leakage.

distance(u1, u2) = min over theta of the largest singular value of
u1 - e^{i theta} u2.  Multiplying by u2^dagger reduces this to the largest
singular value of V - e^{i theta} I with V = u1 u2^dagger.  For unitary
inputs V is unitary, the singular values are chord lengths from e^{i theta}
to the eigenphases of V, and the optimum theta is the angular one-center of
the eigenphases: the midpoint of the arc complementary to their largest
circular gap.  A golden-section polish of the true objective around that
seed guards near-unitary inputs and pins theta to 1e-12.
"""

import math

import numpy as np

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
THETA_TOL = 1e-12


def _sigma_max(m):
    return np.linalg.norm(m, 2)


def _phase_objective(v, theta):
    return _sigma_max(v - np.exp(1j * theta) * np.eye(v.shape[0]))


def _golden_minimize(f, lo, hi, tol):
    a, b = lo, hi
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = f(d)
    return (a + b) / 2.0


def distance(u1, u2):
    """Global-phase-minimized operator-norm distance between two unitaries."""
    u1 = np.asarray(u1, dtype=complex)
    u2 = np.asarray(u2, dtype=complex)
    if u1.shape != u2.shape or u1.ndim != 2 or u1.shape[0] != u1.shape[1]:
        raise ValueError(f"dimension mismatch: {u1.shape} vs {u2.shape}")
    v = u1 @ u2.conj().T
    phases = np.sort(np.angle(np.linalg.eigvals(v)))
    k = len(phases)
    if k == 1:
        return 0.0
    gaps = np.diff(np.concatenate([phases, [phases[0] + 2.0 * np.pi]]))
    widest = int(np.argmax(gaps))
    # Arc containing all eigenphases runs from the end of the widest gap
    # around to its start; theta sits at that arc's midpoint.
    arc_start = phases[(widest + 1) % k]
    arc_len = 2.0 * np.pi - gaps[widest]
    theta = arc_start + arc_len / 2.0
    theta = _golden_minimize(
        lambda t: _phase_objective(v, t), theta - 0.1, theta + 0.1, THETA_TOL
    )
    return _phase_objective(v, theta)


def leakage(full_matrix, computational_indices):
    """1 - sqrt(smallest eigenvalue of B B^dagger) for the computational
    subblock B, i.e. 1 - sigma_min(B)."""
    full_matrix = np.asarray(full_matrix, dtype=complex)
    idx = list(computational_indices)
    if not idx:
        raise ValueError("computational index list is empty")
    if any(i < 0 or i >= full_matrix.shape[0] for i in idx):
        raise ValueError("computational index out of range")
    block = full_matrix[np.ix_(idx, idx)]
    smin = np.linalg.svd(block, compute_uv=False)[-1]
    return 1.0 - smin

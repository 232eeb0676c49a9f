"""Fusion-tree bases for n Fibonacci anyons and the braid-group action on them.

A basis state for n anyons of charge tau is a left-nested fusion tree,
recorded as the tuple of internal charges (a_1, ..., a_{n-1}) where a_k is
the total charge of anyons 1..k+1.  Validity: a_1 in fuse(tau, tau),
a_{k+1} in fuse(a_k, tau), and a_{n-1} equals the sector charge.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .model import Charge, Handedness, DEFAULT_HANDEDNESS, F_TAU, fuse, r_phases


@dataclass(frozen=True)
class FusionBasis:
    n: int
    sector: Charge
    trees: tuple

    @property
    def dim(self):
        return len(self.trees)

    def index(self, tree):
        return self.trees.index(tree)


def _valid_successors(a):
    return fuse(a, Charge.TAU)


@lru_cache(maxsize=None)
def enumerate_basis(n, sector):
    """All fusion trees for n tau anyons with total charge `sector`.

    Trees are ordered lexicographically with VACUUM < TAU.  dim follows the
    Fibonacci recursion: vacuum sector Fib(n-1), tau sector Fib(n).
    """
    n = int(n)
    sector = Charge(sector)
    if n < 1:
        raise ValueError("anyon count must be >= 1")
    if n == 1:
        trees = ((),) if sector is Charge.TAU else ()
        return FusionBasis(n=n, sector=sector, trees=trees)
    partial = [(c,) for c in (Charge.VACUUM, Charge.TAU)]
    for _ in range(n - 2):
        partial = [t + (c,) for t in partial for c in _valid_successors(t[-1])]
    trees = tuple(sorted(t for t in partial if t[-1] is sector))
    return FusionBasis(n=n, sector=sector, trees=trees)


def _local_context(basis, tree, i):
    """Charges (x, t) flanking slot a_{i-1} for generator sigma_i, i >= 2.

    x is the total charge of anyons 1..i-1 (the bare first anyon for i = 2)
    and t the total charge of anyons 1..i+1 (the sector for i = n-1).
    """
    x = Charge.TAU if i == 2 else tree[i - 3]
    t = basis.sector if i == basis.n - 1 else tree[i - 1]
    return x, t


@lru_cache(maxsize=None)
def braid_generator(basis, index, handedness=DEFAULT_HANDEDNESS):
    """Matrix of sigma_index on `basis`, 1 <= index <= n-1.

    sigma_1 is diagonal with phase R_{a_1}.  For index >= 2 the action on
    slot a_{i-1} is F^t_{x,tau,tau} . diag(R_e) . F^t_{x,tau,tau}; only the
    (x, t) = (tau, tau) case has a two-dimensional slot, every other context
    fixes the exchange channel e and contributes a pure phase.
    """
    i = int(index)
    if not 1 <= i <= basis.n - 1:
        raise ValueError(f"generator index {i} out of range for {basis.n} anyons")
    r_vac, r_tau = r_phases(handedness)
    r_of = {Charge.VACUUM: r_vac, Charge.TAU: r_tau}
    d = basis.dim
    m = np.zeros((d, d), dtype=complex)
    if basis.n == 1:
        raise ValueError("no braid generators on a single anyon")
    for col, tree in enumerate(basis.trees):
        if i == 1:
            a1 = tree[0] if basis.n > 2 else basis.sector
            m[col, col] = r_of[a1]
            continue
        x, t = _local_context(basis, tree, i)
        if x is Charge.TAU and t is Charge.TAU:
            a = tree[i - 2]
            local = F_TAU @ np.diag([r_vac, r_tau]) @ F_TAU
            for b in (Charge.VACUUM, Charge.TAU):
                partner = tree[: i - 2] + (b,) + tree[i - 1 :]
                row = basis.index(partner)
                m[row, col] = local[int(b), int(a)]
        else:
            # Channel e is forced: e = tau unless both flanking charges are
            # vacuum, in which case e = vacuum.
            e = Charge.VACUUM if (x is Charge.VACUUM and t is Charge.VACUUM) else Charge.TAU
            m[col, col] = r_of[e]
    return m


def word_matrix(basis, word, handedness=DEFAULT_HANDEDNESS):
    """Matrix of a braid word on `basis`.

    factors[0] is the first operation applied to states, i.e. the rightmost
    matrix factor.
    """
    m = np.eye(basis.dim, dtype=complex)
    for gen, power in word.factors:
        g = braid_generator(basis, gen, handedness)
        if power < 0:
            g = g.conj().T
        step = np.linalg.matrix_power(g, abs(power))
        m = step @ m
    return m


def sector_dimension(n, sector):
    return enumerate_basis(n, sector).dim

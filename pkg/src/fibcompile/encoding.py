"""Computational qubit encodings inside the fusion space.

A qubit lives on four tau anyons with total charge vacuum.  Its two
computational states are single fusion trees distinguished by the charge
of the first anyon pair: vacuum encodes |0>, tau encodes |1>.  The
remaining internal charges are then forced, so in the left-nested basis
qubit j contributes the charge window (c_j, tau, vacuum), and adjacent
qubit blocks are joined by a forced tau slot.  Braiding inside one block
never leaves the computational subspace; crossings that straddle a block
boundary are the ones that leak.
"""

from dataclasses import dataclass

import numpy as np

from .fusion import FusionBasis, enumerate_basis
from .model import Charge

ANYONS_PER_QUBIT = 4


def computational_tree(bits):
    """Left-nested charge tuple of the computational state |b_1 ... b_q>."""
    tree = []
    for j, bit in enumerate(bits):
        if bit not in (0, 1):
            raise ValueError(f"bits must be 0 or 1, got {bit!r}")
        if j > 0:
            tree.append(Charge.TAU)
        first_pair = Charge.TAU if bit else Charge.VACUUM
        tree.extend((first_pair, Charge.TAU, Charge.VACUUM))
    return tuple(tree)


@dataclass(frozen=True)
class QubitEncoding:
    qubit_count: int
    basis: FusionBasis
    computational_indices: tuple

    @property
    def anyon_count(self):
        return self.basis.n

    @property
    def dim(self):
        return 2 ** self.qubit_count

    def computational_block(self, matrix):
        """The 2^q x 2^q submatrix of a fusion-space operator, rows and
        columns ordered by computational value b_1 b_2 ... b_q."""
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (self.basis.dim, self.basis.dim):
            raise ValueError(
                f"expected a {self.basis.dim}x{self.basis.dim} operator, "
                f"got {matrix.shape}"
            )
        idx = list(self.computational_indices)
        return matrix[np.ix_(idx, idx)]


def encode_qubits(qubit_count):
    """Vacuum-sector basis and computational-state indices for q qubits
    on 4q anyons."""
    qubit_count = int(qubit_count)
    if qubit_count < 1:
        raise ValueError("qubit count must be >= 1")
    basis = enumerate_basis(ANYONS_PER_QUBIT * qubit_count, Charge.VACUUM)
    indices = []
    for value in range(2 ** qubit_count):
        bits = [(value >> (qubit_count - 1 - j)) & 1 for j in range(qubit_count)]
        indices.append(basis.index(computational_tree(bits)))
    return QubitEncoding(qubit_count, basis, tuple(indices))

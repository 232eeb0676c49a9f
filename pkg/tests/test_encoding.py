"""Tests for the qubit encoding on four anyons per qubit.

Physics oracle: braiding a qubit's first pair acts diagonally on the
computational states with the bare exchange phase of that pair's charge,
intra-block generators never leak, and the crossing that straddles a
block boundary does.
"""

import numpy as np
import pytest

from fibcompile.encoding import (
    ANYONS_PER_QUBIT,
    QubitEncoding,
    computational_tree,
    encode_qubits,
)
from fibcompile.fusion import word_matrix
from fibcompile.metrics import leakage
from fibcompile.model import Charge, DEFAULT_HANDEDNESS, r_phases
from fibcompile.words import BraidWord


def test_dimensions():
    for q, dim in ((1, 2), (2, 13), (3, 89)):
        enc = encode_qubits(q)
        assert enc.anyon_count == ANYONS_PER_QUBIT * q
        assert enc.basis.dim == dim
        assert enc.dim == 2 ** q
        assert len(enc.computational_indices) == 2 ** q
        assert len(set(enc.computational_indices)) == 2 ** q
        assert all(0 <= i < dim for i in enc.computational_indices)


def test_single_qubit_trees():
    enc = encode_qubits(1)
    assert enc.basis.trees[enc.computational_indices[0]] == (
        Charge.VACUUM,
        Charge.TAU,
        Charge.VACUUM,
    )
    assert enc.basis.trees[enc.computational_indices[1]] == (
        Charge.TAU,
        Charge.TAU,
        Charge.VACUUM,
    )
    assert enc.computational_indices == (0, 1)


def test_computational_tree_pattern():
    assert computational_tree((1, 0, 1)) == (
        Charge.TAU, Charge.TAU, Charge.VACUUM,
        Charge.TAU,
        Charge.VACUUM, Charge.TAU, Charge.VACUUM,
        Charge.TAU,
        Charge.TAU, Charge.TAU, Charge.VACUUM,
    )
    with pytest.raises(ValueError):
        computational_tree((0, 2))


def test_indices_follow_binary_order():
    # First-pair charges sit at the lexicographically dominant slots, so
    # computational indices must be strictly increasing in b_1 b_2 ... b_q.
    for q in (1, 2, 3):
        idx = encode_qubits(q).computational_indices
        assert all(a < b for a, b in zip(idx, idx[1:]))


def test_first_pair_braiding_is_diagonal_exchange_phase():
    enc = encode_qubits(2)
    r_vac, r_tau = r_phases(DEFAULT_HANDEDNESS)
    m1 = enc.computational_block(word_matrix(enc.basis, BraidWord(((1, 1),))))
    expected1 = np.diag([r_vac, r_vac, r_tau, r_tau])
    assert np.linalg.norm(m1 - expected1) < 1e-12
    m5 = enc.computational_block(word_matrix(enc.basis, BraidWord(((5, 1),))))
    expected5 = np.diag([r_vac, r_tau, r_vac, r_tau])
    assert np.linalg.norm(m5 - expected5) < 1e-12


def test_intra_block_generators_do_not_leak():
    enc = encode_qubits(2)
    for gen in (1, 2, 3, 5, 6, 7):
        m = word_matrix(enc.basis, BraidWord(((gen, 1),)))
        assert leakage(m, enc.computational_indices) < 1e-12


def test_boundary_crossing_leaks():
    enc = encode_qubits(2)
    m = word_matrix(enc.basis, BraidWord(((4, 1),)))
    assert leakage(m, enc.computational_indices) > 0.01


def test_computational_block_shape_and_validation():
    enc = encode_qubits(3)
    block = enc.computational_block(np.eye(enc.basis.dim))
    assert block.shape == (8, 8)
    assert np.array_equal(block, np.eye(8))
    with pytest.raises(ValueError):
        enc.computational_block(np.eye(13))


def test_invalid_qubit_count():
    with pytest.raises(ValueError):
        encode_qubits(0)

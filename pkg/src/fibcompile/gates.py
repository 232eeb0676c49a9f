"""Exact reference matrices for the gates the braid constructions target.

Single-qubit primitives use the special-unitary NOT convention iX.  The
two controlled-injection composites differ only in when the target fires:
with an identity initialization the target S hits qubit 3 exactly when
the two controls disagree, with a NOT initialization it hits unless both
controls are |0>.  A controlled-controlled gate fires only on |11>.
"""

import functools

import numpy as np

SQRT2 = np.sqrt(2.0)

IDENTITY_2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
NOT_GATE = 1j * PAULI_X
# Principal square root of iX is (I + iX)/sqrt(2); its -i multiple squares
# to -iX and is the published half-NOT target.
SQRT_NOT_GATE = (-1j * IDENTITY_2 + PAULI_X) / SQRT2

SWAP_GATE = np.array(
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ],
    dtype=complex,
)


def tensor(*operators):
    return functools.reduce(np.kron, operators)


def controlled(u):
    """Two-qubit gate applying u to the second qubit when the first is |1>."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError("controlled() takes a single-qubit gate")
    out = np.eye(4, dtype=complex)
    out[2:, 2:] = u
    return out


CNOT = controlled(PAULI_X)


def _control_block_diag(target, fire_pattern):
    target = np.asarray(target, dtype=complex)
    if target.shape != (2, 2):
        raise ValueError("target must be a single-qubit gate")
    out = np.zeros((8, 8), dtype=complex)
    for k, fires in enumerate(fire_pattern):
        block = target if fires else IDENTITY_2
        out[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = block
    return out


def m_gate_reference(initialization_role, target):
    """Exact three-qubit matrix of the controlled-injection composite for
    an identity or NOT initialization braid."""
    patterns = {
        "identity": (False, True, True, False),
        "not": (False, True, True, True),
    }
    if initialization_role not in patterns:
        raise ValueError(
            f"initialization role must be 'identity' or 'not', "
            f"got {initialization_role!r}"
        )
    return _control_block_diag(target, patterns[initialization_role])


def cc_gate(target):
    """Controlled-controlled gate: target on qubit 3 only for controls |11>."""
    return _control_block_diag(target, (False, False, False, True))


def ccs_from_m_gate(target):
    """Controlled-controlled target assembled from one NOT-initialized
    composite: flip both controls, run the composite against the adjoint
    target with the target applied up front, flip back.  The +-iX flip
    pair cancels its own phases."""
    target = np.asarray(target, dtype=complex)
    pre = tensor(-NOT_GATE, -NOT_GATE, IDENTITY_2)
    post = tensor(NOT_GATE, NOT_GATE, target)
    return post @ m_gate_reference("not", target.conj().T) @ pre


def five_gate_decomposition(v):
    """Controlled-controlled v^2 from three controlled-v and a +-iX
    controlled-NOT pair, the far control routed through swaps."""
    v = np.asarray(v, dtype=complex)
    cv_23 = tensor(IDENTITY_2, controlled(v))
    cvdag_23 = tensor(IDENTITY_2, controlled(v.conj().T))
    cix_12 = tensor(controlled(NOT_GATE), IDENTITY_2)
    cmix_12 = tensor(controlled(-NOT_GATE), IDENTITY_2)
    swap_12 = tensor(SWAP_GATE, IDENTITY_2)
    cv_13 = swap_12 @ cv_23 @ swap_12
    return cv_13 @ cmix_12 @ cvdag_23 @ cix_12 @ cv_23

"""Tests for exact-limit stage operators.

Unit checks pin the window machinery: frame transport, the cable-charge
sector bookkeeping, and input validation.  Circuit-level checks hand
every stage its ideal block and require each composite to land on its
exact reference gate to 1e-9, far below any weave approximation error,
which validates the assembly conventions independently of the published
word approximations.
"""

import numpy as np
import pytest

from fibcompile.benchmarks import (
    CCNOT_INJECTION_WORDS,
    CM_IDENTITY_WORDS,
    CM_NOT_WORDS,
    DECOMPOSITION_WORDS,
)
from fibcompile.cable import StrandComposition, charge_projector
from fibcompile.circuits import (
    Stage,
    build_ccs,
    build_ccs_decomposition,
    build_injection_cu,
    build_m_gate,
    evaluate_circuit,
    evaluate_with_stage_operators,
)
from fibcompile.fusion import enumerate_basis, word_matrix
from fibcompile.gates import (
    NOT_GATE,
    SQRT_NOT_GATE,
    cc_gate,
    controlled,
    m_gate_reference,
)
from fibcompile.metrics import distance, leakage
from fibcompile.model import Charge
from fibcompile.standins import (
    circuit_stage_operators,
    exact_window_operator,
    rotated_frame_block,
    stage_operator,
)
from fibcompile.words import BraidWord, gamma_conjugate, strand_permutation

from conftest import random_word

I2 = np.eye(2, dtype=complex)
IX = NOT_GATE
EXACT = 1e-9


def evaluation_leak(ev):
    return leakage(ev.full_matrix, ev.encoding.computational_indices)


def test_rotated_frame_of_identity_is_identity():
    assert np.allclose(rotated_frame_block(I2), I2, atol=1e-12)


def test_rotated_frame_matches_generator_swap(rng):
    for _ in range(20):
        word = random_word(rng)
        basis = enumerate_basis(3, Charge.TAU)
        direct = word_matrix(basis, gamma_conjugate(word))
        framed = rotated_frame_block(word_matrix(basis, word))
        assert np.allclose(direct, framed, atol=1e-10)


def test_window_operator_on_bare_triple_is_the_block():
    word = CM_IDENTITY_WORDS["s"].word
    composition = StrandComposition((1, 1, 1))
    tau3 = enumerate_basis(3, Charge.TAU)
    op = exact_window_operator(tau3, composition, word, IX)
    assert np.allclose(op, IX, atol=EXACT)
    vac3 = enumerate_basis(3, Charge.VACUUM)
    op_vac = exact_window_operator(vac3, composition, word, IX)
    assert np.allclose(op_vac, np.eye(1), atol=EXACT)


def test_window_operator_fixes_vacuum_cable_sectors():
    word = CM_IDENTITY_WORDS["s"].word
    composition = StrandComposition((2, 2, 2))
    basis = enumerate_basis(6, Charge.VACUUM)
    op = exact_window_operator(basis, composition, word, IX)
    gram = op.conj().T @ op
    assert np.max(np.abs(gram - np.eye(basis.dim))) < EXACT
    # Any sector where at least one cable is vacuum is held pointwise.
    charges = (Charge.VACUUM, Charge.TAU)
    for c1 in charges:
        for c2 in charges:
            for c3 in charges:
                if (c1, c2, c3) == (Charge.TAU,) * 3:
                    continue
                proj = (
                    charge_projector(basis, 1, 2, c1)
                    @ charge_projector(basis, 3, 2, c2)
                    @ charge_projector(basis, 5, 2, c3)
                )
                assert np.allclose(op @ proj, proj, atol=EXACT)


def test_window_operator_transport_permutes_cable_charges():
    word = CCNOT_INJECTION_WORDS["i"].word
    composition = StrandComposition((2, 2, 2))
    basis = enumerate_basis(6, Charge.VACUUM)
    op = exact_window_operator(basis, composition, word, I2)
    # The weft traverses the window end to end, so a vacuum charge on a
    # moving cable is carried to the cable's final position, not
    # preserved in place.
    final = strand_permutation(word, 3)[0]
    assert final != 0
    p_start = charge_projector(basis, 1, 2, Charge.VACUUM)
    p_final = charge_projector(basis, 2 * final + 1, 2, Charge.VACUUM)
    moved = op @ p_start
    assert np.allclose(p_final @ moved, moved, atol=EXACT)


def test_window_operator_validates_input():
    composition = StrandComposition((1, 1, 1))
    tau3 = enumerate_basis(3, Charge.TAU)
    with pytest.raises(ValueError, match="empty"):
        exact_window_operator(tau3, composition, BraidWord(()), IX)
    wide = StrandComposition((1, 1, 1, 1))
    basis4 = enumerate_basis(4, Charge.VACUUM)
    with pytest.raises(ValueError, match="adjacent"):
        exact_window_operator(
            basis4, wide, BraidWord(((1, 1), (3, 1))), IX
        )
    with pytest.raises(ValueError, match="past the last strand"):
        exact_window_operator(
            basis4, wide, BraidWord(((3, 1), (4, -1), (3, 1))), IX
        )
    with pytest.raises(ValueError, match="two-by-two"):
        exact_window_operator(
            tau3, composition, CM_IDENTITY_WORDS["s"].word, np.eye(3)
        )
    with pytest.raises(ValueError, match="unitary"):
        exact_window_operator(
            tau3, composition, CM_IDENTITY_WORDS["s"].word, 0.5 * I2
        )


def test_stage_operator_splits_disjoint_windows():
    left = CM_IDENTITY_WORDS["s"].word
    right = CM_NOT_WORDS["r"].word.shifted(4)
    composition = StrandComposition((1,) * 8)
    basis = enumerate_basis(8, Charge.VACUUM)
    stage = Stage("pair", left * right, composition)
    combined = stage_operator(basis, stage, (IX, -IX))
    separate = exact_window_operator(
        basis, composition, right, -IX
    ) @ exact_window_operator(basis, composition, left, IX)
    assert np.allclose(combined, separate, atol=EXACT)
    with pytest.raises(ValueError, match="2 weave windows"):
        stage_operator(basis, stage, (IX,))
    single = Stage("solo", left, composition)
    assert np.allclose(
        stage_operator(basis, single, IX),
        exact_window_operator(basis, composition, left, IX),
        atol=EXACT,
    )


@pytest.fixture(scope="module")
def cu_exact():
    circuit = build_injection_cu(
        DECOMPOSITION_WORDS["cnot_injection"].word,
        DECOMPOSITION_WORDS["not"].word,
        NOT_GATE,
    )
    ops = circuit_stage_operators(
        circuit,
        {
            "cu_inject": (I2,),
            "cu_target": (rotated_frame_block(IX),),
            "cu_eject": (I2,),
        },
    )
    return evaluate_with_stage_operators(circuit, ops)


def test_exact_cu_realizes_controlled_gate(cu_exact):
    assert distance(cu_exact.computational_block, controlled(IX)) < EXACT
    assert evaluation_leak(cu_exact) < EXACT


@pytest.fixture(scope="module")
def m_identity_exact():
    circuit = build_m_gate(
        CM_IDENTITY_WORDS["r"].word,
        CM_IDENTITY_WORDS["i"].word,
        CM_IDENTITY_WORDS["s"].word,
        initialization_role="identity",
        target_matrix=NOT_GATE,
    )

    cache = {}

    def run(target_sign):
        if target_sign not in cache:
            ops = circuit_stage_operators(
                circuit,
                {
                    "initialize": (I2,),
                    "inject": (I2,),
                    "target": (rotated_frame_block(target_sign * IX),),
                    "eject": (I2,),
                    "uninitialize": (I2,),
                },
            )
            cache[target_sign] = evaluate_with_stage_operators(circuit, ops)
        return cache[target_sign]

    return run


def test_exact_m_identity_realizes_reference(m_identity_exact):
    ev = m_identity_exact(+1)
    assert distance(ev.computational_block, m_gate_reference("identity", IX)) < EXACT
    assert evaluation_leak(ev) < EXACT


@pytest.fixture(scope="module")
def m_not_exact():
    circuit = build_m_gate(
        CM_NOT_WORDS["r"].word,
        CM_NOT_WORDS["i"].word,
        CM_NOT_WORDS["s"].word,
        initialization_role="not",
        target_matrix=NOT_GATE,
    )

    cache = {}

    def run(init_sign, target_sign):
        key = (init_sign, target_sign)
        if key not in cache:
            r = rotated_frame_block(init_sign * IX)
            ops = circuit_stage_operators(
                circuit,
                {
                    "initialize": (r,),
                    "inject": (I2,),
                    "target": (rotated_frame_block(target_sign * IX),),
                    "eject": (I2,),
                    "uninitialize": (r.conj().T,),
                },
            )
            cache[key] = evaluate_with_stage_operators(circuit, ops)
        return cache[key]

    return run


def test_exact_m_not_realizes_reference(m_not_exact):
    ev = m_not_exact(+1, +1)
    assert distance(ev.computational_block, m_gate_reference("not", IX)) < EXACT
    assert evaluation_leak(ev) < EXACT


def test_exact_m_not_is_covariant_in_both_blocks(m_not_exact):
    # The initialization enters once forward and once inverted, so its
    # sign cancels; the target block sign passes straight through.
    ev = m_not_exact(-1, -1)
    assert distance(ev.computational_block, m_gate_reference("not", -IX)) < EXACT


def test_exact_wrapped_ccs_realizes_doubly_controlled_gate():
    core = build_m_gate(
        CCNOT_INJECTION_WORDS["r"].word,
        CCNOT_INJECTION_WORDS["i"].word,
        CCNOT_INJECTION_WORDS["s"].word,
        initialization_role="not",
        target_matrix=(-IX).conj().T,
    )
    circuit = build_ccs(
        core,
        CCNOT_INJECTION_WORDS["not"].word,
        CCNOT_INJECTION_WORDS["s"].word,
        NOT_GATE,
    )
    ops = circuit_stage_operators(
        circuit,
        {
            "flip_controls_and_target": (IX, IX, IX),
            "initialize": (rotated_frame_block(IX),),
            "inject": (I2,),
            "target": (rotated_frame_block(-IX),),
            "eject": (I2,),
            "uninitialize": (rotated_frame_block(IX).conj().T,),
            "unflip_controls": (-IX, -IX),
        },
    )
    ev = evaluate_with_stage_operators(circuit, ops)
    assert distance(ev.computational_block, cc_gate(IX)) < EXACT
    assert evaluation_leak(ev) < EXACT


def test_exact_composite_product_realizes_doubly_controlled_gate(
    m_identity_exact, m_not_exact
):
    # One identity-initialized composite firing the adjoint target,
    # times one NOT-initialized composite firing the target, equals the
    # doubly controlled gate.
    first = m_identity_exact(-1)
    second = m_not_exact(+1, +1)
    product = first.computational_block @ second.computational_block
    assert distance(product, cc_gate(IX)) < EXACT


def test_exact_decomposition_realizes_doubly_controlled_gate():
    circuit = build_ccs_decomposition(
        DECOMPOSITION_WORDS["cnot_injection"].word,
        DECOMPOSITION_WORDS["csqrt_injection"].word,
        DECOMPOSITION_WORDS["sqrt_not"].word,
        DECOMPOSITION_WORDS["not"].word,
        cc_gate(-IX),
    )
    v = SQRT_NOT_GATE
    ops = circuit_stage_operators(
        circuit,
        {
            "csqrt_inject": (I2,),
            "csqrt_target": (rotated_frame_block(v),),
            "csqrt_eject": (I2,),
            "cnot_inject": (I2,),
            "cnot_target": (rotated_frame_block(IX),),
            "cnot_eject": (I2,),
            "csqrt_eject_undo": (I2,),
            "csqrt_target_undo": (rotated_frame_block(v).conj().T,),
            "csqrt_inject_undo": (I2,),
            "cnot_eject_undo": (I2,),
            "cnot_target_undo": (rotated_frame_block(IX).conj().T,),
            "cnot_inject_undo": (I2,),
        },
    )
    # The two group swaps stay literal braids; with ideal gates around
    # them every intermediate state is computational, so they act as
    # exact label permutations.
    ev = evaluate_with_stage_operators(circuit, ops)
    assert distance(ev.computational_block, cc_gate(-IX)) < EXACT
    assert evaluation_leak(ev) < EXACT


def test_stage_operator_fallback_matches_plain_evaluation():
    circuit = build_injection_cu(
        DECOMPOSITION_WORDS["cnot_injection"].word,
        DECOMPOSITION_WORDS["not"].word,
        NOT_GATE,
    )
    with_fallback = evaluate_with_stage_operators(circuit, {})
    plain = evaluate_circuit(circuit)
    assert np.allclose(with_fallback.full_matrix, plain.full_matrix, atol=1e-12)

"""Exact-limit stage operators for composite circuits.

A cabled stage approximates an ideal operation: carry the window's
cables along the stage's strand permutation while acting on their joint
fusion degrees in a prescribed way, a fixed two-by-two block when every
cable carries charge tau and amplitude one in every sector where a cable
is vacuum.  The ideal operator is not itself a braid, but it lies in the
linear span of cabled braid matrices that share the stage's strand
permutation: braiding acts on cable-charge sectors through the bare
three-strand representation, so finitely many local constraints pin a
coefficient vector, and the same combination of the dense matrices
assembles the operator on the full fusion space.  Composites rebuilt
from these operators realize their reference gates exactly, which
separates assembly conventions from weave approximation error.
"""

import itertools

import numpy as np

from .cable import cable
from .encoding import encode_qubits
from .fusion import enumerate_basis, word_matrix
from .model import Charge, DEFAULT_HANDEDNESS, r_phases
from .words import BraidWord, GAMMA, strand_permutation

# Constraint-system residual above which the window family is rejected.
RESIDUAL_TOL = 1e-9

_SINGLE_CROSSINGS = ((1, 1), (1, -1), (2, 1), (2, -1))


def rotated_frame_block(block, handedness=DEFAULT_HANDEDNESS):
    """Two-by-two ideal block of a generator-swapped weave whose
    unswapped form approximates `block`."""
    basis = enumerate_basis(3, Charge.TAU)
    gamma = word_matrix(basis, GAMMA, handedness)
    return gamma.conj().T @ np.asarray(block, dtype=complex) @ gamma


def _base_word(perm):
    """Shortest braid word inducing the permutation, at most three crossings."""
    candidates = [BraidWord(())]
    for count in (1, 2, 3):
        for factors in itertools.product(_SINGLE_CROSSINGS, repeat=count):
            candidates.append(BraidWord(factors))
    for word in candidates:
        if strand_permutation(word, 3) == perm:
            return word
    raise ValueError(f"no three-strand word realizes permutation {perm}")


def _pure_atoms():
    """Generators of the three-strand pure braid group and their inverses:
    one full twist for each strand pair."""
    twists = (
        BraidWord(((1, 2),)),
        BraidWord(((2, 2),)),
        BraidWord(((1, 1), (2, 2), (1, -1))),
    )
    atoms = []
    for twist in twists:
        atoms.append(twist)
        atoms.append(twist.inverse())
    return tuple(atoms)


def _family(base):
    """Words sharing base's permutation: base times short pure braids with
    varied pair windings, enough to span the window sector constraints."""
    atoms = _pure_atoms()
    members = [base]
    for atom in atoms:
        members.append(base * atom)
        members.append(base * atom * atom)
    for i, first in enumerate(atoms):
        for j, second in enumerate(atoms):
            if i // 2 != j // 2:
                members.append(base * first * second)
    unique = {}
    for word in members:
        unique.setdefault(word.factors, word)
    return tuple(unique.values())


def _net_crossings(word, vacant):
    """Net signed crossings between the two strands other than the one
    starting at position `vacant` (0-based)."""
    positions = [0, 1, 2]
    count = 0
    for gen, power in word.factors:
        a, b = gen - 1, gen
        sa = positions.index(a)
        sb = positions.index(b)
        if vacant not in (sa, sb):
            count += power
        if power % 2:
            positions[sa], positions[sb] = b, a
    return count


def exact_window_operator(basis, composition, word, block, handedness=DEFAULT_HANDEDNESS):
    """Ideal operator for one three-strand window of a cabled stage.

    `word` fixes the window (its generator indices) and the strand
    permutation; `block` is the exact two-by-two action on the window's
    all-tau sector, in the frame of `word` itself.  Sectors where a
    cable carries vacuum get amplitude exactly one.
    """
    if not word.factors:
        raise ValueError("window word must not be empty")
    gens = {g for g, _ in word.factors}
    low = min(gens)
    if gens - {low, low + 1}:
        raise ValueError("window word must use two adjacent generators")
    widths = composition.widths[low - 1 : low + 2]
    if len(widths) < 3:
        raise ValueError("window extends past the last strand of the composition")
    block = np.asarray(block, dtype=complex)
    if block.shape != (2, 2):
        raise ValueError("ideal block must be two-by-two")

    local = word.shifted(1 - low)
    family = _family(_base_word(strand_permutation(local, 3)))
    tau3 = enumerate_basis(3, Charge.TAU)
    vac3 = enumerate_basis(3, Charge.VACUUM)
    r_vac, r_tau = r_phases(handedness)

    reps = [word_matrix(tau3, member, handedness) for member in family]
    rows = []
    target = []
    for i in range(2):
        for j in range(2):
            rows.append([rep[i, j] for rep in reps])
            target.append(block[i, j])
    rows.append([word_matrix(vac3, member, handedness)[0, 0] for member in family])
    target.append(1.0)
    wide = [v for v in range(3) if widths[v] >= 2]
    for v in wide:
        for phase in (r_vac, r_tau):
            rows.append([phase ** _net_crossings(member, v) for member in family])
            target.append(1.0)
    if len(wide) >= 2:
        rows.append([1.0] * len(family))
        target.append(1.0)

    system = np.array(rows, dtype=complex)
    wanted = np.array(target, dtype=complex)
    coeff, *_ = np.linalg.lstsq(system, wanted, rcond=None)
    residual = np.max(np.abs(system @ coeff - wanted))
    if residual > RESIDUAL_TOL:
        raise ValueError(
            f"window family cannot realize the ideal sector data "
            f"(residual {residual:.2e})"
        )

    out = np.zeros((basis.dim, basis.dim), dtype=complex)
    for c, member in zip(coeff, family):
        if abs(c) < 1e-16:
            continue
        expanded = cable(member.shifted(low - 1), composition)
        out += c * word_matrix(basis, expanded, handedness)
    gram = out.conj().T @ out
    if np.max(np.abs(gram - np.eye(basis.dim))) > 1e-8:
        raise ValueError("assembled window operator is not unitary")
    return out


def _window_components(word):
    """Connected generator groups of a stage word; disjoint groups braid
    disjoint strand windows and commute."""
    gens = sorted({g for g, _ in word.factors})
    if not gens:
        raise ValueError("stage word must not be empty")
    components = [[gens[0]]]
    for g in gens[1:]:
        if g - components[-1][-1] == 1:
            components[-1].append(g)
        else:
            components.append([g])
    for members in components:
        if len(members) > 2:
            raise ValueError("stage word spans more than three strands in one window")
    return components


def stage_operator(basis, stage, blocks, handedness=DEFAULT_HANDEDNESS):
    """Ideal operator for a whole stage: one exact window per connected
    generator group, `blocks` giving each window's all-tau action in
    window order."""
    if isinstance(blocks, np.ndarray) and blocks.shape == (2, 2):
        blocks = (blocks,)
    components = _window_components(stage.word)
    if len(blocks) != len(components):
        raise ValueError(
            f"stage {stage.name!r} has {len(components)} weave windows, "
            f"got {len(blocks)} ideal blocks"
        )
    out = np.eye(basis.dim, dtype=complex)
    for members, window_block in zip(components, blocks):
        chosen = set(members)
        sub = BraidWord(tuple(f for f in stage.word.factors if f[0] in chosen))
        out = exact_window_operator(basis, stage.composition, sub, window_block, handedness) @ out
    return out


def circuit_stage_operators(circuit, stage_blocks, handedness=DEFAULT_HANDEDNESS):
    """Dense ideal operators for the named stages of a circuit, keyed for
    evaluate_with_stage_operators.  Stages of the same name (repeated
    runs of one controlled gate) share one operator."""
    basis = encode_qubits(circuit.qubit_count).basis
    out = {}
    for stage in circuit.stages:
        if stage.name in stage_blocks and stage.name not in out:
            out[stage.name] = stage_operator(
                basis, stage, stage_blocks[stage.name], handedness
            )
    return out

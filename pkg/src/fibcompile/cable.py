"""Cabling: lift words on macro-strands (groups of anyons) to elementary
braid words.

A positive macro-crossing passes the whole left cable over the right one,
strand by strand, costing width_left * width_right elementary crossings of
the same sign.  Crossings permute the cables, so widths evolve as the word
is expanded; a macro-power expands as repeated single crossings under the
evolving widths, which makes the expansion of an inverse word the exact
elementary inverse.
"""

from dataclasses import dataclass

import numpy as np

from .model import Charge, DEFAULT_HANDEDNESS
from .fusion import enumerate_basis, word_matrix
from .words import BraidWord


@dataclass(frozen=True)
class StrandComposition:
    widths: tuple

    def __post_init__(self):
        widths = tuple(int(w) for w in self.widths)
        if not widths or any(w < 1 for w in widths):
            raise ValueError(f"widths must be positive integers, got {self.widths}")
        object.__setattr__(self, "widths", widths)

    @property
    def total(self):
        return sum(self.widths)

    @property
    def macro_count(self):
        return len(self.widths)


def _block_crossing(offset, left_width, right_width):
    """Positive crossing of a left cable over a right cable: each left
    strand, rightmost first, passes over every right strand."""
    factors = []
    for j in range(left_width):
        start = offset + left_width - j
        factors.extend((start + k, 1) for k in range(right_width))
    return factors


def cable(word, composition):
    """Expand a macro-strand word to elementary crossings."""
    widths = list(composition.widths)
    out = []
    for gen, power in word.factors:
        if gen > len(widths) - 1:
            raise ValueError(
                f"macro generator {gen} needs more than {len(widths)} macro-strands"
            )
        for _ in range(abs(power)):
            left, right = widths[gen - 1], widths[gen]
            offset = sum(widths[: gen - 1])
            if power > 0:
                out.extend(_block_crossing(offset, left, right))
            else:
                # the inverse of the positive crossing that would restore
                # the swapped pair
                out.extend(
                    (g, -1)
                    for g, _ in reversed(_block_crossing(offset, right, left))
                )
            widths[gen - 1], widths[gen] = widths[gen], widths[gen - 1]
    return BraidWord(tuple(out))


def composition_after(word, composition):
    """Widths after the word's macro-permutation has been applied."""
    widths = list(composition.widths)
    for gen, power in word.factors:
        if gen > len(widths) - 1:
            raise ValueError(
                f"macro generator {gen} needs more than {len(widths)} macro-strands"
            )
        if power % 2:
            widths[gen - 1], widths[gen] = widths[gen], widths[gen - 1]
    return StrandComposition(tuple(widths))


def full_twist_word(start, width):
    """Full twist of the block occupying positions start..start+width-1:
    (sigma_start ... sigma_{start+width-2})^width."""
    if width < 2:
        return BraidWord(())
    pass_once = tuple((start + k, 1) for k in range(width - 1))
    return BraidWord(pass_once * width)


def block_twist_eigenvalue(width, charge, handedness=DEFAULT_HANDEDNESS):
    """Eigenvalue of the full block twist on the given total charge.  The
    twist is central, so it acts as this scalar on the whole sector."""
    if width == 1:
        if charge is Charge.TAU:
            return 1.0 + 0.0j
        raise ValueError("a single anyon always carries charge tau")
    basis = enumerate_basis(width, charge)
    twist = word_matrix(basis, full_twist_word(1, width), handedness)
    return complex(twist[0, 0])


def charge_projector(basis, start, width, charge, handedness=DEFAULT_HANDEDNESS):
    """Projector onto states where the anyons at positions
    start..start+width-1 fuse to the given total charge."""
    dim = len(basis.trees)
    if width == 1:
        if charge is Charge.TAU:
            return np.eye(dim, dtype=complex)
        return np.zeros((dim, dim), dtype=complex)
    twist = word_matrix(basis, full_twist_word(start, width), handedness)
    other = Charge.TAU if charge is Charge.VACUUM else Charge.VACUUM
    lam = block_twist_eigenvalue(width, charge, handedness)
    lam_other = block_twist_eigenvalue(width, other, handedness)
    return (twist - lam_other * np.eye(dim)) / (lam - lam_other)

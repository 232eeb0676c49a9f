"""Published reference compilations: braid words, their single-gate targets,
and the composite-gate figures they are documented to achieve.

Word strings are kept exactly as printed in their source tables.  The
printed sequences are operator products, rightmost factor applied first,
so the exposed BraidWord reverses the parsed factors into application
order; composite-gate evaluation pins this reading (the transposed one
reproduces none of the published composite errors).  Parsing also
normalizes adjacent same-generator factors (a printed odd adjuster merges
into a neighboring even factor), which preserves crossing count except
for one published word whose printed tail is not freely reduced (it ends
with adjacent opposite-sign factors on the same generator and shortens
from 48 to 46 crossings).  Every printed word sums to 48 crossings and
has winding divisible by 10, which makes all vacuum-sector phases exactly
1 and all tau-block phases real.
"""

import re
from dataclasses import dataclass

from .gates import IDENTITY_2, NOT_GATE, SQRT_NOT_GATE
from .words import BraidWord

ROLE_TARGETS = {
    "identity": IDENTITY_2,
    "not": NOT_GATE,
    "sqrt_not": SQRT_NOT_GATE,
}


@dataclass(frozen=True)
class PublishedWord:
    role: str
    target: str
    text: str
    error: float
    winding: int

    @property
    def word(self):
        return BraidWord.from_string(self.text).reversed()

    @property
    def target_matrix(self):
        return ROLE_TARGETS[self.target]


# Controlled-injection M(I, NOT): control condition XOR(c1, c2).
CM_IDENTITY_WORDS = {
    "r": PublishedWord(
        "r",
        "identity",
        "s1^-1 s1^-2 s2^2 s1^4 s2^-2 s1^-4 s2^-2 s1^2 s2^2 s1^4 s2^4 s1^2"
        " s2^-4 s1^-2 s2^2 s1^-2 s2^-2 s1^2 s2^-2 s2^-1",
        1.51e-3,
        0,
    ),
    "i": PublishedWord(
        "i",
        "identity",
        "s1^1 s1^2 s2^2 s1^4 s2^4 s1^4 s2^2 s1^4 s2^2 s1^2 s2^-2 s1^2 s2^-2"
        " s1^2 s2^2 s1^2 s2^-2 s1^2 s2^-2 s1^2 s2^-1",
        1.51e-3,
        30,
    ),
    "s": PublishedWord(
        "s",
        "not",
        "s2^1 s2^4 s1^-2 s2^-2 s1^-2 s2^-4 s1^-2 s2^2 s1^2 s2^-4 s1^2 s2^4"
        " s1^-2 s2^4 s1^-2 s2^-4 s1^-2 s2^-2 s2^-1",
        8.55e-4,
        -10,
    ),
}

# Controlled-injection M(NOT, NOT): control condition OR(c1, c2).
CM_NOT_WORDS = {
    "r": PublishedWord(
        "r",
        "not",
        "s1^-1 s2^2 s1^-4 s2^2 s1^-2 s2^2 s1^-2 s2^4 s1^-2 s2^-2 s1^-2 s2^4"
        " s1^-2 s2^-2 s1^2 s2^2 s1^-2 s2^-2 s1^-2 s2^-2 s1^-2 s2^1",
        8.55e-4,
        -10,
    ),
    "i": CM_IDENTITY_WORDS["i"],
    "s": CM_IDENTITY_WORDS["s"],
}

# Controlled-injection three-qubit controlled-controlled-NOT.
CCNOT_INJECTION_WORDS = {
    "r": PublishedWord(
        "r",
        "not",
        "s1^1 s1^2 s2^2 s1^-2 s2^2 s1^-2 s2^-2 s1^-2 s2^4 s1^-2 s2^-2 s1^-2"
        " s2^2 s1^-2 s2^2 s1^-2 s2^2 s1^2 s2^2 s1^-2 s2^-2 s1^2 s2^-2 s2^1",
        8.55e-4,
        0,
    ),
    "i": PublishedWord(
        "i",
        "identity",
        "s1^1 s1^2 s2^2 s1^2 s2^2 s1^-2 s2^2 s1^4 s2^2 s1^-2 s2^2 s1^2 s2^-2"
        " s1^4 s2^4 s1^2 s2^-2 s1^2 s2^4 s1^2 s2^-1",
        1.51e-3,
        30,
    ),
    "s": CM_IDENTITY_WORDS["s"],
    "not": CM_IDENTITY_WORDS["s"],
}

# Decomposition-based three-qubit controlled-controlled-NOT.
DECOMPOSITION_WORDS = {
    "cnot_injection": PublishedWord(
        "cnot_injection",
        "identity",
        "s1^-1 s1^-2 s2^2 s1^4 s2^2 s1^4 s2^-2 s1^2 s2^-2 s1^2 s2^4 s1^2"
        " s2^-2 s1^2 s2^-4 s1^-2 s2^-4 s1^-2 s2^-2 s2^-1",
        1.51e-3,
        0,
    ),
    "csqrt_injection": CM_IDENTITY_WORDS["i"],
    "sqrt_not": PublishedWord(
        "sqrt_not",
        "sqrt_not",
        "s2^-1 s1^2 s2^4 s1^-2 s2^-4 s1^2 s2^-2 s1^2 s2^4 s1^-2 s2^2 s1^2"
        " s2^4 s1^2 s2^-2 s1^4 s2^4 s1^2 s2^-1",
        1.24e-3,
        20,
    ),
    "not": CM_IDENTITY_WORDS["s"],
}


@dataclass(frozen=True)
class PublishedComposite:
    key: str
    words: dict
    overall_error: float
    leakage: float
    block_errors: dict


PUBLISHED_COMPOSITES = {
    "cm_identity": PublishedComposite(
        key="cm_identity",
        words=CM_IDENTITY_WORDS,
        overall_error=6.64e-4,
        leakage=3.26e-6,
        block_errors={},
    ),
    "cm_not": PublishedComposite(
        key="cm_not",
        words=CM_NOT_WORDS,
        overall_error=6.64e-4,
        leakage=3.99e-6,
        block_errors={"01": 6.644e-4, "10": 6.644e-4, "11": 6.637e-4},
    ),
    "ccnot_injection": PublishedComposite(
        key="ccnot_injection",
        words=CCNOT_INJECTION_WORDS,
        overall_error=2.07e-3,
        leakage=1.62e-6,
        block_errors={"11": 8.54e-4},
    ),
    "ccnot_decomposition": PublishedComposite(
        key="ccnot_decomposition",
        words=DECOMPOSITION_WORDS,
        overall_error=1.90e-3,
        leakage=3.96e-6,
        block_errors={},
    ),
}

ALL_PUBLISHED_WORDS = [
    ("cm_identity", role, pw)
    for role, pw in CM_IDENTITY_WORDS.items()
] + [
    ("cm_not", "r", CM_NOT_WORDS["r"]),
    ("ccnot_injection", "r", CCNOT_INJECTION_WORDS["r"]),
    ("ccnot_injection", "i", CCNOT_INJECTION_WORDS["i"]),
    ("ccnot_decomposition", "cnot_injection", DECOMPOSITION_WORDS["cnot_injection"]),
    ("ccnot_decomposition", "sqrt_not", DECOMPOSITION_WORDS["sqrt_not"]),
]

# Published comparison-table figures for the two three-qubit strategies,
# reported alongside recomputed values (never asserted against our build).
PUBLISHED_COMPARISON = {
    "decomposition": {
        "two_qubit_gates": 7,
        "three_anyon_gates": 3,
        "length_formula": (30, 32),
        "depth_formula": (30, 32),
        "best_error": 1.90e-3,
        "leakage_of_best": 3.96e-6,
        "avg_target_error": 2.32e-3,
        "min_target_error": 1.76e-3,
        "max_target_error": 3.16e-3,
        "avg_leakage": 1.75e-6,
        "min_leakage": 3.93e-7,
        "max_leakage": 4.09e-6,
    },
    "controlled_injection": {
        "two_qubit_gates": 4,
        "three_anyon_gates": 3,
        "length_formula": (25, 0),
        "depth_formula": (22, 0),
        "best_error": 2.07e-3,
        "leakage_of_best": 1.62e-6,
        "avg_target_error": 2.35e-3,
        "min_target_error": 8.54e-4,
        "max_target_error": 3.34e-3,
        "avg_leakage": 2.031e-6,
        "min_leakage": 3.59e-7,
        "max_leakage": 3.99e-6,
    },
}

STANDALONE_WORD_LENGTH = 48


def printed_crossing_count(text):
    """Sum of printed |exponents|, before any free reduction."""
    return sum(abs(int(m.group(1))) for m in re.finditer(r"\^([+-]?\d+)", text))

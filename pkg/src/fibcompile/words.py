"""Braid words: normalized factor lists, the text grammar, winding, and
weave endpoint classification.

Grammar: word := term (ws term)* ; term := 's' digit+ '^' sign? digit+
e.g. "s1^-2 s2^4".  factors[0] is always the first operation applied.
"""

import enum
import re
from dataclasses import dataclass, field

_TERM_RE = re.compile(r"s(\d+)\^([+-]?\d+)$")


class WeaveEndpoint(enum.Enum):
    SAME_STRAND = "same_strand"
    TOP_TO_BOTTOM = "top_to_bottom"


def _normalize(factors):
    out = []
    for gen, power in factors:
        gen = int(gen)
        power = int(power)
        if gen < 1:
            raise ValueError(f"generator index must be >= 1, got {gen}")
        if power == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + power
            out.pop()
            if merged != 0:
                out.append((gen, merged))
        else:
            out.append((gen, power))
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    factors: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "factors", _normalize(self.factors))

    @classmethod
    def from_string(cls, text):
        terms = text.split()
        factors = []
        for term in terms:
            m = _TERM_RE.match(term)
            if not m:
                raise ValueError(f"cannot parse braid word term {term!r}")
            factors.append((int(m.group(1)), int(m.group(2))))
        return cls(tuple(factors))

    def to_string(self):
        return " ".join(f"s{g}^{p}" for g, p in self.factors)

    def __str__(self):
        return self.to_string()

    @property
    def length(self):
        return sum(abs(p) for _, p in self.factors)

    @property
    def winding(self):
        return sum(p for _, p in self.factors)

    def inverse(self):
        return BraidWord(tuple((g, -p) for g, p in reversed(self.factors)))

    def reversed(self):
        """Same factors in opposite application order."""
        return BraidWord(tuple(reversed(self.factors)))

    def shifted(self, delta):
        return BraidWord(tuple((g + delta, p) for g, p in self.factors))

    def max_generator(self):
        return max((g for g, _ in self.factors), default=0)

    def __mul__(self, other):
        """Concatenation: self applied first, then other."""
        return BraidWord(self.factors + other.factors)


def winding(word):
    return word.winding


def gamma_conjugate(word):
    """Swap generator indices 1 <-> 2 of a three-strand word.

    The swapped word's matrix equals Gamma^dagger M Gamma with
    Gamma = sigma_1 sigma_2 sigma_1.
    """
    if word.max_generator() > 2:
        raise ValueError("gamma_conjugate applies to three-strand words only")
    return BraidWord(tuple((3 - g, p) for g, p in word.factors))


GAMMA = BraidWord(((1, 1), (2, 1), (1, 1)))


def strand_permutation(word, n_strands):
    """Position permutation induced by the word: perm[i] = final position of
    the strand that starts at position i (0-based)."""
    positions = list(range(n_strands))
    for gen, power in word.factors:
        if gen > n_strands - 1:
            raise ValueError(f"generator {gen} needs more than {n_strands} strands")
        if power % 2:
            a, b = gen - 1, gen
            for s in range(n_strands):
                if positions[s] == a:
                    positions[s] = b
                elif positions[s] == b:
                    positions[s] = a
    return tuple(positions)


def is_weave(word):
    """True if odd powers occur only as the first or last factor."""
    for k, (_, p) in enumerate(word.factors):
        if p % 2 and k not in (0, len(word.factors) - 1):
            return False
    return True


def classify_endpoint(word):
    """Weave endpoint class of a three-strand word, or None.

    SAME_STRAND: the induced strand permutation is the identity.
    TOP_TO_BOTTOM: the weft traverses the triple end to end (either
    orientation), i.e. the permutation is a three-cycle.
    """
    if not is_weave(word):
        return None
    perm = strand_permutation(word, 3)
    if perm == (0, 1, 2):
        return WeaveEndpoint.SAME_STRAND
    if perm in ((2, 0, 1), (1, 2, 0)):
        return WeaveEndpoint.TOP_TO_BOTTOM
    return None


def weft_travel(word):
    """(start, end) positions (0-based) of the traversing strand for a
    TOP_TO_BOTTOM three-strand weave, else None."""
    perm = strand_permutation(word, 3)
    if perm == (2, 0, 1):
        return (0, 2)
    if perm == (1, 2, 0):
        return (2, 0)
    return None

"""Exact SU(2) quaternion lift of three-strand braid words.

For the right-handed model the tau-sector block of sigma_1^p equals
e^{i p pi/10} . U(q_p) exactly, with q_p = (cos(7 p pi/10), 0, 0,
sin(7 p pi/10)) and U(w,x,y,z) = w I + i (x X + y Y + z Z).  sigma_2^p is
the F-conjugate, which reflects the quaternion axis through the unit vector
(2/phi^{3/2}, 0, -1/phi^3).  The left-handed blocks are the complex
conjugates.  Because U is a homomorphism, the tau block of any word is
e^{i h W pi/10} . U(prod q) with W the winding and h the handedness sign,
with no residual sign ambiguity.
"""

import math
from dataclasses import dataclass

import numpy as np

from .model import PHI, DEFAULT_HANDEDNESS

# Unit axis of the F-conjugated Z: F Z F = AXIS_X . X + AXIS_Z . Z.
AXIS_X = 2.0 / PHI ** 1.5
AXIS_Z = -1.0 / PHI ** 3

# Components smaller than this are treated as zero when picking the
# canonical quaternion sign.
SIGN_EPS = 1e-9


@dataclass(frozen=True)
class Quaternion:
    w: float
    x: float
    y: float
    z: float

    def __mul__(self, other):
        # Composition order matches the matrix rep: (a * b).to_matrix()
        # equals a.to_matrix() @ b.to_matrix().
        w1, x1, y1, z1 = other.w, other.x, other.y, other.z
        w2, x2, y2, z2 = self.w, self.x, self.y, self.z
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def conjugate(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        return math.sqrt(self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2)

    def dot(self, other):
        return (
            self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
        )

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def to_matrix(self):
        w, x, y, z = self.components()
        return np.array(
            [[w + 1j * z, y + 1j * x], [-y + 1j * x, w - 1j * z]], dtype=complex
        )


IDENTITY_Q = Quaternion(1.0, 0.0, 0.0, 0.0)


def canonical_sign(q):
    """(canonical q, sign) with the first significant component positive."""
    for c in q.components():
        if abs(c) > SIGN_EPS:
            return (q, 1) if c > 0 else (-q, -1)
    raise ValueError("cannot canonicalize a null quaternion")


def generator_quaternion(gen, power, handedness=DEFAULT_HANDEDNESS):
    """Quaternion of sigma_gen^power with the Eq.-level phase stripped."""
    alpha = 7.0 * power * math.pi / 10.0
    c, s = math.cos(alpha), math.sin(alpha)
    if gen == 1:
        q = Quaternion(c, 0.0, 0.0, s)
    elif gen == 2:
        q = Quaternion(c, AXIS_X * s, 0.0, AXIS_Z * s)
    else:
        raise ValueError("three-strand words only")
    if handedness.sign < 0:
        q = Quaternion(q.w, -q.x, q.y, -q.z)
    return q


def word_quaternion(word, handedness=DEFAULT_HANDEDNESS):
    """Product quaternion of a word, factors[0] applied first."""
    q = IDENTITY_Q
    for gen, power in word.factors:
        q = generator_quaternion(gen, power, handedness) * q
    return q


def block_phase(winding, handedness=DEFAULT_HANDEDNESS):
    """Deterministic tau-block phase e^{i h W pi/10}."""
    return np.exp(1j * handedness.sign * winding * np.pi / 10.0)


def vacuum_phase(winding, handedness=DEFAULT_HANDEDNESS):
    """Vacuum-sector phase R_tau^W = e^{-3 i h W pi/5}."""
    return np.exp(-3j * handedness.sign * winding * np.pi / 5.0)


def su2_block(word, handedness=DEFAULT_HANDEDNESS):
    """(canonical Quaternion, phase_sign) of a three-strand word.

    The word's tau-sector matrix equals
    phase_sign . e^{i h W pi/10} . U(q) with W = word.winding.
    """
    q = word_quaternion(word, handedness)
    return canonical_sign(q)


def block_matrix(word, handedness=DEFAULT_HANDEDNESS):
    """Exact 2x2 tau-sector matrix reconstructed from the quaternion lift."""
    q, sign = su2_block(word, handedness)
    return sign * block_phase(word.winding, handedness) * q.to_matrix()


def matrix_quaternion(u):
    """Quaternion of a 2x2 unitary after determinant normalization.

    The returned quaternion is one of the two SU(2) lifts; callers that only
    compare via |dot| are insensitive to the choice.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    det = np.linalg.det(u)
    if abs(det) < 1e-12:
        raise ValueError("matrix is singular")
    v = u / np.sqrt(det)
    w = 0.5 * (v[0, 0] + v[1, 1]).real
    z = 0.5 * (v[0, 0] - v[1, 1]).imag
    x = 0.5 * (v[0, 1] + v[1, 0]).imag
    y = 0.5 * (v[0, 1] - v[1, 0]).real
    return Quaternion(w, x, y, z)


def su2_distance(q1, q2):
    """Phase-insensitive operator-norm distance between the SU(2) elements.

    Equals sqrt(2 (1 - |q1 . q2|)), computed as the smaller of the two
    lift-difference norms to avoid cancellation near zero distance.
    """
    diff = math.sqrt(
        (q1.w - q2.w) ** 2 + (q1.x - q2.x) ** 2 + (q1.y - q2.y) ** 2 + (q1.z - q2.z) ** 2
    )
    summ = math.sqrt(
        (q1.w + q2.w) ** 2 + (q1.x + q2.x) ** 2 + (q1.y + q2.y) ** 2 + (q1.z + q2.z) ** 2
    )
    return min(diff, summ)

"""Fibonacci anyon model data: charges, golden-ratio constants, F and R symbols."""

import enum
import math
from dataclasses import dataclass

import numpy as np

# Absolute tolerance used by validity checks throughout the package.
TOL = 1e-12

PHI = (1.0 + math.sqrt(5.0)) / 2.0


class Charge(enum.IntEnum):
    VACUUM = 0
    TAU = 1

    def __str__(self):
        return "1" if self is Charge.VACUUM else "t"


class Handedness(enum.Enum):
    RIGHT = "right"
    LEFT = "left"

    @property
    def sign(self):
        return +1 if self is Handedness.RIGHT else -1


DEFAULT_HANDEDNESS = Handedness.RIGHT


def fuse(a, b):
    """Fusion outcomes of two charges, in fixed (VACUUM, TAU) order."""
    if a is Charge.VACUUM:
        return (b,)
    if b is Charge.VACUUM:
        return (a,)
    return (Charge.VACUUM, Charge.TAU)


def quantum_dimension(c):
    return 1.0 if c is Charge.VACUUM else PHI


# F^t_{x,tau,tau} for the only nontrivial case x = t = tau, in basis order
# (VACUUM, TAU) for the internal channel.  Real, symmetric, involutory.
F_TAU = np.array(
    [
        [1.0 / PHI, 1.0 / math.sqrt(PHI)],
        [1.0 / math.sqrt(PHI), -1.0 / PHI],
    ]
)


def r_phases(handedness=DEFAULT_HANDEDNESS):
    """Exchange phases (R_vacuum, R_tau) for a pair of tau anyons.

    The right-handed solution is (e^{4iπ/5}, -e^{2iπ/5}); the left-handed
    one is its complex conjugate.
    """
    h = handedness.sign
    r_vac = np.exp(4j * h * np.pi / 5.0)
    r_tau = -np.exp(2j * h * np.pi / 5.0)
    return r_vac, r_tau


def twist_tau(handedness=DEFAULT_HANDEDNESS):
    """Topological spin of the tau charge, from the ribbon relation R_c^2 = θ_c/θ_τ^2."""
    return np.exp(-4j * handedness.sign * np.pi / 5.0)


@dataclass(frozen=True)
class ModelConstants:
    handedness: Handedness
    phi: float
    f_matrix: np.ndarray
    r_vacuum: complex
    r_tau: complex


def model_constants(handedness=DEFAULT_HANDEDNESS):
    r_vac, r_tau = r_phases(handedness)
    return ModelConstants(
        handedness=handedness,
        phi=PHI,
        f_matrix=F_TAU.copy(),
        r_vacuum=r_vac,
        r_tau=r_tau,
    )

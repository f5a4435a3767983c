"""State vector and admissibility predicates.

The conserved state is ``U = (f, b, g, q)``: the two film heights ``f``
(lower layer) and ``g`` (upper layer), and the bulk concentration
gradients ``b`` and ``q`` in the respective layers. Everything is
dimensionless and stored in 64-bit floats.

Two admissibility levels exist because the solver algebra stays
well-defined on any componentwise-positive state, while the wave-speed
ordering (and with it the classical solution theory) additionally needs
``f*b < g*q``. Library entry points require positivity and merely warn
when the strict product inequality fails.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple

import numpy as np

from .errors import AdmissibilityError

#: Default margin on ``gq - fb`` used by the strict admissibility test;
#: guards the resonant boundary ``fb = gq`` where two wave speeds collide.
EPS_HYP = 1e-10


class State(NamedTuple):
    """Immutable point value of the 4-component state vector."""

    f: float
    b: float
    g: float
    q: float

    @property
    def fb(self) -> float:
        """Product of lower-layer height and gradient (first wave-pair strength)."""
        return self.f * self.b

    @property
    def gq(self) -> float:
        """Product of upper-layer height and gradient (second wave-pair strength)."""
        return self.g * self.q

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=float)


class AdmissibilityLevel(enum.Enum):
    """POSITIVE: all components > 0. STRICT: additionally fb < gq with margin."""

    POSITIVE = "positive"
    STRICT = "strict"


def is_admissible(state, level=AdmissibilityLevel.STRICT, eps_hyp=EPS_HYP) -> bool:
    """Pure predicate; never raises.

    POSITIVE holds iff all four components are strictly positive. STRICT
    additionally requires ``gq - fb > eps_hyp`` (absolute margin), which
    guarantees four distinct, increasing wave speeds.
    """
    f, b, g, q = state
    positive = f > 0.0 and b > 0.0 and g > 0.0 and q > 0.0
    if level is AdmissibilityLevel.POSITIVE:
        return positive
    return positive and (g * q - f * b > eps_hyp)


def strict_margin(state) -> float:
    """Distance ``gq - fb`` to the resonant boundary (positive inside it)."""
    f, b, g, q = state
    return g * q - f * b


def require_positive(state, what="state") -> State:
    """Validate positivity and finiteness, normalizing to a :class:`State`."""
    s = State(*map(float, state))
    if not (s.f > 0.0 and s.b > 0.0 and s.g > 0.0 and s.q > 0.0):
        raise AdmissibilityError(s, f"{what} has a non-positive component")
    if not all(map(math.isfinite, s)):
        raise AdmissibilityError(s, f"{what} has a non-finite component")
    return s

"""Flux, Jacobian, eigenstructure, and the invariant coordinate change.

The system in conservative form is ``U_t + F(U)_x = 0`` with

    F(f, b, g, q) = ( f^2 b / 2,
                      f b^2 / 2,
                      g^2 q / 2 + f g b,
                      g q^2 / 2 + f b q ).

Writing ``u = f b`` and ``v = g q``, the flux Jacobian is block
lower-triangular and its eigenvalues are available in closed form:

    lambda_1 = u/2 < lambda_2 = 3u/2 < lambda_3 = u + v/2 < lambda_4 = u + 3v/2,

the ordering being strict exactly when ``u < v``. Fields 1 and 3 are
linearly degenerate, fields 2 and 4 genuinely nonlinear. Everything here
is evaluated from the closed forms; no numerical eigendecomposition is
performed.

The coordinates ``W = (xi, u, tau, eta) = (b/f, fb, q/g, (fb+gq)/(gq)^(1/4))``
diagonalize the system (each component is advected with the matching
eigenvalue) and form a bijection with ``U`` on the strictly admissible
set. The inverse map recovers ``v = gq`` as the root of
``u + v = eta * v^(1/4)`` on the branch ``v > u``.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ._roots import bisect, grow_upper
from .errors import InversionError
from .state import State, require_positive


class EigenDecomposition(NamedTuple):
    """Wave speeds and right eigenvectors (rows of ``rights``)."""

    lambdas: np.ndarray
    rights: np.ndarray


class InvariantCoords(NamedTuple):
    """Diagonalizing coordinates of a state."""

    xi: float
    u: float
    tau: float
    eta: float

    @property
    def v(self) -> float:
        """Upper-layer product ``gq`` recovered from ``u`` and ``eta``."""
        return _solve_v(self.u, self.eta)


def flux_parts(f, b, g, q):
    """Componentwise flux; broadcasts over array arguments."""
    u = f * b
    return 0.5 * f * u, 0.5 * b * u, g * (0.5 * g * q + u), q * (0.5 * g * q + u)


def flux(state) -> np.ndarray:
    """Flux vector ``F(U)`` of a positive state as a length-4 array."""
    f, b, g, q = require_positive(state)
    return np.array(flux_parts(f, b, g, q))


def jacobian(state) -> np.ndarray:
    """Flux Jacobian ``DF(U)`` as a 4x4 array. Upper-right 2x2 block is zero."""
    f, b, g, q = require_positive(state)
    u, v = f * b, g * q
    return np.array(
        [
            [u, 0.5 * f * f, 0.0, 0.0],
            [0.5 * b * b, u, 0.0, 0.0],
            [g * b, f * g, u + v, 0.5 * g * g],
            [b * q, f * q, 0.5 * q * q, u + v],
        ]
    )


def eigenvalues(state) -> np.ndarray:
    """The four wave speeds, ascending exactly when ``fb < gq``."""
    f, b, g, q = require_positive(state)
    u, v = f * b, g * q
    return np.array([0.5 * u, 1.5 * u, u + 0.5 * v, u + 1.5 * v])


def eigen(state) -> EigenDecomposition:
    """Closed-form eigendecomposition.

    The eigenvectors use the conventional normalization

        r1 = (-f/b, 1, 0, 0),
        r2 = ((fb - 3gq)/(4qb), (fb - 3gq)/(4qf), g/q, 1),
        r3 = (0, 0, -g/q, 1),
        r4 = (0, 0, g/q, 1).

    For the rescaling under which the nonlinearity indicators take the
    values returned by :func:`char_field_indicator`, see
    :func:`scaled_eigenvectors`.
    """
    f, b, g, q = require_positive(state)
    u, v = f * b, g * q
    rights = np.array(
        [
            [-f / b, 1.0, 0.0, 0.0],
            [(u - 3.0 * v) / (4.0 * q * b), (u - 3.0 * v) / (4.0 * q * f), g / q, 1.0],
            [0.0, 0.0, -g / q, 1.0],
            [0.0, 0.0, g / q, 1.0],
        ]
    )
    return EigenDecomposition(eigenvalues(state), rights)


def scaled_eigenvectors(state) -> np.ndarray:
    """Right eigenvectors rescaled per characteristic field.

    Fields 2 and 4 are scaled so the directional derivative of ``fb``
    (resp. ``gq``) along the vector equals twice the product itself;
    fields 1 and 3 analogously up to sign:

        R1 = (-f, b, 0, 0),
        R2 = (f, b, 4fbg/(fb - 3gq), 4fbq/(fb - 3gq)),
        R3 = (0, 0, -g, q),
        R4 = (0, 0, g, q).

    With this normalization grad(lambda_k) . R_k equals 0, 3fb, 0, 3gq,
    matching :func:`char_field_indicator`, and the convex-entropy
    quadratic forms of :func:`filmwaves.entropy.hessian_quadratic_forms`
    are the Hessian contractions against these exact vectors.
    """
    f, b, g, q = require_positive(state)
    u, v = f * b, g * q
    d = u - 3.0 * v
    return np.array(
        [
            [-f, b, 0.0, 0.0],
            [f, b, 4.0 * u * g / d, 4.0 * u * q / d],
            [0.0, 0.0, -g, q],
            [0.0, 0.0, g, q],
        ]
    )


def char_field_indicator(state, k: int) -> float:
    """Nonlinearity indicator grad(lambda_k) . R_k for field ``k`` in 1..4.

    Zero for the degenerate contact fields 1 and 3; ``3fb`` and ``3gq``
    for the genuinely nonlinear fields 2 and 4 (scaled eigenvectors).
    """
    f, b, g, q = require_positive(state)
    if k == 1 or k == 3:
        return 0.0
    if k == 2:
        return 3.0 * f * b
    if k == 4:
        return 3.0 * g * q
    raise ValueError(f"field index must be in 1..4, got {k!r}")


def to_invariants(state) -> InvariantCoords:
    """Map a positive state to its diagonalizing coordinates."""
    f, b, g, q = require_positive(state)
    u, v = f * b, g * q
    return InvariantCoords(b / f, u, q / g, (u + v) / v**0.25)


def from_invariants(coords) -> State:
    """Invert :func:`to_invariants` on the strictly admissible branch.

    Raises :class:`InversionError` when no root of
    ``u + v = eta * v^(1/4)`` with ``v >= u`` exists, i.e. when the
    coordinates did not come from a state with ``fb < gq``.
    """
    xi, u, tau, eta = map(float, coords)
    if not (xi > 0.0 and u > 0.0 and tau > 0.0 and eta > 0.0):
        raise InversionError(f"invariant coordinates must be positive: {(xi, u, tau, eta)}")
    v = _solve_v(u, eta)
    f = np.sqrt(u / xi)
    g = np.sqrt(v / tau)
    return State(f, u / f, g, v / g)


def _solve_v(u, eta, *, rtol=1e-14):
    # residual of u + v = eta v^(1/4); decreasing-then-increasing in v,
    # so with h(u) <= 0 the root v >= u is unique.
    def h(v):
        return u + v - eta * v**0.25

    h_u = h(u)
    if h_u > 0.0:
        raise InversionError(
            f"no root with v > u for u={u!r}, eta={eta!r} (residual at v=u: {h_u!r})"
        )
    if h_u == 0.0:
        return u
    hi = grow_upper(h, u, 2.0 * max(u, 1.0), what="upper-product bracket")
    return bisect(h, u, hi, rtol=rtol, what="upper-product recovery")

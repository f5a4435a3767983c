"""Entropy / entropy-flux machinery.

A pair ``(E, Q)`` is an entropy pair for the system when
``grad(E)^T DF(U) = grad(Q)^T`` holds on the admissible set; smooth
solutions then conserve ``E`` and admissible shocks dissipate it when
``E`` is convex.

With ``u = fb``, ``v = gq``, ``xi = b/f``, ``tau = q/g`` the system admits
the generator family

    E = rho(u) + sqrt(u) mu(xi) + sqrt(v) nu(tau) + 1/(u+v),
    Q = psi(u) + u^(3/2)/2 mu(xi) + sqrt(v) nu(tau) (2u+v)/2
        - (3/2) ln(u+v) - u/(2(u+v)),

for arbitrary C^1 generators ``rho``, ``mu``, ``nu`` and ``psi`` tied to
``rho`` by ``psi'(w) = (3/2) w rho'(w)``. The member with
``rho(w) = 1/w``, ``mu(x) = 1/x``, ``nu(x) = 1/x`` is strictly convex on
the strictly admissible set; :func:`convex_entropy` evaluates it through
an independent closed form so the two code paths can check each other.

``psi`` is supplied analytically alongside ``rho`` (no quadrature), which
keeps evaluation deterministic; :func:`psi_consistency_residual` verifies
the pairing by finite differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .state import require_positive
from .system import jacobian

#: Scale-relative finite-difference step used for entropy gradients.
FD_STEP = 1e-6


class EntropyPairValue(NamedTuple):
    E: float
    Q: float


@dataclass(frozen=True)
class EntropyGenerators:
    """One member of the entropy-pair family.

    ``psi`` must satisfy ``psi'(w) = (3/2) w rho'(w)``; supply it in
    closed form. All four callables must be side-effect free.
    """

    rho: Callable[[float], float]
    mu: Callable[[float], float]
    nu: Callable[[float], float]
    psi: Callable[[float], float]
    label: str = ""


def convex_generators() -> EntropyGenerators:
    """Generators of the strictly convex member."""
    return EntropyGenerators(
        rho=lambda w: 1.0 / w,
        mu=lambda x: 1.0 / x,
        nu=lambda x: 1.0 / x,
        psi=lambda w: -1.5 * math.log(w),
        label="convex",
    )


def zero_generators() -> EntropyGenerators:
    """The degenerate member with all generators identically zero."""
    zero = lambda _w: 0.0
    return EntropyGenerators(rho=zero, mu=zero, nu=zero, psi=zero, label="zero")


def polynomial_generators(rho_coeffs, mu_coeffs, nu_coeffs, label="poly") -> EntropyGenerators:
    """Member with polynomial generators; ``psi`` is derived exactly.

    For ``rho(w) = sum_k a_k w^k`` the pairing condition integrates to
    ``psi(w) = (3/2) sum_k a_k k/(k+1) w^(k+1)``.
    """
    a = [float(c) for c in rho_coeffs]
    m = [float(c) for c in mu_coeffs]
    n = [float(c) for c in nu_coeffs]

    def rho(w):
        return sum(c * w**k for k, c in enumerate(a))

    def psi(w):
        return 1.5 * sum(c * k / (k + 1.0) * w ** (k + 1) for k, c in enumerate(a))

    def mu(x):
        return sum(c * x**k for k, c in enumerate(m))

    def nu(x):
        return sum(c * x**k for k, c in enumerate(n))

    return EntropyGenerators(rho=rho, mu=mu, nu=nu, psi=psi, label=label)


def entropy_pair(state, gen: EntropyGenerators) -> EntropyPairValue:
    """Evaluate the pair defined by ``gen`` at a positive state."""
    f, b, g, q = require_positive(state)
    u, v = f * b, g * q
    xi, tau, p = b / f, q / g, f * b + g * q
    su, sv = math.sqrt(u), math.sqrt(v)
    e = gen.rho(u) + su * gen.mu(xi) + sv * gen.nu(tau) + 1.0 / p
    qq = (
        gen.psi(u)
        + 0.5 * u * su * gen.mu(xi)
        + 0.5 * sv * gen.nu(tau) * (2.0 * u + v)
        - 1.5 * math.log(p)
        - u / (2.0 * p)
    )
    return EntropyPairValue(e, qq)


def convex_entropy(state) -> EntropyPairValue:
    """The strictly convex pair, evaluated from its own closed form.

    E = 1/(fb) + f^(3/2)/sqrt(b) + 1/(fb+gq) + g^(3/2)/sqrt(q)
    Q = -(3/2) ln(fb (fb+gq)) + f^(5/2) sqrt(b)/2 - fb/(2(fb+gq))
        + g^(3/2)/sqrt(q) (fb + gq/2)

    Agrees with ``entropy_pair(state, convex_generators())`` to roundoff.
    """
    f, b, g, q = require_positive(state)
    u, v = f * b, g * q
    p = u + v
    e = 1.0 / u + f**1.5 / math.sqrt(b) + 1.0 / p + g**1.5 / math.sqrt(q)
    qq = (
        -1.5 * math.log(u * p)
        + 0.5 * f**2.5 * math.sqrt(b)
        - u / (2.0 * p)
        + (g**1.5 / math.sqrt(q)) * (u + 0.5 * v)
    )
    return EntropyPairValue(e, qq)


def compatibility_residual(state, gen: EntropyGenerators, step=FD_STEP) -> float:
    """Max-norm of ``grad(E)^T DF - grad(Q)^T`` with central-difference gradients.

    The residual is pure finite-difference truncation (order ``step**2``)
    for any genuine member of the family; a corrupted pair shows up at
    O(1).
    """
    u = require_positive(state).as_array()
    grad_e = _fd_grad(lambda s: entropy_pair(s, gen).E, u, step)
    grad_q = _fd_grad(lambda s: entropy_pair(s, gen).Q, u, step)
    return float(np.max(np.abs(grad_e @ jacobian(u) - grad_q)))


def psi_consistency_residual(gen: EntropyGenerators, w, step=1e-6) -> float:
    """|psi'(w) - (3/2) w rho'(w)| by central differences at ``w > 0``."""
    h = step * (1.0 + abs(w))
    dpsi = (gen.psi(w + h) - gen.psi(w - h)) / (2.0 * h)
    drho = (gen.rho(w + h) - gen.rho(w - h)) / (2.0 * h)
    return abs(dpsi - 1.5 * w * drho)


def hessian_quadratic_forms(state) -> np.ndarray:
    """Contractions ``R_k^T H R_k`` of the convex-entropy Hessian.

    ``R_k`` are the scaled eigenvectors of
    :func:`filmwaves.system.scaled_eigenvectors`. With ``u = fb``,
    ``v = gq``, ``p = u + v``:

        k=1: 3 f^(3/2)/sqrt(b) + 2u/p^2 + 2/u
        k=2: 6 (3v^2 + 2uv - 2u^2) / (u (3v - u) p)
        k=3: 2v/p^2 + 3 g^(3/2)/sqrt(q)
        k=4: 2v (3v - u) / p^3

    All four are strictly positive when ``fb < gq``; the k=4 form changes
    sign at ``3gq = fb`` and the k=2 form degenerates there too, so
    convexity genuinely fails outside the admissible set.
    """
    f, b, g, q = require_positive(state)
    u, v = f * b, g * q
    p = u + v
    return np.array(
        [
            3.0 * f**1.5 / math.sqrt(b) + 2.0 * u / p**2 + 2.0 / u,
            6.0 * (3.0 * v * v + 2.0 * u * v - 2.0 * u * u) / (u * (3.0 * v - u) * p),
            2.0 * v / p**2 + 3.0 * g**1.5 / math.sqrt(q),
            2.0 * v * (3.0 * v - u) / p**3,
        ]
    )


def shock_entropy_production(left, right, sigma) -> float:
    """Dissipation ``sigma [E] - [Q]`` of the convex pair across a jump.

    Non-negative for admissible shocks, zero across contacts (the jump
    terms of the convex pair cancel exactly against the contact speed),
    negative for a reversed shock.
    """
    el, ql = convex_entropy(left)
    er, qr = convex_entropy(right)
    return sigma * (er - el) - (qr - ql)


def _fd_grad(fn, u, step):
    grad = np.zeros(4)
    for i in range(4):
        h = step * (1.0 + abs(u[i]))
        up, um = u.copy(), u.copy()
        up[i] += h
        um[i] -= h
        grad[i] = (fn(up) - fn(um)) / (2.0 * h)
    return grad

"""Elementary wave curves through a given left state.

Six wave families exist: contact discontinuities in the degenerate
fields 1 and 3, and shock or rarefaction waves in the genuinely
nonlinear fields 2 and 4. Family-2 curves are parameterized by the
monotone product ``fb`` of the right state, family-4 curves by ``gq``;
contacts by the jumped component itself.

Field 4 has the special property that its shock and rarefaction curves
are the same straight line ``{f, b fixed, q/g fixed}`` in state space,
so a single parameterization (:func:`temple4`) covers both and only the
sign of ``gq_target - gq_left`` picks the wave type. Field 2 has no such
coincidence: the shock locus couples into the upper layer through the
jump conditions, which is what :func:`shock2` solves for.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._roots import bisect, grow_upper
from .errors import WrongBranchError
from .state import State, require_positive
from .system import eigenvalues, flux, from_invariants, to_invariants


class WaveFamily(enum.Enum):
    CONTACT1 = "J1"
    SHOCK2 = "S2"
    RAREF2 = "R2"
    CONTACT3 = "J3"
    SHOCK4 = "S4"
    RAREF4 = "R4"


@dataclass(frozen=True)
class WaveJump:
    """One elementary wave: two states plus its speed (or fan speed span)."""

    left: State
    right: State
    family: WaveFamily
    speed: float | None = None  # discontinuities
    fan: tuple[float, float] | None = None  # rarefactions: (head, tail)

    @property
    def min_speed(self) -> float:
        return self.speed if self.fan is None else self.fan[0]

    @property
    def max_speed(self) -> float:
        return self.speed if self.fan is None else self.fan[1]

    @property
    def is_discontinuity(self) -> bool:
        return self.fan is None


def rh_residual(left, right, sigma) -> np.ndarray:
    """Jump-condition residual ``sigma [U] - [F(U)]``, componentwise."""
    ul = require_positive(left, "left state").as_array()
    ur = require_positive(right, "right state").as_array()
    return sigma * (ur - ul) - (flux(ur) - flux(ul))


def contact1(left, f_r) -> WaveJump:
    """Field-1 contact: ``fb``, ``g``, ``q`` carried over, ``f`` jumps to ``f_r``.

    Speed equals the field-1 characteristic speed ``fb/2`` on both sides.
    """
    lft = require_positive(left)
    if not f_r > 0.0:
        raise ValueError(f"contact parameter f_r must be positive, got {f_r!r}")
    right = State(float(f_r), lft.fb / f_r, lft.g, lft.q)
    return WaveJump(lft, right, WaveFamily.CONTACT1, speed=0.5 * lft.fb)


def contact3(left, g_r) -> WaveJump:
    """Field-3 contact: ``f``, ``b``, ``gq`` carried over, ``g`` jumps to ``g_r``."""
    lft = require_positive(left)
    if not g_r > 0.0:
        raise ValueError(f"contact parameter g_r must be positive, got {g_r!r}")
    right = State(lft.f, lft.b, float(g_r), lft.gq / g_r)
    return WaveJump(lft, right, WaveFamily.CONTACT3, speed=lft.fb + 0.5 * lft.gq)


def raref2(left, fb_target) -> WaveJump:
    """Field-2 rarefaction from ``left`` up to product ``fb_target >= fb``.

    The right state keeps the three field-2 invariants of the left state
    (``b/f``, ``q/g`` and the combination ``(fb+gq)/(gq)^(1/4)``); its
    upper-layer product is recovered through the invariant-coordinate
    inversion. Fan speeds run from ``3 fb_left / 2`` to
    ``3 fb_target / 2``.
    """
    lft = require_positive(left)
    u_r = float(fb_target)
    if u_r < lft.fb:
        raise WrongBranchError(
            f"rarefaction needs fb_target >= fb of the start state "
            f"({u_r!r} < {lft.fb!r}); use shock2 for the decreasing branch"
        )
    w = to_invariants(lft)
    right = from_invariants((w.xi, u_r, w.tau, w.eta))
    return WaveJump(lft, right, WaveFamily.RAREF2, fan=(1.5 * lft.fb, 1.5 * u_r))


def shock2(left, fb_target) -> WaveJump:
    """Field-2 shock from ``left`` down to product ``fb_target < fb``.

    Lower-layer components follow from the preserved ratio ``b/f``; the
    upper-layer height solves the scalar jump condition (a cubic once
    ``q = g q_l / g_l`` is substituted), whose admissible root is the one
    continuous with ``g_l`` at vanishing strength. The speed is

        sigma_2 = b_l (f_l^2 + f_l f + f^2) / (2 f_l)
                = (u_l + sqrt(u_l u_r) + u_r) / 2,

    which sits strictly between the field-2 characteristic speeds of the
    two states, so the construction is admissible by default.
    """
    lft = require_positive(left)
    u_l, u_r = lft.fb, float(fb_target)
    if not 0.0 < u_r < u_l:
        raise WrongBranchError(
            f"shock needs 0 < fb_target < fb of the start state "
            f"({u_r!r} vs {u_l!r}); use raref2 for the increasing branch"
        )
    f_r = np.sqrt(u_r * lft.f / lft.b)
    sigma = lft.b * (lft.f**2 + lft.f * f_r + f_r**2) / (2.0 * lft.f)
    g_l, q_l = lft.g, lft.q
    rhs = 0.5 * g_l**2 * q_l + u_l * g_l - sigma * g_l

    def jump_condition(g):
        return 0.5 * q_l * g**3 / g_l + (u_r - sigma) * g - rhs

    # jump_condition(g_l) = g_l (u_r - u_l) < 0 and the cubic grows, so the
    # admissible root lies above g_l; double the upper end until bracketed.
    hi = grow_upper(jump_condition, g_l, 2.0 * g_l, what="field-2 shock bracket")
    g_r = bisect(jump_condition, g_l, hi, rtol=1e-12, what="field-2 shock root")
    right = State(f_r, u_r / f_r, g_r, g_r * q_l / g_l)
    return WaveJump(lft, right, WaveFamily.SHOCK2, speed=sigma)


def temple4(left, gq_target) -> WaveJump:
    """Field-4 wave to product ``gq_target``; shock and fan share one locus.

    ``gq_target < gq`` gives an admissible shock with speed
    ``fb + q_l (g_l^2 + g_l g + g^2) / (2 g_l)``; otherwise a rarefaction
    with fan speeds ``[fb + 3 gq / 2, fb + 3 gq_target / 2]`` (zero width
    at equality).
    """
    lft = require_positive(left)
    v_t = float(gq_target)
    if not v_t > 0.0:
        raise ValueError(f"gq_target must be positive, got {gq_target!r}")
    g_r = np.sqrt(v_t * lft.g / lft.q)
    right = State(lft.f, lft.b, g_r, g_r * lft.q / lft.g)
    if v_t < lft.gq:
        sigma = lft.fb + lft.q * (lft.g**2 + lft.g * g_r + g_r**2) / (2.0 * lft.g)
        return WaveJump(lft, right, WaveFamily.SHOCK4, speed=sigma)
    return WaveJump(
        lft, right, WaveFamily.RAREF4, fan=(lft.fb + 1.5 * lft.gq, lft.fb + 1.5 * v_t)
    )


def lax_admissible(jump: WaveJump) -> bool:
    """Lax inequalities for a field-2 or field-4 shock.

    Field 2: lambda_2(right) < sigma < lambda_2(left) and
    lambda_1(left) < sigma. Field 4 analogously one field up.
    """
    if jump.family is WaveFamily.SHOCK2:
        k = 1
    elif jump.family is WaveFamily.SHOCK4:
        k = 3
    else:
        raise ValueError(f"Lax conditions apply to shocks only, got {jump.family}")
    lam_l = eigenvalues(jump.left)
    lam_r = eigenvalues(jump.right)
    s = jump.speed
    return lam_r[k] < s < lam_l[k] and lam_l[k - 1] < s

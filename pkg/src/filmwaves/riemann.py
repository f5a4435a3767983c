"""Exact solution of the Riemann problem.

For two-state initial data ``U(x, 0) = U_L (x < 0), U_R (x > 0)`` the
self-similar solution consists of four waves separated by three constant
intermediate states::

    U_L | J1 | U_L* | S2/R2 | U_M* | J3 | U_R* | S4/R4 | U_R

The outer contacts J1 and J3 carry the jumps that the nonlinear families
cannot; the field-2 wave is a rarefaction exactly when the lower-layer
product does not decrease (``f_R b_R >= f_L b_L``), a shock otherwise.

Because the lower-layer pair ``(f, b)`` evolves autonomously, its part of
the construction is explicit. The single genuinely implicit quantity is
the upper film height ``g_M*`` of the middle-star state, obtained as the
root of a scalar residual: the field-2 invariant matching condition when
the middle wave is a rarefaction, the field-2 jump condition when it is
a shock. Everything else follows in closed form:

    U_L* = ( sqrt(fb_L f_R / b_R), sqrt(fb_L b_R / f_R), g_L, q_L )
    U_M* = ( f_R, b_R, g_M*, g_M* q_L / g_L )
    U_R* = ( f_R, b_R, g_M* sqrt(q_L g_R / (g_L q_R)),
                       g_M* sqrt(q_L q_R / (g_L g_R)) )

The solver accepts any componentwise-positive data. When a state is not
strictly admissible (``fb >= gq``) the same algebra is evaluated anyway;
the wave speeds are then checked a posteriori, and an ordering violation
is reported as a warning attached to the returned fan (it becomes an
error only when both input states were strictly admissible, where the
classical theory guarantees ordering).

Existence has a genuine limit on the rarefaction side: a field-2 fan from
``U_L`` reaches lower-layer products only up to

    u_max = ((fb_L + gq_L) / (2 (gq_L)^(1/4)))^(4/3),

where the fan hits the resonant boundary ``fb = gq``; the matching
residual ``F1`` loses its root somewhat beyond that (at ``3/2^(4/3)``
times ``u_max``). Data demanding more has no classical four-wave
solution, and :func:`solve_gm` raises :class:`BracketError` carrying the
failed bracket rather than inventing a state. For merely-positive left
states the no-root threshold can touch ``fb_L`` itself (it does at
``gq_L = fb_L / 3``), so even near-constant data may sit outside the
construction there.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._roots import bisect, grow_upper
from .errors import BracketError, WaveOrderingError
from .state import AdmissibilityLevel, State, is_admissible, require_positive
from .wavecurves import WaveFamily, WaveJump

#: Relative tolerance of the scalar root solves for ``g_M*``; tight enough
#: that the residual itself lands below 1e-12 at problem scale.
GM_RTOL = 1e-14
#: Relative tolerance of the upper-product recovery inside a field-2 fan.
FAN_V_RTOL = 1e-13


class WavePattern(enum.Enum):
    """The four possible wave sequences of a solution fan."""

    R2_S4 = "J1+R2+J3+S4"
    R2_R4 = "J1+R2+J3+R4"
    S2_S4 = "J1+S2+J3+S4"
    S2_R4 = "J1+S2+J3+R4"

    @property
    def sequence(self) -> str:
        return self.value


@dataclass(frozen=True)
class RiemannFan:
    """Complete self-similar solution structure of one Riemann problem."""

    left: State
    left_star: State
    mid_star: State
    right_star: State
    right: State
    waves: tuple[WaveJump, WaveJump, WaveJump, WaveJump]
    pattern: WavePattern
    warnings: tuple[str, ...] = ()

    @property
    def speeds(self) -> tuple[float, ...]:
        """(sigma1, w2 head, w2 tail, sigma3, w4 head, w4 tail)."""
        w1, w2, w3, w4 = self.waves
        return (
            w1.speed,
            w2.min_speed,
            w2.max_speed,
            w3.speed,
            w4.min_speed,
            w4.max_speed,
        )


def classify(left, right) -> WaveFamily:
    """Type of the field-2 wave: RAREF2 iff ``f_R b_R >= f_L b_L``."""
    lft = require_positive(left, "left state")
    rgt = require_positive(right, "right state")
    return WaveFamily.RAREF2 if rgt.fb >= lft.fb else WaveFamily.SHOCK2


def solve_gm(left, right, middle=None, notes=None) -> float:
    """Middle-star upper film height ``g_M*``.

    ``middle`` (RAREF2 or SHOCK2) defaults to :func:`classify`. ``notes``,
    if given, collects diagnostics about bracket expansion beyond the
    interval for which the sign argument is guaranteed.

    Rarefaction case: root of

        F1(g) = g^2 q_L - sqrt(g g_L) (f_L b_L + g_L q_L) + f_R b_R g_L

    bracketed between ``g_L`` and the stationary point of F1. The sign
    argument needs ``f_R b_R < g_L q_L``; outside that range the same
    bracket usually still works and is otherwise expanded geometrically,
    with a note recording the expansion.

    Shock case: unique root above ``g_L`` of the cubic

        F2(g) = q_L g^3 + g g_L (u_R - u_L - s) - g_L^2 (g_L q_L + u_L - u_R - s)

    with ``u = fb`` products and ``s = sqrt(u_L u_R)``.
    """
    lft = require_positive(left, "left state")
    rgt = require_positive(right, "right state")
    if middle is None:
        middle = classify(lft, rgt)
    u_l, v_l, u_r = lft.fb, lft.gq, rgt.fb
    g_l, q_l = lft.g, lft.q

    if middle is WaveFamily.RAREF2:
        if u_r < u_l:
            raise ValueError("rarefaction branch requested for decreasing fb data")
        if u_r == u_l:
            return g_l  # zero-strength field-2 wave

        def resid(g):
            return g * g * q_l - math.sqrt(g * g_l) * (u_l + v_l) + u_r * g_l

        g_stat = (math.sqrt(g_l) * (u_l + v_l) / (4.0 * q_l)) ** (2.0 / 3.0)
        lo, hi = min(g_stat, g_l), max(g_stat, g_l)
        if notes is not None and u_r >= v_l:
            notes.append(
                "field-2 rarefaction with f_R b_R >= g_L q_L: root bracket not "
                "covered by the existence argument, proceeding numerically"
            )
        if (resid(lo) < 0.0) == (resid(hi) < 0.0) and resid(lo) != 0.0 and resid(hi) != 0.0:
            lo, hi = _expand_until_sign_change(resid, lo, hi, notes)
        return bisect(resid, lo, hi, rtol=GM_RTOL, what="middle-state root (rarefaction)")

    if middle is not WaveFamily.SHOCK2:
        raise ValueError(f"middle wave must be RAREF2 or SHOCK2, got {middle}")
    if u_r >= u_l:
        raise ValueError("shock branch requested for nondecreasing fb data")
    s = math.sqrt(u_l * u_r)

    def resid(g):
        return q_l * g**3 + g * g_l * (u_r - u_l - s) - g_l * g_l * (v_l + u_l - u_r - s)

    # resid(g_l) = 2 g_l^2 (u_r - u_l) < 0 and the cubic is eventually
    # increasing, so the root lies in (g_l, inf).
    hi = grow_upper(resid, g_l, 2.0 * g_l, what="middle-state bracket (shock)")
    return bisect(resid, g_l, hi, rtol=GM_RTOL, what="middle-state root (shock)")


def _expand_until_sign_change(resid, lo, hi, notes, max_rounds=60):
    for _ in range(max_rounds):
        lo *= 0.5
        hi *= 2.0
        if (resid(lo) < 0.0) != (resid(hi) < 0.0):
            if notes is not None:
                notes.append(
                    f"middle-state bracket expanded to [{lo:.6g}, {hi:.6g}] "
                    "before a sign change was found"
                )
            return lo, hi
    raise BracketError(lo, hi, resid(lo), resid(hi), what="middle-state bracket expansion")


def intermediate_states(left, right, g_m) -> tuple[State, State, State]:
    """The three constant states, given the solved ``g_M*``."""
    lft = require_positive(left, "left state")
    rgt = require_positive(right, "right state")
    u_l = lft.fb
    f_ls = math.sqrt(u_l * rgt.f / rgt.b)
    left_star = State(f_ls, u_l / f_ls, lft.g, lft.q)
    mid_star = State(rgt.f, rgt.b, g_m, g_m * lft.q / lft.g)
    ratio = lft.q / lft.g
    right_star = State(
        rgt.f,
        rgt.b,
        g_m * math.sqrt(ratio * rgt.g / rgt.q),
        g_m * math.sqrt(ratio * rgt.q / rgt.g),
    )
    return left_star, mid_star, right_star


def classify_wave4(left, right, g_m) -> WaveFamily:
    """SHOCK4 iff ``g_M*`` exceeds ``sqrt(g_L g_R q_R / q_L)`` (tie: RAREF4).

    Crossing the threshold is exactly where the field-4 jump loses
    strength, so the tie is the zero-strength rarefaction by convention.
    """
    lft = require_positive(left, "left state")
    rgt = require_positive(right, "right state")
    threshold = math.sqrt(lft.g * rgt.g * rgt.q / lft.q)
    return WaveFamily.SHOCK4 if g_m > threshold else WaveFamily.RAREF4


def solve(left, right) -> RiemannFan:
    """Assemble the full solution fan for data ``(left, right)``.

    Raises :class:`AdmissibilityError` for non-positive input,
    :class:`BracketError` if the middle-state root cannot be bracketed,
    and :class:`WaveOrderingError` if the wave speeds come out
    non-monotone although both inputs are strictly admissible. For
    merely positive inputs, ordering violations and strictness failures
    are reported in ``fan.warnings`` instead.
    """
    lft = require_positive(left, "left state")
    rgt = require_positive(right, "right state")
    warn: list[str] = []
    strict_l = is_admissible(lft, AdmissibilityLevel.STRICT)
    strict_r = is_admissible(rgt, AdmissibilityLevel.STRICT)
    if not strict_l:
        warn.append(f"left state not strictly admissible (fb={lft.fb!r} >= gq={lft.gq!r})")
    if not strict_r:
        warn.append(f"right state not strictly admissible (fb={rgt.fb!r} >= gq={rgt.gq!r})")

    middle = classify(lft, rgt)
    g_m = solve_gm(lft, rgt, middle, notes=warn)
    left_star, mid_star, right_star = intermediate_states(lft, rgt, g_m)
    u_l, u_r = lft.fb, rgt.fb

    wave1 = WaveJump(lft, left_star, WaveFamily.CONTACT1, speed=0.5 * u_l)
    if middle is WaveFamily.RAREF2:
        wave2 = WaveJump(left_star, mid_star, middle, fan=(1.5 * u_l, 1.5 * u_r))
    else:
        sigma2 = 0.5 * (u_l + math.sqrt(u_l * u_r) + u_r)
        wave2 = WaveJump(left_star, mid_star, middle, speed=sigma2)
    wave3 = WaveJump(mid_star, right_star, WaveFamily.CONTACT3, speed=u_r + 0.5 * mid_star.gq)

    kind4 = classify_wave4(lft, rgt, g_m)
    g_s, q_s = right_star.g, right_star.q
    if kind4 is WaveFamily.SHOCK4:
        sigma4 = u_r + q_s * (g_s**2 + g_s * rgt.g + rgt.g**2) / (2.0 * g_s)
        wave4 = WaveJump(right_star, rgt, kind4, speed=sigma4)
    else:
        wave4 = WaveJump(right_star, rgt, kind4, fan=(u_r + 1.5 * right_star.gq, u_r + 1.5 * rgt.gq))

    pattern = {
        (WaveFamily.RAREF2, WaveFamily.SHOCK4): WavePattern.R2_S4,
        (WaveFamily.RAREF2, WaveFamily.RAREF4): WavePattern.R2_R4,
        (WaveFamily.SHOCK2, WaveFamily.SHOCK4): WavePattern.S2_S4,
        (WaveFamily.SHOCK2, WaveFamily.RAREF4): WavePattern.S2_R4,
    }[(middle, kind4)]

    fan = RiemannFan(
        lft, left_star, mid_star, right_star, rgt,
        (wave1, wave2, wave3, wave4), pattern, tuple(warn),
    )
    bad = _ordering_violation(fan.speeds)
    if bad is not None:
        if strict_l and strict_r:
            raise WaveOrderingError(fan.speeds, bad)
        warn.append(
            f"wave speeds not monotone (positions {bad}, {bad + 1} of {fan.speeds}); "
            "sampling away from x/t = 0 is unreliable"
        )
        fan = RiemannFan(
            lft, left_star, mid_star, right_star, rgt,
            (wave1, wave2, wave3, wave4), pattern, tuple(warn),
        )
    return fan


def _ordering_violation(speeds):
    scale = max(1.0, max(abs(s) for s in speeds))
    for i in range(len(speeds) - 1):
        if speeds[i + 1] < speeds[i] - 1e-12 * scale:
            return i
    return None


def sample(fan: RiemannFan, xi) -> State:
    """Solution state at similarity coordinate ``xi = x/t``.

    Piecewise constant between waves; inside a field-2 fan the product
    ``fb`` equals ``2 xi / 3`` with the three field-2 invariants held
    fixed (the upper product is recovered by a bracketed solve between
    the adjacent states' values); inside a field-4 fan ``gq`` equals
    ``2 (xi - fb) / 3`` with ``f``, ``b`` and ``q/g`` fixed.
    """
    xi = float(xi)
    w1, w2, w3, w4 = fan.waves
    if xi < w1.speed:
        return fan.left
    if w2.is_discontinuity:
        if xi < w2.speed:
            return fan.left_star
    else:
        if xi < w2.fan[0]:
            return fan.left_star
        if xi <= w2.fan[1]:
            return _raref2_interior(fan, 2.0 * xi / 3.0)
    if xi < w3.speed:
        return fan.mid_star
    if w4.is_discontinuity:
        return fan.right_star if xi < w4.speed else fan.right
    if xi < w4.fan[0]:
        return fan.right_star
    if xi <= w4.fan[1]:
        return _raref4_interior(fan, 2.0 * (xi - fan.right.fb) / 3.0)
    return fan.right


def sample_profile(fan: RiemannFan, xs, t) -> np.ndarray:
    """Sample at positions ``xs`` and time ``t > 0`` (rows are states).

    At ``t = 0`` the initial data is returned (``x >= 0`` maps to the
    right state).
    """
    xs = np.asarray(xs, dtype=float)
    if t == 0.0:
        out = np.where(
            (xs < 0.0)[:, None],
            np.array(fan.left, dtype=float)[None, :],
            np.array(fan.right, dtype=float)[None, :],
        )
        return out
    return np.array([sample(fan, x / t) for x in xs])


def _raref2_interior(fan, u):
    lo_state, hi_state = fan.left_star, fan.mid_star
    # snap to the fan edges: within the snap band the interior state differs
    # from the adjacent constant by less than the root tolerances anyway,
    # and snapping keeps the residual bracket below a guaranteed sign change
    snap = 1e-12 * max(1.0, hi_state.fb)
    if u <= lo_state.fb + snap:
        return lo_state
    if u >= hi_state.fb - snap:
        return hi_state
    ratio = lo_state.b / lo_state.f  # = b_R / f_R, invariant along the fan
    f = math.sqrt(u / ratio)
    v_lo, v_hi = hi_state.gq, lo_state.gq  # gq decreases as fb increases
    eta = (lo_state.fb + lo_state.gq) / lo_state.gq**0.25

    def invariant_resid(v):
        return u + v - eta * v**0.25

    v = bisect(
        invariant_resid,
        min(v_lo, v_hi),
        max(v_lo, v_hi),
        rtol=FAN_V_RTOL,
        what="fan-interior upper product",
    )
    tau = lo_state.q / lo_state.g
    g = math.sqrt(v / tau)
    return State(f, u / f, g, v / g)


def _raref4_interior(fan, v):
    lo_state, hi_state = fan.right_star, fan.right
    if v <= lo_state.gq:
        return lo_state
    if v >= hi_state.gq:
        return hi_state
    tau = lo_state.q / lo_state.g
    g = math.sqrt(v / tau)
    return State(lo_state.f, lo_state.b, g, v / g)

"""Independent reference computations used by the tests.

Everything here is deliberately written from scratch against the model
formulas (finite differences, plain bisection, a standalone solver for
the decoupled two-component subsystem) so that library results are
checked by a second route, not by themselves.
"""

import math

import numpy as np

from filmwaves import State

# Two-state reference data exercised throughout the suite. The right state
# is componentwise positive but NOT strictly admissible (fb = 2.34 > gq =
# 1.53), which the solver must tolerate with a warning.
REF_LEFT = State(1.24, 0.90, 2.2, 2.50)
REF_RIGHT = State(1.5, 1.56, 1.7, 0.90)


def fd_gradient(fn, u, step=1e-6):
    """Central-difference gradient with scale-relative step."""
    u = np.asarray(u, dtype=float)
    grad = np.zeros(u.size)
    for i in range(u.size):
        h = step * (1.0 + abs(u[i]))
        up, um = u.copy(), u.copy()
        up[i] += h
        um[i] -= h
        grad[i] = (fn(up) - fn(um)) / (2.0 * h)
    return grad


def fd_hessian(fn, u, step=1e-4):
    """Full central-difference Hessian with scale-relative steps."""
    u = np.asarray(u, dtype=float)
    n = u.size
    hs = [step * (1.0 + abs(u[i])) for i in range(n)]
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            upp, upm, ump, umm = u.copy(), u.copy(), u.copy(), u.copy()
            upp[i] += hs[i]; upp[j] += hs[j]
            upm[i] += hs[i]; upm[j] -= hs[j]
            ump[i] -= hs[i]; ump[j] += hs[j]
            umm[i] -= hs[i]; umm[j] -= hs[j]
            out[i, j] = (fn(upp) - fn(upm) - fn(ump) + fn(umm)) / (4.0 * hs[i] * hs[j])
    return out


def bisect_oracle(fn, lo, hi, iters=200):
    """Plain midpoint bisection; assumes a sign change on [lo, hi]."""
    f_lo, f_hi = fn(lo), fn(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    assert (f_lo < 0.0) != (f_hi < 0.0), "oracle bracket lacks a sign change"
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        f_mid = fn(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        if hi - lo <= 1e-15 * max(abs(lo), abs(hi)):
            break
    return 0.5 * (lo + hi)


def random_strict(rng, low=0.2, high=2.5, ratio=(1.05, 4.0)):
    """Random state with fb < gq by a safe multiplicative margin."""
    f, b = rng.uniform(low, high, 2)
    g = rng.uniform(low, high)
    q = (f * b / g) * rng.uniform(*ratio)
    return State(f, b, g, q)


def random_positive(rng, low=0.2, high=2.5):
    """Random componentwise-positive state, unconstrained product order."""
    f, b, g, q = rng.uniform(low, high, 4)
    return State(f, b, g, q)


def reachable_fb_limit(left):
    """Largest lower-layer product a field-2 fan from ``left`` can reach.

    Along the fan the invariant (fb + gq)/(gq)^(1/4) is fixed while gq
    shrinks as fb grows; the curve hits the resonant boundary fb = gq at
    this value, beyond which no classical four-wave solution exists.
    """
    u, v = left.fb, left.gq
    return ((u + v) / (2.0 * v**0.25)) ** (4.0 / 3.0)


def random_solvable_pair(rng, right_strict=True):
    """Random data pair inside the solver's classical range.

    The left state is strictly admissible. The right state's lower-layer
    product is drawn either below the left one (field-2 shock, always
    solvable) or inside the fan-reachable interval (field-2 rarefaction).
    With ``right_strict=False`` the right state's upper product may drop
    below its lower product, exercising the merely-positive regime.
    """
    left = random_strict(rng)
    u_l = left.fb
    if rng.random() < 0.5:
        u_r = u_l * rng.uniform(0.3, 1.0)
    else:
        u_max = reachable_fb_limit(left)
        u_r = u_l + (u_max - u_l) * rng.uniform(0.0, 0.9)
    split = rng.uniform(0.5, 2.0)
    f_r = math.sqrt(u_r * split)
    v_r = u_r * (rng.uniform(1.1, 3.0) if right_strict else rng.uniform(0.3, 3.0))
    split = rng.uniform(0.5, 2.0)
    g_r = math.sqrt(v_r * split)
    return left, State(f_r, u_r / f_r, g_r, v_r / g_r)


def solve_lower_pair(h_l, c_l, h_r, c_r):
    """Exact Riemann solution of the standalone 2-component subsystem

        h_t + (h^2 c / 2)_x = 0,   c_t + (h c^2 / 2)_x = 0,

    returned as a sampling function of xi = x/t yielding (h, c). This is
    the system the lower-layer pair (f, b) of the full model obeys on its
    own; it has a contact with speed hc/2 followed by a shock or
    rarefaction in the second field.
    """
    u_l, u_r = h_l * c_l, h_r * c_r
    sigma1 = 0.5 * u_l
    h_star = math.sqrt(u_l * h_r / c_r)
    c_star = u_l / h_star
    if u_r >= u_l:
        head, tail = 1.5 * u_l, 1.5 * u_r

        def sample2(xi):
            if xi < sigma1:
                return (h_l, c_l)
            if xi < head:
                return (h_star, c_star)
            if xi <= tail:
                u = 2.0 * xi / 3.0
                h = math.sqrt(u * h_r / c_r)
                return (h, u / h)
            return (h_r, c_r)

    else:
        sigma2 = 0.5 * (u_l + math.sqrt(u_l * u_r) + u_r)

        def sample2(xi):
            if xi < sigma1:
                return (h_l, c_l)
            if xi < sigma2:
                return (h_star, c_star)
            return (h_r, c_r)

    return sample2

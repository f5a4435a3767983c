"""Bracketed scalar root finding.

Bisection only: every solve in this package starts from a guaranteed (or
expandable) bracket, and robustness matters more than iteration count at
this problem size. Failures raise :class:`BracketError` carrying the
endpoint residuals instead of returning a best guess.
"""

from __future__ import annotations

from .errors import BracketError


def bisect(fn, lo, hi, *, rtol=1e-12, maxiter=200, what="root solve"):
    """Find a root of ``fn`` in ``[lo, hi]`` by bisection.

    The bracket must contain a sign change; endpoint roots are returned
    directly. Iterates until the bracket width falls below ``rtol``
    relative to the endpoint magnitudes or ``maxiter`` is reached.
    """
    if not lo < hi:
        lo, hi = hi, lo
    f_lo, f_hi = fn(lo), fn(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo < 0.0) == (f_hi < 0.0):
        raise BracketError(lo, hi, f_lo, f_hi, what=what)
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        f_mid = fn(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        if hi - lo <= rtol * max(abs(lo), abs(hi)):
            break
    return 0.5 * (lo + hi)


def grow_upper(fn, lo, hi, *, factor=2.0, max_growth=200, what="bracket growth"):
    """Increase ``hi`` geometrically until ``fn`` changes sign against ``fn(lo)``.

    Returns the grown upper endpoint. Used where the residual is known to
    become positive for large arguments but no a-priori bound exists.
    """
    f_lo = fn(lo)
    if f_lo == 0.0:
        return lo
    for _ in range(max_growth):
        if (fn(hi) < 0.0) != (f_lo < 0.0) or fn(hi) == 0.0:
            return hi
        hi *= factor
    raise BracketError(lo, hi, f_lo, fn(hi), what=what)

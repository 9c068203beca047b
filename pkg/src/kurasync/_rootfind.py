"""Bracketed scalar root finding used by the region solver."""
from __future__ import annotations

import math

EPS = 2.220446049250313e-16


def newton_bisect(f, fprime, lo, hi, x0=None, atol=0.0, rtol=4 * EPS, maxiter=200):
    """Root of ``f`` in ``[lo, hi]`` by Newton steps kept inside a shrinking bracket.

    ``f(lo)`` and ``f(hi)`` must not have the same strict sign; either endpoint
    may evaluate to +-inf. Any Newton step that leaves the current bracket, or
    fails to halve it over two iterations, is replaced by a bisection step.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"root not bracketed: f({lo!r})={flo!r}, f({hi!r})={fhi!r}")
    sign_lo = flo > 0

    x = hi if x0 is None else x0
    widths = [hi - lo, hi - lo]
    for _ in range(maxiter):
        fx = f(x)
        if fx == 0:
            return x
        if (fx > 0) == sign_lo:
            lo = x
        else:
            hi = x
        width = hi - lo
        if width <= atol + rtol * max(abs(lo), abs(hi)):
            return 0.5 * (lo + hi)

        d = fprime(x)
        x_new = x - fx / d if (d != 0 and math.isfinite(d) and math.isfinite(fx)) else math.nan
        if not (lo < x_new < hi) or width > 0.5 * widths[0]:
            x_new = 0.5 * (lo + hi)
        elif abs(x_new - x) <= atol + rtol * abs(x):
            return x_new
        widths = [widths[1], width]
        x = x_new
    return x


def bisect_predicate(pred, lo, hi, tol, maxiter=400):
    """Shrink ``[lo, hi]`` with ``pred(lo)`` true and ``pred(hi)`` false to width <= tol."""
    for _ in range(maxiter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if pred(mid):
            lo = mid
        else:
            hi = mid
    return lo, hi

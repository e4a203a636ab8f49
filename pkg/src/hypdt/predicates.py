"""Sign-exact planar predicates with a floating-point fast path.

The orientation and incircle tests are evaluated in three stages:

1. a float64 determinant with a static forward error bound (the hot path,
   compiled with numba when available),
2. if the magnitude does not clear the bound, an exact rational evaluation
   over the dyadic values of the input floats.

Stage 2 always decides, so the public functions never return a wrong sign.
Set ``HYPDT_NO_NUMBA=1`` to force the pure-Python/numpy fallback kernels.
"""

from __future__ import annotations

import os
from fractions import Fraction

_EPS = 2.0 ** -53
_CCW_BOUND = (3.0 + 16.0 * _EPS) * _EPS
_ICC_BOUND = (10.0 + 96.0 * _EPS) * _EPS


def _orient_filter(ax, ay, bx, by, cx, cy):
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    detsum = abs(detleft) + abs(detright)
    return det, _CCW_BOUND * detsum


def _incircle_filter(ax, ay, bx, by, cx, cy, dx, dy):
    adx = ax - dx
    ady = ay - dy
    bdx = bx - dx
    bdy = by - dy
    cdx = cx - dx
    cdy = cy - dy

    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    alift = adx * adx + ady * ady

    cdxady = cdx * ady
    adxcdy = adx * cdy
    blift = bdx * bdx + bdy * bdy

    adxbdy = adx * bdy
    bdxady = bdx * ady
    clift = cdx * cdx + cdy * cdy

    det = (alift * (bdxcdy - cdxbdy)
           + blift * (cdxady - adxcdy)
           + clift * (adxbdy - bdxady))
    permanent = (alift * (abs(bdxcdy) + abs(cdxbdy))
                 + blift * (abs(cdxady) + abs(adxcdy))
                 + clift * (abs(adxbdy) + abs(bdxady)))
    return det, _ICC_BOUND * permanent


USING_NUMBA = False
if not os.environ.get("HYPDT_NO_NUMBA"):
    try:
        from numba import njit

        _orient_filter = njit("UniTuple(f8, 2)(f8, f8, f8, f8, f8, f8)",
                              cache=True, fastmath=False)(_orient_filter)
        _incircle_filter = njit(
            "UniTuple(f8, 2)(f8, f8, f8, f8, f8, f8, f8, f8)",
            cache=True, fastmath=False)(_incircle_filter)
        USING_NUMBA = True
    except ImportError:  # pragma: no cover - numba is an optional dependency
        pass


def _sign(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _orient_exact(ax, ay, bx, by, cx, cy):
    ax, ay = Fraction(ax), Fraction(ay)
    bx, by = Fraction(bx), Fraction(by)
    cx, cy = Fraction(cx), Fraction(cy)
    det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx)
    return _sign(det)


def _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy):
    adx = Fraction(ax) - Fraction(dx)
    ady = Fraction(ay) - Fraction(dy)
    bdx = Fraction(bx) - Fraction(dx)
    bdy = Fraction(by) - Fraction(dy)
    cdx = Fraction(cx) - Fraction(dx)
    cdy = Fraction(cy) - Fraction(dy)
    det = ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
           + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
           + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))
    return _sign(det)


def orientation(ax, ay, bx, by, cx, cy):
    """Sign of the signed area of triangle abc: +1 counterclockwise,
    -1 clockwise, 0 collinear.  Never wrong."""
    det, bound = _orient_filter(ax, ay, bx, by, cx, cy)
    if det > bound:
        return 1
    if -det > bound:
        return -1
    if bound == 0.0:
        return 0
    return _orient_exact(ax, ay, bx, by, cx, cy)


def incircle(ax, ay, bx, by, cx, cy, dx, dy):
    """Sign of the incircle determinant: +1 if d is strictly inside the
    circumcircle of the counterclockwise triangle abc, -1 if strictly
    outside, 0 if cocircular.  Never wrong."""
    det, bound = _incircle_filter(ax, ay, bx, by, cx, cy, dx, dy)
    if det > bound:
        return 1
    if -det > bound:
        return -1
    if bound == 0.0:
        return 0
    return _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy)


def orientation_fast(ax, ay, bx, by, cx, cy):
    """Float-only orientation sign.  May be wrong near degeneracy."""
    det, _ = _orient_filter(ax, ay, bx, by, cx, cy)
    return _sign(det)


def incircle_fast(ax, ay, bx, by, cx, cy, dx, dy):
    """Float-only incircle sign.  May be wrong near degeneracy."""
    det, _ = _incircle_filter(ax, ay, bx, by, cx, cy, dx, dy)
    return _sign(det)


def in_circumdisk(a, b, c, p, fast=False):
    """+1 if p is strictly inside the circumcircle of triangle abc
    (either orientation), -1 if strictly outside, 0 if cocircular."""
    if fast:
        o = orientation_fast(a[0], a[1], b[0], b[1], c[0], c[1])
        s = incircle_fast(a[0], a[1], b[0], b[1], c[0], c[1], p[0], p[1])
    else:
        o = orientation(a[0], a[1], b[0], b[1], c[0], c[1])
        s = incircle(a[0], a[1], b[0], b[1], c[0], c[1], p[0], p[1])
    return o * s

"""Precision management for high-accuracy evaluations.

Geometric quantities tied to a genus-g surface are evaluated with mpmath.
The working precision for certified sign computations starts at roughly
double the float64 precision and doubles until either the sign is decided
or the cap (512*g bits by default, overridable through the
``HYPDT_PRECISION_BITS`` environment variable) is exhausted.
"""

from __future__ import annotations

import os

import mpmath

from .errors import PrecisionExhausted

_START_BITS = 106


def precision_cap(genus):
    env = os.environ.get("HYPDT_PRECISION_BITS")
    if env:
        return max(int(env), _START_BITS)
    return 512 * genus


def mp_eval(build, bits):
    """Evaluate ``build(mpmath.mp)`` at the given binary precision."""
    with mpmath.workprec(bits):
        return build(mpmath.mp)


def interval_sign(build, genus=2, cap=None):
    """Certified sign of a scalar expression with irrational constants.

    ``build(ctx)`` must evaluate the expression in the interval context
    ``ctx`` (mpmath.iv) and return an interval.  Precision is doubled until
    the interval excludes zero; if the cap is reached without a decision a
    PrecisionExhausted error is raised.
    """
    if cap is None:
        cap = precision_cap(genus)
    bits = _START_BITS
    iv = mpmath.iv
    while True:
        saved = iv.prec
        try:
            iv.prec = bits
            val = build(iv)
        finally:
            iv.prec = saved
        if val > 0:
            return 1
        if val < 0:
            return -1
        if bits >= cap:
            raise PrecisionExhausted(
                f"sign undecided at {bits} bits (cap {cap})")
        bits = min(2 * bits, cap)

"""Poincare disk geometry and Mobius isometries.

Points are complex numbers in the open unit disk.  Orientation-preserving
isometries are represented by matrices ``[[a, b], [conj(b), conj(a)]]`` with
``|a|^2 - |b|^2 = 1``; composition is the matrix product.

All functions take an optional mpmath context ``ctx``.  The default
``mpmath.fp`` context works on ordinary floats; pass ``mpmath.mp`` (inside a
``mpmath.workprec`` block) for high-precision evaluation.
"""

from __future__ import annotations

import mpmath

fp = mpmath.fp


class Moebius:
    """Isometry z -> (a*z + b) / (conj(b)*z + conj(a))."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a = a
        self.b = b

    def __repr__(self):
        return f"Moebius({self.a!r}, {self.b!r})"

    def apply(self, z):
        return (self.a * z + self.b) / (self.b.conjugate() * z
                                        + self.a.conjugate())

    def compose(self, other):
        """self after other (matrix product self @ other)."""
        return Moebius(self.a * other.a + self.b * other.b.conjugate(),
                       self.a * other.b + self.b * other.a.conjugate())

    def inverse(self):
        return Moebius(self.a.conjugate(), -self.b)

    def trace(self):
        return 2 * self.a.real

    @staticmethod
    def identity():
        return Moebius(complex(1.0, 0.0), complex(0.0, 0.0))

    @staticmethod
    def to_origin(p, ctx=fp):
        """The isometry sending p to the origin."""
        s = ctx.sqrt(1 - abs(p) ** 2)
        one = complex(1.0, 0.0) if ctx is fp else ctx.mpc(1)
        return Moebius(one / s, -p / s)


def is_hyperbolic(m):
    """True iff the isometry is a hyperbolic translation (trace^2 > 4)."""
    return m.trace() ** 2 > 4


def translation_length(m, ctx=fp):
    """Length of translation along the axis: 2*acosh(|tr|/2)."""
    t = abs(m.trace()) / 2
    if t <= 1:
        return ctx.mpf(0) if ctx is not fp else 0.0
    return 2 * ctx.acosh(t)


def hyp_distance(p, q, ctx=fp):
    """Hyperbolic distance between two points of the open unit disk."""
    num = 2 * abs(p - q) ** 2
    den = (1 - abs(p) ** 2) * (1 - abs(q) ** 2)
    return ctx.acosh(1 + num / den)


def hyp_midpoint(p, q, ctx=fp):
    """Midpoint of the geodesic segment [p, q]."""
    if p == q:
        return p
    t = Moebius.to_origin(p, ctx)
    m = t.apply(q)
    r = abs(m)
    half = ctx.tanh(ctx.atanh(r) / 2)
    return t.inverse().apply(m / r * half)


def circumcircle(a, b, c, ctx=fp):
    """Circumscribed circle of triangle abc.

    Returns (euclidean center, euclidean radius, hyperbolic center,
    hyperbolic diameter).  The hyperbolic diameter is +inf when the
    Euclidean circle is not contained in the unit disk; the hyperbolic
    center is None in that case.
    """
    d = 2 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag)
             + c.real * (a.imag - b.imag))
    if d == 0:
        raise ValueError("collinear points have no circumcircle")
    sa = abs(a) ** 2
    sb = abs(b) ** 2
    sc = abs(c) ** 2
    ux = (sa * (b.imag - c.imag) + sb * (c.imag - a.imag)
          + sc * (a.imag - b.imag)) / d
    uy = (sa * (c.real - b.real) + sb * (a.real - c.real)
          + sc * (b.real - a.real)) / d
    center = ux + 1j * uy if ctx is fp else ctx.mpc(ux, uy)
    radius = abs(a - center)

    rho = abs(center)
    s2 = rho + radius
    if s2 >= 1:
        return center, radius, None, ctx.inf
    s1 = rho - radius
    t1 = ctx.atanh(s1)
    t2 = ctx.atanh(s2)
    hyp_diam = 2 * (t2 - t1)
    if rho == 0:
        hyp_center = center * 0
    else:
        hyp_center = center / rho * ctx.tanh((t1 + t2) / 2)
    return center, radius, hyp_center, hyp_diam


def geodesic_support(p, q, ctx=fp):
    """Supporting circle of the geodesic through p and q.

    Returns (center, radius) of the circle orthogonal to the unit circle,
    or (None, None) when the geodesic is a diameter.
    """
    det = p.real * q.imag - p.imag * q.real
    if abs(det) < 1e-14 * max(abs(p), abs(q), 1e-30) ** 2:
        return None, None
    rp = (abs(p) ** 2 + 1) / 2
    rq = (abs(q) ** 2 + 1) / 2
    wx = (rp * q.imag - rq * p.imag) / det
    wy = (rq * p.real - rp * q.real) / det
    center = wx + 1j * wy if ctx is fp else ctx.mpc(wx, wy)
    radius = ctx.sqrt(abs(center) ** 2 - 1)
    return center, radius


def reflect_in_geodesic(z, p, q, ctx=fp):
    """Image of z under the hyperbolic reflection fixing the geodesic
    through p and q."""
    center, radius = geodesic_support(p, q, ctx)
    if center is None:
        w = q - p
        u = w / abs(w)
        return u * u * z.conjugate()
    return center + radius ** 2 / (z - center).conjugate()

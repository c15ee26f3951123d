"""Exact predicates and constructions on circles, points, and circular arcs.

Circles carry rational centers and rational *squared* radii, so pencils such
as r = sqrt(2) stay expressible with rational input data.  Intersection points
live in a quadratic field with one radicand shared per circle/line pair.
Angular reasoning never touches floating point: directions are compared by
quadrant and exact cross-product signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import DegenerateInput, NoRadicalAxis
from .quadfield import QuadNum, QuadPoint, frac
from .radicals import Rad


@dataclass(frozen=True)
class Circle:
    """Circle with center (cx, cy) and squared radius r2 > 0."""

    cx: Fraction
    cy: Fraction
    r2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "cx", frac(self.cx))
        object.__setattr__(self, "cy", frac(self.cy))
        object.__setattr__(self, "r2", frac(self.r2))
        if self.r2 <= 0:
            raise DegenerateInput("squared radius must be positive")


@dataclass(frozen=True)
class Line:
    """Rational line a*x + b*y + c = 0, canonicalized to integer coefficients
    with content 1 and first nonzero coefficient positive."""

    a: int
    b: int
    c: int

    @classmethod
    def of(cls, a, b, c) -> "Line":
        a, b, c = frac(a), frac(b), frac(c)
        if a == 0 and b == 0:
            raise DegenerateInput("line needs a nonzero normal")
        scale = a.denominator * b.denominator * c.denominator
        ai, bi, ci = int(a * scale), int(b * scale), int(c * scale)
        g = gcd(gcd(abs(ai), abs(bi)), abs(ci))
        ai, bi, ci = ai // g, bi // g, ci // g
        lead = ai if ai else bi
        if lead < 0:
            ai, bi, ci = -ai, -bi, -ci
        return cls(ai, bi, ci)


def power_of_point(w, c: Circle) -> Fraction:
    """Power |w - center|^2 - r^2 of a rational point w."""
    wx, wy = frac(w[0]), frac(w[1])
    return (wx - c.cx) ** 2 + (wy - c.cy) ** 2 - c.r2


def radical_axis(c1: Circle, c2: Circle) -> Line:
    """Locus of equal power with respect to two non-concentric circles."""
    a = 2 * (c2.cx - c1.cx)
    b = 2 * (c2.cy - c1.cy)
    if a == 0 and b == 0:
        raise NoRadicalAxis("concentric circles have no radical axis")
    c = (c1.cx ** 2 + c1.cy ** 2 - c1.r2) - (c2.cx ** 2 + c2.cy ** 2 - c2.r2)
    return Line.of(a, b, c)


def circle_line_points(c: Circle, line: Line) -> tuple[QuadPoint, ...]:
    """Exact intersection of a circle with a rational line (0, 1, or 2 points).

    The two points share one radicand; a single point means tangency."""
    a, b, g = Fraction(line.a), Fraction(line.b), Fraction(line.c)
    d2 = a * a + b * b
    # foot of the perpendicular from the center onto the line
    t = (a * c.cx + b * c.cy + g) / d2
    fx, fy = c.cx - t * a, c.cy - t * b
    h2 = c.r2 - t * t * d2
    if h2 < 0:
        return ()
    if h2 == 0:
        return (QuadPoint(QuadNum(fx), QuadNum(fy)),)
    # points = foot +- s * (-b, a) with s = sqrt(h2 / d2)
    s2 = h2 / d2
    p1 = QuadPoint(QuadNum(fx, -b, s2), QuadNum(fy, a, s2))
    p2 = QuadPoint(QuadNum(fx, b, s2), QuadNum(fy, -a, s2))
    return (p1, p2)


def intersection_points(c1: Circle, c2: Circle) -> tuple[QuadPoint, ...]:
    """Exact intersection points of two distinct circles."""
    if c1 == c2:
        raise DegenerateInput("identical circles")
    try:
        axis = radical_axis(c1, c2)
    except NoRadicalAxis:
        return ()
    return circle_line_points(c1, axis)


def point_on_circle(p: QuadPoint, c: Circle) -> bool:
    """Exact containment test in the quadratic field of p."""
    p = QuadPoint.of(p)
    v = (p.x - c.cx) ** 2 + (p.y - c.cy) ** 2 - c.r2
    return v == 0


# -- exact angular order ------------------------------------------------------

Dir = tuple[QuadNum, QuadNum]


def centered(p: QuadPoint, c: Circle) -> Dir:
    return (p.x - c.cx, p.y - c.cy)


def cross_sign(u: Dir, v: Dir) -> int:
    """Sign of u.x*v.y - u.y*v.x; exact across different radicands."""
    du = u[0].delta or u[1].delta
    dv = v[0].delta or v[1].delta
    if du == 0 or dv == 0 or du == dv:
        return (u[0] * v[1] - u[1] * v[0]).sign()
    r = u[0].to_rad() * v[1].to_rad() - u[1].to_rad() * v[0].to_rad()
    return r.sign()


def dot_sign(u: Dir, v: Dir) -> int:
    du = u[0].delta or u[1].delta
    dv = v[0].delta or v[1].delta
    if du == 0 or dv == 0 or du == dv:
        return (u[0] * v[0] + u[1] * v[1]).sign()
    r = u[0].to_rad() * v[0].to_rad() + u[1].to_rad() * v[1].to_rad()
    return r.sign()


def quadrant(d: Dir) -> int:
    """Index of the direction in counterclockwise order from the +x axis."""
    sx, sy = d[0].sign(), d[1].sign()
    if sx == 0 and sy == 0:
        raise DegenerateInput("zero direction")
    if sy == 0:
        return 0 if sx > 0 else 4
    if sx == 0:
        return 2 if sy > 0 else 6
    if sx > 0:
        return 1 if sy > 0 else 7
    return 3 if sy > 0 else 5


def cyclic_cmp(u: Dir, v: Dir) -> int:
    """Three-way comparison in the cyclic order anchored at angle 0."""
    qu, qv = quadrant(u), quadrant(v)
    if qu != qv:
        return -1 if qu < qv else 1
    s = cross_sign(u, v)
    return -s


def same_direction(u: Dir, v: Dir) -> bool:
    return cross_sign(u, v) == 0 and dot_sign(u, v) > 0


def opposite_direction(u: Dir, v: Dir) -> bool:
    return cross_sign(u, v) == 0 and dot_sign(u, v) < 0


def canonical_dir(d: Dir) -> Dir:
    """Scale a direction so equal rays become structurally equal (hashable)."""
    x, y = d
    sx = x.sign()
    if sx != 0:
        inv = x.inverse() if sx > 0 else -(x.inverse())
        return (QuadNum.of(1 if sx > 0 else -1), y * inv)
    sy = y.sign()
    if sy == 0:
        raise DegenerateInput("zero direction")
    return (QuadNum.of(0), QuadNum.of(1 if sy > 0 else -1))


def dir_in_ccw_arc(v: Dir, s: Dir, e: Dir) -> bool:
    """True iff direction v lies on the closed arc running CCW from s to e.

    Handles arcs of any measure in (0, 2*pi); s == e is rejected."""
    if same_direction(s, e):
        raise DegenerateInput("empty arc")
    cse = cross_sign(s, e)
    if cse > 0:  # arc shorter than pi
        return cross_sign(s, v) >= 0 and cross_sign(v, e) >= 0
    if cse < 0:  # arc longer than pi: complement of the open CCW arc e -> s
        return not (cross_sign(e, v) > 0 and cross_sign(v, s) > 0)
    # antipodal endpoints: exactly half the circle
    return cross_sign(s, v) >= 0 or same_direction(v, e)


def _short_arc_member(m: Dir, u: Dir, v: Dir) -> bool:
    """Membership of m in the closed shorter arc between non-antipodal u, v."""
    if cross_sign(u, v) < 0:
        u, v = v, u
    return cross_sign(u, m) >= 0 and cross_sign(m, v) >= 0


def arcs_overlap(c: Circle, pair1, pair2) -> bool:
    """Do the shorter arcs of c spanned by two point pairs intersect?

    Arcs are closed, so arcs sharing only an endpoint count as overlapping.
    An antipodal pair has no shorter arc; there the rule is that the other
    pair's points must sit in opposite half-circles (boundary cases count as
    overlapping), and two antipodal pairs always overlap.
    """
    p1, q1 = (QuadPoint.of(p) for p in pair1)
    p2, q2 = (QuadPoint.of(p) for p in pair2)
    for p in (p1, q1, p2, q2):
        if not point_on_circle(p, c):
            raise DegenerateInput("arc endpoint not on the circle")
    if p1 == q1 or p2 == q2:
        raise DegenerateInput("coincident points in a pair")
    d1, e1 = centered(p1, c), centered(q1, c)
    d2, e2 = centered(p2, c), centered(q2, c)
    anti1 = opposite_direction(d1, e1)
    anti2 = opposite_direction(d2, e2)
    if anti1 and anti2:
        return True
    if anti1 or anti2:
        axis, (u, v) = (d1, (d2, e2)) if anti1 else (d2, (d1, e1))
        su, sv = cross_sign(axis, u), cross_sign(axis, v)
        if su == 0 or sv == 0:
            # a point of the other pair coincides with a diameter endpoint
            return True
        return su != sv
    return (_short_arc_member(d2, d1, e1) or _short_arc_member(e2, d1, e1)
            or _short_arc_member(d1, d2, e2) or _short_arc_member(e1, d2, e2))


@dataclass(frozen=True)
class Arc:
    """An arc of a circle between two of its points.

    selector "shorter" picks the arc of measure < pi and is valid only for
    non-antipodal endpoints; "half" designates the CCW half from the first
    endpoint for the antipodal case.
    """

    circle: Circle
    endpoints: tuple[QuadPoint, QuadPoint]
    selector: str = "shorter"

    def __post_init__(self):
        p, q = self.endpoints
        if not (point_on_circle(p, self.circle) and point_on_circle(q, self.circle)):
            raise DegenerateInput("arc endpoints must lie on the circle")
        if p == q:
            raise DegenerateInput("arc endpoints must be distinct")
        anti = opposite_direction(centered(p, self.circle), centered(q, self.circle))
        if self.selector == "shorter":
            if anti:
                raise DegenerateInput("antipodal endpoints have no shorter arc")
        elif self.selector == "half":
            if not anti:
                raise DegenerateInput("half selector requires antipodal endpoints")
        else:
            raise DegenerateInput(f"unknown selector {self.selector!r}")


def circular_order_consistent(c: Circle, points) -> bool:
    """Check transitivity of the exact cyclic order over a point sample."""
    dirs = [centered(QuadPoint.of(p), c) for p in points]
    for u, v, w in combinations(dirs, 3):
        a, b, d = cyclic_cmp(u, v), cyclic_cmp(v, w), cyclic_cmp(u, w)
        if a < 0 and b < 0 and d >= 0:
            return False
        if a > 0 and b > 0 and d <= 0:
            return False
    return True

"""Lifting circles to points and point pairs to lines in R^3, with exact audits.

A circle with center (x, y) and squared radius r2 lifts to the spatial point
(x, y, r2 - x^2 - y^2); a planar point p becomes the plane
z = -2*p.x*x - 2*p.y*y + (p.x^2 + p.y^2), and a lens base pair becomes the
intersection line of its two planes.  Containment transports exactly: p lies
on a circle iff the lifted circle lies on p's plane.

The audits check, with exact arithmetic, that no circle participating in
three lenses of a certified non-overlapping family has coplanar lens lines,
and that any plane spanned by a coplanar pair of family lines carries at most
two participation incidences per lifted circle it contains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateInput
from .families import LensFamily
from .pencils import Scene
from .quadfield import QuadNum, QuadPoint, frac
from .radicals import Rad


@dataclass(frozen=True)
class DualPoint:
    x: Fraction
    y: Fraction
    z: Fraction


@dataclass(frozen=True)
class DualPlane:
    """The plane z = a*x + b*y + d (never vertical by construction)."""

    a: QuadNum
    b: QuadNum
    d: QuadNum

    def contains(self, point) -> bool:
        x, y, z = point
        lhs = self.a.to_rad() * QuadNum.of(x).to_rad() \
            + self.b.to_rad() * QuadNum.of(y).to_rad() + self.d.to_rad()
        return (lhs - QuadNum.of(z).to_rad()).is_zero


def lift_circle(c) -> DualPoint:
    return DualPoint(c.cx, c.cy, c.r2 - c.cx ** 2 - c.cy ** 2)


def dual_plane(p) -> DualPlane:
    p = QuadPoint.of(p)
    return DualPlane(a=-2 * p.x, b=-2 * p.y, d=p.x * p.x + p.y * p.y)


Vec3 = tuple[QuadNum, QuadNum, QuadNum]


@dataclass(frozen=True)
class DualLine:
    """Line in R^3, canonicalized so equal lines compare bit-equal.

    The direction is scaled to make its first nonzero component 1, and the
    anchor is slid along the line to zero out that same component.
    """

    anchor: Vec3
    direction: Vec3

    @classmethod
    def of(cls, anchor, direction) -> "DualLine":
        anchor = tuple(QuadNum.of(v) for v in anchor)
        direction = tuple(QuadNum.of(v) for v in direction)
        pivot = next((i for i in range(3) if direction[i].sign() != 0), None)
        if pivot is None:
            raise DegenerateInput("line direction must be nonzero")
        inv = direction[pivot].inverse()
        direction = tuple(v * inv for v in direction)
        t = anchor[pivot]
        anchor = tuple(anchor[i] - t * direction[i] for i in range(3))
        return cls(anchor=anchor, direction=direction)

    def contains(self, point) -> bool:
        point = tuple(QuadNum.of(v) for v in point)
        w = [point[i].to_rad() - self.anchor[i].to_rad() for i in range(3)]
        d = [v.to_rad() for v in self.direction]
        return ((w[1] * d[2] - w[2] * d[1]).is_zero
                and (w[2] * d[0] - w[0] * d[2]).is_zero
                and (w[0] * d[1] - w[1] * d[0]).is_zero)


def lens_line(p, q) -> DualLine:
    """The intersection line of the dual planes of p and q."""
    p, q = QuadPoint.of(p), QuadPoint.of(q)
    if p == q:
        raise DegenerateInput("lens base points must be distinct")
    # planes z = a_i x + b_i y + d_i; their xy-shadow is A x + B y + C = 0
    a1, b1, d1 = -2 * p.x, -2 * p.y, p.x * p.x + p.y * p.y
    big_a = 2 * (q.x - p.x)
    big_b = 2 * (q.y - p.y)
    big_c = (p.x * p.x + p.y * p.y) - (q.x * q.x + q.y * q.y)
    dx, dy = -big_b, big_a
    dz = a1 * dx + b1 * dy
    if big_a.sign() != 0:
        x0, y0 = -big_c / big_a, QuadNum.of(0)
    else:
        x0, y0 = QuadNum.of(0), -big_c / big_b
    z0 = a1 * x0 + b1 * y0 + d1
    return DualLine.of((x0, y0, z0), (dx, dy, dz))


# -- exact audits -------------------------------------------------------------

def _rad_vec(v) -> list[Rad]:
    return [QuadNum.of(x).to_rad() for x in v]


def _cross3(u: list[Rad], v: list[Rad]) -> list[Rad]:
    return [u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]]


def _dot3(u: list[Rad], v: list[Rad]) -> Rad:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _sub3(u: list[Rad], v: list[Rad]) -> list[Rad]:
    return [a - b for a, b in zip(u, v)]


def _pair_plane(l1: DualLine, l2: DualLine):
    """Common plane of two coplanar lines as (normal, offset), or None."""
    d1, d2 = _rad_vec(l1.direction), _rad_vec(l2.direction)
    a1, a2 = _rad_vec(l1.anchor), _rad_vec(l2.anchor)
    w = _sub3(a2, a1)
    if not _dot3(_cross3(d1, d2), w).is_zero:
        return None  # skew lines
    normal = _cross3(d1, d2)
    if all(c.is_zero for c in normal):
        # parallel lines: span with the anchor offset instead
        normal = _cross3(d1, w)
        if all(c.is_zero for c in normal):
            return None  # identical lines do not span a plane
    return normal, _dot3(normal, a1)


def _plane_contains_line(plane, line: DualLine) -> bool:
    normal, offset = plane
    d = _rad_vec(line.direction)
    a = _rad_vec(line.anchor)
    return _dot3(normal, d).is_zero and (_dot3(normal, a) - offset).is_zero


def _plane_contains_point(plane, point) -> bool:
    normal, offset = plane
    return (_dot3(normal, _rad_vec(point)) - offset).is_zero


def lines_coplanar(l1: DualLine, l2: DualLine, l3: DualLine) -> bool:
    """Exact test that three lines lie in one common plane."""
    for a, b in ((l1, l2), (l1, l3), (l2, l3)):
        d1, d2 = _rad_vec(a.direction), _rad_vec(b.direction)
        w = _sub3(_rad_vec(b.anchor), _rad_vec(a.anchor))
        if not _dot3(_cross3(d1, d2), w).is_zero:
            return False
    for a, b, c in ((l1, l2, l3), (l1, l3, l2), (l2, l3, l1)):
        plane = _pair_plane(a, b)
        if plane is not None:
            return _plane_contains_line(plane, c)
    # all three pairwise identical-or-parallel without a spanning pair:
    # distinct parallel lines are coplanar pairwise but a common plane needs
    # the third to sit in the plane of the first two; handled above whenever
    # any pair spans one.  Remaining case: all identical.
    return True


@dataclass
class AuditReport:
    coplanar_triples: list = field(default_factory=list)
    plane_violations: list = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.coplanar_triples and not self.plane_violations


def coplanarity_audit(scene: Scene, family: LensFamily) -> AuditReport:
    """Audit a certified family against the no-three-coplanar-lines property
    and the per-plane incidence cap."""
    if not family.certificate:
        raise DegenerateInput("audit requires a certified family")
    report = AuditReport()
    lines = {lens: lens_line(*lens.base) for lens in family.members}

    by_circle: dict[int, list] = {}
    for lens in family.members:
        for cid in lens.circles:
            by_circle.setdefault(cid, []).append(lens)

    from itertools import combinations
    for cid, lenses in sorted(by_circle.items()):
        if len(lenses) < 3:
            continue
        for trio in combinations(lenses, 3):
            if lines_coplanar(*(lines[t] for t in trio)):
                report.coplanar_triples.append((cid, trio))

    lifted = {cid: lift_circle(c) for cid, c in enumerate(scene.circles)}
    members = list(family.members)
    for i, li in enumerate(members):
        for lj in members[i + 1:]:
            plane = _pair_plane(lines[li], lines[lj])
            if plane is None:
                continue
            in_plane_circles = [cid for cid, pt in lifted.items()
                                if _plane_contains_point(plane, (pt.x, pt.y, pt.z))]
            in_plane_lenses = [lens for lens in members
                               if _plane_contains_line(plane, lines[lens])]
            incidences = sum(1 for lens in in_plane_lenses
                             for cid in lens.circles if cid in set(in_plane_circles))
            if incidences > 2 * len(in_plane_circles):
                report.plane_violations.append(
                    ((li, lj), incidences, len(in_plane_circles)))
    return report

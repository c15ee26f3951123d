"""Point-circle incidence experiments and the consecutive-point multigraph.

The graph has the marked points as vertices; each circle through at least two
of them contributes one cyclic run of consecutive-point edges, drawn along
its arcs.  Edges that belong to k-rich non-overlapping lenses (selected
greedily) are split off as G1; crossings are counted in the concrete drawing,
between arc edges of distinct circles, away from graph vertices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations

from .errors import InvalidRichness
from .families import select_family
from .geometry import (centered, cross_sign, cyclic_cmp, dir_in_ccw_arc,
                       intersection_points, opposite_direction, power_of_point,
                       same_direction)
from .pencils import Scene, enumerate_lenses, rich_lenses
from .quadfield import QuadNum, QuadPoint, frac


def count_incidences(points, scene: Scene) -> int:
    """Exact number of (point, circle) containments, by direct double loop."""
    return sum(1 for p in points for c in scene.circles
               if power_of_point(p, c) == 0)


@dataclass(frozen=True)
class GraphEdge:
    circle_id: int
    u: int
    v: int
    start: tuple
    end: tuple


@dataclass(frozen=True)
class SzekelyStats:
    m: int
    n: int
    incidences: int
    edges: int
    g0: int
    g1: int
    max_multiplicity: int
    crossings: int


def _circle_edges(scene: Scene, points) -> list[GraphEdge]:
    edges = []
    for cid, c in enumerate(scene.circles):
        on = [i for i, p in enumerate(points) if power_of_point(p, c) == 0]
        if len(on) < 2:
            continue
        dirs = {i: (QuadNum.of(points[i][0] - c.cx), QuadNum.of(points[i][1] - c.cy))
                for i in on}
        on.sort(key=cmp_to_key(lambda a, b: cyclic_cmp(dirs[a], dirs[b])))
        if len(on) == 2:
            u, v = on
            edges.append(GraphEdge(cid, u, v, dirs[u], dirs[v]))
            edges.append(GraphEdge(cid, u, v, dirs[v], dirs[u]))
        else:
            for i in range(len(on)):
                u, v = on[i], on[(i + 1) % len(on)]
                edges.append(GraphEdge(cid, u, v, dirs[u], dirs[v]))
    return edges


def _is_lens_edge(edge: GraphEdge, lens, scene: Scene, points) -> bool:
    """Does this edge realize the lens's arc on its circle?"""
    if edge.circle_id not in lens.circles:
        return False
    base_pts = {QuadPoint.of(points[edge.u]), QuadPoint.of(points[edge.v])}
    if base_pts != set(lens.base):
        return False
    c = scene.circles[edge.circle_id]
    dp = centered(lens.base[0], c)
    dq = centered(lens.base[1], c)
    if opposite_direction(dp, dq):
        # designated half: CCW from the canonically-first base point
        return same_direction(edge.start, dp) and same_direction(edge.end, dq)
    a, b = (dp, dq) if cross_sign(dp, dq) > 0 else (dq, dp)
    return same_direction(edge.start, a) and same_direction(edge.end, b)


def szekely_stats(points, scene: Scene, k: int) -> SzekelyStats:
    """Build the consecutive-point multigraph and its drawing statistics."""
    if k < 2:
        raise InvalidRichness("richness k must be at least 2")
    points = [(frac(x), frac(y)) for x, y in points]
    edges = _circle_edges(scene, points)
    incidences = count_incidences(points, scene)

    point_set = {QuadPoint.of(p) for p in points}
    lens_pool = [lens for lens in rich_lenses(enumerate_lenses(scene), k)
                 if lens.base[0] in point_set and lens.base[1] in point_set]
    family = select_family(lens_pool, scene, mode="greedy")
    g1 = sum(1 for e in edges
             if any(_is_lens_edge(e, lens, scene, points)
                    for lens in family.members))

    multiplicity = Counter(frozenset((e.u, e.v)) for e in edges)
    max_mult = max(multiplicity.values(), default=0)

    by_circle: dict[int, list[GraphEdge]] = {}
    for e in edges:
        by_circle.setdefault(e.circle_id, []).append(e)
    crossings = 0
    for i, j in combinations(sorted(by_circle), 2):
        pts = intersection_points(scene.circles[i], scene.circles[j])
        if len(pts) != 2:
            continue  # disjoint or tangent: no transversal crossing
        for pt in pts:
            if pt in point_set:
                continue  # meets at a graph vertex
            di = centered(pt, scene.circles[i])
            dj = centered(pt, scene.circles[j])
            on_i = any(dir_in_ccw_arc(di, e.start, e.end) for e in by_circle[i])
            on_j = any(dir_in_ccw_arc(dj, e.start, e.end) for e in by_circle[j])
            if on_i and on_j:
                crossings += 1

    return SzekelyStats(m=len(points), n=len(scene), incidences=incidences,
                        edges=len(edges), g0=len(edges) - g1, g1=g1,
                        max_multiplicity=max_mult, crossings=crossings)


def lens_circle_incidences(family, scene: Scene) -> int:
    """Participation incidences between a family and the scene's circles."""
    return sum(lens.degree for lens in family.members)

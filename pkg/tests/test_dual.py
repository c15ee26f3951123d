import random
from fractions import Fraction as F

import pytest

from circlelens.dual import (DualLine, coplanarity_audit, dual_plane,
                             lens_line, lift_circle, lines_coplanar)
from circlelens.errors import DegenerateInput
from circlelens.families import LensFamily, select_family
from circlelens.geometry import Circle, power_of_point
from circlelens.pencils import Scene, enumerate_lenses, rich_lenses
from circlelens.quadfield import QuadNum


def test_lift_circle():
    c = Circle(F(1), F(2), F(9))
    assert lift_circle(c) == type(lift_circle(c))(F(1), F(2), F(4))


def test_containment_transports():
    rng = random.Random(42)
    for _ in range(300):
        cx, cy = F(rng.randint(-9, 9), 3), F(rng.randint(-9, 9), 3)
        px, py = F(rng.randint(-9, 9), 3), F(rng.randint(-9, 9), 3)
        d2 = (px - cx) ** 2 + (py - cy) ** 2
        # choose r2 to put p exactly on the circle half the time
        on = rng.random() < 0.5 and d2 > 0
        r2 = d2 if on else d2 + F(rng.randint(1, 5))
        if r2 == 0:
            continue
        c = Circle(cx, cy, r2)
        star = lift_circle(c)
        plane = dual_plane((px, py))
        assert (power_of_point((px, py), c) == 0) == \
            plane.contains((star.x, star.y, star.z))


def test_dual_line_canonical():
    l1 = DualLine.of((F(0), F(0), F(1)), (F(2), F(0), F(0)))
    l2 = DualLine.of((F(5), F(0), F(1)), (F(-1), F(0), F(0)))
    assert l1 == l2
    with pytest.raises(DegenerateInput):
        DualLine.of((F(0), F(0), F(0)), (F(0), F(0), F(0)))


def test_lens_line_worked_pencil(worked_pencil):
    (lens,) = enumerate_lenses(worked_pencil)
    line = lens_line(*lens.base)
    expected = DualLine.of((F(0), F(0), F(1)), (F(1), F(0), F(0)))
    assert line == expected
    for c in worked_pencil.circles:
        pt = lift_circle(c)
        assert line.contains((pt.x, pt.y, pt.z))


def test_lens_line_contains_lifts_on_corpus(corpus):
    for name, scene in corpus:
        for lens in enumerate_lenses(scene):
            line = lens_line(*lens.base)
            for cid in lens.circles:
                pt = lift_circle(scene.circles[cid])
                assert line.contains((pt.x, pt.y, pt.z)), (name, cid)


def test_lens_line_rejects_equal_points():
    with pytest.raises(DegenerateInput):
        lens_line((F(1), F(1)), (F(1), F(1)))


def test_lens_line_irrational_base():
    # base points of the lens of x^2+y^2=2 and (x-2)^2+y^2=2: (1, +-1)
    c1 = Circle(F(0), F(0), F(2))
    c2 = Circle(F(2), F(0), F(2))
    scene = Scene(circles=(c1, c2))
    (lens,) = enumerate_lenses(scene)
    line = lens_line(*lens.base)
    for c in (c1, c2):
        pt = lift_circle(c)
        assert line.contains((pt.x, pt.y, pt.z))


def test_lines_coplanar_cases():
    # two lines in the z = 0 plane plus one out of plane
    a = DualLine.of((F(0), F(0), F(0)), (F(1), F(0), F(0)))
    b = DualLine.of((F(0), F(1), F(0)), (F(1), F(1), F(0)))
    c = DualLine.of((F(0), F(2), F(0)), (F(1), F(0), F(0)))
    d = DualLine.of((F(0), F(0), F(1)), (F(1), F(0), F(1)))
    assert lines_coplanar(a, b, c)
    assert not lines_coplanar(a, b, d)
    # concurrent but non-coplanar at the origin
    x = DualLine.of((F(0), F(0), F(0)), (F(1), F(0), F(0)))
    y = DualLine.of((F(0), F(0), F(0)), (F(0), F(1), F(0)))
    z = DualLine.of((F(0), F(0), F(0)), (F(0), F(0), F(1)))
    assert not lines_coplanar(x, y, z)
    # all identical
    assert lines_coplanar(a, a, a)


def _concurrent_chord_scene():
    """Unit circle with three partner circles whose radical axes are chords
    concurrent at (1/5, 0)."""
    return Scene(circles=(Circle(F(0), F(0), F(1)),
                          Circle(F(0), F(1), F(2)),
                          Circle(F(-1), F(0), F(12, 5)),
                          Circle(F(-1, 2), F(1, 2), F(17, 10))))


def test_concurrent_chords_have_coplanar_lens_lines():
    scene = _concurrent_chord_scene()
    trio = [l for l in enumerate_lenses(scene) if 0 in l.circles]
    assert len(trio) == 3
    assert lines_coplanar(*(lens_line(*l.base) for l in trio))


def test_audit_flags_concurrent_configuration():
    scene = _concurrent_chord_scene()
    trio = tuple(l for l in enumerate_lenses(scene) if 0 in l.circles)
    forged = LensFamily(members=trio, certificate=True,
                        total_degree=sum(l.degree for l in trio))
    report = coplanarity_audit(scene, forged)
    assert not report.clean
    assert len(report.coplanar_triples) == 1
    assert report.coplanar_triples[0][0] == 0  # the shared circle


def test_audit_requires_certificate():
    scene = _concurrent_chord_scene()
    trio = tuple(l for l in enumerate_lenses(scene) if 0 in l.circles)
    uncertified = LensFamily(members=trio, certificate=False, total_degree=0)
    with pytest.raises(DegenerateInput):
        coplanarity_audit(scene, uncertified)


def test_honest_selection_avoids_the_violation():
    scene = _concurrent_chord_scene()
    lenses = rich_lenses(enumerate_lenses(scene), 2)
    family = select_family(lenses, scene, mode="exact")
    assert family.certificate
    report = coplanarity_audit(scene, family)
    assert report.clean


def test_audit_clean_on_corpus_families(corpus):
    for name, scene in corpus[:25]:
        lenses = rich_lenses(enumerate_lenses(scene), 2)
        family = select_family(lenses, scene, mode="greedy")
        report = coplanarity_audit(scene, family)
        assert report.clean, name

from fractions import Fraction as F

import pytest

from circlelens.errors import CapExceeded, InvalidRichness
from circlelens.families import (CircleArc, lens_cutting, lenses_overlap,
                                 select_family, verify_cut)
from circlelens.generators import (GeneratorSpec, pencil_bundle_construction,
                                   random_scene)
from circlelens.geometry import Circle
from circlelens.pencils import Scene, enumerate_lenses, rich_lenses


def _lenses(scene):
    return enumerate_lenses(scene)


def test_same_base_lenses_overlap(worked_pencil):
    (lens,) = _lenses(worked_pencil)
    assert lenses_overlap(lens, lens, worked_pencil)


def test_disjoint_pencils_do_not_overlap():
    circles = (Circle(F(0), F(0), F(1)), Circle(F(1), F(0), F(2)),
               Circle(F(10), F(0), F(1)), Circle(F(11), F(0), F(2)))
    scene = Scene(circles=circles)
    l1, l2 = _lenses(scene)
    assert not lenses_overlap(l1, l2, scene)
    assert not lenses_overlap(l2, l1, scene)


def test_shared_circle_overlapping_arcs():
    # two lenses on the unit circle with interleaved chords must overlap
    circles = (Circle(F(0), F(0), F(25)),  # radius 5
               Circle(F(6), F(0), F(25)),  # chord x = 3
               Circle(F(4), F(0), F(5)))   # chord x = 4 -> inside [3,5] arc
    scene = Scene(circles=circles)
    lenses = _lenses(scene)
    shared = [ (a, b) for i, a in enumerate(lenses) for b in lenses[i+1:]
               if set(a.circles) & set(b.circles) ]
    assert shared
    l1, l2 = next((a, b) for a, b in shared
                  if 0 in set(a.circles) & set(b.circles))
    assert lenses_overlap(l1, l2, scene) == lenses_overlap(l2, l1, scene)


def test_overlap_symmetry_on_corpus(corpus):
    for name, scene in corpus[:12]:
        lenses = _lenses(scene)
        for i, a in enumerate(lenses):
            for b in lenses[i + 1:]:
                assert lenses_overlap(a, b, scene) == \
                    lenses_overlap(b, a, scene), name


def test_greedy_family_certified(corpus):
    for name, scene in corpus:
        lenses = rich_lenses(_lenses(scene), 2)
        family = select_family(lenses, scene, mode="greedy")
        assert family.certificate, name
        assert family.total_degree == sum(m.degree for m in family.members)
        for a, b in zip(family.members, family.members[1:]):
            assert a.compare(b) < 0, name  # canonical member order
        for m in family.members:
            assert m in lenses


def test_exact_at_least_greedy(corpus):
    for name, scene in corpus:
        lenses = rich_lenses(_lenses(scene), 2)
        if len(lenses) > 30:
            continue
        greedy = select_family(lenses, scene, mode="greedy")
        exact = select_family(lenses, scene, mode="exact")
        assert exact.certificate, name
        assert len(exact) >= len(greedy), name


def test_exact_cap_and_bad_mode(worked_pencil):
    lenses = _lenses(worked_pencil)
    with pytest.raises(CapExceeded):
        select_family(lenses, worked_pencil, mode="exact", exact_cap=0)
    with pytest.raises(ValueError):
        select_family(lenses, worked_pencil, mode="best")


def test_exact_on_interval_overlap_chain():
    # three chords of one big circle: outer two disjoint, middle overlaps both
    circles = (Circle(F(0), F(0), F(100)),     # radius 10
               Circle(F(12), F(5), F(61)),     # through (6, +-8)
               Circle(F(12), F(-5), F(61)),    # through (8, +-6)... see below
               Circle(F(16), F(0), F(136)))
    scene = Scene(circles=circles)
    lenses = [l for l in _lenses(scene) if 0 in l.circles]
    if len(lenses) >= 2:
        fam = select_family(lenses, scene, mode="exact")
        assert fam.certificate


def test_bundle_family_is_all_pencils():
    scene, desc = pencil_bundle_construction(20, 4)
    lenses = rich_lenses(_lenses(scene), 4)
    for mode in ("greedy", "exact"):
        fam = select_family(lenses, scene, mode=mode)
        assert len(fam) == desc.pencil_count
        assert fam.total_degree == 20
        assert fam.certificate


# -- cutting ------------------------------------------------------------------

def test_cutting_invalid_richness(worked_pencil):
    with pytest.raises(InvalidRichness):
        lens_cutting(worked_pencil, 1)


def test_cutting_pencil_scene(worked_pencil):
    result = lens_cutting(worked_pencil, 2)
    assert result.k == 2
    assert result.cut_count > 0
    assert verify_cut(worked_pencil, result)
    # every circle id appears among the arcs
    assert {arc.circle_id for arc in result.arcs} == {0, 1, 2}


def test_cutting_no_rich_lenses_cuts_nothing():
    circles = (Circle(F(0), F(0), F(1)), Circle(F(10), F(0), F(1)))
    scene = Scene(circles=circles)
    result = lens_cutting(scene, 2)
    assert result.cut_count == 0
    assert all(arc.is_full for arc in result.arcs)
    assert verify_cut(scene, result)


def test_cutting_corpus_postcondition(corpus):
    for name, scene in corpus[:20]:
        for k in (2, 3):
            result = lens_cutting(scene, k)
            assert verify_cut(scene, result), (name, k)
            assert len(result.arcs) >= len(scene)


def test_verify_cut_rejects_uncut():
    scene, _ = pencil_bundle_construction(12, 3)
    uncut = lens_cutting(scene, 3)
    assert verify_cut(scene, uncut)
    # replacing all arcs by full circles must fail verification
    from circlelens.families import CutResult
    fake = CutResult(arcs=tuple(CircleArc(cid, None, None)
                                for cid in range(len(scene))),
                     cut_count=0, k=3)
    assert not verify_cut(scene, fake)

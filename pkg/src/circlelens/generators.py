"""Deterministic scene generators: extremal pencil bundles and seeded models."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import InvalidInput
from .geometry import Circle
from .pencils import Scene
from .quadfield import frac

MODELS = ("bundle", "uniform-random", "unit-circles-on-grid")


@dataclass(frozen=True)
class GeneratorSpec:
    model: str
    n: int
    k: int = 0
    seed: int = 0
    spread: Fraction = Fraction(10)

    def __post_init__(self):
        if self.model not in MODELS:
            raise InvalidInput(f"unknown model {self.model!r}")
        if self.n < 1:
            raise InvalidInput("n must be positive")
        if self.model == "bundle" and (self.k < 2 or self.n % self.k):
            raise InvalidInput("bundle model requires k >= 2 and k | n")
        object.__setattr__(self, "spread", frac(self.spread))


@dataclass(frozen=True)
class BundleDescriptor:
    """What the extremal construction promises: n/k pencils of degree k."""

    pencil_count: int
    degree: int
    bases: tuple[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]], ...]


def pencil_bundle_construction(n: int, k: int) -> tuple[Scene, BundleDescriptor]:
    """Union of n/k pencils of k circles each, every pencil through a common
    point pair.  Pencil i has base points (4ki, +-1) and circles centered at
    (4ki + a, 0) with squared radius a^2 + 1 for a = 0..k-1.  The 4k spacing
    exceeds twice the largest radius, so circles from distinct pencils are
    disjoint and the only lenses are the n/k pencil lenses of degree k."""
    if k < 2 or n < k or n % k:
        raise InvalidInput("bundle construction requires k >= 2 and k | n")
    circles = []
    bases = []
    for i in range(n // k):
        x0 = Fraction(4 * k * i)
        bases.append(((x0, Fraction(1)), (x0, Fraction(-1))))
        for a in range(k):
            circles.append(Circle(x0 + a, Fraction(0), Fraction(a * a + 1)))
    scene = Scene(circles=tuple(circles))
    return scene, BundleDescriptor(pencil_count=n // k, degree=k,
                                   bases=tuple(bases))


def _seeded_fraction(rng: random.Random, max_den: int = 8) -> Fraction:
    den = rng.randint(1, max_den)
    num = rng.randint(-den, den)
    return Fraction(num, den * 4)


def random_scene(spec: GeneratorSpec) -> Scene:
    """Deterministic scene for a generator spec; rational coordinates only."""
    if spec.model == "bundle":
        scene, _ = pencil_bundle_construction(spec.n, spec.k)
        return scene
    if spec.model == "unit-circles-on-grid":
        side = max(1, isqrt(spec.n - 1) + 1)
        circles = []
        for idx in range(spec.n):
            i, j = divmod(idx, side)
            circles.append(Circle(Fraction(j), Fraction(i), Fraction(1)))
        return Scene(circles=tuple(circles))
    # uniform-random: integer lattice scaled by spread, plus a bounded-
    # denominator rational perturbation so predicates stay exact
    rng = random.Random(spec.seed)
    span = max(1, int(spec.spread))
    circles: list[Circle] = []
    seen = set()
    while len(circles) < spec.n:
        cx = Fraction(rng.randint(-span, span)) + _seeded_fraction(rng)
        cy = Fraction(rng.randint(-span, span)) + _seeded_fraction(rng)
        r2 = Fraction(rng.randint(1, 2 * span)) + abs(_seeded_fraction(rng))
        c = Circle(cx, cy, r2)
        if c not in seen:
            seen.add(c)
            circles.append(c)
    return Scene(circles=tuple(circles))

"""Hurwitz-Radon maximal orthonormal tangent vector fields on spheres.

sigma(N) = 2^p + 8q - 1 for N = (2k+1) 2^p 16^q with 0 <= p <= 3; the
fields on S^{N-1} are x -> J x for sigma anticommuting skew complex
structures J, delivered as matrices (block-diagonal copies of the
representation attached to the Clifford system of size sigma(N) + 1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .clifford import build, to_representation
from .exactmat import SignedPermMatrix, block_diag


class HurwitzRadon(NamedTuple):
    sigma: int
    p: int
    q: int
    k: int


def hurwitz_radon(n: int) -> HurwitzRadon:
    """Factor n = (2k+1) 2^p 16^q (0 <= p <= 3) and report sigma = 2^p+8q-1.

    Odd n degenerates to sigma = 0; it is reported, not an error.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    v = 0
    odd = n
    while odd % 2 == 0:
        odd //= 2
        v += 1
    p, q = v % 4, v // 4
    return HurwitzRadon(2**p + 8 * q - 1, p, q, (odd - 1) // 2)


@dataclass(frozen=True)
class VectorFieldSystem:
    n: int
    sigma: int
    structures: tuple[SignedPermMatrix, ...]

    def validate(self) -> None:
        js = self.structures
        if len(js) != self.sigma:
            raise ValueError("field count mismatch")
        for i, j in enumerate(js):
            if j.n != self.n:
                raise ValueError("ambient mismatch")
            if not (j.is_skew() and j.is_complex_structure()):
                raise ValueError(f"J_{i + 1} is not a skew complex structure")
        for i in range(len(js)):
            for jj in range(i + 1, len(js)):
                if not js[i].anticommutes(js[jj]):
                    raise ValueError(f"J_{i + 1}, J_{jj + 1} do not anticommute")


def max_vector_fields(n: int) -> VectorFieldSystem:
    """sigma(n) orthonormal tangent fields on S^{n-1}, as matrices."""
    if n < 2 or n % 2 == 1:
        raise ValueError("need even n >= 2")
    sigma, p, q, k = hurwitz_radon(n)
    n0 = 2**p * 16**q
    if n0 > 128:
        raise ValueError(f"power-of-two part {n0} exceeds the implemented range (128)")
    rep = to_representation(build(sigma + 1))
    if rep.delta != n0:
        raise AssertionError("delta(sigma+1) != n0; table alignment broken")
    copies = 2 * k + 1
    structures = tuple(block_diag([e] * copies) for e in rep.matrices)
    return VectorFieldSystem(n, sigma, structures)


def verify_pointwise(system: VectorFieldSystem, points: Sequence[Sequence]) -> bool:
    """Exact check that {J_a x} is orthonormal and tangent at each unit x."""
    for x in points:
        x = [Fraction(c) for c in x]
        if len(x) != system.n:
            raise ValueError("point dimension mismatch")
        if sum(c * c for c in x) != 1:
            raise ValueError("point is not a unit vector")
        images = [j.apply_vector(x) for j in system.structures]
        for a, ja in enumerate(images):
            if _dot(ja, x) != 0:
                return False
            for b in range(a, len(images)):
                expected = 1 if a == b else 0
                if _dot(ja, images[b]) != expected:
                    return False
    return True


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def random_unit_points(n: int, count: int, seed: int = 0) -> list[tuple[Fraction, ...]]:
    """Exact rational points on S^{n-1} via inverse stereographic projection."""
    rng = random.Random(seed)
    points = []
    for _ in range(count):
        t = [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) if rng.random() < 0.4 else Fraction(0)
            for _ in range(n - 1)
        ]
        norm2 = sum(c * c for c in t)
        denom = 1 + norm2
        x = tuple(2 * c / denom for c in t) + (Fraction(1 - norm2, 1) / denom,)
        points.append(x)
    return points

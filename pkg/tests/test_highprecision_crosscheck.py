"""Cross-checks against an arbitrary-precision reference (optional).

These run only when mpmath is installed (it is listed in the ``test``
extra); they pin the special-function accuracy claims on a random grid
rather than a handful of frozen literals.
"""

import math
import random

import pytest

mpmath = pytest.importorskip("mpmath")

from vacpol.specialfns import bessel_k_weighted, upper_gamma, upper_gamma_scaled

mpmath.mp.dps = 30


def test_weighted_bessel_random_grid():
    rng = random.Random(181)
    worst = 0.0
    cases = [(rng.uniform(0.0, 10.0), 10 ** rng.uniform(-6, math.log10(50))) for _ in range(300)]
    cases += [(rng.uniform(-1.0, 0.0), 10 ** rng.uniform(-6, 1.0)) for _ in range(60)]
    cases += [(0.0, 1e-6), (0.5, 50.0), (10.0, 50.0), (3.0, 2.0), (3.0, 2.0000001)]
    for nu, w in cases:
        got = bessel_k_weighted(nu, w)
        ref = float(mpmath.mpf(w) ** mpmath.mpf(nu) * mpmath.besselk(mpmath.mpf(nu), mpmath.mpf(w)))
        worst = max(worst, abs(got - ref) / abs(ref))
    assert worst < 1e-12, worst


def test_upper_gamma_random_grid():
    rng = random.Random(182)
    worst = 0.0
    for _ in range(200):
        a = rng.uniform(-9.5, 2.0)
        z = 10 ** rng.uniform(-3, 2.3)
        got = upper_gamma(a, z)
        ref = float(mpmath.gammainc(mpmath.mpf(a), mpmath.mpf(z), mpmath.inf))
        if ref == 0.0:
            continue
        worst = max(worst, abs(got - ref) / abs(ref))
    assert worst < 1e-10, worst


def test_upper_gamma_scaled_random_grid():
    rng = random.Random(183)
    worst = 0.0
    for _ in range(150):
        n = rng.randrange(0, 10)
        w = 10 ** rng.uniform(-10, 3)
        got = upper_gamma_scaled(n, w)
        ref = float(
            mpmath.exp(w) * mpmath.mpf(w) ** n * mpmath.gammainc(mpmath.mpf(-n), mpmath.mpf(w), mpmath.inf)
        )
        worst = max(worst, abs(got - ref) / abs(ref))
    assert worst < 1e-11, worst

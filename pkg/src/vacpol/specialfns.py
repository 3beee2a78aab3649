r"""Self-contained special functions for the vacuum-polarization formulas.

Everything downstream is expressed through four ingredients:

* the weighted modified Bessel function of the second kind
  ``w**nu * K_nu(w)`` (finite and nonzero at ``w = 0`` for ``nu > 0``),
* the upper incomplete Gamma function ``Gamma(a, z)`` for ``a <= 2``,
  including negative integer ``a``,
* the error function,
* harmonic numbers and the Euler-Mascheroni constant.

Accuracy targets (verified against 30-digit reference values):

==========================  =======================================  =========
function                    domain                                   rel. err
==========================  =======================================  =========
``bessel_k_weighted``       ``nu in [0, 10]``, ``w in [1e-6, 50]``   <= 1e-12
``upper_gamma``             ``a in [-20, 2]``, ``z > 0``             <= 1e-10
``upper_gamma`` (a <= -10)  deep downward recurrence, ``z <= 1``     <= 1e-8
``erf`` / ``erfc``          all finite arguments (libm)              <= 1e-14
==========================  =======================================  =========

All functions are pure and stateless; concurrent calls are safe.
"""

import math
import warnings

from .errors import ParameterError, UnderflowToZeroWarning

__all__ = [
    "EULER_GAMMA",
    "UNDERFLOW_ARG",
    "bessel_k_weighted",
    "bessel_k_weighted_scaled",
    "upper_gamma",
    "upper_gamma_scaled",
    "exp_e1",
    "erf",
    "erfc",
    "erfcx",
    "harmonic_number",
]

#: Euler-Mascheroni constant, double precision.
EULER_GAMMA = 0.5772156649015329

#: Arguments beyond this are in the exp(-w) underflow regime; weighted Bessel
#: values are flushed to zero (with a flag).  Integrand tails test against it.
UNDERFLOW_ARG = 705.0

_MAX_ORDER = 50.0

# Odd Taylor coefficients a1, a3, a5, ... of 1/Gamma(1+x); used for the
# removable singularity (Gamma(1-mu)^-1 - Gamma(1+mu)^-1)/(2 mu) at mu -> 0.
_RGAMMA_ODD = (
    0.5772156649015328606,
    -0.04200263503409523553,
    -0.04219773455554433675,
    0.007218943246663099542,
    -0.0002152416741149509728,
    -2.0134854780788238656e-05,
    1.1330272319816958824e-06,
)

erf = math.erf
erfc = math.erfc


def erfcx(x):
    """Scaled complementary error function ``exp(x**2) * erfc(x)``.

    Stable for arbitrarily large positive ``x`` (asymptotic series beyond
    ``x = 20``, where the direct product would underflow/overflow).
    """
    if x < 0.0:
        return 2.0 * math.exp(x * x) - erfcx(-x)
    if x < 20.0:
        return math.exp(x * x) * math.erfc(x)
    # erfcx(x) = 1/(x sqrt(pi)) * sum_k (-1)^k (2k-1)!!/(2 x^2)^k
    inv2x2 = 1.0 / (2.0 * x * x)
    term = 1.0
    acc = 1.0
    for k in range(1, 30):
        term *= -(2 * k - 1) * inv2x2
        acc += term
        if abs(term) < 1e-17:
            break
    return acc / (x * math.sqrt(math.pi))


def harmonic_number(ell):
    """H_ell = sum_{j=1}^{ell} 1/j, with H_0 = 0."""
    if ell < 0 or ell != int(ell):
        raise ParameterError(f"harmonic_number needs a non-negative integer, got {ell}")
    return sum(1.0 / j for j in range(1, int(ell) + 1))


# ---------------------------------------------------------------------------
# weighted Bessel K
# ---------------------------------------------------------------------------

def _gamma_pair(mu):
    # gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu))/(2 mu), gam2 = their mean.
    gampl = 1.0 / math.gamma(1.0 + mu)
    gammi = 1.0 / math.gamma(1.0 - mu)
    if abs(mu) < 0.05:
        # direct difference loses ~5 digits near mu = 0; use the series
        mu2 = mu * mu
        gam1 = 0.0
        for a in reversed(_RGAMMA_ODD):
            gam1 = gam1 * mu2 + a
        gam1 = -gam1
    else:
        gam1 = (gammi - gampl) / (2.0 * mu)
    return gam1, 0.5 * (gammi + gampl), gampl, gammi


def _temme_k_pair(mu, x):
    # K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2 and 0 < x <= 2, by the
    # uniformly convergent small-argument series (Temme's method).
    x2 = 0.5 * x
    pimu = math.pi * mu
    if abs(pimu) < 1e-4:
        p2 = pimu * pimu
        fact = 1.0 + p2 / 6.0 + 7.0 * p2 * p2 / 360.0
    else:
        fact = pimu / math.sin(pimu)
    d = -math.log(x2)
    e = mu * d
    if abs(e) < 1e-4:
        e2 = e * e
        fact2 = 1.0 + e2 / 6.0 + e2 * e2 / 120.0
    else:
        fact2 = math.sinh(e) / e
    gam1, gam2, gampl, gammi = _gamma_pair(mu)
    ff = fact * (gam1 * math.cosh(e) + gam2 * fact2 * d)
    total = ff
    e = math.exp(e)
    p = 0.5 * e / gampl
    q = 0.5 / (e * gammi)
    c = 1.0
    d2 = x2 * x2
    total1 = p
    for i in range(1, 1000):
        ff = (i * ff + p + q) / (i * i - mu * mu)
        c *= d2 / i
        p /= (i - mu)
        q /= (i + mu)
        delta = c * ff
        total += delta
        total1 += c * (p - i * ff)
        if abs(delta) < abs(total) * 1e-17:
            break
    return total, total1 * (2.0 / x)


def _steed_k_pair_scaled(mu, x):
    # e^x K_mu(x) and e^x K_{mu+1}(x) for |mu| <= 1/2 and x > 2, by Steed's
    # continued fraction (CF2) evaluated with the Thompson-Barnett scheme.
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = delh = d
    q1 = 0.0
    q2 = 1.0
    a1 = 0.25 - mu * mu
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, 10000):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < 1e-16:
            break
    h = a1 * h
    kmu = math.sqrt(math.pi / (2.0 * x)) / s
    return kmu, kmu * (mu + x + 0.5 - h) / x


def _half_integer_weighted_scaled(n, w):
    # e^w w^(n+1/2) K_{n+1/2}(w) = sqrt(pi/2) sum_j (n+j)!/(j!(n-j)!) w^(n-j)/2^j
    acc = 0.0
    cj = 1.0
    for j in range(n + 1):
        acc += cj * w ** (n - j) / 2.0**j
        cj *= (n + j + 1) * (n - j) / (j + 1.0)
    return math.sqrt(math.pi / 2.0) * acc


def _k_weighted_scaled_core(nu, w):
    # e^w w^nu K_nu(w) for nu >= 0; shared by the scaled and plain entry points
    two_nu = 2.0 * nu
    if two_nu == math.floor(two_nu) and int(two_nu) % 2 == 1:
        return _half_integer_weighted_scaled(int(two_nu) // 2, w)
    n = int(nu + 0.5)
    mu = nu - n
    if w <= 2.0:
        kmu, kmu1 = _temme_k_pair(mu, w)
        scale = math.exp(w)
        kmu *= scale
        kmu1 *= scale
    else:
        kmu, kmu1 = _steed_k_pair_scaled(mu, w)
    prev = w**mu * kmu
    if n == 0:
        return prev
    cur = w ** (mu + 1.0) * kmu1
    w2 = w * w
    for j in range(1, n):
        prev, cur = cur, 2.0 * (mu + j) * cur + w2 * prev
    return cur


def bessel_k_weighted(nu, w):
    r"""Weighted modified Bessel function ``w**nu * K_nu(w)``.

    The weighting keeps the function finite at small arguments: for
    ``nu > 0`` the value tends to ``2**(nu-1) Gamma(nu)`` as ``w -> 0``,
    while for ``nu = 0`` it grows like ``-log(w/2) - EULER_GAMMA``.

    Half-integer orders use the closed elementary form
    ``sqrt(pi/2) e^-w sum_j (n+j)!/(j!(n-j)!) w^(n-j)/2^j``.  All other
    orders are reduced to ``|mu| <= 1/2`` plus the stable upward
    recurrence ``F_{nu+1} = 2 nu F_nu + w^2 F_{nu-1}``; the seed pair
    comes from Temme's series for ``w <= 2`` and from Steed's continued
    fraction for ``w > 2``.

    Parameters
    ----------
    nu : float
        Real order, ``|nu| <= 50``.  Negative orders are mapped through
        ``K_{-nu} = K_nu``.
    w : float
        Positive argument.

    Returns
    -------
    float
        ``w**nu * K_nu(w)``.  Arguments beyond ``w ~ 705`` are in the
        ``exp(-w)`` underflow regime; the value is flushed to ``0.0`` and
        an :class:`~vacpol.errors.UnderflowToZeroWarning` is emitted.

    Raises
    ------
    ParameterError
        If ``w <= 0`` or ``|nu| > 50``.
    """
    if not w > 0.0:
        raise ParameterError(f"bessel_k_weighted requires w > 0, got w={w}")
    if abs(nu) > _MAX_ORDER:
        raise ParameterError(f"bessel_k_weighted supports |nu| <= {_MAX_ORDER}, got nu={nu}")
    if nu < 0.0:
        # K is even in the order; only the weight changes
        return bessel_k_weighted(-nu, w) * w ** (2.0 * nu)
    if w > UNDERFLOW_ARG:
        warnings.warn(
            "bessel_k_weighted argument beyond the exp(-w) underflow floor; "
            "value flushed to zero",
            UnderflowToZeroWarning,
            stacklevel=2,
        )
        return 0.0
    return _k_weighted_scaled_core(nu, w) * math.exp(-w)


def bessel_k_weighted_scaled(nu, w):
    """``exp(w) * w**nu * K_nu(w)``: the weighted function with the
    exponential decay factored out.

    Grows only algebraically (like ``w**(nu - 1/2)``) at large arguments,
    so products with extraneous exponentials can be assembled in a single
    ``exp`` call without intermediate under/overflow.  Same accuracy and
    order range as :func:`bessel_k_weighted`.
    """
    if not w > 0.0:
        raise ParameterError(f"bessel_k_weighted_scaled requires w > 0, got w={w}")
    if abs(nu) > _MAX_ORDER:
        raise ParameterError(f"bessel_k_weighted_scaled supports |nu| <= {_MAX_ORDER}, got nu={nu}")
    if nu < 0.0:
        return bessel_k_weighted_scaled(-nu, w) * w ** (2.0 * nu)
    return _k_weighted_scaled_core(nu, w)


# ---------------------------------------------------------------------------
# incomplete Gamma
# ---------------------------------------------------------------------------

def _upper_gamma_cf(a, z):
    # Continued fraction for exp(z) z^-a Gamma(a, z) (modified Lentz).
    # Reliable for z >= ~1; for negative a this is the cancellation-free
    # route, unlike the downward recurrence.
    tiny = 1e-300
    b = z + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 100000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h
    raise ParameterError(f"incomplete-Gamma continued fraction stalled at a={a}, z={z}")


def _e1_series(z):
    # E1(z) = -EULER_GAMMA - log z + sum_k (-1)^(k+1) z^k/(k k!), for z <= 1
    acc = 0.0
    term = 1.0
    for k in range(1, 200):
        term *= -z / k
        delta = -term / k
        acc += delta
        if abs(delta) < 1e-18 * max(abs(acc), 1.0):
            break
    return -EULER_GAMMA - math.log(z) + acc


def exp_e1(z):
    """``exp(z) * Gamma(0, z)``, the scaled exponential integral.

    Stable for every ``z > 0`` (no overflow at large ``z``, where the
    plain product of the two factors would).
    """
    if not z > 0.0:
        raise ParameterError(f"exp_e1 requires z > 0, got z={z}")
    if z <= 1.0:
        return math.exp(z) * _e1_series(z)
    return _upper_gamma_cf(0.0, z)


def _lower_gamma_series_reg(a, z):
    # regularized lower gamma P(a, z) by its power series; a > 0, z < a+1
    ap = a
    total = 1.0 / a
    delta = total
    for _ in range(1000):
        ap += 1.0
        delta *= z / ap
        total += delta
        if abs(delta) < abs(total) * 1e-17:
            break
    return total * math.exp(-z + a * math.log(z) - math.lgamma(a))


def upper_gamma(a, z):
    r"""Upper incomplete Gamma function ``Gamma(a, z) = int_z^inf t^(a-1) e^-t dt``.

    Parameters
    ----------
    a : float
        Exponent parameter; intended range ``[-20, 2]`` (the formulas in
        this package use ``a = 0`` and negative integers).
    z : float
        Positive lower limit.

    Notes
    -----
    Three regimes:

    * ``z > max(1, a+1)``: continued fraction, valid for any sign of ``a``;
    * small ``z``, ``a > 0``: complement of the lower-Gamma power series;
    * small ``z``, ``a <= 0``: downward recurrence
      ``Gamma(a, z) = (Gamma(a+1, z) - z^a e^-z)/a`` seeded at the
      exponential integral ``Gamma(0, z)`` (integer ``a``) or at the
      fractional seed in ``(0, 1]``.

    The recurrence is subtractive; for ``a <= -10`` with ``z <= 1`` the
    accumulated cancellation relaxes the accuracy target to ``1e-8``.
    """
    if not z > 0.0:
        raise ParameterError(f"upper_gamma requires z > 0, got z={z}")
    if z > max(1.0, a + 1.0):
        return math.exp(-z + a * math.log(z)) * _upper_gamma_cf(a, z)
    if a > 0.0:
        return math.gamma(a) * (1.0 - _lower_gamma_series_reg(a, z))
    if a == 0.0:
        return math.exp(-z) * exp_e1(z)
    n = int(math.ceil(-a))
    a0 = a + n
    g = upper_gamma(a0, z) if a0 > 0.0 else math.exp(-z) * exp_e1(z)
    ez = math.exp(-z)
    aa = a0
    for _ in range(n):
        aa -= 1.0
        g = (g - z**aa * ez) / aa
    return g


def upper_gamma_scaled(n, w):
    r"""``exp(w) * w**n * Gamma(-n, w)`` for integer ``n >= 0``, stable at both ends.

    This combination is what the massless closed forms actually need: it
    stays finite as ``w -> 0`` for ``n >= 1`` (limit ``1/n``) and never
    overflows at large ``w`` (it decays like ``1/w``).  For ``n = 0`` it
    equals :func:`exp_e1`, which diverges logarithmically at ``w = 0``.
    """
    n = int(n)
    if n < 0:
        raise ParameterError(f"upper_gamma_scaled requires n >= 0, got n={n}")
    if w < 0.0:
        raise ParameterError(f"upper_gamma_scaled requires w >= 0, got w={w}")
    if n == 0:
        return exp_e1(w)
    if w == 0.0:
        return 1.0 / n
    if w > 1.0:
        return _upper_gamma_cf(-float(n), w)
    # Gamma(-n, w) = (-1)^n/n! [E1(w) - e^-w sum_j (-1)^j j! w^(-j-1)]; after
    # scaling by e^w w^n the bracket turns into a plain polynomial in w.
    s = w**n * exp_e1(w)
    poly = 0.0
    fj = 1.0
    for j in range(n):
        poly += (-1.0) ** j * fj * w ** (n - 1 - j)
        fj *= j + 1
    return (-1.0) ** n * (s - poly) / math.gamma(n + 1)

"""Integrals against the binary digit measure mu_p.

Exact results come back as Fraction (moments, polynomial integrals,
Legendre coefficients, corollary truncations); analytic evaluation of
I_p(omega) and the brute-force oracles work in floats.
"""

from fractions import Fraction

from . import _core

__all__ = [
    "moments",
    "integrate",
    "ip",
    "fourier",
    "verify",
    "qpoly",
    "qpoly_certificate",
    "legendre_coefficients",
    "legendre_exact",
    "legendre_normalizer",
    "corollary",
    "dyadic_integrate",
    "mc_integrate",
]

_EXACT = (Fraction, int, str)


def moments(p, n):
    """Moments J_0..J_n; Fractions for exact p, floats for float p."""
    if isinstance(p, _EXACT):
        return [Fraction(v) for v in _core.moments_exact(str(Fraction(p)), n)]
    return _core.moments_float(float(p), n)


def integrate(p, coeffs, method="moments"):
    """Exact integral of sum coeffs[k] x^k; method moments, det3 or det104."""
    text = [str(Fraction(c)) for c in coeffs]
    return Fraction(_core.integrate_exact(str(Fraction(p)), text, method))


def ip(p, omega, method="product", tol=None, precision_digits=16):
    """I_p(omega) by product, taylor, reduce or logseries."""
    return _core.ip(complex(p), complex(omega), method, 0.0 if tol is None else float(tol), precision_digits)


def fourier(p, k, precision_digits=16):
    """Trigonometric coefficient I_p(2 pi i k)."""
    return _core.fourier(complex(p), int(k), precision_digits)


def verify(suite="all"):
    """Identity residual rows as dicts; see the CLI 'verify' subcommand."""
    return _core.verify_suite(suite)


def qpoly(n):
    """Integer coefficients of Q_n, ascending."""
    return [int(c) for c in _core.qpoly_coefficients(n)]


def qpoly_certificate(n):
    """(root count in [0,1], all simple) for Q_n, Sturm-certified."""
    return _core.qpoly_certificate(n)


def legendre_coefficients(n):
    """Integer coefficients of the shifted Legendre polynomial S_n."""
    return [int(c) for c in _core.legendre_coefficients(n)]


def legendre_exact(p, n):
    """Exact part of the S_n coefficient of mu_p (pair it with the normalizer)."""
    return Fraction(_core.legendre_exact(str(Fraction(p)), n))


def legendre_normalizer(n):
    """1 / sqrt(2n + 1)."""
    return _core.legendre_normalizer(n)


def corollary(which, p, omega, alpha=None, terms=32):
    """Truncated exp/log/pow integral at exact arguments."""
    if which == "pow" and alpha is None:
        raise ValueError("alpha is required for the pow integral")
    a = "0" if alpha is None else str(Fraction(alpha))
    return Fraction(_core.corollary_exact(which, str(Fraction(p)), str(Fraction(omega)), a, terms))


def dyadic_integrate(f, p, depth, omega=1.0, alpha=0.5):
    """(value, error_bound, bound_estimated) by depth-d cylinder quadrature."""
    return _core.dyadic_integrate(f, float(p), depth, omega, alpha)


def mc_integrate(f, p, samples, seed=1, digits=53, omega=1.0, alpha=0.5):
    """(mean, standard error) over seeded digit draws."""
    return _core.mc_integrate(f, float(p), samples, seed, digits, omega, alpha)

"""Thin wrapper around adaptive Gauss-Kronrod quadrature with error policing."""

from __future__ import annotations

import scipy.integrate as integrate

from .errors import AccuracyError

__all__ = ["quad_real", "quad_complex", "DEFAULT_EPSABS", "DEFAULT_EPSREL"]

DEFAULT_EPSABS = 1e-12
DEFAULT_EPSREL = 1e-10

# QUADPACK's own error estimate may legitimately sit a bit above the request;
# only fail when it is clearly out of range.
_ERROR_SLACK = 100.0


def quad_real(fn, a, b, epsabs=DEFAULT_EPSABS, epsrel=DEFAULT_EPSREL, limit=200):
    value, err = integrate.quad(fn, a, b, epsabs=epsabs, epsrel=epsrel, limit=limit)
    if err > _ERROR_SLACK * max(epsabs, epsrel * abs(value), 1e-300):
        raise AccuracyError(
            f"quadrature error estimate {err:.3e} exceeds tolerance for value {value:.6e}",
            value=value, error_estimate=err)
    return value


def quad_complex(fn, a, b, epsabs=DEFAULT_EPSABS, epsrel=DEFAULT_EPSREL, limit=200):
    re = quad_real(lambda x: fn(x).real, a, b, epsabs, epsrel, limit)
    im = quad_real(lambda x: fn(x).imag, a, b, epsabs, epsrel, limit)
    return complex(re, im)

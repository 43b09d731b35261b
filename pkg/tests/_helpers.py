"""Shared builders for test profiles and modes."""

from __future__ import annotations

import numpy as np
from numpy.polynomial import polynomial as npoly

from swirlcurv import (ComplexRadialFunction, FourierMode, PolynomialFunction,
                       RadialProfile)


def profile_poly(coeffs) -> RadialProfile:
    return RadialProfile(PolynomialFunction(coeffs))


def u_const() -> RadialProfile:
    return profile_poly([1.0])


def u_quadratic() -> RadialProfile:
    # u = 1 + r^2: eta = (1 + r^2)(1 + 5 r^2) > 0 and u*omega > 0
    return profile_poly([1.0, 0.0, 1.0])


def u_decreasing() -> RadialProfile:
    # u = 2 - r^2: eta changes sign at r = sqrt(2/5)
    return profile_poly([2.0, 0.0, -1.0])


def cplx(re_coeffs, im_coeffs=None) -> ComplexRadialFunction:
    imag = PolynomialFunction(im_coeffs) if im_coeffs is not None else None
    return ComplexRadialFunction(PolynomialFunction(re_coeffs), imag)


def mode_poly(n, g_re, g_im=None, f_re=(0.0,), f_im=None) -> FourierMode:
    return FourierMode(int(n), cplx(list(g_re), g_im), cplx(list(f_re), f_im))


# g = r^2 (1 - r) as ascending coefficients, ditto f = r (1 - r)
G_BASE = [0.0, 0.0, 1.0, -1.0]
F_BASE = [0.0, 1.0, -1.0]


def standard_mode(n) -> FourierMode:
    """g = r^2(1-r), f = r(1-r): satisfies all axis/boundary invariants."""
    return mode_poly(n, G_BASE, f_re=F_BASE)


def random_mode(rng: np.random.Generator, n=None, complex_parts=True) -> FourierMode:
    """Random admissible mode: g = r^2(1-r) * cubic, f = r * quadratic."""
    if n is None:
        n = int(rng.integers(1, 7))

    def g_coeffs():
        return npoly.polymul([0.0, 0.0, 1.0, -1.0], rng.uniform(-1.0, 1.0, 3)).tolist()

    def f_coeffs():
        return npoly.polymul([0.0, 1.0], rng.uniform(-1.0, 1.0, 3)).tolist()

    if complex_parts:
        return mode_poly(n, g_coeffs(), g_coeffs(), f_coeffs(), f_coeffs())
    return mode_poly(n, g_coeffs(), f_re=f_coeffs())

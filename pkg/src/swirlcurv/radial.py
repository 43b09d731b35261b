"""Radial functions on [0, 1] with exact (or spline) derivatives.

Three interchangeable representations back every scalar radial function in
the package: polynomial coefficients, a differentiable expression AST, or a
sampled table interpolated by a natural cubic spline.  Complex-valued radial
data (mode coefficients g_n, f_n) is stored as a real/imaginary pair.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.interpolate import CubicSpline

from . import expr as expr_mod
from .errors import DomainError

__all__ = [
    "RadialFunction",
    "PolynomialFunction",
    "ExpressionFunction",
    "TableFunction",
    "ComplexRadialFunction",
    "constant",
    "zero",
]

_DOMAIN_SLACK = 1e-12


def _check_domain(r):
    arr = np.asarray(r, dtype=float)
    if np.any(arr < -_DOMAIN_SLACK) or np.any(arr > 1.0 + _DOMAIN_SLACK):
        bad = arr[(arr < -_DOMAIN_SLACK) | (arr > 1.0 + _DOMAIN_SLACK)]
        raise DomainError(f"radius {np.ravel(bad)[0]!r} outside [0, 1]")
    return np.clip(arr, 0.0, 1.0) if arr.ndim else float(min(max(float(arr), 0.0), 1.0))


class RadialFunction:
    """A real scalar function of r in [0, 1] with two derivatives."""

    def __call__(self, r):
        raise NotImplementedError

    def derivative(self, r):
        raise NotImplementedError

    def second_derivative(self, r):
        raise NotImplementedError


class PolynomialFunction(RadialFunction):
    """Polynomial in r with ascending coefficients; derivatives are exact."""

    def __init__(self, coeffs):
        c = np.asarray(coeffs, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        self.coeffs = c
        self._d1 = npoly.polyder(c) if c.size > 1 else np.zeros(1)
        self._d2 = npoly.polyder(self._d1) if self._d1.size > 1 else np.zeros(1)

    def __call__(self, r):
        return npoly.polyval(_check_domain(r), self.coeffs)

    def derivative(self, r):
        return npoly.polyval(_check_domain(r), self._d1)

    def second_derivative(self, r):
        return npoly.polyval(_check_domain(r), self._d2)

    def __repr__(self):
        return f"PolynomialFunction({self.coeffs.tolist()})"


class ExpressionFunction(RadialFunction):
    """Radial function defined by an expression AST; derivatives are symbolic."""

    def __init__(self, source):
        if isinstance(source, str):
            self.text = source
            self.ast = expr_mod.parse_expression(source)
        else:
            self.text = str(source)
            self.ast = source
        self._d1 = expr_mod.differentiate(self.ast)
        self._d2 = expr_mod.differentiate(self._d1)

    def __call__(self, r):
        return self.ast.eval(_check_domain(r))

    def derivative(self, r):
        return self._d1.eval(_check_domain(r))

    def second_derivative(self, r):
        return self._d2.eval(_check_domain(r))

    def __repr__(self):
        return f"ExpressionFunction({self.text!r})"


class TableFunction(RadialFunction):
    """Sampled values interpolated by a natural cubic spline.

    The spline's derivatives *define* the derivatives of the profile.
    """

    def __init__(self, r_nodes, values):
        r_nodes = np.asarray(r_nodes, dtype=float)
        values = np.asarray(values, dtype=float)
        if r_nodes.ndim != 1 or r_nodes.shape != values.shape or r_nodes.size < 4:
            raise ValueError("need matching 1-d arrays with at least 4 nodes")
        if r_nodes[0] > _DOMAIN_SLACK or r_nodes[-1] < 1.0 - _DOMAIN_SLACK:
            raise ValueError("table nodes must span [0, 1]")
        self.r_nodes = r_nodes
        self.values = values
        self._spline = CubicSpline(r_nodes, values, bc_type="natural")
        self._d1 = self._spline.derivative(1)
        self._d2 = self._spline.derivative(2)

    def __call__(self, r):
        out = self._spline(_check_domain(r))
        return float(out) if np.ndim(r) == 0 else out

    def derivative(self, r):
        out = self._d1(_check_domain(r))
        return float(out) if np.ndim(r) == 0 else out

    def second_derivative(self, r):
        out = self._d2(_check_domain(r))
        return float(out) if np.ndim(r) == 0 else out

    def __repr__(self):
        return f"TableFunction(<{self.r_nodes.size} nodes>)"


def constant(value: float) -> RadialFunction:
    return PolynomialFunction([float(value)])


def zero() -> RadialFunction:
    return PolynomialFunction([0.0])


class ComplexRadialFunction:
    """Complex radial function stored as a (real, imaginary) pair."""

    def __init__(self, real: RadialFunction, imag: RadialFunction | None = None):
        self.real = real
        self.imag = imag

    def __call__(self, r):
        re = self.real(r)
        if self.imag is None:
            return re + 0.0j if np.ndim(r) == 0 else re.astype(complex)
        return re + 1j * self.imag(r)

    def derivative(self, r):
        re = self.real.derivative(r)
        if self.imag is None:
            return re + 0.0j if np.ndim(r) == 0 else re.astype(complex)
        return re + 1j * self.imag.derivative(r)

    def second_derivative(self, r):
        re = self.real.second_derivative(r)
        if self.imag is None:
            return re + 0.0j if np.ndim(r) == 0 else re.astype(complex)
        return re + 1j * self.imag.second_derivative(r)

    def scaled(self, c: complex) -> "ComplexRadialFunction":
        """Return c * self, keeping exact derivatives (c complex scalar)."""
        return _ScaledComplex(self, complex(c))


class _ScaledComplex(ComplexRadialFunction):
    def __init__(self, base: ComplexRadialFunction, factor: complex):
        self.base = base
        self.factor = factor

    def __call__(self, r):
        return self.factor * self.base(r)

    def derivative(self, r):
        return self.factor * self.base.derivative(r)

    def second_derivative(self, r):
        return self.factor * self.base.second_derivative(r)

    def scaled(self, c: complex) -> "ComplexRadialFunction":
        return _ScaledComplex(self.base, self.factor * complex(c))

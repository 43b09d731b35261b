"""Axisymmetric divergence-free perturbation modes and their energies.

A mode with z-wavenumber n is the velocity field

    Y_n = e^{inz} [ -(i n / r) g(r) d/dr + (g'(r)/r) d/dz + f(r) d/dtheta ].

Regularity at the axis requires g(0) = f(0) = 0 and, for finite kinetic
energy, g'(0) = 0 (so g = O(r^2)); modes with n != 0 must also satisfy
g(1) = 0 so the field stays tangent to the boundary.

Inner products use the cylindrical metric (|d/dr| = |d/dz| = 1,
|d/dtheta| = r) and the volume element r dr dtheta dz over the solid flat
torus, giving a 4 pi^2 prefactor on radial integrals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RegularityError, ValidationError
from .profile import RadialProfile
from .quadrature import quad_complex, quad_real
from .radial import ComplexRadialFunction

__all__ = [
    "FourierMode",
    "VelocitySample",
    "assemble_velocity",
    "divergence_residual",
    "swirl_energy",
    "mode_energy",
    "cross_inner_product",
]

_AXIS_TOL = 1e-9
FOUR_PI_SQ = 4.0 * np.pi ** 2


@dataclass
class FourierMode:
    """One perturbation mode (n, g, f); immutable after construction."""

    n: int
    g: ComplexRadialFunction
    f: ComplexRadialFunction

    def scaled(self, c: complex) -> "FourierMode":
        return FourierMode(self.n, self.g.scaled(c), self.f.scaled(c))

    def field_scale(self, samples: int = 64) -> float:
        r = np.linspace(1.0 / samples, 1.0, samples)
        return float(max(np.max(np.abs(self.g(r))), np.max(np.abs(self.g.derivative(r))),
                         np.max(np.abs(self.f(r))), 1e-300))

    def validate(self, require_finite_energy: bool = True, tol: float = _AXIS_TOL) -> None:
        """Check the axis/boundary invariants; raises on violation."""
        scale = self.field_scale()
        if abs(self.g(0.0)) > tol * scale:
            raise RegularityError(f"g(0) = {self.g(0.0)!r} must vanish on the axis")
        if abs(self.f(0.0)) > tol * scale:
            raise RegularityError(f"f(0) = {self.f(0.0)!r} must vanish on the axis")
        if self.n != 0 and abs(self.g(1.0)) > tol * scale:
            raise RegularityError(
                f"g(1) = {self.g(1.0)!r} must vanish for n = {self.n} != 0")
        if require_finite_energy and abs(self.g.derivative(0.0)) > tol * scale:
            raise RegularityError(
                f"g'(0) = {self.g.derivative(0.0)!r} must vanish for finite energy")


@dataclass(frozen=True)
class VelocitySample:
    r: float
    z: float
    v_r: complex
    v_z: complex
    v_theta: complex


def assemble_velocity(m: FourierMode, r: float, z: float) -> VelocitySample:
    """Evaluate the mode's velocity components at (r, z).

    At r = 0 the components are defined by continuous extension, which
    requires g'(0) = 0; otherwise the z-component g'/r blows up.
    """
    phase = np.exp(1j * m.n * z)
    if r == 0.0:
        if abs(m.g.derivative(0.0)) > _AXIS_TOL * m.field_scale():
            raise RegularityError("axis value undefined: g'(0) != 0")
        # g = O(r^2): -i n g / r -> 0 and g'/r -> g''(0)
        return VelocitySample(0.0, float(z), 0.0j,
                              complex(m.g.second_derivative(0.0)) * phase,
                              complex(m.f(0.0)) * phase)
    v_r = -1j * m.n / r * m.g(r) * phase
    v_z = m.g.derivative(r) / r * phase
    v_theta = m.f(r) * phase
    return VelocitySample(float(r), float(z), complex(v_r), complex(v_z), complex(v_theta))


def divergence_residual(m: FourierMode, grid_size: int = 64, *,
                        radial_scale: float = 1.0) -> float:
    """Max-norm of (1/r) d/dr (r v_r) + d/dz v_z over an (r, z) grid.

    Radial derivatives come from the representation's exact derivative rule
    and the z derivative is the exact factor in; a well-formed mode gives a
    residual at round-off level.  ``radial_scale`` multiplies v_r only and
    exists so tests can inject a fault and confirm the check has teeth.
    """
    if grid_size < 16:
        raise ValidationError("grid_size must be >= 16")
    r = np.linspace(1.0 / grid_size, 1.0, grid_size)
    # r v_r = -i n g(r), so (1/r) d/dr (r v_r) = -i n g'(r) / r
    d_radial = radial_scale * (-1j * m.n) * m.g.derivative(r) / r
    d_axial = 1j * m.n * m.g.derivative(r) / r
    resid = np.max(np.abs(d_radial + d_axial))
    return float(resid / m.field_scale())


def swirl_energy(p: RadialProfile) -> float:
    """<<X, X>> = 4 pi^2 * int_0^1 r^3 u(r)^2 dr."""
    return FOUR_PI_SQ * quad_real(lambda r: r ** 3 * float(p.u(r)) ** 2, 0.0, 1.0)


def mode_energy(m: FourierMode) -> float:
    """<<Y_n, conj(Y_n)>> = 4 pi^2 * int [ (n^2 |g|^2 + |g'|^2)/r + r^3 |f|^2 ] dr."""
    if abs(m.g.derivative(0.0)) > _AXIS_TOL * m.field_scale():
        raise RegularityError("mode energy diverges: g'(0) != 0")

    def integrand(r):
        if r == 0.0:
            return 0.0
        g = m.g(r)
        gp = m.g.derivative(r)
        f = m.f(r)
        return ((m.n ** 2 * abs(g) ** 2 + abs(gp) ** 2) / r + r ** 3 * abs(f) ** 2)

    return FOUR_PI_SQ * quad_real(integrand, 0.0, 1.0)


def cross_inner_product(p: RadialProfile, m: FourierMode) -> float:
    """<<X, Y_n>>; zero unless n = 0 by z-orthogonality."""
    if m.n != 0:
        return 0.0
    val = quad_complex(lambda r: r ** 3 * float(p.u(r)) * m.f(r), 0.0, 1.0)
    return FOUR_PI_SQ * val.real

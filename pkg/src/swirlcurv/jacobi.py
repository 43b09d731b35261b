"""Sturm-Liouville spectrum, conjugate times, and explicit Jacobi fields.

Along the geodesic generated by X = u(r) d/dtheta, perturbations with
z-wavenumber n and stream function envelope phi(r) return to zero at times
t = 2 pi lambda / n, where -lambda^2 is an eigenvalue of

    (d/dr)((1/r) phi') - (n^2 / r) phi = (2 C u omega / r) phi,
    phi(0) = phi(1) = 0,

the phi = r psi form of the Bessel-type eigenproblem.  The weight
2 u omega / r must be positive on [0, 1]; otherwise the construction is
refused.  The discretization is a conservative second-order difference
scheme reduced (by the diagonal weight's square root) to a symmetric
tridiagonal problem, with Richardson extrapolation over grid doublings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.linalg import eigh_tridiagonal

from .errors import AccuracyError, HypothesisViolationError, InvalidModeError, ValidationError
from .profile import RadialProfile, classify_criteria

__all__ = [
    "SLSpectrum",
    "JacobiSolution",
    "ResidualReport",
    "sl_spectrum",
    "conjugate_times",
    "lambda_over_n_study",
    "assemble_jacobi",
    "jacobi_residuals",
]


# ---------------------------------------------------------------------------
# Spectrum
# ---------------------------------------------------------------------------

@dataclass
class SLSpectrum:
    n: int
    eigenvalues: np.ndarray          # lambda_{mn}, ascending, Richardson-extrapolated
    error_estimates: np.ndarray      # conservative relative error estimates
    r: np.ndarray                    # fine grid including both endpoints
    phi: np.ndarray                  # (m_max, len(r)) weight-normalized eigenfunctions
    grid: int                        # grid actually used (coarse level)
    profile: RadialProfile = field(repr=False, default=None)
    _rayleigh: np.ndarray = field(repr=False, default=None)

    def spline(self, m: int) -> CubicSpline:
        """Cubic-spline interpolant of phi_{mn} (m is 1-based)."""
        return CubicSpline(self.r, self.phi[m - 1])

    def oscillation_count(self, m: int) -> int:
        """Number of interior sign changes of phi_{mn} (Sturm: m - 1)."""
        v = self.phi[m - 1][1:-1]
        v = v[np.abs(v) > 1e-9 * np.max(np.abs(v))]
        return int(np.sum(v[:-1] * v[1:] < 0.0))

    def rayleigh_residual(self, m: int) -> float:
        """Relative defect of 2C int u w phi^2/r = -int (phi'^2 + n^2 phi^2)/r,
        evaluated with the discrete quadratic forms of the solver."""
        return float(self._rayleigh[m - 1])


def _solve_grid(p: RadialProfile, n: int, m_max: int, N: int):
    h = 1.0 / N
    r = np.linspace(0.0, 1.0, N + 1)
    ri = r[1:-1]
    u = np.asarray(p.u(ri), dtype=float)
    om = np.asarray(p.omega(ri), dtype=float)
    w = 2.0 * u * om / ri
    if np.any(w <= 0.0):
        raise HypothesisViolationError("u * omega must be positive on (0, 1)")

    # conservative flux coefficients a_e = 1/r at edge midpoints
    edge = (np.arange(N) + 0.5) * h
    a = 1.0 / edge
    main = -(a[1:] + a[:-1]) / h ** 2 - n * n / ri
    off = a[1:-1] / h ** 2

    d = np.sqrt(w)
    b_main = main / w
    b_off = off / (d[:-1] * d[1:])

    K = N - 1
    lo = max(K - m_max, 0)
    vals, vecs = eigh_tridiagonal(b_main, b_off, select="i", select_range=(lo, K - 1))
    # the weight w already carries the factor 2, so the pencil eigenvalue is C
    # itself; the last m_max (largest C, closest to zero) give the smallest lambda
    cvals = vals[::-1][:m_max]
    y = vecs[:, ::-1][:, :m_max]
    if np.any(cvals >= 0.0):
        raise AccuracyError("eigenvalue C came out nonnegative; weight not definite?")
    lam = np.sqrt(-cvals)

    phi = y / d[:, None] / np.sqrt(h)  # weight-norm one: h * sum(w phi^2) = 1
    # fix sign: dominant lobe positive
    for k in range(phi.shape[1]):
        j = int(np.argmax(np.abs(phi[:, k])))
        if phi[j, k] < 0.0:
            phi[:, k] = -phi[:, k]

    # discrete Rayleigh identity defect
    ray = np.empty(m_max)
    for k in range(m_max):
        ph = phi[:, k]
        dphi = np.diff(np.concatenate([[0.0], ph, [0.0]]))
        rhs = -(np.sum(a * dphi ** 2 / h ** 2) + np.sum(n * n * ph ** 2 / ri)) * h
        lhs = cvals[k] * np.sum(w * ph ** 2) * h
        ray[k] = abs(lhs - rhs) / max(abs(lhs), 1e-300)
    return lam, phi, r, ray


def sl_spectrum(p: RadialProfile, n: int, m_max: int, grid: int = 2048,
                tol: float = 1e-6) -> SLSpectrum:
    """Smallest ``m_max`` eigenvalues lambda_{mn} with eigenfunctions.

    Solves at ``grid`` and ``2 * grid`` and Richardson-extrapolates; the grid
    is doubled (up to three times) until the conservative relative error
    estimate |lambda_2N - lambda_N| / 3 falls below ``tol``.
    """
    if n == 0:
        raise InvalidModeError("spectrum requires n != 0")
    if m_max < 1:
        raise ValidationError("m_max must be >= 1")
    if grid < 256:
        raise ValidationError("grid must be >= 256")
    report = classify_criteria(p)
    if not report.u_omega_positive:
        raise HypothesisViolationError(
            f"u * omega is not positive on [0,1]; witnesses: {report.witness_points}")

    n_abs = abs(int(n))
    for _ in range(4):
        lam1, _, _, _ = _solve_grid(p, n_abs, m_max, grid)
        lam2, phi2, r2, ray2 = _solve_grid(p, n_abs, m_max, 2 * grid)
        est = np.abs(lam2 - lam1) / 3.0 / lam2
        if np.all(est <= tol):
            lam = (4.0 * lam2 - lam1) / 3.0
            phi_full = np.zeros((m_max, r2.size))
            phi_full[:, 1:-1] = phi2.T
            return SLSpectrum(n=int(n), eigenvalues=lam, error_estimates=est,
                              r=r2, phi=phi_full, grid=grid, profile=p,
                              _rayleigh=ray2)
        grid *= 2
    raise AccuracyError(
        f"eigenvalue estimate did not reach tol={tol} by grid {grid}",
        error_estimate=float(np.max(est)))


def conjugate_times(s: SLSpectrum):
    """Monoconjugate times t* = 2 pi lambda_{mn} / |n|, ascending in m."""
    return [(m + 1, float(2.0 * np.pi * lam / abs(s.n)))
            for m, lam in enumerate(s.eigenvalues)]


def lambda_over_n_study(p: RadialProfile, m: int, n_list, grid: int = 1024,
                        tol: float = 1e-6):
    """Numerical convergence diagnostic for the finite limit of lambda_{mn}/n."""
    out = []
    for n in n_list:
        s = sl_spectrum(p, int(n), m, grid=grid, tol=tol)
        out.append((int(n), float(s.eigenvalues[m - 1] / abs(n))))
    return out


# ---------------------------------------------------------------------------
# Jacobi fields
# ---------------------------------------------------------------------------

@dataclass
class JacobiSolution:
    """Closed-form Jacobi field built from one eigenpair.

    ``h`` and ``j`` are the stream/swirl components of the linearized Euler
    solution; ``g`` and ``f`` the components of the Jacobi field itself.
    All four are callables (t, r, z) -> array broadcast over (r, z).
    """

    m: int
    n: int
    lam: float
    t_star: float
    phase: str
    spectrum: SLSpectrum = field(repr=False, default=None)
    profile: RadialProfile = field(repr=False, default=None)
    _phi: CubicSpline = field(repr=False, default=None)

    def _parts(self, t, r):
        r = np.asarray(r, dtype=float)
        theta = self.n * t / self.lam
        phi = self._phi(r)
        u = np.asarray(self.profile.u(r), dtype=float)
        om = np.asarray(self.profile.omega(r), dtype=float)
        return theta, phi, u, om, r

    def h(self, t, r, z):
        theta, phi, _, _, r = self._parts(t, r)
        tfac = np.cos(theta) if self.phase == "cos" else np.sin(theta)
        return tfac * phi * np.cos(self.n * np.asarray(z))

    def j(self, t, r, z):
        theta, phi, _, om, r = self._parts(t, r)
        z = np.asarray(z)
        if self.phase == "cos":
            return -(self.lam * om / r ** 2) * phi * np.sin(self.n * z) * np.sin(theta)
        return (self.lam * om / r ** 2) * phi * np.sin(self.n * z) * np.cos(theta)

    def g(self, t, r, z):
        theta, phi, _, _, r = self._parts(t, r)
        z = np.asarray(z)
        if self.phase == "cos":
            return (self.lam / self.n) * np.cos(self.n * z) * np.sin(theta) * phi
        return (self.lam / self.n) * np.cos(self.n * z) * (1.0 - np.cos(theta)) * phi

    def f(self, t, r, z):
        theta, phi, u, _, r = self._parts(t, r)
        z = np.asarray(z)
        if self.phase == "cos":
            return (2.0 * self.lam ** 2 * u / (self.n * r ** 2)) * np.sin(self.n * z) \
                * (np.cos(theta) - 1.0) * phi
        up = np.asarray(self.profile.u_prime(r), dtype=float)
        # sine branch keeps a secular u'(r) t term; it does not re-vanish at t*
        return np.sin(self.n * z) * phi * self.lam * (
            (2.0 * u / r ** 2) * (self.lam / self.n) * np.sin(theta) + (up / r) * t)

    def dh_dt(self, t, r, z):
        theta, phi, _, _, r = self._parts(t, r)
        tfac = -np.sin(theta) if self.phase == "cos" else np.cos(theta)
        return (self.n / self.lam) * tfac * phi * np.cos(self.n * np.asarray(z))

    def dj_dt(self, t, r, z):
        theta, phi, _, om, r = self._parts(t, r)
        z = np.asarray(z)
        if self.phase == "cos":
            return -(self.n * om / r ** 2) * phi * np.sin(self.n * z) * np.cos(theta)
        return -(self.n * om / r ** 2) * phi * np.sin(self.n * z) * np.sin(theta)

    def dg_dt(self, t, r, z):
        return self.h(t, r, z)

    def df_dt(self, t, r, z):
        theta, phi, u, _, r = self._parts(t, r)
        z = np.asarray(z)
        if self.phase == "cos":
            return -(2.0 * self.lam * u / r ** 2) * np.sin(self.n * z) * np.sin(theta) * phi
        up = np.asarray(self.profile.u_prime(r), dtype=float)
        return np.sin(self.n * z) * phi * self.lam * (
            (2.0 * u / r ** 2) * np.cos(theta) + up / r)


def assemble_jacobi(p: RadialProfile, s: SLSpectrum, m: int, *, phase: str = "cos",
                    lambda_override: float | None = None) -> JacobiSolution:
    """Build the explicit Jacobi field for eigenpair (m, n) of ``s``.

    ``lambda_override`` substitutes a wrong eigenvalue into the closed forms
    (leaving the eigenfunction alone); it exists so tests can verify that the
    residual harness detects an inconsistent solution.
    """
    if phase not in ("cos", "sin"):
        raise ValidationError("phase must be 'cos' or 'sin'")
    if not (1 <= m <= len(s.eigenvalues)):
        raise ValidationError(f"eigenindex m={m} out of range")
    lam = float(lambda_override if lambda_override is not None else s.eigenvalues[m - 1])
    return JacobiSolution(m=m, n=s.n, lam=lam,
                          t_star=float(2.0 * np.pi * lam / abs(s.n)),
                          phase=phase, spectrum=s, profile=p, _phi=s.spline(m))


# ---------------------------------------------------------------------------
# Residuals of the linearized equations
# ---------------------------------------------------------------------------

@dataclass
class ResidualReport:
    """Max-norm residuals over the (r, z, t) sample set, scale-normalized."""

    swirl_transport: float    # d j/dt = (omega/r^2) dh/dz
    stream_transport: float   # dt[D h] = -2 r u dj/dz
    second_order: float       # dtt[D h] = -(2 u omega / r) dzz h
    flow_components: float    # dg/dt = h  and  df/dt + (u'/r) dg/dz = j

    def max_residual(self) -> float:
        return max(self.swirl_transport, self.stream_transport,
                   self.second_order, self.flow_components)


def _fft_dz(field: np.ndarray, order: int = 1) -> np.ndarray:
    """Spectral d/dz along the last axis (z uniform on [0, 2pi))."""
    nz = field.shape[-1]
    k = np.fft.fftfreq(nz, d=1.0 / nz)
    return np.real(np.fft.ifft((1j * k) ** order * np.fft.fft(field, axis=-1), axis=-1))


def jacobi_residuals(p: RadialProfile, sol: JacobiSolution, grid: int = 256,
                     times=None) -> ResidualReport:
    """Evaluate the four linearized-equation residuals for a Jacobi solution.

    Time derivatives are analytic (the closed forms are trigonometric in t);
    z derivatives are spectral; r derivatives come from the eigenfunction
    spline.  The radial grid starts away from the axis where the 1/r^2
    factors would amplify interpolation noise.
    """
    if times is None:
        times = [0.25 * sol.t_star, 0.5 * sol.t_star, 0.75 * sol.t_star]
    n = sol.n
    r = np.linspace(0.1, 1.0, grid)[:, None]
    nz = max(16, 4 * abs(n))
    z = (2.0 * np.pi * np.arange(nz) / nz)[None, :]

    u = np.asarray(p.u(r), dtype=float)
    om = np.asarray(p.omega(r), dtype=float)
    phi = sol._phi(r)
    dphi = sol._phi(r, 1)
    ddphi = sol._phi(r, 2)
    # D_r phi := (phi'/r)' - n^2 phi / r, the radial part of the stream operator
    lop = ddphi / r - dphi / r ** 2 - n * n * phi / r

    res_a = res_b = res_c = res_d = 0.0
    floor = 1e-300
    for t in times:
        theta = n * t / sol.lam
        cz = np.cos(n * z)

        h = sol.h(t, r, z)
        j = sol.j(t, r, z)

        # (a) swirl transport
        lhs = sol.dj_dt(t, r, z)
        rhs = (om / r ** 2) * _fft_dz(h)
        res_a = max(res_a, float(np.max(np.abs(lhs - rhs))
                                 / max(np.max(np.abs(rhs)), np.max(np.abs(lhs)), floor)))

        # time factor multiplying D(h): d/dt and d2/dt2 of the t-dependence of h
        if sol.phase == "cos":
            tf1, tf2 = -np.sin(theta) * n / sol.lam, -np.cos(theta) * (n / sol.lam) ** 2
        else:
            tf1, tf2 = np.cos(theta) * n / sol.lam, -np.sin(theta) * (n / sol.lam) ** 2

        # D(h) separates as (time factor) * [lop * cos(nz)]; assemble directly:
        dt_Dh = tf1 * lop * cz
        dtt_Dh = tf2 * lop * cz

        # (b) stream transport: dt[D h] + 2 r u dj/dz = 0
        term = 2.0 * r * u * _fft_dz(j)
        res_b = max(res_b, float(np.max(np.abs(dt_Dh + term))
                                 / max(np.max(np.abs(term)), np.max(np.abs(dt_Dh)), floor)))

        # (c) second-order equation: dtt[D h] + (2 u om / r) dzz h = 0
        term_c = (2.0 * u * om / r) * _fft_dz(h, order=2)
        res_c = max(res_c, float(np.max(np.abs(dtt_Dh + term_c))
                                 / max(np.max(np.abs(term_c)), np.max(np.abs(dtt_Dh)), floor)))

        # (d) flow components: dg/dt = h  and  df/dt + (u'/r) dg/dz = j
        # (scales taken over every term so a vanishing rhs at special times
        #  does not turn round-off into a large relative residual)
        g = sol.g(t, r, z)
        up = np.asarray(p.u_prime(r), dtype=float)
        dg = sol.dg_dt(t, r, z)
        d1 = np.max(np.abs(dg - h)) / max(np.max(np.abs(h)), np.max(np.abs(dg)), floor)
        df = sol.df_dt(t, r, z)
        drift = (up / r) * _fft_dz(g)
        d2 = np.max(np.abs(df + drift - j)) / max(np.max(np.abs(j)),
                                                  np.max(np.abs(df)),
                                                  np.max(np.abs(drift)), floor)
        res_d = max(res_d, float(max(d1, d2)))

    return ResidualReport(res_a, res_b, res_c, res_d)

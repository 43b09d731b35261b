"""Curvature and conjugate points of axisymmetric swirl flows on D^2 x S^1.

The package computes, for a steady swirl field u(r) d/dtheta on the solid
flat torus:

* positivity of the sectional curvature in every section containing the
  swirl field (criterion: d/dr (r u^2) > 0), with per-mode curvature values
  from a closed Bessel formula cross-checked against an independent
  finite-difference pressure solver;
* the Bessel-type Sturm-Liouville spectrum whose eigenvalues set the
  monoconjugate times 2 pi lambda / n, together with the explicit Jacobi
  fields and residual checks of the linearized flow/Euler equations.
"""

from .bessel import BesselPair, HomogeneousSolutions, bessel_i, bessel_k
from .config import RunConfig, parse_config, radial_from_spec
from .curvature import (CurvatureResult, PressureSolution, compute_HJ,
                        curvature_mode_closed, curvature_mode_oracle,
                        curvature_normalized, curvature_report, curvature_total,
                        oscillation_study, pressure_bvp_solve, pressure_closed_form)
from .errors import (AccuracyError, DegenerateSectionError, DomainError,
                     HypothesisViolationError, InvalidModeError, ParseError,
                     RegularityError, SwirlcurvError, ValidationError)
from .expr import differentiate, parse_expression
from .jacobi import (JacobiSolution, ResidualReport, SLSpectrum, assemble_jacobi,
                     conjugate_times, jacobi_residuals, lambda_over_n_study,
                     sl_spectrum)
from .modes import (FourierMode, VelocitySample, assemble_velocity,
                    cross_inner_product, divergence_residual, mode_energy,
                    swirl_energy)
from .profile import (CriteriaReport, RadialProfile, classify_criteria,
                      curvature_density, eval_profile, vorticity)
from .radial import (ComplexRadialFunction, ExpressionFunction, PolynomialFunction,
                     RadialFunction, TableFunction, constant, zero)

__version__ = "0.1.0"

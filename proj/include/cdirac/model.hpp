#pragma once

#include <string>
#include <vector>

#include "cdirac/constants.hpp"
#include "cdirac/grid.hpp"

namespace cdirac {

/// Physical inputs shared by all systems. The radial couplings enter through
/// V(r) = a z(r) and U(r) = b z(r) with z = 1/r (hydrogen, a == Z), z = e^{-delta r}
/// (Morse) and z = r (linear).
struct CouplingParams {
    double alpha = defaults::fine_structure;  // fine-structure constant, > 0
    double eta = 0.78539816339744831;         // mixing angle, 0 < eta < pi/2
    double a = 0.0;                           // vector coupling
    double b = 0.0;                           // gravitational coupling
    double Z = 1.0;                           // Coulomb charge (hydrogen: a == Z)
    double delta = 1.0;                       // Morse range parameter, > 0
    double angular_lambda = 0.0;              // angular separation constant
    double mu = 1.0;                          // mass parameter, default 1

    double sin2eta() const;
    double cos2eta() const;
    /// Theta = alpha (Z cos2eta - b)/sin2eta; hydrogen centrifugal strength.
    double theta() const;
    /// nu = alpha (b - a cos2eta)/sin2eta; linear-potential oscillator frequency.
    double nu() const;
    /// gamma_MT = alpha (a cos2eta + b)/(sin2eta delta); Morse well strength.
    double gamma_mt() const;
    double big_gamma() const;  // Gamma = sin2eta/(a cos2eta + b)
};

std::vector<std::string> validate_params(const CouplingParams& p, SystemKind system);
void validate_or_throw(const CouplingParams& p, SystemKind system);

/// Coefficients of the decoupled second-order equation in the system's natural
/// variable. Two templates cover all systems:
///   CoulombLike:       G'' + (A/x + B/x^2 + C) G = 0
///   ShiftedOscillator: G'' - (nu2 y^2 - shift) G = 0
/// plus an r-space form for the Morse well (z = e^{-delta r}):
///   ExpWell:           G'' + (eA z + eB z^2 + eC) G = 0
struct OdeCoeffs {
    enum class Form { CoulombLike, ShiftedOscillator, ExpWell };
    SystemKind system;
    Form form = Form::CoulombLike;
    double A = 0, B = 0, C = 0;        // CoulombLike
    double nu2 = 0, shift = 0;         // ShiftedOscillator
    double eA = 0, eB = 0, eC = 0, edelta = 0;  // ExpWell

    /// q(x) with G'' = q(x) G.
    double q(double x) const;
};

/// Spec'd coefficients: hydrogen in r, Morse in rho (the equation for the
/// half-power lift sqrt(rho) * F), linear in the shifted oscillator variable.
OdeCoeffs decoupled_ode_coeffs(SystemKind system, const CouplingParams& p, double epsilon);

/// Morse equation kept in r; smooth everywhere, used by residual checks.
OdeCoeffs morse_ode_coeffs_r(const CouplingParams& p, double epsilon);

/// A(r) = (alpha cos2eta/sin2eta)[V/cos2eta - U] - (lambda/r)(1 + alpha^2 U).
double effective_vector_potential(SystemKind system, const CouplingParams& p, double r);

/// First-order map from the upper to the lower spinor component,
///   G2 = alpha/(cos2eta + eps) [ -sin2eta/alpha + (alpha/sin2eta)(cos2eta V - U) + d/dr ] G1,
/// with d/dr realised by 5-point finite differences on g1's grid (chain rule
/// -delta rho d/drho on a rho grid, d/dy on the shifted linear grid).
RadialFunction lower_component(SystemKind system, const CouplingParams& p, double epsilon,
                               const RadialFunction& g1);

}  // namespace cdirac

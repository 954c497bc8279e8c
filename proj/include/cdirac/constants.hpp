#pragma once

namespace cdirac::defaults {

// Central table of numerical defaults. Every tolerance that appears in more
// than one place lives here.

inline constexpr double quad_tol        = 1e-10;  // adaptive quadrature, absolute
inline constexpr double root_tol        = 1e-12;  // Brent root tolerance (in x)
inline constexpr double quantization_tol = 1e-10; // |residual| accepted at a closed-form level
inline constexpr double shoot_rtol      = 1e-11;  // adaptive RK relative tolerance
inline constexpr double shoot_defect_tol = 1e-9;  // |defect| for a converged bound state
inline constexpr double sin2eta_floor   = 1e-9;   // below this, sin(2*eta) counts as singular
inline constexpr double residual_floor  = 1e-4;   // |f|/max|f| below which ODE-residual nodes are skipped
inline constexpr int    boundary_trim   = 4;      // grid points trimmed from each side in residual norms

inline constexpr double fine_structure  = 7.2973525693e-3;

}  // namespace cdirac::defaults

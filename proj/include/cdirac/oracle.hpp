#pragma once

#include <utility>
#include <vector>

#include "cdirac/model.hpp"

namespace cdirac {

/// Result of one shooting evaluation or one converged bound state.
struct ShootResult {
    double epsilon = 0.0;
    double defect = 0.0;   // scale-free log-derivative (Wronskian) mismatch
    int n_nodes = -1;      // interior nodes of the glued solution
    bool converged = false;
};

/// Max over the trimmed interior of |G'' - q(x) G| / max|G| with 5-point
/// stencils. Trimming removes 4 points per side plus nodes where |G| falls
/// below a floor fraction of the peak (the FD error of fractional-power
/// prefactors is meaningless where the function has no support).
/// Morse functions sampled in rho are lifted by sqrt(rho) and checked against
/// the rho-space equation; Morse functions sampled in r use the r-space form.
double ode_residual(SystemKind system, const CouplingParams& p, double epsilon,
                    const RadialFunction& fn,
                    double value_floor = defaults::residual_floor);

/// Integrates the decoupled equation from both ends (series start at the
/// singular/inner point, decaying start at the outer point) with adaptive RK
/// and returns the matching defect at the turning point. Never throws for
/// |epsilon| approaching 1; growth is controlled by renormalisation.
ShootResult shoot_defect(SystemKind system, const CouplingParams& p, double epsilon);

/// Scans the defect over eps_range on a fine mesh, polishes each sign change,
/// labels roots by node count and keeps those with <= n_max nodes.
std::vector<ShootResult> find_bound_states(SystemKind system, const CouplingParams& p,
                                           std::pair<double, double> eps_range, int n_max,
                                           int scan_points = 2000);

}  // namespace cdirac

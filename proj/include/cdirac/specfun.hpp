#pragma once

#include <functional>
#include <vector>

#include "cdirac/constants.hpp"
#include "cdirac/errors.hpp"

namespace cdirac::specfun {

double gamma_fn(double x);                       // Gamma(x), x > 0
double pochhammer(double x, int n);              // (x)_n as a finite product
double laguerre(int n, double alpha, double x);  // associated Laguerre L_n^alpha(x)
double hermite(int n, double x);                 // physicists' Hermite H_n(x)

/// Adaptive Gauss-Kronrod quadrature of f over (a, b) to absolute accuracy tol.
/// Either endpoint may be infinite; semi-infinite ranges are folded onto a
/// finite interval with an exponential substitution. Integrable power-law
/// endpoint behaviour is handled by panel refinement. Throws AccuracyError
/// (carrying the best estimate) when the panel budget is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = defaults::quad_tol);

enum class QuadratureKind { GaussLegendre, GaussLaguerre };

struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing
    std::vector<double> weights;  // all positive
    QuadratureKind kind;
};

QuadratureRule gauss_legendre(int n);  // on [-1, 1]
QuadratureRule gauss_laguerre(int n);  // weight e^{-x} on [0, inf)

/// Brent root finder on [lo, hi]; requires a sign change, else BracketError.
double find_root_brent(const std::function<double(double)>& f, double lo, double hi,
                       double tol = defaults::root_tol);

}  // namespace cdirac::specfun

#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "cdirac/errors.hpp"

namespace cdirac {

/// Strictly increasing sample points of one radial-type variable.
struct Grid {
    std::vector<double> x;

    int size() const { return static_cast<int>(x.size()); }
    double front() const { return x.front(); }
    double back() const { return x.back(); }

    static std::shared_ptr<const Grid> uniform(double a, double b, int n);
    static std::shared_ptr<const Grid> log_spaced(double a, double b, int n);
    /// Exponentially graded map x(t) = a + (b-a)(e^{sigma t}-1)/(e^sigma - 1),
    /// t uniform on [0,1]; cell sizes grow by a total factor e^sigma.
    static std::shared_ptr<const Grid> exp_mapped(double a, double b, int n, double sigma);
};

using GridPtr = std::shared_ptr<const Grid>;

enum class Variable { R, Rho, Y };

enum class SystemKind {
    HydrogenTilting,
    HydrogenFactorization,
    MorseTilting,
    MorseFactorization,
    LinearFactorization,
};

const char* system_name(SystemKind s);
const char* system_method(SystemKind s);  // "tilting" or "factorization"
bool is_hydrogen(SystemKind s);
bool is_morse(SystemKind s);
bool is_linear(SystemKind s);
Variable natural_variable(SystemKind s);
const char* variable_name(Variable v);

/// One spinor component sampled on a grid.
struct RadialFunction {
    GridPtr grid;
    std::vector<double> values;
    Variable variable = Variable::R;
    struct Meta {
        SystemKind system = SystemKind::HydrogenTilting;
        int n = 0;
        double epsilon = 0.0;
    } meta;

    double max_abs() const;
    /// |value at the decaying end| / max|values|; small for a captured tail.
    double tail_ratio() const;
};

/// Finite-difference weights for the m-th derivative at x0 from the nodes x
/// (Fornberg's algorithm). nx is the stencil length.
void fd_weights(const double* x, int nx, double x0, int m, double* w);

/// 5-point stencil derivative of sampled values at every node: centered in the
/// interior, one-sided at the two points next to each boundary. der = 1 or 2.
std::vector<double> fd_derivative(const Grid& g, const std::vector<double>& v, int der);

/// Local 4-point Lagrange interpolation; extrapolates with the edge cubic.
double interp_cubic(const Grid& g, const std::vector<double>& v, double x);

}  // namespace cdirac

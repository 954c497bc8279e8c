#include "cdirac/grid.hpp"

#include <algorithm>
#include <cmath>

namespace cdirac {

std::shared_ptr<const Grid> Grid::uniform(double a, double b, int n) {
    if (n < 2 || !(a < b)) throw DomainError("Grid::uniform: bad range");
    auto g = std::make_shared<Grid>();
    g->x.resize(n);
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) g->x[i] = a + h * i;
    g->x.back() = b;
    return g;
}

std::shared_ptr<const Grid> Grid::log_spaced(double a, double b, int n) {
    if (n < 2 || !(0 < a && a < b)) throw DomainError("Grid::log_spaced: bad range");
    auto g = std::make_shared<Grid>();
    g->x.resize(n);
    const double la = std::log(a), lb = std::log(b);
    const double h = (lb - la) / (n - 1);
    for (int i = 0; i < n; ++i) g->x[i] = std::exp(la + h * i);
    g->x.front() = a;
    g->x.back() = b;
    return g;
}

std::shared_ptr<const Grid> Grid::exp_mapped(double a, double b, int n, double sigma) {
    if (n < 2 || !(a < b) || !(sigma > 0)) throw DomainError("Grid::exp_mapped: bad range");
    auto g = std::make_shared<Grid>();
    g->x.resize(n);
    const double den = std::expm1(sigma);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        g->x[i] = a + (b - a) * std::expm1(sigma * t) / den;
    }
    g->x.front() = a;
    g->x.back() = b;
    return g;
}

const char* system_name(SystemKind s) {
    switch (s) {
        case SystemKind::HydrogenTilting: return "hydrogen-tilting";
        case SystemKind::HydrogenFactorization: return "hydrogen-factorization";
        case SystemKind::MorseTilting: return "morse-tilting";
        case SystemKind::MorseFactorization: return "morse-factorization";
        case SystemKind::LinearFactorization: return "linear-factorization";
    }
    return "?";
}

const char* system_method(SystemKind s) {
    switch (s) {
        case SystemKind::HydrogenTilting:
        case SystemKind::MorseTilting: return "tilting";
        default: return "factorization";
    }
}

bool is_hydrogen(SystemKind s) {
    return s == SystemKind::HydrogenTilting || s == SystemKind::HydrogenFactorization;
}
bool is_morse(SystemKind s) {
    return s == SystemKind::MorseTilting || s == SystemKind::MorseFactorization;
}
bool is_linear(SystemKind s) { return s == SystemKind::LinearFactorization; }

Variable natural_variable(SystemKind s) {
    if (is_hydrogen(s)) return Variable::R;
    if (is_morse(s)) return Variable::Rho;
    return Variable::Y;
}

const char* variable_name(Variable v) {
    switch (v) {
        case Variable::R: return "r";
        case Variable::Rho: return "rho";
        case Variable::Y: return "y";
    }
    return "?";
}

double RadialFunction::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double RadialFunction::tail_ratio() const {
    const double m = max_abs();
    if (m == 0.0) return 0.0;
    // decaying end: largest x for R and Y grids, smallest rho for Morse
    const double edge = (variable == Variable::Rho) ? values.front() : values.back();
    return std::abs(edge) / m;
}

void fd_weights(const double* x, int nx, double x0, int m, double* w) {
    // Fornberg (1988); c[j][k] = weight of node j for the k-th derivative.
    std::vector<double> c(static_cast<size_t>(nx) * (m + 1), 0.0);
    auto C = [&](int j, int k) -> double& { return c[static_cast<size_t>(j) * (m + 1) + k]; };
    double c1 = 1.0;
    double c4 = x[0] - x0;
    C(0, 0) = 1.0;
    for (int i = 1; i < nx; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    C(i, k) = c1 * (k * C(i - 1, k - 1) - c5 * C(i - 1, k)) / c2;
                C(i, 0) = -c1 * c5 * C(i - 1, 0) / c2;
            }
            for (int k = mn; k >= 1; --k)
                C(j, k) = (c4 * C(j, k) - k * C(j, k - 1)) / c3;
            C(j, 0) = c4 * C(j, 0) / c3;
        }
        c1 = c2;
    }
    for (int j = 0; j < nx; ++j) w[j] = C(j, m);
}

std::vector<double> fd_derivative(const Grid& g, const std::vector<double>& v, int der) {
    const int n = g.size();
    if (n < 5) throw DomainError("fd_derivative: need at least 5 grid points");
    if (static_cast<int>(v.size()) != n) throw DomainError("fd_derivative: size mismatch");
    std::vector<double> out(n);
    double w[5];
    for (int i = 0; i < n; ++i) {
        const int j0 = std::clamp(i - 2, 0, n - 5);
        fd_weights(&g.x[j0], 5, g.x[i], der, w);
        double s = 0.0;
        for (int k = 0; k < 5; ++k) s += w[k] * v[j0 + k];
        out[i] = s;
    }
    return out;
}

double interp_cubic(const Grid& g, const std::vector<double>& v, double x) {
    const int n = g.size();
    if (n < 4) throw DomainError("interp_cubic: need at least 4 grid points");
    auto it = std::lower_bound(g.x.begin(), g.x.end(), x);
    int i = static_cast<int>(it - g.x.begin());
    int j0 = std::clamp(i - 2, 0, n - 4);
    double y = 0.0;
    for (int a = 0; a < 4; ++a) {
        double l = 1.0;
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            l *= (x - g.x[j0 + b]) / (g.x[j0 + a] - g.x[j0 + b]);
        }
        y += l * v[j0 + a];
    }
    return y;
}

}  // namespace cdirac

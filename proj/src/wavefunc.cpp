#include "cdirac/wavefunc.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cdirac/specfun.hpp"

namespace cdirac {

using specfun::laguerre;
using specfun::hermite;
using specfun::pochhammer;
using specfun::integrate;

namespace {

void check_level(const CouplingParams& p, const EnergyLevel& lvl, SystemKind want) {
    if (natural_variable(lvl.system) != natural_variable(want))
        throw ConsistencyError("radial function: level belongs to a different system");
    const double res = std::abs(quantization_residual(want, p, lvl.n, lvl.epsilon));
    if (res > 1e-8 * (1.0 + lvl.n))
        throw ConsistencyError("radial function: level does not solve the quantization "
                               "condition for these parameters");
}

const HydrogenShape& hshape(const EnergyLevel& lvl) {
    return std::get<HydrogenShape>(lvl.shape);
}
const MorseShape& mshape(const EnergyLevel& lvl) { return std::get<MorseShape>(lvl.shape); }
const LinearShape& lshape(const EnergyLevel& lvl) { return std::get<LinearShape>(lvl.shape); }

}  // namespace

double hydrogen_g1(const CouplingParams& p, const EnergyLevel& lvl, double r) {
    const auto& sh = hshape(lvl);
    return std::pow(r, sh.gamma_ht + 1.0) * std::exp(-sh.beta_ht * r) *
           laguerre(lvl.n, 2.0 * sh.gamma_ht + 1.0, 2.0 * sh.beta_ht * r);
}

double hydrogen_g2(const CouplingParams& p, const EnergyLevel& lvl, double r) {
    const auto& sh = hshape(lvl);
    const double s = p.sin2eta(), c = p.cos2eta();
    const double g = sh.gamma_ht, beta = sh.beta_ht;
    const double x = 2.0 * beta * r;
    // first-order map applied to G1; the L_{n-1} term has no extra factor of r
    const double bracket = (-s / p.alpha + (2.0 * g + 1.0) / r - beta) *
                               laguerre(lvl.n, 2.0 * g + 1.0, x) -
                           2.0 * beta * laguerre(lvl.n - 1, 2.0 * g + 2.0, x);
    return p.alpha / (c + lvl.epsilon) * std::pow(r, g + 1.0) * std::exp(-beta * r) *
           bracket;
}

double morse_f1(const CouplingParams& p, const EnergyLevel& lvl, double rho) {
    const auto& sh = mshape(lvl);
    // Laguerre argument 2*gamma*rho: the single-gamma variant leaves an O(gamma)
    // defect in the radial equation, so the doubled argument is the solution.
    return std::pow(rho, sh.beta_mt) * std::exp(-sh.gamma_mt * rho) *
           laguerre(lvl.n, 2.0 * sh.beta_mt, 2.0 * sh.gamma_mt * rho);
}

double morse_f2(const CouplingParams& p, const EnergyLevel& lvl, double rho) {
    const auto& sh = mshape(lvl);
    const double s = p.sin2eta(), c = p.cos2eta();
    const double be = sh.beta_mt, ga = sh.gamma_mt, de = p.delta;
    const double x = 2.0 * ga * rho;
    const double lin = p.alpha * (p.a * c - p.b) / s + de * ga;
    const double bracket =
        (-s / p.alpha - de * be + lin * rho) * laguerre(lvl.n, 2.0 * be, x) +
        2.0 * de * ga * rho * laguerre(lvl.n - 1, 2.0 * be + 1.0, x);
    return p.alpha / (c + lvl.epsilon) * std::pow(rho, be) * std::exp(-ga * rho) * bracket;
}

double linear_g1(const CouplingParams& p, const EnergyLevel& lvl, double y) {
    const auto& sh = lshape(lvl);
    const double xi = std::sqrt(sh.nu) * y;
    return std::exp(-0.5 * sh.nu * y * y) * hermite(lvl.n, xi);
}

double linear_g2(const CouplingParams& p, const EnergyLevel& lvl, double y) {
    const auto& sh = lshape(lvl);
    const double c = p.cos2eta();
    const double sq = std::sqrt(sh.nu);
    const double xi = sq * y;
    return -p.alpha / (c + lvl.epsilon) * std::exp(-0.5 * sh.nu * y * y) *
           (sh.pi_coeff * hermite(lvl.n, xi) + sq * hermite(lvl.n + 1, xi));
}

namespace {

std::pair<RadialFunction, RadialFunction> sample_pair(
    const CouplingParams& p, const EnergyLevel& lvl, GridPtr grid, Variable var,
    double (*f1)(const CouplingParams&, const EnergyLevel&, double),
    double (*f2)(const CouplingParams&, const EnergyLevel&, double)) {
    RadialFunction a, b;
    a.grid = b.grid = grid;
    a.variable = b.variable = var;
    a.meta = b.meta = {lvl.system, lvl.n, lvl.epsilon};
    a.values.resize(grid->size());
    b.values.resize(grid->size());
    for (int i = 0; i < grid->size(); ++i) {
        a.values[i] = f1(p, lvl, grid->x[i]);
        b.values[i] = f2(p, lvl, grid->x[i]);
    }
    return {std::move(a), std::move(b)};
}

}  // namespace

std::pair<RadialFunction, RadialFunction> hydrogen_radial(const CouplingParams& p,
                                                          const EnergyLevel& lvl,
                                                          GridPtr grid) {
    check_level(p, lvl, SystemKind::HydrogenTilting);
    return sample_pair(p, lvl, grid, Variable::R, hydrogen_g1, hydrogen_g2);
}

std::pair<RadialFunction, RadialFunction> morse_radial(const CouplingParams& p,
                                                       const EnergyLevel& lvl,
                                                       GridPtr grid) {
    check_level(p, lvl, SystemKind::MorseTilting);
    if (!(std::abs(lvl.epsilon) < 1.0)) throw DomainError("morse_radial: |epsilon| >= 1");
    if (grid->back() > 1.0 + 1e-12 || !(grid->front() > 0.0))
        throw DomainError("morse_radial: rho grid must lie in (0, 1]");
    return sample_pair(p, lvl, grid, Variable::Rho, morse_f1, morse_f2);
}

std::pair<RadialFunction, RadialFunction> linear_radial(const CouplingParams& p,
                                                        const EnergyLevel& lvl,
                                                        GridPtr grid) {
    check_level(p, lvl, SystemKind::LinearFactorization);
    if (!(p.nu() > 0.0)) throw DomainError("linear_radial: nu must be positive");
    return sample_pair(p, lvl, grid, Variable::Y, linear_g1, linear_g2);
}

GridPtr default_grid(SystemKind system, const CouplingParams& p, const EnergyLevel& lvl,
                     int n_points) {
    if (is_hydrogen(system)) {
        const auto& sh = hshape(lvl);
        const double beta = sh.beta_ht;
        const double r_turn = 2.0 * (lvl.k + lvl.n) / beta;
        const double r_max = 2.0 * r_turn + 42.0 / beta;
        return Grid::exp_mapped(1e-7 * r_max, r_max, n_points, std::log(1e4));
    }
    if (is_morse(system)) {
        return Grid::uniform(1e-8, 1.0, n_points);
    }
    const auto& sh = lshape(lvl);
    const double y_turn = std::sqrt((2.0 * lvl.n + 1.0) / sh.nu);
    const double y_max = std::sqrt(y_turn * y_turn + 80.0 / sh.nu);
    return Grid::uniform(-y_max, y_max, n_points);
}

double norm_integral(const CouplingParams& p, const EnergyLevel& lvl, double tol) {
    if (is_hydrogen(lvl.system)) {
        const auto& sh = hshape(lvl);
        const double r_max = 2.0 * (2.0 * (lvl.k + lvl.n) / sh.beta_ht) + 60.0 / sh.beta_ht;
        auto f = [&](double r) {
            const double g1 = hydrogen_g1(p, lvl, r);
            const double g2 = hydrogen_g2(p, lvl, r);
            return (g1 * g1 + g2 * g2) * (1.0 + p.alpha * p.alpha * p.b / r);
        };
        return integrate(f, 0.0, r_max, tol);
    }
    if (is_morse(lvl.system)) {
        auto f = [&](double rho) {
            const double f1 = morse_f1(p, lvl, rho);
            const double f2 = morse_f2(p, lvl, rho);
            return (f1 * f1 + f2 * f2) * (1.0 + p.alpha * p.alpha * p.b * rho) /
                   (p.delta * rho);
        };
        return integrate(f, 0.0, 1.0, tol);
    }
    const auto& sh = lshape(lvl);
    const double y_max = std::sqrt((2.0 * lvl.n + 1.0) / sh.nu + 120.0 / sh.nu);
    auto f = [&](double y) {
        const double g1 = linear_g1(p, lvl, y);
        const double g2 = linear_g2(p, lvl, y);
        return g1 * g1 + g2 * g2;
    };
    return integrate(f, -y_max, y_max, tol);
}

NormConstant hydrogen_norm_constant(const CouplingParams& p, const EnergyLevel& lvl,
                                    double tol) {
    check_level(p, lvl, SystemKind::HydrogenTilting);
    const auto& sh = hshape(lvl);
    const double g = sh.gamma_ht, beta = sh.beta_ht, s = p.sin2eta();
    const int n = lvl.n;
    const double nfact = specfun::gamma_fn(n + 1.0);

    const double w1 = pochhammer(2.0 * g + 2.0, n) / nfact *
                          (1.0 + std::pow(s / (p.alpha * beta) - (2.0 * g + 1.0) / 2.0, 2)) +
                      4.0 * beta * beta * pochhammer(2.0 * g + 3.0, n) /
                          ((2.0 * g + 1.0) * nfact);
    const double w2 = pochhammer(2.0 * g + 1.0, n) / nfact *
                          (2.0 + 0.5 * std::pow(2.0 * g + 1.0, 2) *
                                     std::pow(1.0 - s / (p.alpha * beta * (2.0 * g + 1.0)), 2)) +
                      4.0 * beta * beta * pochhammer(2.0 * g + 2.0, n) /
                          ((2.0 * g + 1.0) * nfact);

    NormConstant nc;
    std::ostringstream detail;
    detail << "W1=" << w1 << " W2=" << w2;
    const double radicand = w1 + p.alpha * p.alpha * p.b * beta * w2;
    if (radicand > 0.0)
        nc.closed_form = std::pow(2.0 * beta, g + 0.5) / std::sqrt(radicand);
    else
        nc.closed_form = std::numeric_limits<double>::quiet_NaN();

    const double I = norm_integral(p, lvl);
    nc.numeric = 1.0 / std::sqrt(I);
    nc.closed_deviation = std::isfinite(nc.closed_form)
                              ? std::abs(nc.closed_form * nc.closed_form * I - 1.0)
                              : std::numeric_limits<double>::infinity();
    if (nc.closed_deviation <= tol) {
        nc.value = nc.closed_form;
        nc.method = NormConstant::Method::ClosedForm;
    } else {
        nc.value = nc.numeric;
        nc.method = NormConstant::Method::Numeric;
    }
    nc.detail = detail.str();
    return nc;
}

double morse_overlap_integral(int m, int n, double alpha_exp, double beta_idx,
                              double gamma_idx, double lambda_pow, double mu_scale,
                              double tol) {
    if (m < 0 || n < 0) return 0.0;  // L_{-1} == 0
    if (!(alpha_exp > 0.0))
        throw DomainError("morse_overlap_integral: alpha_exp must be positive");
    if (!(lambda_pow > -1.0))
        throw DomainError("morse_overlap_integral: lambda_pow must exceed -1");

    auto core = [&](double t) {
        const double rho = std::exp(-t);
        return std::exp(-alpha_exp * t - mu_scale * rho) *
               laguerre(m, beta_idx, mu_scale * rho) * laguerre(n, gamma_idx, mu_scale * rho);
    };
    // rho = e^{-t}; on [0,1] absorb the t^lambda endpoint power with t = u^q
    double head;
    if (lambda_pow == 0.0) {
        head = integrate(core, 0.0, 1.0, 0.5 * tol);
    } else {
        const double q = std::max(1.0, std::ceil(1.0 / (1.0 + lambda_pow)));
        auto sub = [&](double u) {
            const double t = std::pow(u, q);
            return q * std::pow(u, q * (1.0 + lambda_pow) - 1.0) * core(t);
        };
        head = integrate(sub, 0.0, 1.0, 0.5 * tol);
    }
    auto tail_f = [&](double t) { return std::pow(t, lambda_pow) * core(t); };
    const double tail =
        integrate(tail_f, 1.0, std::numeric_limits<double>::infinity(), 0.5 * tol);
    return head + tail;
}

NormConstant morse_norm_constant(const CouplingParams& p, const EnergyLevel& lvl,
                                 double tol) {
    check_level(p, lvl, SystemKind::MorseTilting);
    const auto& sh = mshape(lvl);
    const double nu = sh.beta_mt;           // rho-power index
    const double mu = sh.gamma_mt;          // Laguerre/exponential scale
    const double lam = p.alpha / p.delta - 1.0;
    const double ce = p.cos2eta() + lvl.epsilon;
    const int n = lvl.n;

    NormConstant nc;
    std::ostringstream detail;
    const double k1 = 1.0 + 4.0 * p.alpha * p.alpha * p.a * p.a / (p.delta * p.delta * mu * mu);
    const double k2 = -4.0 * p.alpha * p.alpha * p.a / (mu * ce);
    const double k3 = p.alpha * p.alpha * p.delta * p.delta / (ce * ce);
    detail << "K1=" << k1 << " K2=" << k2 << " K3=" << k3;

    try {
        auto I = [&](int mm, int nn, double ae) {
            return morse_overlap_integral(mm, nn, ae, 2.0 * nu, 2.0 * nu, lam, mu);
        };
        const double ab2 = p.alpha * p.alpha * p.b;
        const double t1 = I(n, n, 2.0 * nu) + ab2 * I(n, n, 2.0 * nu - 1.0);
        const double t2 = I(n, n - 1, 2.0 * nu) + ab2 * I(n, n - 1, 2.0 * nu - 1.0);
        const double t3 = I(n - 1, n - 1, 2.0 * nu) + ab2 * I(n - 1, n - 1, 2.0 * nu - 1.0);
        const double sum = k1 * t1 - k2 * (n + 2.0 * nu) * t2 +
                           k3 * std::pow(n + 2.0 * nu, 2) * t3;
        nc.closed_form = (sum > 0.0) ? 1.0 / std::sqrt(sum)
                                     : std::numeric_limits<double>::quiet_NaN();
    } catch (const DomainError&) {
        nc.closed_form = std::numeric_limits<double>::quiet_NaN();
    }

    const double I = norm_integral(p, lvl);
    nc.numeric = 1.0 / std::sqrt(I);
    nc.closed_deviation = std::isfinite(nc.closed_form)
                              ? std::abs(nc.closed_form * nc.closed_form * I - 1.0)
                              : std::numeric_limits<double>::infinity();
    if (nc.closed_deviation <= tol) {
        nc.value = nc.closed_form;
        nc.method = NormConstant::Method::ClosedForm;
    } else {
        nc.value = nc.numeric;
        nc.method = NormConstant::Method::Numeric;
    }
    nc.detail = detail.str();
    return nc;
}

}  // namespace cdirac

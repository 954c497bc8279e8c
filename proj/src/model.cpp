#include "cdirac/model.hpp"

#include <cmath>

namespace cdirac {

double CouplingParams::sin2eta() const { return std::sin(2.0 * eta); }
double CouplingParams::cos2eta() const { return std::cos(2.0 * eta); }

double CouplingParams::theta() const {
    return alpha * (Z * cos2eta() - b) / sin2eta();
}

double CouplingParams::nu() const {
    return alpha * (b - a * cos2eta()) / sin2eta();
}

double CouplingParams::gamma_mt() const {
    return alpha * (a * cos2eta() + b) / (sin2eta() * delta);
}

double CouplingParams::big_gamma() const {
    return sin2eta() / (a * cos2eta() + b);
}

std::vector<std::string> validate_params(const CouplingParams& p, SystemKind system) {
    std::vector<std::string> bad;
    if (!(p.alpha > 0.0)) bad.push_back("alpha must be positive");
    if (!(p.mu > 0.0)) bad.push_back("mu must be positive");
    if (!(p.eta > 0.0) || !(p.eta < 1.57079632679489662))
        bad.push_back("eta must lie in (0, pi/2)");
    if (std::abs(p.sin2eta()) < defaults::sin2eta_floor)
        bad.push_back("sin(2eta)=0 singular coupling");
    if (is_morse(system) && !(p.delta > 0.0))
        bad.push_back("delta must be positive for the Morse system");
    if (is_linear(system) && bad.empty() && !(p.nu() > 0.0))
        bad.push_back("nu = alpha(b - a cos2eta)/sin2eta must be positive for the linear system");
    return bad;
}

void validate_or_throw(const CouplingParams& p, SystemKind system) {
    auto bad = validate_params(p, system);
    if (!bad.empty()) throw ValidationError(std::move(bad));
}

double OdeCoeffs::q(double x) const {
    switch (form) {
        case Form::CoulombLike:
            return -(A / x + B / (x * x) + C);
        case Form::ShiftedOscillator:
            return nu2 * x * x - shift;
        case Form::ExpWell: {
            const double z = std::exp(-edelta * x);
            return -(eA * z + eB * z * z + eC);
        }
    }
    return 0.0;
}

OdeCoeffs decoupled_ode_coeffs(SystemKind system, const CouplingParams& p, double epsilon) {
    validate_or_throw(p, system);
    OdeCoeffs c;
    c.system = system;
    const double al = p.alpha;
    if (is_hydrogen(system)) {
        const double th = p.theta();
        c.form = OdeCoeffs::Form::CoulombLike;
        c.A = -2.0 * (p.b + epsilon * p.Z);
        c.B = -th * (th + 1.0);
        c.C = (epsilon * epsilon - p.mu * p.mu) / (al * al);
        return c;
    }
    if (is_morse(system)) {
        // equation for sqrt(rho) * F(rho); F is the sampled spinor component
        const double g = p.gamma_mt();
        const double beta2 = (1.0 - epsilon * epsilon) / (al * al * p.delta * p.delta);
        c.form = OdeCoeffs::Form::CoulombLike;
        c.A = g + 2.0 * (epsilon * p.a - p.b) / (p.delta * p.delta);
        c.B = 0.25 - beta2;
        c.C = -g * g;
        return c;
    }
    const double nu = p.nu();
    const double vshift = std::pow(p.b + epsilon * p.a, 2) / (nu * nu) - nu;
    c.form = OdeCoeffs::Form::ShiftedOscillator;
    c.nu2 = nu * nu;
    c.shift = vshift - (1.0 - epsilon * epsilon) / (al * al);
    return c;
}

OdeCoeffs morse_ode_coeffs_r(const CouplingParams& p, double epsilon) {
    validate_or_throw(p, SystemKind::MorseTilting);
    OdeCoeffs c;
    c.system = SystemKind::MorseTilting;
    c.form = OdeCoeffs::Form::ExpWell;
    const double al = p.alpha, s = p.sin2eta(), cc = p.cos2eta();
    const double dd = al * p.delta * (p.a * cc + p.b) / s;
    c.eA = dd + 2.0 * (epsilon * p.a - p.b);
    c.eB = -std::pow(al * (p.a * cc + p.b) / s, 2);
    c.eC = (epsilon * epsilon - 1.0) / (al * al);
    c.edelta = p.delta;
    return c;
}

namespace {

double z_of(SystemKind system, const CouplingParams& p, double r) {
    if (is_hydrogen(system)) return 1.0 / r;
    if (is_morse(system)) return std::exp(-p.delta * r);
    return r;
}

}  // namespace

double effective_vector_potential(SystemKind system, const CouplingParams& p, double r) {
    if (!(r > 0.0)) throw DomainError("effective_vector_potential: r must be positive");
    validate_or_throw(p, system);
    const double s = p.sin2eta(), c = p.cos2eta();
    const double coupling_a = is_hydrogen(system) ? p.Z : p.a;
    const double z = z_of(system, p, r);
    const double V = coupling_a * z;
    const double U = p.b * z;
    return (p.alpha * c / s) * (V / c - U) -
           (p.angular_lambda / r) * (1.0 + p.alpha * p.alpha * U);
}

RadialFunction lower_component(SystemKind system, const CouplingParams& p, double epsilon,
                               const RadialFunction& g1) {
    validate_or_throw(p, system);
    if (g1.grid->size() < 5)
        throw DomainError("lower_component: need at least 5 grid points");
    const double s = p.sin2eta(), c = p.cos2eta();
    if (std::abs(c + epsilon) < 1e-12)
        throw DomainError("lower_component: cos(2eta) + epsilon = 0, singular denominator");
    const double pref = p.alpha / (c + epsilon);
    const double coupling_a = is_hydrogen(system) ? p.Z : p.a;

    const auto& x = g1.grid->x;
    std::vector<double> dv = fd_derivative(*g1.grid, g1.values, 1);

    RadialFunction g2 = g1;
    for (int i = 0; i < g1.grid->size(); ++i) {
        double z, ddr;
        switch (g1.variable) {
            case Variable::R:
                z = z_of(system, p, x[i]);
                ddr = dv[i];
                break;
            case Variable::Rho:
                z = x[i];
                ddr = -p.delta * x[i] * dv[i];
                break;
            case Variable::Y: {
                // y = r + (b + eps a)/nu^2; d/dr = d/dy
                const double nu = p.nu();
                const double r = x[i] - (p.b + epsilon * p.a) / (nu * nu);
                z = r;
                ddr = dv[i];
                break;
            }
            default:
                z = 0;
                ddr = 0;
        }
        const double w = -s / p.alpha + (p.alpha / s) * (c * coupling_a - p.b) * z;
        g2.values[i] = pref * (w * g1.values[i] + ddr);
    }
    return g2;
}

}  // namespace cdirac

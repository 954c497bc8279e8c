#include "cdirac/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include "cdirac/specfun.hpp"

namespace cdirac {

namespace {

int thread_cap() {
    if (const char* env = std::getenv("CURVED_DIRAC_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

void parallel_for(int n, const std::function<void(int)>& body) {
    const int nt = std::min(thread_cap(), n);
    if (nt <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

struct QProblem {
    std::function<double(double)> q;  // G'' = q(x) G
    double x_lo, x_hi;
    double inner_power = 0.0;   // series exponent at x_lo (0 = plain decaying start)
    double inner_c1 = 0.0;      // first series correction
    bool gaussian_ends = false; // decaying starts at both ends (full-line problem)
};

QProblem make_problem(SystemKind system, const CouplingParams& p, double eps) {
    QProblem pr;
    if (is_linear(system)) {
        const OdeCoeffs c = decoupled_ode_coeffs(system, p, eps);
        pr.q = [c](double y) { return c.q(y); };
        const double nu = std::sqrt(c.nu2);
        const double y_turn = std::sqrt(std::max(c.shift, 0.0)) / nu;
        const double y_end = std::sqrt(y_turn * y_turn + 80.0 / nu);
        pr.x_lo = -y_end;
        pr.x_hi = y_end;
        pr.gaussian_ends = true;
        return pr;
    }
    const OdeCoeffs c = decoupled_ode_coeffs(system, p, eps);
    pr.q = [c](double x) { return c.q(x); };
    const double ll = -c.B;            // l(l+1)
    const double zeta = 0.5 * c.A;     // Coulomb-like strength
    const double kap2 = std::max(-c.C, 1e-12);
    const double kap = std::sqrt(kap2);
    const double disc = zeta * zeta - ll * kap2;
    double x_turn = (disc > 0.0 && zeta > 0.0) ? (zeta + std::sqrt(disc)) / kap2 : 0.0;
    x_turn = std::max(x_turn, 1.0 / kap);
    pr.x_hi = std::min(x_turn + 42.0 / kap, 1e5 * x_turn + 1e3);
    pr.x_lo = 1e-5 * std::min(1.0 / kap, x_turn);
    pr.inner_power = 0.5 + std::sqrt(std::max(0.25 - c.B, 0.0));
    pr.inner_c1 = -zeta / pr.inner_power;
    return pr;
}

// Dormand-Prince 5(4) on (u, v) with v = u'. Counts sign changes of u and
// rescales whenever the magnitude threatens overflow.
struct RkState {
    double u, v;
    int nodes = 0;
};

void rk_integrate(const std::function<double(double)>& q, double x0, double x1,
                  RkState& st, double rtol) {
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double dir = (x1 > x0) ? 1.0 : -1.0;
    double x = x0;
    double h = dir * std::min(1e-3 * std::abs(x1 - x0) + 1e-12, 0.1);
    auto rhs = [&q](double xx, double uu, double vv, double& du, double& dv) {
        du = vv;
        dv = q(xx) * uu;
    };
    int steps = 0;
    const int max_steps = 2000000;
    double prev_sign = (st.u > 0) - (st.u < 0);
    while (dir * (x1 - x) > 1e-14 * (std::abs(x) + std::abs(x1)) && steps < max_steps) {
        if (dir * (x + h - x1) > 0) h = x1 - x;
        double k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v, k5u, k5v, k6u, k6v, k7u, k7v;
        rhs(x, st.u, st.v, k1u, k1v);
        rhs(x + c2 * h, st.u + h * a21 * k1u, st.v + h * a21 * k1v, k2u, k2v);
        rhs(x + c3 * h, st.u + h * (a31 * k1u + a32 * k2u), st.v + h * (a31 * k1v + a32 * k2v),
            k3u, k3v);
        rhs(x + c4 * h, st.u + h * (a41 * k1u + a42 * k2u + a43 * k3u),
            st.v + h * (a41 * k1v + a42 * k2v + a43 * k3v), k4u, k4v);
        rhs(x + c5 * h, st.u + h * (a51 * k1u + a52 * k2u + a53 * k3u + a54 * k4u),
            st.v + h * (a51 * k1v + a52 * k2v + a53 * k3v + a54 * k4v), k5u, k5v);
        rhs(x + h, st.u + h * (a61 * k1u + a62 * k2u + a63 * k3u + a64 * k4u + a65 * k5u),
            st.v + h * (a61 * k1v + a62 * k2v + a63 * k3v + a64 * k4v + a65 * k5v), k6u,
            k6v);
        const double u5 = st.u + h * (b1 * k1u + b3 * k3u + b4 * k4u + b5 * k5u + b6 * k6u);
        const double v5 = st.v + h * (b1 * k1v + b3 * k3v + b4 * k4v + b5 * k5v + b6 * k6v);
        rhs(x + h, u5, v5, k7u, k7v);
        const double eu =
            h * (e1 * k1u + e3 * k3u + e4 * k4u + e5 * k5u + e6 * k6u + e7 * k7u);
        const double ev =
            h * (e1 * k1v + e3 * k3v + e4 * k4v + e5 * k5v + e6 * k6v + e7 * k7v);
        const double scale_u = std::abs(st.u) + std::abs(h * st.v) + 1e-300;
        const double scale_v = std::abs(st.v) + std::abs(h * q(x) * st.u) + 1e-300;
        const double err = std::max(std::abs(eu) / scale_u, std::abs(ev) / scale_v) / rtol;
        if (err <= 1.0) {
            x += h;
            st.u = u5;
            st.v = v5;
            const double s = (st.u > 0) - (st.u < 0);
            if (s != 0.0 && prev_sign != 0.0 && s != prev_sign) ++st.nodes;
            if (s != 0.0) prev_sign = s;
            if (std::abs(st.u) > 1e100 || std::abs(st.v) > 1e100) {
                const double m = std::max(std::abs(st.u), std::abs(st.v));
                st.u /= m;
                st.v /= m;
            }
        }
        const double fac = std::clamp(0.9 * std::pow(err + 1e-300, -0.2), 0.2, 5.0);
        h *= fac;
        ++steps;
    }
}

double find_match_point(const QProblem& pr) {
    // outermost sign change of q (the outer classical turning point)
    const int ns = 512;
    double x_prev = pr.x_lo;
    double q_prev = pr.q(x_prev);
    double match = 0.5 * (pr.x_lo + pr.x_hi);
    bool found = false;
    for (int i = 1; i <= ns; ++i) {
        const double x = pr.x_lo + (pr.x_hi - pr.x_lo) * i / ns;
        const double qi = pr.q(x);
        if ((qi > 0) != (q_prev > 0)) {
            match = 0.5 * (x + x_prev);
            found = true;
        }
        x_prev = x;
        q_prev = qi;
    }
    if (!found) return 0.5 * (pr.x_lo + pr.x_hi);
    return match;
}

}  // namespace

double ode_residual(SystemKind system, const CouplingParams& p, double epsilon,
                    const RadialFunction& fn, double value_floor) {
    const int n = fn.grid->size();
    if (n < 9) throw DomainError("ode_residual: grid too small");
    std::vector<double> u = fn.values;
    OdeCoeffs coeffs;
    if (is_morse(system) && fn.variable == Variable::Rho) {
        coeffs = decoupled_ode_coeffs(system, p, epsilon);
        for (int i = 0; i < n; ++i) u[i] *= std::sqrt(fn.grid->x[i]);  // half-power lift
    } else if (is_morse(system) && fn.variable == Variable::R) {
        coeffs = morse_ode_coeffs_r(p, epsilon);
    } else {
        coeffs = decoupled_ode_coeffs(system, p, epsilon);
    }

    double umax = 0.0;
    for (double v : u) umax = std::max(umax, std::abs(v));
    if (umax == 0.0) return 0.0;

    const std::vector<double> upp = fd_derivative(*fn.grid, u, 2);
    const int trim = defaults::boundary_trim;
    double worst = 0.0, qmax = 1.0;
    for (int i = trim; i < n - trim; ++i) {
        if (std::abs(u[i]) < value_floor * umax) continue;
        const double qi = coeffs.q(fn.grid->x[i]);
        worst = std::max(worst, std::abs(upp[i] - qi * u[i]));
        qmax = std::max(qmax, std::abs(qi));
    }
    return worst / (umax * qmax);
}

ShootResult shoot_defect(SystemKind system, const CouplingParams& p, double epsilon) {
    const QProblem pr = make_problem(system, p, epsilon);
    const double xm = find_match_point(pr);

    RkState left;
    if (pr.gaussian_ends) {
        left.u = 1.0;
        left.v = std::sqrt(std::max(pr.q(pr.x_lo), 0.0));  // decaying inward from the left
    } else {
        const double x0 = pr.x_lo;
        left.u = std::pow(x0, pr.inner_power) * (1.0 + pr.inner_c1 * x0);
        left.v = pr.inner_power * std::pow(x0, pr.inner_power - 1.0) *
                     (1.0 + pr.inner_c1 * x0) +
                 std::pow(x0, pr.inner_power) * pr.inner_c1;
        const double m = std::max(std::abs(left.u), std::abs(left.v));
        if (m > 0) {
            left.u /= m;
            left.v /= m;
        }
    }
    rk_integrate(pr.q, pr.x_lo, xm, left, defaults::shoot_rtol);

    RkState right;
    right.u = 1.0;
    right.v = -std::sqrt(std::max(pr.q(pr.x_hi), 0.0));
    rk_integrate(pr.q, pr.x_hi, xm, right, defaults::shoot_rtol);

    ShootResult res;
    res.epsilon = epsilon;
    const double w1 = left.v * right.u;
    const double w2 = right.v * left.u;
    res.defect = (w1 - w2) / (std::abs(w1) + std::abs(w2) + 1e-300);
    // glue with matched sign so the node count is that of one solution
    const bool flip = (left.u * right.u < 0.0);
    res.n_nodes = left.nodes + right.nodes + 0 * flip;
    res.converged = std::abs(res.defect) < defaults::shoot_defect_tol;
    return res;
}

std::vector<ShootResult> find_bound_states(SystemKind system, const CouplingParams& p,
                                           std::pair<double, double> eps_range, int n_max,
                                           int scan_points) {
    if (!(eps_range.first < eps_range.second))
        throw DomainError("find_bound_states: empty or reversed range");
    const int ns = std::max(scan_points, 16);
    std::vector<double> mesh(ns), defect(ns);
    for (int i = 0; i < ns; ++i)
        mesh[i] = eps_range.first + (eps_range.second - eps_range.first) * i / (ns - 1.0);
    parallel_for(ns, [&](int i) { defect[i] = shoot_defect(system, p, mesh[i]).defect; });

    std::vector<int> hits;
    for (int i = 0; i + 1 < ns; ++i)
        if ((defect[i] > 0) != (defect[i + 1] > 0)) hits.push_back(i);

    std::vector<ShootResult> roots(hits.size());
    parallel_for(static_cast<int>(hits.size()), [&](int idx) {
        double lo = mesh[hits[idx]], hi = mesh[hits[idx] + 1];
        double flo = defect[hits[idx]];
        for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double fm = shoot_defect(system, p, mid).defect;
            if ((fm > 0) == (flo > 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        roots[idx] = shoot_defect(system, p, 0.5 * (lo + hi));
    });

    std::vector<ShootResult> out;
    for (const auto& r : roots) {
        if (!r.converged) continue;  // bisection landed on a pole, not a root
        if (r.n_nodes > n_max) continue;
        bool dup = false;
        for (const auto& o : out)
            if (std::abs(o.epsilon - r.epsilon) < 1e-9 && o.n_nodes == r.n_nodes) dup = true;
        if (!dup) out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](const ShootResult& a, const ShootResult& b) {
        if (a.n_nodes != b.n_nodes) return a.n_nodes < b.n_nodes;
        return a.epsilon < b.epsilon;
    });
    return out;
}

}  // namespace cdirac

#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cdirac/model.hpp"

namespace cdirac {

enum class Branch { Plus, Minus };

struct HydrogenShape {
    double gamma_ht;  // r^(gamma+1) power at the origin
    double beta_ht;   // exponential decay rate
};
struct MorseShape {
    double beta_mt;    // rho-power / decay index
    double gamma_mt;   // exponential argument scale in rho
    double big_gamma;  // Gamma = sin2eta/(a cos2eta + b)
};
struct LinearShape {
    double nu;        // oscillator frequency
    double pi_coeff;  // lower-component H_n coefficient
    double v_shift;   // completed-square constant term
};

struct EnergyLevel {
    SystemKind system;
    int n = 0;                // radial quantum number (= node count)
    double epsilon = 0.0;     // energy parameter
    double k = 0.0;           // Bargmann index of the level's representation
    Branch branch = Branch::Plus;
    std::variant<HydrogenShape, MorseShape, LinearShape> shape;
};

/// Bargmann index of the discrete-series representation. Morse needs epsilon
/// (k depends on the energy); hydrogen and linear ignore it. The linear system
/// carries two towers with the same Casimir -3/16; the odd tower (k = 3/4) is
/// selected with the flag.
double bargmann_index(SystemKind system, const CouplingParams& p,
                      std::optional<double> epsilon = std::nullopt,
                      bool linear_odd_tower = false);

EnergyLevel energy_hydrogen(const CouplingParams& p, int n);
EnergyLevel energy_morse(const CouplingParams& p, int n, Branch branch);
EnergyLevel energy_linear(const CouplingParams& p, int n, Branch branch = Branch::Plus);

/// Raw closed-form Morse branch value (no validity filtering); the validated
/// constructor is energy_morse.
double morse_branch_value(const CouplingParams& p, int n, Branch branch);

/// Largest n with at least one valid bound branch; -1 if none.
int morse_n_max(const CouplingParams& p);

/// All valid Morse levels at radial number n (0, 1 or 2 entries).
std::vector<EnergyLevel> morse_levels(const CouplingParams& p, int n);

/// LHS - (k + n) of the system's quantization condition; zero at eigenvalues.
/// Tilting and factorization variants are implemented as separate evaluation
/// routes and must agree to rounding.
double quantization_residual(SystemKind system, const CouplingParams& p, int n,
                             double epsilon);

/// Brent root of the quantization residual over the bracket; the in-repo
/// oracle for the closed forms.
double solve_quantization(SystemKind system, const CouplingParams& p, int n,
                          std::pair<double, double> bracket,
                          double tol = defaults::root_tol);

}  // namespace cdirac

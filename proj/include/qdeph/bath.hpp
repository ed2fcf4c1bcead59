// bath.hpp — bosonic bath spectral densities and the two bath integrals gamma(t), Phi(t)
//
// Units: omega_c = 1. Frequencies are in units of omega_c, times in 1/omega_c.
//
//   gamma(t) = int_0^inf dw J(w) coth(beta w / 2) (1 - cos w t) / w^2
//   Phi(t)   = int_0^inf dw J(w) sin(w t) / w^2
//
// with J(w) = lambda_s w^s e^{-w} for the Ohmic family, or J(w) = sum_k 4 |g_k|^2 delta(w - w_k)
// for a discrete set of modes.

#pragma once

#include <variant>
#include <vector>

namespace qdeph {

struct OhmicFamily {
    double s = 1.0;       // spectral exponent: <1 sub-Ohmic, 1 Ohmic, >1 super-Ohmic
    double lambda = 1.0;  // dimensionless coupling lambda_s
};

struct DiscreteMode {
    double omega = 1.0;  // > 0
    double g2 = 0.0;     // |g_k|^2 >= 0
};

struct DiscreteBath {
    std::vector<DiscreteMode> modes;
};

class BathSpec {
public:
    static BathSpec ohmic(double s, double lambda);
    static BathSpec discrete(std::vector<DiscreteMode> modes);

    const std::variant<OhmicFamily, DiscreteBath>& model() const noexcept { return model_; }
    bool is_ohmic_family() const noexcept { return std::holds_alternative<OhmicFamily>(model_); }

private:
    explicit BathSpec(std::variant<OhmicFamily, DiscreteBath> m) : model_(std::move(m)) {}
    std::variant<OhmicFamily, DiscreteBath> model_;
};

// Inverse temperature in cutoff units.
class ThermalContext {
public:
    explicit ThermalContext(double beta_omega_c);
    static ThermalContext from_qubit(double beta_omega0, double omega0_over_omegac);

    double beta_omega_c() const noexcept { return beta_; }

private:
    double beta_;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    // Skip closed-form fast paths (Ohmic s = 1 Phi) and always integrate.
    bool force_quadrature = false;
};

// J(w) of the Ohmic family.
double spectral_density(const OhmicFamily& b, double omega);

// coth(x) for x > 0 with a series below 1e-4.
double coth_stable(double x);

double gamma_dynamical(const BathSpec& b, const ThermalContext& th, double t,
                       const QuadratureOptions& opt = {});
double phi_correlation(const BathSpec& b, double t, const QuadratureOptions& opt = {});

// Uniform midpoint discretization of an Ohmic-family density on (0, omega_max].
BathSpec discretize(const OhmicFamily& b, int n_modes, double omega_max);

}  // namespace qdeph

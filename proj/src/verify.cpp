#include "qdeph/verify.hpp"

#include "qdeph/csv.hpp"
#include "qdeph/errors.hpp"
#include "qdeph/kernel_params.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>

namespace qdeph {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kKernelTol = 1e-8;
constexpr double kOracleTol = 1e-6;

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    BlochDirection direction() { return {std::acos(uniform(-1.0, 1.0)), uniform(-kPi, kPi)}; }

private:
    std::mt19937_64 rng_;
};

double max_abs(const QubitOperator& m) { return m.cwiseAbs().maxCoeff(); }

void add(VerifyReport& r, const std::string& suite, const std::string& name, double err, double tol) {
    r.cases.push_back({suite, name, err, tol, std::isfinite(err) && err <= tol});
}

// Runs f over n random draws and records the largest error.
void scan(VerifyReport& r, const std::string& suite, const std::string& name, int n, double tol,
          const std::function<double(Sampler&)>& f) {
    Sampler rng(0x5eed + std::hash<std::string>{}(name) % 1000);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) worst = std::max(worst, f(rng));
    add(r, suite, name, worst, tol);
}

void algebra_suite(VerifyReport& r) {
    const std::string s = "algebra";
    scan(r, s, "completeness |a><a| + |-a><-a| = I", 200, kAlgebraTol, [](Sampler& g) {
        const auto a = g.direction();
        return max_abs(state_from_direction(a).projector() +
                       state_from_direction(antipodal_direction(a)).projector() - QubitOperator::Identity());
    });
    scan(r, s, "direction unitary U(a)^dag U(a) = I", 200, kAlgebraTol,
         [](Sampler& g) { return unitarity_residual(direction_unitary(g.direction())); });
    scan(r, s, "U(a)|1> = |a>, U(a)|0> = |-a>", 200, kAlgebraTol, [](Sampler& g) {
        const auto a = g.direction();
        const QubitOperator u = direction_unitary(a);
        const double e1 = (u.col(0) - state_from_direction(a).vector()).cwiseAbs().maxCoeff();
        const QubitState m(u.col(1));
        const double e0 = max_abs(m.projector() - state_from_direction(antipodal_direction(a)).projector());
        return std::max(e1, e0);
    });
    scan(r, s, "U(b,a)|a> = |b>", 200, kAlgebraTol, [](Sampler& g) {
        const auto a = g.direction();
        const auto b = g.direction();
        return (relative_unitary(b, a) * state_from_direction(a).vector() - state_from_direction(b).vector())
            .cwiseAbs()
            .maxCoeff();
    });
    scan(r, s, "sigma(a)|+-a> = +-|+-a>", 200, kAlgebraTol, [](Sampler& g) {
        const auto a = g.direction();
        const QubitOperator sa = spin_component(a);
        const auto pa = state_from_direction(a).vector();
        const auto ma = state_from_direction(antipodal_direction(a)).vector();
        return std::max((sa * pa - pa).cwiseAbs().maxCoeff(), (sa * ma + ma).cwiseAbs().maxCoeff());
    });
    scan(r, s, "effects resolve the identity and are projectors", 200, kAlgebraTol, [](Sampler& g) {
        const auto ops = scheme_operators(scheme::general(g.direction(), g.direction(), g.direction()));
        QubitOperator sum = QubitOperator::Zero();
        double err = 0.0;
        for (const auto& op : ops) {
            sum += op.effect;
            err = std::max(err, max_abs(op.effect * op.effect - op.effect));
            err = std::max(err, max_abs(op.omega.adjoint() * op.omega - op.effect));
        }
        return std::max(err, max_abs(sum - QubitOperator::Identity()));
    });
    scan(r, s, "scheme ii: sum Omega Omega^dag = I", 200, kAlgebraTol, [](Sampler& g) {
        QubitOperator sum = QubitOperator::Zero();
        for (const auto& op : scheme_operators(scheme::ii(g.direction(), g.direction())))
            sum += op.omega * op.omega.adjoint();
        return max_abs(sum - QubitOperator::Identity());
    });
    scan(r, s, "initial averages: general vs scheme ii/iii/iii' closed forms", 1000, kAlgebraTol, [](Sampler& g) {
        const auto a = g.direction();
        const auto b = g.direction();
        const double bw = g.uniform(0.05, 5.0);
        auto diff = [](const InitialAverages& x, const InitialAverages& y) {
            return std::max(std::abs(x.sigma_plus - y.sigma_plus), std::abs(x.sigma_z - y.sigma_z));
        };
        return std::max({diff(initial_averages(scheme::ii(a, b), bw), initial_averages_scheme_ii(a, b, bw)),
                         diff(initial_averages(scheme::iii(a, b), bw), initial_averages_scheme_iii(b)),
                         diff(initial_averages(scheme::iii_prime(a, b), bw),
                              initial_averages_scheme_iii_prime(a, b, bw))});
    });
    scan(r, s, "gamma_cor, chi: general vs scheme ii/iii/iii' closed forms", 1000, kAlgebraTol, [](Sampler& g) {
        const auto a = BlochDirection(g.uniform(0.0, 1.4), g.uniform(-kPi, kPi));  // keep cos(theta_a) away from 0
        const auto b = BlochDirection(g.uniform(0.1, kPi - 0.1), g.uniform(-kPi, kPi));
        const double bw = g.uniform(0.05, 5.0);
        const double phi = g.uniform(-2.0 * kPi, 2.0 * kPi);
        const auto pii = scheme_kernel_params(scheme::ii(a, b), bw);
        const auto piii = scheme_kernel_params(scheme::iii(a, b), bw);
        const auto pip = scheme_kernel_params(scheme::iii_prime(a, b), bw);
        return std::max({std::abs(gamma_cor_general(pii, phi) - gamma_cor_scheme_ii(bw, phi)),
                         std::abs(gamma_cor_general(piii, phi) - gamma_cor_scheme_iii(bw, phi)),
                         std::abs(gamma_cor_general(pip, phi) - gamma_cor_scheme_ii(bw, phi)),
                         std::abs(std::remainder(chi_general(pii, phi) - chi_scheme_ii(bw, phi), 2 * kPi)),
                         std::abs(std::remainder(chi_general(piii, phi) - chi_scheme_iii(bw, phi), 2 * kPi))});
    });
    scan(r, s, "scheme iii == selective with <sigma_3> = 0", 1000, kAlgebraTol, [](Sampler& g) {
        const double bw = g.uniform(0.05, 5.0);
        const double phi = g.uniform(-2.0 * kPi, 2.0 * kPi);
        return std::max(std::abs(gamma_cor_scheme_iii(bw, phi) - gamma_cor_selective(0.0, bw, phi)),
                        std::abs(chi_scheme_iii(bw, phi) - chi_selective(0.0, bw, phi)));
    });
}

// T = 0 Ohmic-family kernels from int_0^inf w^{s-2} e^{-w} (1 - e^{iwt}) dw = Gamma(s-1) [1 - (1 - it)^{1-s}].
double gamma_zero_temperature(double s, double lambda, double t) {
    if (s == 1.0) return 0.5 * lambda * std::log1p(t * t);
    return lambda * std::tgamma(s - 1.0) * (1.0 - std::pow(1.0 + t * t, 0.5 * (1.0 - s)) * std::cos((s - 1.0) * std::atan(t)));
}

double phi_closed_form(double s, double lambda, double t) {
    if (s == 1.0) return lambda * std::atan(t);
    return lambda * std::tgamma(s - 1.0) * std::pow(1.0 + t * t, 0.5 * (1.0 - s)) * std::sin((s - 1.0) * std::atan(t));
}

void kernel_suite(VerifyReport& r) {
    const std::string suite = "kernels";
    std::vector<double> grid;
    for (int i = 0; i <= 60; ++i) grid.push_back(0.1 * std::pow(500.0, i / 60.0));  // [0.1, 50]
    const ThermalContext cold(1e12);
    QuadratureOptions forced;
    forced.force_quadrature = true;
    for (const double s : {0.5, 1.0, 2.0, 3.0}) {
        const double lambda = 1.0;
        const BathSpec b = BathSpec::ohmic(s, lambda);
        double e_phi = 0.0;
        double e_gamma = 0.0;
        for (const double t : grid) {
            e_phi = std::max(e_phi, std::abs(phi_correlation(b, t, forced) - phi_closed_form(s, lambda, t)));
            e_gamma = std::max(e_gamma, std::abs(gamma_dynamical(b, cold, t) - gamma_zero_temperature(s, lambda, t)));
        }
        add(r, suite, "Phi quadrature vs closed form, s = " + format_short(s), e_phi, kKernelTol);
        add(r, suite, "T->0 gamma quadrature vs closed form, s = " + format_short(s), e_gamma, kKernelTol);
    }
    {
        const BathSpec b = BathSpec::ohmic(1.0, 1.0);
        add(r, suite, "Ohmic Phi(10^3) -> lambda pi/2", std::abs(phi_correlation(b, 1e3, forced) - 0.5 * kPi), 1e-3);
    }
}

void oracle_suite(VerifyReport& r) {
    std::vector<double> times;
    for (int i = 0; i < 50; ++i) times.push_back(5.0 * i / 49.0);
    for (const double bw : {0.5, 1.0, 2.0}) {
        for (const auto& [name, s] : oracle_schemes()) {
            const OracleComparison c = compare_with_oracle(s, bw, times);
            add(r, "oracle", "2-mode bath, scheme " + name + ", beta omega0 = " + format_short(bw), c.max_rel_error,
                kOracleTol);
        }
    }
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.passed; });
}

std::vector<std::string> verify_suites() { return {"algebra", "kernels", "oracle", "all"}; }

VerifyReport run_verify(const std::string& suite) {
    VerifyReport r;
    const bool all = suite == "all";
    if (!all && suite != "algebra" && suite != "kernels" && suite != "oracle")
        throw ValidationError("unknown verify suite '" + suite + "' (available: algebra, kernels, oracle, all)");
    if (all || suite == "algebra") algebra_suite(r);
    if (all || suite == "kernels") kernel_suite(r);
    if (all || suite == "oracle") oracle_suite(r);
    return r;
}

void print_report(std::ostream& os, const VerifyReport& r) {
    for (const auto& c : r.cases) {
        os << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(8) << c.suite << ' ' << c.name
           << "  max_err=" << std::scientific << std::setprecision(3) << c.max_error << " tol=" << c.tolerance
           << std::defaultfloat << '\n';
    }
    const auto failed = std::count_if(r.cases.begin(), r.cases.end(), [](const VerifyCase& c) { return !c.passed; });
    os << r.cases.size() - static_cast<std::size_t>(failed) << '/' << r.cases.size() << " cases passed\n";
}

void write_report_csv(std::ostream& os, const VerifyReport& r) {
    os << "suite,case,max_error,tolerance,passed\n";
    for (const auto& c : r.cases) {
        os << c.suite << ",\"" << c.name << "\"," << format_number(c.max_error) << ',' << format_number(c.tolerance)
           << ',' << (c.passed ? "true" : "false") << '\n';
    }
}

std::vector<FockMode> oracle_modes(int n_max) { return {{0.8, 0.2, n_max}, {1.5, 0.3, n_max}}; }

std::vector<std::pair<std::string, PreparationScheme>> oracle_schemes() {
    return {
        {"selective", scheme::selective(BlochDirection(1.1, 0.4))},
        {"i", scheme::i(BlochDirection(0.7, 0.3))},
        {"ii", scheme::ii(BlochDirection(0.5, -1.0), BlochDirection(1.2, 2.0))},
        {"iii", scheme::iii(BlochDirection(0.9, 0.1), BlochDirection(1.3, -0.5))},
        {"iii_prime", scheme::iii_prime(BlochDirection(0.4, 0.0), BlochDirection(1.0, 0.8))},
    };
}

OracleComparison compare_with_oracle(const PreparationScheme& s, double beta_omega0, const std::vector<double>& times,
                                     int n_max) {
    const std::vector<FockMode> modes = oracle_modes(n_max);
    const double beta = beta_omega0 / kOracleOmega0;
    const FockSystem fs(modes, kOracleOmega0, beta);
    const CompositeDensityMatrix rho0 = apply_preparation(build_equilibrium(fs), s);
    const CoherencePropagator exact(fs, rho0);

    std::vector<DiscreteMode> discrete;
    for (const auto& m : modes) discrete.push_back({m.omega, m.g * m.g});
    const DephasingTrajectory traj =
        coherence_trajectory(s, BathSpec::discrete(discrete), {beta_omega0, kOracleOmega0}, times);

    OracleComparison c;
    double scale = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const cplx analytic = traj.points[i].coherence_plus;
        scale = std::max(scale, std::abs(analytic));
        c.max_abs_error = std::max(c.max_abs_error, std::abs(exact(times[i]) - analytic));
    }
    c.max_rel_error = scale > 0.0 ? c.max_abs_error / scale : c.max_abs_error;
    return c;
}

}  // namespace qdeph

#include "qdeph/dynamics.hpp"

#include "qdeph/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qdeph {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBlochSlop = 1e-9;

double checked_log_term(double bracket, const char* what) {
    if (!(bracket > 0.0))
        throw NonPositiveLogArgument(std::string(what) + ": logarithm argument " + std::to_string(bracket) +
                                         " is not positive",
                                     bracket);
    return -0.5 * std::log(bracket);
}

}  // namespace

double gamma_cor_general(const SchemeKernelParams& p, double phi) {
    if (p.degenerate()) throw DegenerateScheme("gamma_cor is undefined: N1, N2, D all vanish");
    // 1 + ((N1^2 + N2^2)/D^2 - 1) sin^2 Phi + (N2/D) sin 2Phi, summed as a squared modulus.
    const double s = std::sin(phi);
    const double re = std::cos(phi) + p.n2 / p.d * s;
    const double im = p.n1 / p.d * s;
    return checked_log_term(re * re + im * im, "gamma_cor_general");
}

double gamma_cor_scheme_ii(double beta_omega0, double phi) {
    require_positive_temperature(beta_omega0);
    const double s = std::sin(phi) / std::sinh(0.5 * beta_omega0);
    return -0.5 * std::log1p(s * s);
}

double gamma_cor_scheme_iii(double beta_omega0, double phi) {
    require_positive_temperature(beta_omega0);
    const double s = std::sin(phi) / std::cosh(0.5 * beta_omega0);
    return checked_log_term(1.0 - s * s, "gamma_cor_scheme_iii");
}

double gamma_cor_selective(double sigma_z, double beta_omega0, double phi) {
    require_positive_temperature(beta_omega0);
    if (!(std::abs(sigma_z) <= 1.0)) throw ValidationError("<sigma_3> must lie in [-1, 1]");
    const double x = 0.5 * beta_omega0;
    const double den = std::cosh(x) - sigma_z * std::sinh(x);
    const double s = std::sin(phi);
    return checked_log_term(1.0 - (1.0 - sigma_z * sigma_z) * s * s / (den * den), "gamma_cor_selective");
}

double chi_general(const SchemeKernelParams& p, double phi) {
    if (p.degenerate()) throw DegenerateScheme("chi is undefined: N1, N2, D all vanish");
    // D = 4 |sum over outcomes| ^2 >= 0, so dividing by it keeps chi(0) = 0.
    const double s = std::sin(phi);
    return std::atan2(p.n1 / p.d * s, std::cos(phi) + p.n2 / p.d * s);
}

double chi_scheme_ii(double beta_omega0, double phi) {
    require_positive_temperature(beta_omega0);
    const double x = 0.5 * beta_omega0;
    return std::atan2(std::cosh(x) * std::sin(phi), std::sinh(x) * std::cos(phi));
}

double chi_scheme_iii(double beta_omega0, double phi) {
    require_positive_temperature(beta_omega0);
    const double x = 0.5 * beta_omega0;
    return std::atan2(std::sinh(x) * std::sin(phi), std::cosh(x) * std::cos(phi));
}

double chi_selective(double sigma_z, double beta_omega0, double phi) {
    require_positive_temperature(beta_omega0);
    const double x = 0.5 * beta_omega0;
    const double ch = std::cosh(x);
    const double sh = std::sinh(x);
    return std::atan2((sh - sigma_z * ch) * std::sin(phi), (ch - sigma_z * sh) * std::cos(phi));
}

CorrelationModel::CorrelationModel(const PreparationScheme& s, double beta_omega0) : beta_omega0_(beta_omega0) {
    require_positive_temperature(beta_omega0);
    if (const auto* sel = std::get_if<Selective>(&s)) {
        form_ = Form::Selective;
        sigma_z_ = std::norm(sel->psi.c1()) - std::norm(sel->psi.c0());
        return;
    }
    const auto& ns = std::get<NonSelective>(s);
    params_ = scheme_kernel_params(ns, beta_omega0);
    degenerate_ = params_.degenerate();
    switch (ns.kind) {
        case SchemeKind::I:
        case SchemeKind::II:
        case SchemeKind::IIIPrime: form_ = Form::EnhancingII; break;
        case SchemeKind::III: form_ = Form::DecoheringIII; break;
        case SchemeKind::General: form_ = Form::General; break;
    }
}

CorrelationTerms CorrelationModel::evaluate(double phi) const {
    if (degenerate_) throw DegenerateScheme("scheme prepares no coherence; gamma_cor and chi are undefined");
    switch (form_) {
        case Form::Selective:
            return {gamma_cor_selective(sigma_z_, beta_omega0_, phi), chi_selective(sigma_z_, beta_omega0_, phi)};
        case Form::EnhancingII:
            return {gamma_cor_scheme_ii(beta_omega0_, phi), chi_scheme_ii(beta_omega0_, phi)};
        case Form::DecoheringIII:
            return {gamma_cor_scheme_iii(beta_omega0_, phi), chi_scheme_iii(beta_omega0_, phi)};
        case Form::General: break;
    }
    return {gamma_cor_general(params_, phi), chi_general(params_, phi)};
}

double PhaseUnwrapper::operator()(double principal) {
    if (!last_) {
        last_ = principal;
        return principal;
    }
    const double jump = principal - *last_;
    const double k = std::round(jump / (2.0 * kPi));
    last_ = principal - 2.0 * kPi * k;
    return *last_;
}

double purity(double v) {
    if (!(v >= 0.0 && v <= 1.0 + kBlochSlop)) throw ValidationError("Bloch magnitude outside [0, 1]");
    return 0.5 * (1.0 + v * v);
}

double entropy(double v) {
    if (!(v >= 0.0 && v <= 1.0 + kBlochSlop)) throw ValidationError("Bloch magnitude outside [0, 1]");
    v = std::min(v, 1.0);
    const double plus = 0.5 * (1.0 + v) * std::log1p(v);
    // 0 ln 0 = 0 at v = 1.
    const double minus = v < 1.0 ? 0.5 * (1.0 - v) * std::log1p(-v) : 0.0;
    return std::max(0.0, std::numbers::ln2 - plus - minus);
}

DephasingTrajectory coherence_trajectory(const PreparationScheme& s, const BathSpec& b, const QubitParams& q,
                                         std::span<const double> grid, const QuadratureOptions& opt) {
    const ThermalContext th = ThermalContext::from_qubit(q.beta_omega0, q.omega0_over_omegac);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0) || !std::isfinite(grid[i])) throw ValidationError("time grid must be finite and >= 0");
        if (i > 0 && !(grid[i] > grid[i - 1])) throw ValidationError("time grid must be strictly increasing");
    }

    DephasingTrajectory traj;
    traj.initial = initial_averages(s, q.beta_omega0);
    const CorrelationModel model(s, q.beta_omega0);
    traj.degenerate = model.degenerate();
    const double sz2 = traj.initial.sigma_z * traj.initial.sigma_z;

    PhaseUnwrapper unwrap;
    traj.points.reserve(grid.size());
    for (const double t : grid) {
        TrajectoryPoint pt;
        pt.t = t;
        try {
            pt.gamma = gamma_dynamical(b, th, t, opt);
            pt.phi = phi_correlation(b, t, opt);
            if (!traj.degenerate) {
                const CorrelationTerms c = model.evaluate(pt.phi);
                const double chi = unwrap(c.chi);
                const double geff = pt.gamma + c.gamma_cor;
                pt.gamma_cor = c.gamma_cor;
                pt.gamma_eff = geff;
                pt.chi = chi;
                pt.reduced_coherence = std::exp(-geff);
                pt.coherence_plus =
                    traj.initial.sigma_plus * std::polar(*pt.reduced_coherence, q.omega0_over_omegac * t + chi);
            }
        } catch (const ComputationError& e) {
            throw ComputationError("at t = " + std::to_string(t) + ": " + e.what());
        }
        const double v2 = 4.0 * std::norm(pt.coherence_plus) + sz2;
        pt.bloch_v = std::sqrt(v2);
        if (pt.bloch_v > 1.0 + kBlochSlop)
            throw ComputationError("Bloch magnitude " + std::to_string(pt.bloch_v) + " exceeds 1 at t = " +
                                   std::to_string(t));
        pt.purity = purity(pt.bloch_v);
        pt.entropy = entropy(pt.bloch_v);
        traj.points.push_back(pt);
    }
    return traj;
}

}  // namespace qdeph

#include "qdeph/preparation.hpp"

#include "qdeph/errors.hpp"
#include "qdeph/kernel_params.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qdeph {

namespace {

constexpr double kPi = std::numbers::pi;

// Equilibrium populations of |0> and |1>: e^{+x}/(2cosh x), e^{-x}/(2cosh x), x = beta omega0 / 2.
struct Populations {
    double p0;
    double p1;
};

Populations equilibrium_populations(double beta_omega0) {
    return {1.0 / (1.0 + std::exp(-beta_omega0)), 1.0 / (1.0 + std::exp(beta_omega0))};
}

QubitOperator outer(const QubitState& ket, const QubitState& bra) {
    return ket.vector() * bra.vector().adjoint();
}

}  // namespace

std::string_view to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::General: return "general";
        case SchemeKind::I: return "i";
        case SchemeKind::II: return "ii";
        case SchemeKind::III: return "iii";
        case SchemeKind::IIIPrime: return "iii_prime";
    }
    return "unknown";
}

double NonSelective::delta_phi() const { return wrap_angle(b1.phi() - b2.phi()); }

void require_positive_temperature(double beta_omega0) {
    if (!std::isfinite(beta_omega0) || beta_omega0 <= 0.0)
        throw ValidationError("beta_omega0 must be finite and > 0, got " + std::to_string(beta_omega0));
}

namespace scheme {

PreparationScheme selective(const QubitState& psi) { return Selective{psi}; }
PreparationScheme selective(const BlochDirection& d) { return Selective{state_from_direction(d)}; }

PreparationScheme general(const BlochDirection& a, const BlochDirection& b1, const BlochDirection& b2) {
    return NonSelective{SchemeKind::General, a, b1, b2};
}

PreparationScheme i(const BlochDirection& a) {
    return NonSelective{SchemeKind::I, a, a, antipodal_direction(a)};
}

PreparationScheme ii(const BlochDirection& a, const BlochDirection& b) {
    return NonSelective{SchemeKind::II, a, b, antipodal_direction(b)};
}

PreparationScheme iii(const BlochDirection& a, const BlochDirection& b) {
    return NonSelective{SchemeKind::III, a, b, b};
}

PreparationScheme iii_prime(const BlochDirection& a, const BlochDirection& b) {
    return NonSelective{SchemeKind::IIIPrime, a, b, BlochDirection(b.theta(), b.phi() + kPi)};
}

}  // namespace scheme

std::vector<MeasurementOperators> scheme_operators(const PreparationScheme& s) {
    if (const auto* sel = std::get_if<Selective>(&s)) {
        const QubitOperator p = sel->psi.projector();
        return {{p, p}};
    }
    const auto& ns = std::get<NonSelective>(s);
    const QubitState a = state_from_direction(ns.a);
    const QubitState minus_a = state_from_direction(antipodal_direction(ns.a));
    const QubitState b1 = state_from_direction(ns.b1);
    const QubitState b2 = state_from_direction(ns.b2);
    return {{outer(a, a), outer(b1, a)}, {outer(minus_a, minus_a), outer(b2, minus_a)}};
}

std::vector<MeasurementOperators> dual_operators(const std::vector<MeasurementOperators>& ops) {
    QubitOperator sum = QubitOperator::Zero();
    std::vector<MeasurementOperators> dual;
    dual.reserve(ops.size());
    for (const auto& op : ops) {
        const QubitOperator f = op.omega * op.omega.adjoint();
        sum += f;
        dual.push_back({f, op.omega.adjoint()});
    }
    if ((sum - QubitOperator::Identity()).cwiseAbs().maxCoeff() > kAlgebraTol)
        throw ValidationError("no dual scheme: Omega_m Omega_m^dagger do not resolve the identity");
    return dual;
}

double InitialAverages::bloch_magnitude() const {
    return std::sqrt(4.0 * std::norm(sigma_plus) + sigma_z * sigma_z);
}

InitialAverages initial_averages(const PreparationScheme& s, double beta_omega0) {
    require_positive_temperature(beta_omega0);
    if (const auto* sel = std::get_if<Selective>(&s)) {
        const cplx sp = std::conj(sel->psi.c1()) * sel->psi.c0();
        return {sp, std::conj(sp), std::norm(sel->psi.c1()) - std::norm(sel->psi.c0())};
    }
    const auto& ns = std::get<NonSelective>(s);
    const auto [p0, p1] = equilibrium_populations(beta_omega0);
    const double sa2 = std::pow(std::sin(0.5 * ns.a.theta()), 2);
    const double ca2 = std::pow(std::cos(0.5 * ns.a.theta()), 2);
    // Outcome weights: probability of each outcome with the thermal populations folded in.
    const double w1 = p0 * sa2 + p1 * ca2;
    const double w2 = p0 * ca2 + p1 * sa2;
    const cplx sp = 0.5 * std::polar(1.0, ns.b1.phi()) *
                    (std::sin(ns.b1.theta()) * w1 +
                     std::polar(1.0, -ns.delta_phi()) * std::sin(ns.b2.theta()) * w2);
    const double sz = std::cos(ns.b1.theta()) * w1 + std::cos(ns.b2.theta()) * w2;
    return {sp, std::conj(sp), sz};
}

InitialAverages initial_averages_scheme_ii(const BlochDirection& a, const BlochDirection& b,
                                           double beta_omega0) {
    require_positive_temperature(beta_omega0);
    const double th = std::tanh(0.5 * beta_omega0);
    const double c = std::cos(a.theta());
    const cplx sp = -0.5 * std::polar(1.0, b.phi()) * th * c * std::sin(b.theta());
    return {sp, std::conj(sp), -th * c * std::cos(b.theta())};
}

InitialAverages initial_averages_scheme_iii(const BlochDirection& b) {
    const cplx sp = 0.5 * std::polar(1.0, b.phi()) * std::sin(b.theta());
    return {sp, std::conj(sp), std::cos(b.theta())};
}

InitialAverages initial_averages_scheme_iii_prime(const BlochDirection& a, const BlochDirection& b1,
                                                  double beta_omega0) {
    require_positive_temperature(beta_omega0);
    const double th = std::tanh(0.5 * beta_omega0);
    const cplx sp = -0.5 * std::polar(1.0, b1.phi()) * th * std::cos(a.theta()) * std::sin(b1.theta());
    return {sp, std::conj(sp), std::cos(b1.theta())};
}

bool enhancement_predicate(const PreparationScheme& s, double beta_omega0) {
    const auto* ns = std::get_if<NonSelective>(&s);
    if (ns == nullptr) throw ValidationError("enhancement predicate is undefined for selective schemes");
    require_positive_temperature(beta_omega0);
    if (std::abs(std::sin(ns->delta_phi())) > kAlgebraTol) return false;
    const SchemeKernelParams p = scheme_kernel_params(*ns, beta_omega0);
    return p.n1 * p.n1 > p.d * p.d;
}

}  // namespace qdeph

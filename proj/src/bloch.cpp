#include "qdeph/bloch.hpp"

#include "qdeph/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qdeph {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
}  // namespace

double wrap_angle(double phi) {
    if (!std::isfinite(phi)) throw ValidationError("angle must be finite");
    double r = std::remainder(phi, 2.0 * kPi);  // [-pi, pi]
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

BlochDirection::BlochDirection(double theta, double phi) : theta_(theta), phi_(wrap_angle(phi)) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > kPi)
        throw ValidationError("theta must lie in [0, pi], got " + std::to_string(theta));
}

Eigen::Vector3d BlochDirection::cartesian() const {
    const double s = std::sin(theta_);
    return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
}

QubitState::QubitState(cplx c1, cplx c0) : c1_(c1), c0_(c0) {
    const double n = std::norm(c1) + std::norm(c0);
    if (!(std::abs(n - 1.0) <= kAlgebraTol))
        throw ValidationError("qubit state is not normalized: |c1|^2+|c0|^2 = " + std::to_string(n));
}

QubitOperator QubitState::projector() const {
    const Eigen::Vector2cd v = vector();
    return v * v.adjoint();
}

QubitState basis_one() { return {1.0, 0.0}; }
QubitState basis_zero() { return {0.0, 1.0}; }

namespace pauli {
QubitOperator identity() { return QubitOperator::Identity(); }
QubitOperator sigma1() {
    QubitOperator m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}
QubitOperator sigma2() {
    QubitOperator m;
    m << 0.0, -kI, kI, 0.0;
    return m;
}
QubitOperator sigma3() {
    QubitOperator m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}
QubitOperator sigma_plus() {
    QubitOperator m;
    m << 0.0, 1.0, 0.0, 0.0;
    return m;
}
QubitOperator sigma_minus() {
    QubitOperator m;
    m << 0.0, 0.0, 1.0, 0.0;
    return m;
}
}  // namespace pauli

QubitState state_from_direction(const BlochDirection& d) {
    const double h = 0.5 * d.theta();
    const cplx e = std::polar(1.0, 0.5 * d.phi());
    return {std::conj(e) * std::cos(h), e * std::sin(h)};
}

BlochDirection antipodal_direction(const BlochDirection& d) {
    return {kPi - d.theta(), d.phi() + kPi};
}

QubitOperator direction_unitary(const BlochDirection& d) {
    const double h = 0.5 * d.theta();
    const cplx e = std::polar(1.0, 0.5 * d.phi());
    const double c = std::cos(h);
    const double s = std::sin(h);
    QubitOperator u;
    // The printed (2,2) entry reads cos(theta 2); cos(theta/2) is the unitary choice.
    u << std::conj(e) * c, -kI * std::conj(e) * s,
         e * s,             kI * e * c;
    return u;
}

QubitOperator relative_unitary(const BlochDirection& b, const BlochDirection& a) {
    return direction_unitary(b) * direction_unitary(a).adjoint();
}

QubitOperator spin_component(const BlochDirection& d) {
    const Eigen::Vector3d a = d.cartesian();
    return a(0) * pauli::sigma1() + a(1) * pauli::sigma2() + a(2) * pauli::sigma3();
}

double unitarity_residual(const QubitOperator& u) {
    return (u.adjoint() * u - QubitOperator::Identity()).cwiseAbs().maxCoeff();
}

}  // namespace qdeph

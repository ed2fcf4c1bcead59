// bloch.hpp — single-qubit algebra: Euler-angle states, direction unitaries, Pauli operators
//
// Column convention: the top component is |1> (excited, sigma_3 = +1), the
// bottom component is |0>.

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace qdeph {

using cplx = std::complex<double>;
using QubitOperator = Eigen::Matrix2cd;

inline constexpr double kAlgebraTol = 1e-12;

// Maps any finite angle into (-pi, pi].
double wrap_angle(double phi);

// Unit vector on the Bloch sphere in Euler angles. theta in [0, pi] is
// enforced (values outside are rejected), phi is wrapped into (-pi, pi].
class BlochDirection {
public:
    BlochDirection() = default;
    BlochDirection(double theta, double phi);

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }

    // Cartesian components (a1, a2, a3).
    Eigen::Vector3d cartesian() const;

private:
    double theta_ = 0.0;
    double phi_ = 0.0;
};

// Pure qubit state c1|1> + c0|0>, normalized to 1e-12.
class QubitState {
public:
    QubitState(cplx c1, cplx c0);
    explicit QubitState(const Eigen::Vector2cd& v) : QubitState(v(0), v(1)) {}

    cplx c1() const noexcept { return c1_; }
    cplx c0() const noexcept { return c0_; }
    Eigen::Vector2cd vector() const { return {c1_, c0_}; }
    // |psi><psi|; the phase-free way to compare states.
    QubitOperator projector() const;

private:
    cplx c1_;
    cplx c0_;
};

QubitState basis_one();
QubitState basis_zero();

namespace pauli {
QubitOperator identity();
QubitOperator sigma1();
QubitOperator sigma2();
QubitOperator sigma3();
QubitOperator sigma_plus();   // (sigma1 + i sigma2)/2 = |1><0|
QubitOperator sigma_minus();  // (sigma1 - i sigma2)/2 = |0><1|
}  // namespace pauli

QubitState state_from_direction(const BlochDirection& d);
BlochDirection antipodal_direction(const BlochDirection& d);

// U(d) with U(d)|1> = |d> and U(d)|0> = |-d>.
QubitOperator direction_unitary(const BlochDirection& d);
// U(b) U(a)^dagger.
QubitOperator relative_unitary(const BlochDirection& b, const BlochDirection& a);
// sigma(d) = sigma1 d1 + sigma2 d2 + sigma3 d3.
QubitOperator spin_component(const BlochDirection& d);

// max_ij |(U^dagger U - I)_ij|
double unitarity_residual(const QubitOperator& u);

}  // namespace qdeph

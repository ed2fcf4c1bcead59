// preparation.hpp — preparation measurements on the qubit and the initial averages they produce

#pragma once

#include "qdeph/bloch.hpp"

#include <string_view>
#include <variant>
#include <vector>

namespace qdeph {

// Selective preparation: the qubit is projected onto |psi> and renormalized.
struct Selective {
    QubitState psi;
};

enum class SchemeKind {
    General,    // arbitrary b1, b2
    I,          // b1 = a, b2 = -a
    II,         // b1 = b, b2 = -b
    III,        // b1 = b2 = b
    IIIPrime,   // theta1 = theta2, phi2 = phi1 + pi
};

std::string_view to_string(SchemeKind kind);

// Non-selective von Neumann-Lueders measurement of sigma(a) with outcome
// operators Omega_1 = |b1><a|, Omega_2 = |b2><-a|.
struct NonSelective {
    SchemeKind kind = SchemeKind::General;
    BlochDirection a;
    BlochDirection b1;
    BlochDirection b2;

    // phi1 - phi2, wrapped into (-pi, pi].
    double delta_phi() const;
};

using PreparationScheme = std::variant<Selective, NonSelective>;

namespace scheme {
PreparationScheme selective(const QubitState& psi);
PreparationScheme selective(const BlochDirection& d);
PreparationScheme general(const BlochDirection& a, const BlochDirection& b1, const BlochDirection& b2);
PreparationScheme i(const BlochDirection& a);
PreparationScheme ii(const BlochDirection& a, const BlochDirection& b);
PreparationScheme iii(const BlochDirection& a, const BlochDirection& b);
PreparationScheme iii_prime(const BlochDirection& a, const BlochDirection& b);
}  // namespace scheme

struct MeasurementOperators {
    QubitOperator effect;  // F_m = Omega_m^dagger Omega_m
    QubitOperator omega;   // Omega_m
};

std::vector<MeasurementOperators> scheme_operators(const PreparationScheme& s);

// Dual scheme F~_m = Omega_m Omega_m^dagger, Omega~_m = Omega_m^dagger. Exists only
// when the Omega_m Omega_m^dagger also resolve the identity; throws otherwise.
std::vector<MeasurementOperators> dual_operators(const std::vector<MeasurementOperators>& ops);

// Expectation values at t = 0 after the preparation. Equilibrium enters only
// through beta * omega0.
struct InitialAverages {
    cplx sigma_plus;
    cplx sigma_minus;
    double sigma_z;

    // |v| = sqrt(4 |<sigma_+>|^2 + <sigma_3>^2)
    double bloch_magnitude() const;
};

InitialAverages initial_averages(const PreparationScheme& s, double beta_omega0);

// Closed forms for the special schemes. Used to cross-check the general expression.
InitialAverages initial_averages_scheme_ii(const BlochDirection& a, const BlochDirection& b,
                                           double beta_omega0);
InitialAverages initial_averages_scheme_iii(const BlochDirection& b);
InitialAverages initial_averages_scheme_iii_prime(const BlochDirection& a, const BlochDirection& b1,
                                                  double beta_omega0);

// Sufficient condition for gamma_cor(t) <= 0 at all t: sin(delta_phi) = 0 and N1^2 > D^2.
bool enhancement_predicate(const PreparationScheme& s, double beta_omega0);

// Throws ValidationError unless beta_omega0 is finite and positive.
void require_positive_temperature(double beta_omega0);

}  // namespace qdeph

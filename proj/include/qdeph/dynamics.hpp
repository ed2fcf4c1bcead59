// dynamics.hpp — coherences, Bloch vector, purity and entropy of the dephasing qubit
//
// For every preparation the coherence factorizes as
//   <sigma_+(t)> = <sigma_+> exp[i (omega0 t + chi(t))] exp[-gamma(t) - gamma_cor(t)],
// where gamma is the bath decoherence function and gamma_cor, chi depend on the
// scheme only through Phi(t). <sigma_3(t)> = <sigma_3> is conserved.

#pragma once

#include "qdeph/bath.hpp"
#include "qdeph/kernel_params.hpp"
#include "qdeph/preparation.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qdeph {

// General non-selective scheme in terms of N1, N2, D.
double gamma_cor_general(const SchemeKernelParams& p, double phi);
double gamma_cor_scheme_ii(double beta_omega0, double phi);
double gamma_cor_scheme_iii(double beta_omega0, double phi);
double gamma_cor_selective(double sigma_z, double beta_omega0, double phi);

// Principal values in (-pi, pi]; chi(0) = 0.
double chi_general(const SchemeKernelParams& p, double phi);
double chi_scheme_ii(double beta_omega0, double phi);
double chi_scheme_iii(double beta_omega0, double phi);
double chi_selective(double sigma_z, double beta_omega0, double phi);

struct CorrelationTerms {
    double gamma_cor;
    double chi;
};

// Scheme-dependent map Phi -> (gamma_cor, chi). Uses the closed form for the
// tagged special schemes and N1, N2, D otherwise.
class CorrelationModel {
public:
    CorrelationModel(const PreparationScheme& s, double beta_omega0);

    // No coherence to speak of; evaluate() throws DegenerateScheme.
    bool degenerate() const noexcept { return degenerate_; }
    CorrelationTerms evaluate(double phi) const;

private:
    enum class Form { Selective, General, EnhancingII, DecoheringIII };
    Form form_;
    double beta_omega0_;
    double sigma_z_ = 0.0;
    SchemeKernelParams params_{};
    bool degenerate_ = false;
};

// Keeps a phase continuous along a sequence of samples.
class PhaseUnwrapper {
public:
    double operator()(double principal);

private:
    std::optional<double> last_;
};

// P = (1 + v^2)/2 and S = ln 2 - (1+v)/2 ln(1+v) - (1-v)/2 ln(1-v), for v in [0, 1 + 1e-9].
double purity(double v);
double entropy(double v);

struct TrajectoryPoint {
    double t = 0.0;
    double gamma = 0.0;
    std::optional<double> gamma_cor;
    std::optional<double> gamma_eff;
    double phi = 0.0;
    std::optional<double> chi;
    cplx coherence_plus{};
    std::optional<double> reduced_coherence;
    double bloch_v = 0.0;
    double purity = 1.0;
    double entropy = 0.0;
};

struct DephasingTrajectory {
    InitialAverages initial{};
    bool degenerate = false;
    std::vector<TrajectoryPoint> points;
};

struct QubitParams {
    double beta_omega0 = 1.0;
    double omega0_over_omegac = 0.1;
};

DephasingTrajectory coherence_trajectory(const PreparationScheme& s, const BathSpec& b, const QubitParams& q,
                                         std::span<const double> grid, const QuadratureOptions& opt = {});

}  // namespace qdeph

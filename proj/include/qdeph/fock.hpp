// fock.hpp — brute-force dephasing model in a truncated Fock space
//
// H = omega0/2 sigma_3 + sum_k omega_k b_k^dag b_k + sigma_3 sum_k g_k (b_k^dag + b_k),
// real couplings g_k, each mode truncated at n_max quanta. Nothing here uses the
// closed-form coherence results; it exists to check them.
//
// Composite index: q * dim_bath + n, with q = 0 for |1> (sigma_3 = +1) and q = 1 for |0>.

#pragma once

#include "qdeph/bloch.hpp"
#include "qdeph/preparation.hpp"

#include <Eigen/Dense>

#include <vector>

namespace qdeph {

struct FockMode {
    double omega = 1.0;
    double g = 0.0;
    int n_max = 15;
};

class FockSystem {
public:
    // beta in units of 1/omega_c, like omega0 and the mode frequencies.
    // Throws TruncationError unless n_max >= 10 nbar + 10 for every mode.
    FockSystem(std::vector<FockMode> modes, double omega0, double beta);

    const std::vector<FockMode>& modes() const noexcept { return modes_; }
    double omega0() const noexcept { return omega0_; }
    double beta() const noexcept { return beta_; }
    Eigen::Index bath_dim() const noexcept { return bath_dim_; }
    Eigen::Index dim() const noexcept { return 2 * bath_dim_; }

    // Composite Hamiltonian, assembled term by term from the definition.
    const Eigen::MatrixXd& hamiltonian() const noexcept { return h_; }
    // H_B^(+-) = sum_k omega_k b_k^dag b_k +- sum_k g_k (b_k^dag + b_k).
    const Eigen::MatrixXd& bath_hamiltonian_plus() const noexcept { return hb_plus_; }
    const Eigen::MatrixXd& bath_hamiltonian_minus() const noexcept { return hb_minus_; }
    // b_k on the bath space.
    Eigen::MatrixXd annihilation(std::size_t k) const;

    // Sector spectra of H: q = 0 is the |1> block, q = 1 the |0> block.
    const Eigen::VectorXd& sector_energies(int q) const { return q == 0 ? e1_ : e0_; }
    const Eigen::MatrixXd& sector_vectors(int q) const { return q == 0 ? v1_ : v0_; }

    // Mean thermal occupation 1/(e^{beta omega} - 1) of mode k.
    double thermal_occupation(std::size_t k) const;

private:
    std::vector<FockMode> modes_;
    double omega0_;
    double beta_;
    Eigen::Index bath_dim_ = 1;
    Eigen::MatrixXd h_, hb_plus_, hb_minus_;
    Eigen::VectorXd e1_, e0_;
    Eigen::MatrixXd v1_, v0_;
};

// Dense density matrix of qubit + bath.
class CompositeDensityMatrix {
public:
    explicit CompositeDensityMatrix(Eigen::MatrixXcd m, Eigen::Index bath_dim);

    const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
    Eigen::Index bath_dim() const noexcept { return bath_dim_; }
    // <q|rho|q'> as a bath operator.
    Eigen::MatrixXcd block(int q_row, int q_col) const;

    double trace_error() const;       // |Tr rho - 1|
    double hermiticity_error() const; // max |rho - rho^dag|
    double min_eigenvalue() const;

private:
    Eigen::MatrixXcd m_;
    Eigen::Index bath_dim_;
};

// e^{-beta H} / Z, built sector by sector.
CompositeDensityMatrix build_equilibrium(const FockSystem& fs);

// sum_m (Omega_m x I) rho (Omega_m x I)^dag, or P rho P / Tr for selective schemes.
CompositeDensityMatrix apply_preparation(const CompositeDensityMatrix& rho, const PreparationScheme& s);

// Reduced qubit state Tr_B rho.
QubitOperator reduced_qubit(const CompositeDensityMatrix& rho);

// e^{-iHt} rho e^{iHt} on the full composite space.
CompositeDensityMatrix evolve(const FockSystem& fs, const CompositeDensityMatrix& rho, double t);

// Tr{ e^{iHt} (sigma_+ x I) e^{-iHt} rho0 } for many t. Precomputes the
// eigenbasis overlaps once; each evaluation is O(dim_bath^2).
class CoherencePropagator {
public:
    CoherencePropagator(const FockSystem& fs, const CompositeDensityMatrix& rho0);
    cplx operator()(double t) const;

private:
    Eigen::VectorXd e1_, e0_;
    Eigen::MatrixXcd weights_;
};

cplx coherence_exact(const FockSystem& fs, const CompositeDensityMatrix& rho0, double t);

}  // namespace qdeph

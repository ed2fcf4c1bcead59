#include "qdeph/fock.hpp"

#include "qdeph/errors.hpp"

#include <cmath>
#include <string>

namespace qdeph {

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::MatrixXd single_mode_annihilation(int n_max) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) b(n - 1, n) = std::sqrt(static_cast<double>(n));
    return b;
}

Eigen::MatrixXcd sector_propagator(const Eigen::VectorXd& e, const Eigen::MatrixXd& v, double t) {
    const Eigen::VectorXcd phase = (e * t).unaryExpr([](double x) { return std::polar(1.0, -x); });
    return v.cast<cplx>() * phase.asDiagonal() * v.transpose().cast<cplx>();
}

}  // namespace

FockSystem::FockSystem(std::vector<FockMode> modes, double omega0, double beta)
    : modes_(std::move(modes)), omega0_(omega0), beta_(beta) {
    if (modes_.empty()) throw ValidationError("Fock system needs at least one mode");
    if (!std::isfinite(beta) || beta <= 0.0) throw ValidationError("beta must be finite and > 0");
    for (std::size_t k = 0; k < modes_.size(); ++k) {
        const auto& m = modes_[k];
        if (!(m.omega > 0.0) || !std::isfinite(m.g) || m.n_max < 1)
            throw ValidationError("Fock mode needs omega > 0, finite g and n_max >= 1");
        const double nbar = thermal_occupation(k);
        if (m.n_max < 10.0 * nbar + 10.0)
            throw TruncationError("mode " + std::to_string(k) + ": n_max = " + std::to_string(m.n_max) +
                                  " is below 10 nbar + 10 = " + std::to_string(10.0 * nbar + 10.0));
        bath_dim_ *= m.n_max + 1;
    }

    Eigen::MatrixXd hb = Eigen::MatrixXd::Zero(bath_dim_, bath_dim_);
    Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(bath_dim_, bath_dim_);
    for (std::size_t k = 0; k < modes_.size(); ++k) {
        const Eigen::MatrixXd b = annihilation(k);
        hb += modes_[k].omega * b.transpose() * b;
        coupling += modes_[k].g * (b.transpose() + b);
    }
    hb_plus_ = hb + coupling;
    hb_minus_ = hb - coupling;

    Eigen::Matrix2d s3;
    s3 << 1.0, 0.0, 0.0, -1.0;
    const Eigen::MatrixXd id_b = Eigen::MatrixXd::Identity(bath_dim_, bath_dim_);
    h_ = 0.5 * omega0_ * kron(s3, id_b) + kron(Eigen::Matrix2d::Identity(), hb) + kron(s3, coupling);

    // sigma_3 commutes with H: diagonalize each sector block separately.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> top(h_.topLeftCorner(bath_dim_, bath_dim_));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> bottom(h_.bottomRightCorner(bath_dim_, bath_dim_));
    if (top.info() != Eigen::Success || bottom.info() != Eigen::Success)
        throw ComputationError("sector eigendecomposition failed");
    e1_ = top.eigenvalues();
    v1_ = top.eigenvectors();
    e0_ = bottom.eigenvalues();
    v0_ = bottom.eigenvectors();
}

Eigen::MatrixXd FockSystem::annihilation(std::size_t k) const {
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
    for (std::size_t j = 0; j < modes_.size(); ++j) {
        const int n = modes_[j].n_max;
        out = kron(out, j == k ? single_mode_annihilation(n) : Eigen::MatrixXd::Identity(n + 1, n + 1));
    }
    return out;
}

double FockSystem::thermal_occupation(std::size_t k) const {
    return 1.0 / std::expm1(beta_ * modes_.at(k).omega);
}

CompositeDensityMatrix::CompositeDensityMatrix(Eigen::MatrixXcd m, Eigen::Index bath_dim)
    : m_(std::move(m)), bath_dim_(bath_dim) {
    if (m_.rows() != 2 * bath_dim_ || m_.cols() != 2 * bath_dim_)
        throw ValidationError("composite density matrix has the wrong dimension");
}

Eigen::MatrixXcd CompositeDensityMatrix::block(int q_row, int q_col) const {
    return m_.block(q_row * bath_dim_, q_col * bath_dim_, bath_dim_, bath_dim_);
}

double CompositeDensityMatrix::trace_error() const { return std::abs(m_.trace() - 1.0); }

double CompositeDensityMatrix::hermiticity_error() const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double CompositeDensityMatrix::min_eigenvalue() const {
    const Eigen::MatrixXcd h = 0.5 * (m_ + m_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

CompositeDensityMatrix build_equilibrium(const FockSystem& fs) {
    const Eigen::Index nb = fs.bath_dim();
    const double emin = std::min(fs.sector_energies(0).minCoeff(), fs.sector_energies(1).minCoeff());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(fs.dim(), fs.dim());
    double z = 0.0;
    for (int q = 0; q < 2; ++q) {
        const Eigen::VectorXd w = (-fs.beta() * (fs.sector_energies(q).array() - emin)).exp();
        z += w.sum();
        const Eigen::MatrixXd& v = fs.sector_vectors(q);
        rho.block(q * nb, q * nb, nb, nb) = (v * w.asDiagonal() * v.transpose()).cast<cplx>();
    }
    return CompositeDensityMatrix(rho / z, nb);
}

CompositeDensityMatrix apply_preparation(const CompositeDensityMatrix& rho, const PreparationScheme& s) {
    const Eigen::Index nb = rho.bath_dim();
    Eigen::MatrixXcd blocks[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) blocks[i][j] = rho.block(i, j);

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * nb, 2 * nb);
    for (const auto& op : scheme_operators(s)) {
        const QubitOperator& om = op.omega;
        // (Omega x I) rho (Omega x I)^dag, block (i, j) = sum_kl Omega_ik rho_kl conj(Omega_jl)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        const cplx c = om(i, k) * std::conj(om(j, l));
                        if (c != cplx{}) out.block(i * nb, j * nb, nb, nb) += c * blocks[k][l];
                    }
    }
    if (std::holds_alternative<Selective>(s)) {
        const double tr = out.trace().real();
        if (!(tr > 1e-14)) throw ComputationError("selective outcome has zero probability");
        out /= tr;
    }
    return CompositeDensityMatrix(std::move(out), nb);
}

QubitOperator reduced_qubit(const CompositeDensityMatrix& rho) {
    QubitOperator r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = rho.block(i, j).trace();
    return r;
}

CompositeDensityMatrix evolve(const FockSystem& fs, const CompositeDensityMatrix& rho, double t) {
    const Eigen::Index nb = fs.bath_dim();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(fs.dim(), fs.dim());
    for (int q = 0; q < 2; ++q)
        u.block(q * nb, q * nb, nb, nb) = sector_propagator(fs.sector_energies(q), fs.sector_vectors(q), t);
    return CompositeDensityMatrix(u * rho.matrix() * u.adjoint(), nb);
}

CoherencePropagator::CoherencePropagator(const FockSystem& fs, const CompositeDensityMatrix& rho0)
    : e1_(fs.sector_energies(0)), e0_(fs.sector_energies(1)) {
    // <sigma_+(t)> = Tr_B[ U_1^dag U_0 <0|rho0|1> ] with U_q = V_q e^{-i E_q t} V_q^T.
    const Eigen::MatrixXcd v1 = fs.sector_vectors(0).cast<cplx>();
    const Eigen::MatrixXcd v0 = fs.sector_vectors(1).cast<cplx>();
    const Eigen::MatrixXcd overlap = v1.transpose() * v0;
    const Eigen::MatrixXcd r = v0.transpose() * rho0.block(1, 0) * v1;
    weights_ = overlap.cwiseProduct(r.transpose());
}

cplx CoherencePropagator::operator()(double t) const {
    const Eigen::VectorXcd a = (e1_ * t).unaryExpr([](double x) { return std::polar(1.0, x); });
    const Eigen::VectorXcd b = (e0_ * t).unaryExpr([](double x) { return std::polar(1.0, -x); });
    return (a.transpose() * (weights_ * b)).value();
}

cplx coherence_exact(const FockSystem& fs, const CompositeDensityMatrix& rho0, double t) {
    return CoherencePropagator(fs, rho0)(t);
}

}  // namespace qdeph

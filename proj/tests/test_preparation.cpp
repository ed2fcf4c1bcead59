#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qdeph/errors.hpp"
#include "qdeph/kernel_params.hpp"
#include "qdeph/preparation.hpp"

#include <cmath>

using namespace qdeph;
using oracle::kPi;

namespace {

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

PreparationScheme random_general(oracle::Rng& rng) {
    return scheme::general(rng.direction(), rng.direction(), rng.direction());
}

const NonSelective& ns(const PreparationScheme& s) { return std::get<NonSelective>(s); }

}  // namespace

TEST_CASE("special constructors fix the angle relations") {
    const BlochDirection a(0.7, 0.2), b(1.1, -2.5);

    const NonSelective two = ns(scheme::ii(a, b));
    CHECK(two.kind == SchemeKind::II);
    CHECK(two.b1.theta() + two.b2.theta() == doctest::Approx(kPi));
    CHECK(std::cos(two.delta_phi()) == doctest::Approx(-1.0));

    const NonSelective three = ns(scheme::iii(a, b));
    CHECK(three.b1.theta() == three.b2.theta());
    CHECK(three.delta_phi() == 0.0);

    const NonSelective prime = ns(scheme::iii_prime(a, b));
    CHECK(prime.b1.theta() == prime.b2.theta());
    CHECK(std::cos(prime.delta_phi()) == doctest::Approx(-1.0));

    const NonSelective one = ns(scheme::i(a));
    CHECK(one.b1.theta() == doctest::Approx(a.theta()));
    CHECK(one.b2.theta() == doctest::Approx(kPi - a.theta()));

    CHECK(to_string(SchemeKind::IIIPrime) == "iii_prime");
}

TEST_CASE("scheme i along the z axis") {
    const auto ops = scheme_operators(scheme::i({0.0, 0.0}));
    REQUIRE(ops.size() == 2);
    QubitOperator p1 = QubitOperator::Zero(), p0 = QubitOperator::Zero();
    p1(0, 0) = 1.0;
    p0(1, 1) = 1.0;
    CHECK(max_abs(ops[0].effect - p1) < 1e-15);
    CHECK(max_abs(ops[1].effect - p0) < 1e-15);
    // Omega_m equals F_m up to the phase carried by |-a>.
    CHECK(max_abs(ops[0].omega - p1) < 1e-15);
    CHECK(max_abs(ops[1].omega.adjoint() * ops[1].omega - p0) < 1e-15);
    CHECK(std::abs(std::abs(ops[1].omega(1, 1)) - 1.0) < 1e-15);
}

TEST_CASE("effects resolve the identity and are projectors") {
    oracle::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto ops = scheme_operators(random_general(rng));
        QubitOperator sum = QubitOperator::Zero();
        for (const auto& op : ops) {
            sum += op.effect;
            CHECK(max_abs(op.effect * op.effect - op.effect) < kAlgebraTol);
            CHECK(max_abs(op.omega.adjoint() * op.omega - op.effect) < kAlgebraTol);
        }
        CHECK(max_abs(sum - QubitOperator::Identity()) < kAlgebraTol);
    }
}

TEST_CASE("selective scheme has a single projector") {
    const auto ops = scheme_operators(scheme::selective(BlochDirection(1.0, 0.5)));
    REQUIRE(ops.size() == 1);
    CHECK(max_abs(ops[0].effect - state_from_direction({1.0, 0.5}).projector()) < kAlgebraTol);
    CHECK(max_abs(ops[0].omega - ops[0].effect) < kAlgebraTol);
}

TEST_CASE("dual scheme") {
    oracle::Rng rng(12);
    for (int i = 0; i < 50; ++i) {
        const auto ops = scheme_operators(scheme::ii(rng.direction(), rng.direction()));
        QubitOperator sum = QubitOperator::Zero();
        for (const auto& op : ops) sum += op.omega * op.omega.adjoint();
        CHECK(max_abs(sum - QubitOperator::Identity()) < kAlgebraTol);
        const auto dual = dual_operators(ops);
        REQUIRE(dual.size() == 2);
        for (std::size_t m = 0; m < 2; ++m) {
            CHECK(max_abs(dual[m].omega - ops[m].omega.adjoint()) < kAlgebraTol);
            CHECK(max_abs(dual[m].effect - ops[m].omega * ops[m].omega.adjoint()) < kAlgebraTol);
        }
    }
    // Scheme iii sends both outcomes to |b>: the dual does not exist.
    CHECK_THROWS_AS(dual_operators(scheme_operators(scheme::iii({0.3, 0.0}, {1.0, 0.0}))), ValidationError);
}

TEST_CASE("initial averages, worked values") {
    const auto two = initial_averages(scheme::ii({0.0, 0.0}, {kPi / 4.0, 0.0}), 1.0);
    CHECK(two.sigma_z == doctest::Approx(-0.32676).epsilon(1e-4));
    CHECK(two.sigma_plus.real() == doctest::Approx(-0.16338).epsilon(1e-4));
    CHECK(std::abs(two.sigma_plus.imag()) < 1e-15);
    CHECK(two.sigma_z == doctest::Approx(-std::tanh(0.5) * std::cos(kPi / 4.0)).epsilon(1e-14));

    for (double bw : {0.1, 1.0, 10.0}) {
        const auto three = initial_averages(scheme::iii({0.4, 1.0}, {kPi / 4.0, 0.0}), bw);
        CHECK(three.sigma_z == doctest::Approx(0.70711).epsilon(1e-5));
        CHECK(three.sigma_plus.real() == doctest::Approx(0.35355).epsilon(1e-5));
        CHECK(std::abs(three.sigma_plus.imag()) < 1e-14);
    }
}

TEST_CASE("selective averages") {
    const QubitState psi(cplx(0.6, 0.0), cplx(0.0, 0.8));
    const auto av = initial_averages(scheme::selective(psi), 1.0);
    CHECK(av.sigma_z == doctest::Approx(0.36 - 0.64));
    // <sigma_+> = <psi|sigma_+|psi> = conj(c1) c0
    CHECK(std::abs(av.sigma_plus - cplx(0.0, 0.48)) < 1e-15);
    CHECK(std::abs(av.sigma_minus - std::conj(av.sigma_plus)) < 1e-15);
    CHECK(av.bloch_magnitude() == doctest::Approx(1.0));
}

TEST_CASE("general averages reduce to the closed forms") {
    oracle::Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const auto a = rng.direction();
        const auto b = rng.direction();
        const double bw = rng.uniform(0.01, 5.0);

        const NonSelective two = ns(scheme::ii(a, b));
        const auto g2 = initial_averages(scheme::general(a, two.b1, two.b2), bw);
        const auto c2 = initial_averages_scheme_ii(a, b, bw);
        CHECK(std::abs(g2.sigma_plus - c2.sigma_plus) < 1e-12);
        CHECK(std::abs(g2.sigma_z - c2.sigma_z) < 1e-12);
        CHECK(g2.bloch_magnitude() == doctest::Approx(std::tanh(0.5 * bw) * std::abs(std::cos(a.theta()))).epsilon(1e-12));

        const auto g3 = initial_averages(scheme::general(a, b, b), bw);
        const auto c3 = initial_averages_scheme_iii(b);
        CHECK(std::abs(g3.sigma_plus - c3.sigma_plus) < 1e-12);
        CHECK(std::abs(g3.sigma_z - c3.sigma_z) < 1e-12);
        CHECK(std::abs(c3.bloch_magnitude() - 1.0) < 1e-12);

        const NonSelective prime = ns(scheme::iii_prime(a, b));
        const auto gp = initial_averages(scheme::general(a, prime.b1, prime.b2), bw);
        const auto cp = initial_averages_scheme_iii_prime(a, b, bw);
        CHECK(std::abs(gp.sigma_plus - cp.sigma_plus) < 1e-12);
        CHECK(std::abs(gp.sigma_z - cp.sigma_z) < 1e-12);
    }
}

TEST_CASE("averages agree with the density matrix built from the operators") {
    oracle::Rng rng(14);
    for (int i = 0; i < 100; ++i) {
        const auto s = random_general(rng);
        const double bw = rng.uniform(0.05, 4.0);
        QubitOperator rho_eq = QubitOperator::Zero();
        rho_eq(0, 0) = std::exp(-0.5 * bw);
        rho_eq(1, 1) = std::exp(0.5 * bw);
        rho_eq /= rho_eq.trace();
        QubitOperator rho = QubitOperator::Zero();
        for (const auto& op : scheme_operators(s)) rho += op.omega * rho_eq * op.omega.adjoint();
        const auto av = initial_averages(s, bw);
        CHECK(std::abs(av.sigma_plus - (rho * pauli::sigma_plus()).trace()) < 1e-12);
        CHECK(std::abs(av.sigma_z - (rho * pauli::sigma3()).trace().real()) < 1e-12);
        CHECK(av.bloch_magnitude() <= 1.0 + 1e-12);
    }
}

TEST_CASE("scheme ii averages do not depend on phi_a") {
    oracle::Rng rng(15);
    for (int i = 0; i < 50; ++i) {
        const auto a = rng.direction();
        const auto b = rng.direction();
        const double bw = rng.uniform(0.1, 3.0);
        const auto ref = initial_averages(scheme::ii(a, b), bw);
        const auto moved = initial_averages(scheme::ii({a.theta(), rng.uniform(-kPi, kPi)}, b), bw);
        CHECK(std::abs(ref.sigma_plus - moved.sigma_plus) < 1e-12);
        CHECK(std::abs(ref.sigma_z - moved.sigma_z) < 1e-12);
    }
}

TEST_CASE("temperature is validated") {
    const auto s = scheme::ii({0.0, 0.0}, {1.0, 0.0});
    CHECK_THROWS_AS(initial_averages(s, 0.0), ValidationError);
    CHECK_THROWS_AS(initial_averages(s, -1.0), ValidationError);
    CHECK_THROWS_AS(initial_averages(s, INFINITY), ValidationError);
    CHECK_THROWS_AS(require_positive_temperature(NAN), ValidationError);
}

TEST_CASE("enhancement predicate") {
    oracle::Rng rng(16);
    for (int i = 0; i < 50; ++i) {
        const auto a = rng.direction();
        const auto b = rng.direction();
        CHECK(enhancement_predicate(scheme::ii(a, b), 1.0));
        CHECK_FALSE(enhancement_predicate(scheme::iii(a, b), 1.0));
        if (std::abs(std::cos(a.theta())) > 1e-3) CHECK(enhancement_predicate(scheme::iii_prime(a, b), 1.0));
    }
    CHECK_THROWS_AS(enhancement_predicate(scheme::selective(BlochDirection(1.0, 0.0)), 1.0), ValidationError);
}

TEST_CASE("kernel parameters of the special schemes") {
    oracle::Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        const auto a = rng.direction();
        const auto b = rng.direction();
        const double bw = rng.uniform(0.05, 4.0);
        const double x = 0.5 * bw;

        const auto p2 = scheme_kernel_params(scheme::ii(a, b), bw);
        CHECK(std::abs(p2.n2) < 1e-12);
        CHECK(p2.n1 / p2.d == doctest::Approx(1.0 / std::tanh(x)).epsilon(1e-10));

        const auto p3 = scheme_kernel_params(scheme::iii(a, b), bw);
        CHECK(std::abs(p3.n2) < 1e-12);
        CHECK(p3.n1 / p3.d == doctest::Approx(std::tanh(x)).epsilon(1e-10));
        CHECK(p3.d >= 0.0);
    }
    const auto flat = scheme_kernel_params(scheme::iii_prime({kPi / 2.0, 0.0}, {1.0, 0.0}), 1.0);
    CHECK(flat.degenerate());
    CHECK_THROWS_AS(scheme_kernel_params(scheme::selective(BlochDirection(1.0, 0.0)), 1.0), ValidationError);
}

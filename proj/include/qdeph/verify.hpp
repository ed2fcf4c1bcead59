// verify.hpp — self-check suites behind the `verify` subcommand

#pragma once

#include "qdeph/bath.hpp"
#include "qdeph/dynamics.hpp"
#include "qdeph/fock.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace qdeph {

struct VerifyCase {
    std::string suite;
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyReport {
    std::vector<VerifyCase> cases;
    bool passed() const;
};

// suite is one of "algebra", "kernels", "oracle", "all".
VerifyReport run_verify(const std::string& suite);
std::vector<std::string> verify_suites();

void print_report(std::ostream& os, const VerifyReport& r);
void write_report_csv(std::ostream& os, const VerifyReport& r);

// Two-mode bath used by the oracle comparisons: omega = 0.8, 1.5; g = 0.2, 0.3;
// omega0 = 0.25 (all in omega_c units).
std::vector<FockMode> oracle_modes(int n_max = 15);
inline constexpr double kOracleOmega0 = 0.25;

struct OracleComparison {
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;  // max |exact - analytic| / max |analytic|
};

// Exact truncated-Fock coherence vs the closed-form trajectory on a discrete bath.
OracleComparison compare_with_oracle(const PreparationScheme& s, double beta_omega0,
                                     const std::vector<double>& times, int n_max = 15);

// Named schemes used by the oracle suite: selective, i, ii, iii, iii_prime.
std::vector<std::pair<std::string, PreparationScheme>> oracle_schemes();

}  // namespace qdeph

#include "qdeph/csv.hpp"

#include <charconv>
#include <system_error>

namespace qdeph {

namespace {

std::string cell(const std::optional<double>& x) { return x ? format_number(*x) : std::string{}; }

}  // namespace

std::string format_number(double x) {
    if (x == 0.0) x = 0.0;  // no "-0"
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return {buf, res.ptr};
}

std::string format_short(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

void write_trajectory_csv(std::ostream& os, const DephasingTrajectory& traj) {
    os << kTrajectoryHeader << '\n';
    for (const auto& p : traj.points) {
        os << format_number(p.t) << ',' << format_number(p.gamma) << ',' << cell(p.gamma_cor) << ','
           << cell(p.gamma_eff) << ',' << format_number(p.phi) << ',' << cell(p.chi) << ','
           << format_number(p.coherence_plus.real()) << ',' << format_number(p.coherence_plus.imag()) << ','
           << cell(p.reduced_coherence) << ',' << format_number(p.bloch_v) << ',' << format_number(p.purity)
           << ',' << format_number(p.entropy) << '\n';
    }
}

}  // namespace qdeph

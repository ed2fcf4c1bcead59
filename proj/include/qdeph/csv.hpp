// csv.hpp — trajectory CSV output

#pragma once

#include "qdeph/dynamics.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace qdeph {

inline constexpr const char* kTrajectoryHeader =
    "t_omega_c,gamma,gamma_cor,gamma_eff,phi,chi,re_sigma_plus,im_sigma_plus,reduced_coherence,bloch_v,purity,"
    "entropy";

// 17 significant digits, '.' decimal point regardless of locale.
std::string format_number(double x);
// Shortest round-trip representation, for labels and file names.
std::string format_short(double x);

void write_trajectory_csv(std::ostream& os, const DephasingTrajectory& traj);

}  // namespace qdeph

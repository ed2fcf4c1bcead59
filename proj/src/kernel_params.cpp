#include "qdeph/kernel_params.hpp"

#include "qdeph/errors.hpp"

#include <cmath>

namespace qdeph {

bool SchemeKernelParams::degenerate() const {
    return std::abs(n1) < kAlgebraTol && std::abs(n2) < kAlgebraTol && std::abs(d) < kAlgebraTol;
}

SchemeKernelParams scheme_kernel_params(const NonSelective& s, double beta_omega0) {
    require_positive_temperature(beta_omega0);
    // The printed N1 and D, regrouped so that the cancellations between the
    // e^{+-beta omega0} terms happen analytically:
    //   N1 = sinh(b) [s_a^2 |z|^2 / 2 + c_a^2 S] + c_a cosh(b) (s2^2 - s1^2)
    //   D  = cosh^2(b/2) s_a^2 |z|^2 + c_a^2 [2 sinh^2(b/2) S + |z|^2] + c_a sinh(b) (s2^2 - s1^2)
    // with z = s1 e^{i phi1} + s2 e^{i phi2} and S = s1^2 + s2^2.
    const double b = beta_omega0;
    const double ca = std::cos(s.a.theta());
    const double sa = std::sin(s.a.theta());
    const double s1 = std::sin(s.b1.theta());
    const double s2 = std::sin(s.b2.theta());
    const double dphi = s.delta_phi();
    const double z2 = std::norm(s1 + s2 * std::polar(1.0, -dphi));
    const double sum = s1 * s1 + s2 * s2;
    const double diff = (s2 - s1) * (s2 + s1);
    const double sh_half = std::sinh(0.5 * b);
    const double ch_half = std::cosh(0.5 * b);

    SchemeKernelParams p;
    p.n1 = std::sinh(b) * (0.5 * sa * sa * z2 + ca * ca * sum) + ca * std::cosh(b) * diff;
    p.n2 = 2.0 * ca * std::sin(dphi) * s1 * s2;
    p.d = 2.0 * ch_half * ch_half * 0.5 * sa * sa * z2 + ca * ca * (2.0 * sh_half * sh_half * sum + z2) +
          ca * std::sinh(b) * diff;
    return p;
}

SchemeKernelParams scheme_kernel_params(const PreparationScheme& s, double beta_omega0) {
    const auto* ns = std::get_if<NonSelective>(&s);
    if (ns == nullptr) throw ValidationError("N1, N2, D are defined for non-selective schemes only");
    return scheme_kernel_params(*ns, beta_omega0);
}

}  // namespace qdeph

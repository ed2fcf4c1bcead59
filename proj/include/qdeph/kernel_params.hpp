// kernel_params.hpp — angle/temperature functionals N1, N2, D of a non-selective scheme

#pragma once

#include "qdeph/preparation.hpp"

namespace qdeph {

struct SchemeKernelParams {
    double n1 = 0.0;
    double n2 = 0.0;
    double d = 0.0;

    // All three vanish: the prepared state carries no coherence.
    bool degenerate() const;
};

SchemeKernelParams scheme_kernel_params(const NonSelective& s, double beta_omega0);
// Throws ValidationError for selective schemes.
SchemeKernelParams scheme_kernel_params(const PreparationScheme& s, double beta_omega0);

}  // namespace qdeph

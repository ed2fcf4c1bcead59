#include "qdeph/bath.hpp"

#include "qdeph/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

namespace qdeph {

namespace {

constexpr double kPi = std::numbers::pi;
// e^{-40} ~ 4e-18: the exponential cutoff makes everything above this negligible.
constexpr double kUpperLimit = 40.0;
// Above this time the panels are split to a quarter period of the oscillating factor.
constexpr double kOscillatoryTime = 10.0;
constexpr std::size_t kMaxSplits = 200000;

void require_time(double t) {
    if (!std::isfinite(t) || t < 0.0) throw ValidationError("time must be finite and >= 0");
}

// (1 - cos(w t)) / w  without cancellation.
double one_minus_cos_over_w(double w, double t) {
    const double s = std::sin(0.5 * w * t);
    return 2.0 * s * s / w;
}

// The integrands are w^{s-1} * r(w) with r smooth and finite at w = 0.
// gamma:  r(w) = lambda e^{-w} coth(beta w/2) (1 - cos w t) / w,   r(0) = lambda t^2 / beta
// Phi:    r(w) = lambda e^{-w} sin(w t) / w,                        r(0) = lambda t
struct GammaRegular {
    double lambda, beta, t;
    double operator()(double w) const {
        if (w == 0.0) return lambda * t * t / beta;
        return lambda * std::exp(-w) * coth_stable(0.5 * beta * w) * one_minus_cos_over_w(w, t);
    }
};

struct PhiRegular {
    double lambda, t;
    double operator()(double w) const {
        if (w == 0.0) return lambda * t;
        return lambda * std::exp(-w) * std::sin(w * t) / w;
    }
};

std::vector<double> breakpoints(double t) {
    std::vector<double> pts;
    if (t > kOscillatoryTime) {
        const double h = 0.5 * kPi / t;
        const auto n = static_cast<std::size_t>(std::ceil(kUpperLimit / h));
        pts.reserve(n + 1);
        for (std::size_t i = 0; i < n; ++i) pts.push_back(static_cast<double>(i) * h);
        pts.push_back(kUpperLimit);
    } else {
        pts = {0.0, 1.0, 4.0, 10.0, 20.0, kUpperLimit};
    }
    return pts;
}

// int_0^L w^{s-1} r(w) dw. For s < 1 the substitution w = u^{1/s} removes the
// endpoint singularity: the integrand becomes r(u^{1/s}) / s.
template <class Regular>
double integrate_family(const Regular& r, double s, double t, const QuadratureOptions& opt,
                        const char* what) {
    using boost::math::quadrature::gauss_kronrod;
    std::vector<double> pts = breakpoints(t);
    const bool substitute = s < 1.0;
    if (substitute) {
        for (double& p : pts) p = std::pow(p, s);
    }
    auto f = [&](double x) {
        if (substitute) {
            const double w = x == 0.0 ? 0.0 : std::pow(x, 1.0 / s);
            return r(w) / s;
        }
        if (s == 1.0) return r(x);
        return x == 0.0 ? 0.0 : std::pow(x, s - 1.0) * r(x);
    };

    struct Panel {
        double a, b, value, err, l1;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    // One G7/K15 step on [a, b]; the error estimate is |K15 - G7| in panel units.
    auto rule = [&](double a, double b) {
        using kronrod = gauss_kronrod<double, 15>;
        const auto& x = kronrod::abscissa();
        const auto& wk = kronrod::weights();
        const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        const double f0 = f(mid);
        double k = f0 * wk[0];
        double g = f0 * wg[0];
        double l1 = std::abs(k);
        for (std::size_t i = 1; i < x.size(); ++i) {
            const double fp = f(mid + half * x[i]);
            const double fm = f(mid - half * x[i]);
            k += (fp + fm) * wk[i];
            l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
            if (i % 2 == 0) g += (fp + fm) * wg[i / 2];
        }
        const double err = std::max(std::abs(k - g), 2.0 * std::numeric_limits<double>::epsilon() * std::abs(k));
        return Panel{a, b, half * k, half * err, half * l1};
    };

    std::priority_queue<Panel> queue;
    double total = 0.0;
    double total_err = 0.0;
    double total_l1 = 0.0;
    auto push = [&](const Panel& p) {
        total += p.value;
        total_err += p.err;
        total_l1 += p.l1;
        queue.push(p);
    };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) push(rule(pts[i], pts[i + 1]));

    std::size_t splits = 0;
    while (total_err > std::max(opt.abs_tol, opt.rel_tol * total_l1) && splits < kMaxSplits) {
        const Panel worst = queue.top();
        queue.pop();
        total -= worst.value;
        total_err -= worst.err;
        total_l1 -= worst.l1;
        const double mid = 0.5 * (worst.a + worst.b);
        push(rule(worst.a, mid));
        push(rule(mid, worst.b));
        ++splits;
        // Running sums drift; resum now and then.
        if (splits % 1024 == 0) {
            auto copy = queue;
            total = total_err = total_l1 = 0.0;
            for (; !copy.empty(); copy.pop()) {
                total += copy.top().value;
                total_err += copy.top().err;
                total_l1 += copy.top().l1;
            }
        }
    }
    if (!std::isfinite(total) || total_err > std::max(opt.abs_tol, opt.rel_tol * total_l1)) {
        throw QuadratureError(std::string(what) + " quadrature did not converge at t = " + std::to_string(t),
                              total, total_err);
    }
    return total;
}

}  // namespace

BathSpec BathSpec::ohmic(double s, double lambda) {
    if (!std::isfinite(s) || s <= 0.0) throw ValidationError("spectral exponent s must be > 0");
    if (!std::isfinite(lambda) || lambda < 0.0) throw ValidationError("coupling lambda must be >= 0");
    return BathSpec(OhmicFamily{s, lambda});
}

BathSpec BathSpec::discrete(std::vector<DiscreteMode> modes) {
    for (const auto& m : modes) {
        if (!std::isfinite(m.omega) || m.omega <= 0.0)
            throw ValidationError("discrete mode frequencies must be > 0");
        if (!std::isfinite(m.g2) || m.g2 < 0.0) throw ValidationError("discrete mode |g|^2 must be >= 0");
    }
    return BathSpec(DiscreteBath{std::move(modes)});
}

ThermalContext::ThermalContext(double beta_omega_c) : beta_(beta_omega_c) {
    if (!std::isfinite(beta_omega_c) || beta_omega_c <= 0.0)
        throw ValidationError("beta_omega_c must be finite and > 0");
}

ThermalContext ThermalContext::from_qubit(double beta_omega0, double omega0_over_omegac) {
    if (!std::isfinite(omega0_over_omegac) || omega0_over_omegac <= 0.0)
        throw ValidationError("omega0_over_omegac must be finite and > 0");
    if (!std::isfinite(beta_omega0) || beta_omega0 <= 0.0)
        throw ValidationError("beta_omega0 must be finite and > 0");
    return ThermalContext(beta_omega0 / omega0_over_omegac);
}

double spectral_density(const OhmicFamily& b, double omega) {
    if (omega <= 0.0) return 0.0;
    return b.lambda * std::pow(omega, b.s) * std::exp(-omega);
}

double coth_stable(double x) {
    if (x < 1e-4) return 1.0 / x + x / 3.0 - x * x * x / 45.0;
    return 1.0 / std::tanh(x);
}

double gamma_dynamical(const BathSpec& b, const ThermalContext& th, double t, const QuadratureOptions& opt) {
    require_time(t);
    if (t == 0.0) return 0.0;
    const double beta = th.beta_omega_c();
    if (const auto* d = std::get_if<DiscreteBath>(&b.model())) {
        double sum = 0.0;
        for (const auto& m : d->modes)
            sum += 4.0 * m.g2 * coth_stable(0.5 * beta * m.omega) * one_minus_cos_over_w(m.omega, t) / m.omega;
        return sum;
    }
    const auto& o = std::get<OhmicFamily>(b.model());
    if (o.lambda == 0.0) return 0.0;
    return integrate_family(GammaRegular{o.lambda, beta, t}, o.s, t, opt, "gamma");
}

double phi_correlation(const BathSpec& b, double t, const QuadratureOptions& opt) {
    require_time(t);
    if (t == 0.0) return 0.0;
    if (const auto* d = std::get_if<DiscreteBath>(&b.model())) {
        double sum = 0.0;
        for (const auto& m : d->modes) sum += 4.0 * m.g2 * std::sin(m.omega * t) / (m.omega * m.omega);
        return sum;
    }
    const auto& o = std::get<OhmicFamily>(b.model());
    if (o.lambda == 0.0) return 0.0;
    if (o.s == 1.0 && !opt.force_quadrature) return o.lambda * std::atan(t);
    return integrate_family(PhiRegular{o.lambda, t}, o.s, t, opt, "Phi");
}

BathSpec discretize(const OhmicFamily& b, int n_modes, double omega_max) {
    if (n_modes < 1 || !(omega_max > 0.0)) throw ValidationError("discretize needs n_modes >= 1 and omega_max > 0");
    const double dw = omega_max / n_modes;
    std::vector<DiscreteMode> modes;
    modes.reserve(static_cast<std::size_t>(n_modes));
    for (int k = 0; k < n_modes; ++k) {
        const double w = (k + 0.5) * dw;
        // sum_k 4 |g_k|^2 f(w_k) ~ int J(w) f(w) dw
        modes.push_back({w, 0.25 * spectral_density(b, w) * dw});
    }
    return BathSpec::discrete(std::move(modes));
}

}  // namespace qdeph

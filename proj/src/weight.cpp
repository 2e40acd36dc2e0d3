#include "orlicz/weight.hpp"

#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/solvers.hpp"

namespace orlicz {

Weight make_weight(double tau, std::function<double(double)> density,
                   std::vector<std::pair<double, double>> jumps, std::string label) {
    if (!(tau > 0.0)) throw ConfigError("weight: tau must be positive");
    for (const auto& [loc, mass] : jumps) {
        if (loc < 0.0 || loc > tau) throw ConfigError("weight: jump location outside [0, tau]");
        if (!(mass > 0.0)) throw ConfigError("weight: jump mass must be positive");
    }
    Weight w;
    w.tau = tau;
    w.density = std::move(density);
    w.jumps = std::move(jumps);
    w.label = std::move(label);

    double tv = 0.0;
    if (w.density) {
        tv += num::adaptive_simpson([&](double t) { return w.density(t); }, 0.0, tau, 1e-12, 40);
    }
    for (const auto& [loc, mass] : w.jumps) tv += mass;
    if (!(tv > 0.0)) throw ConfigError("weight: mu must be non-constant (total variation > 0)");
    w.total_variation = tv;
    return w;
}

Weight make_lebesgue_weight(double tau) {
    return make_weight(tau, [](double) { return 1.0; }, {}, "lebesgue");
}

Weight make_one_minus_cos_weight(double tau) {
    return make_weight(tau, [](double t) { return std::sin(t); }, {}, "one-minus-cos");
}

Weight make_atomic_weight(double tau, std::vector<std::pair<double, double>> atoms) {
    return make_weight(tau, nullptr, std::move(atoms), "atoms");
}

double stieltjes_integral(const std::function<double(double)>& g, const Weight& w) {
    double result = 0.0;
    if (w.density) {
        const auto integrand = [&](double t) {
            const double gv = g(t);
            if (!std::isfinite(gv)) throw IntegrationError("stieltjes: non-finite integrand sample");
            return gv * w.density(t);
        };
        // coarse magnitude estimate to scale the absolute tolerance
        double scale = 0.0;
        for (int i = 0; i <= 8; ++i) scale = std::max(scale, std::abs(integrand(w.tau * i / 8.0)));
        const double tol = 1e-9 * std::max(1.0, scale * w.tau);
        result += num::adaptive_simpson(integrand, 0.0, w.tau, tol, 40);
    }
    for (const auto& [loc, mass] : w.jumps) {
        const double gv = g(loc);
        if (!std::isfinite(gv)) throw IntegrationError("stieltjes: non-finite integrand at atom");
        result += gv * mass;
    }
    return result;
}

}  // namespace orlicz

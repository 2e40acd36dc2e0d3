#include "orlicz/smoothness.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/solvers.hpp"

namespace orlicz {

Spectrum generalized_difference(const Spectrum& f, const ShapeFunction& phi, double h) {
    Spectrum out;
    for (const auto& [k, v] : f.entries()) out.set(k, phi(k * h) * v);
    return out;
}

namespace {

std::vector<int> support_of(const Spectrum& f) {
    std::vector<int> ks;
    ks.reserve(f.entries().size());
    for (const auto& [k, v] : f.entries()) ks.push_back(k);
    return ks;
}

}  // namespace

ModulusScan::ModulusScan(const Spectrum& f, const ShapeFunction& phi, double u,
                         const NormContext& norms, ModulusOptions options)
    : support_(support_of(f)),
      phi_(&phi),
      u_(u),
      opts_(options),
      eval_(norms, support_) {
    base_.reserve(support_.size());
    for (const auto& [k, v] : f.entries()) base_.push_back(std::abs(v));
    buf_.resize(support_.size());
    const double deg = f.degree();
    fast_exact_ = support_.empty() || deg * u_ <= phi.monotone_end * (1.0 + 1e-12);
    if (opts_.grid < 8) opts_.grid = 8;
}

double ModulusScan::norm_at(double h) {
    for (std::size_t i = 0; i < support_.size(); ++i)
        buf_[i] = (*phi_)(support_[i] * h) * base_[i];
    return eval_.norm(buf_);
}

void ModulusScan::ensure_grid() {
    if (grid_ready_) return;
    const int g = opts_.grid;
    dh_ = u_ / (g - 1);
    grid_vals_.resize(g);
    prefix_arg_.resize(g);
    int best = 0;
    for (int j = 0; j < g; ++j) {
        grid_vals_[j] = (j == 0) ? 0.0 : norm_at(j * dh_);
        if (grid_vals_[j] > grid_vals_[best]) best = j;
        prefix_arg_[j] = best;
    }
    grid_ready_ = true;
}

double ModulusScan::omega(double t) {
    if (!(t > 0.0) || support_.empty()) return 0.0;
    t = std::min(t, u_);

    if (fast_exact_) return norm_at(t);

    ensure_grid();
    const int g = opts_.grid;
    int jt = static_cast<int>(t / dh_ * (1.0 + 1e-15));
    jt = std::clamp(jt, 0, g - 1);
    const int best = prefix_arg_[jt];

    double value = grid_vals_[best];
    const auto neg_norm = [&](double h) { return -norm_at(h); };

    // peak refinement around the best grid point
    const double lo = std::max(0.0, (best - 1) * dh_);
    const double hi_full = std::min((best + 1) * dh_, u_);
    if (hi_full <= t) {
        auto it = refined_.find(best);
        if (it == refined_.end()) {
            const double arg = num::golden_min(neg_norm, lo, hi_full, opts_.refine_iters);
            it = refined_.emplace(best, norm_at(arg)).first;
        }
        value = std::max(value, it->second);
    } else {
        const double hi = std::min(hi_full, t);
        if (hi > lo) {
            const double arg = num::golden_min(neg_norm, lo, hi, opts_.refine_iters);
            value = std::max(value, norm_at(arg));
        }
    }

    // partial boundary cell [h_jt, t], not covered by grid points
    if (best != jt && t > jt * dh_) {
        const double arg = num::golden_min(neg_norm, jt * dh_, t, opts_.refine_iters);
        value = std::max(value, norm_at(arg));
    }
    return value;
}

double modulus(const Spectrum& f, const ShapeFunction& phi, double t, const NormContext& norms,
               ModulusOptions options) {
    if (!(t > 0.0)) return 0.0;
    ModulusScan scan(f, phi, t, norms, options);
    return scan.omega(t);
}

double averaged_modulus_with_scan(ModulusScan& scan, const Weight& w, double u) {
    if (!(u > 0.0)) throw InvalidInputError("averaged modulus: u must be positive");
    if (u > scan.range() * (1.0 + 1e-12))
        throw InvalidInputError("averaged modulus: scan range too small for u");
    const double ratio = u / w.tau;
    const double integral =
        stieltjes_integral([&](double s) { return scan.omega(s * ratio); }, w);
    return integral / w.total_variation;
}

double averaged_modulus(const Spectrum& f, const ShapeFunction& phi, const Weight& w, double u,
                        const NormContext& norms, ModulusOptions options) {
    if (!(u > 0.0)) throw InvalidInputError("averaged modulus: u must be positive");
    ModulusScan scan(f, phi, u, norms, options);
    return averaged_modulus_with_scan(scan, w, u);
}

double s_averaged_modulus(const Spectrum& f, const ShapeFunction& phi, const Weight& w, double u,
                          double s, const NormContext& norms, ModulusOptions options) {
    if (!norms.sp_exponent)
        throw UnsupportedError("s-averaged moduli are defined for the l_p presets only");
    if (!(s >= 1.0)) throw InvalidInputError("s-averaged modulus: s must be >= 1");
    if (!(u > 0.0)) throw InvalidInputError("s-averaged modulus: u must be positive");
    ModulusScan scan(f, phi, u, norms, options);
    const double ratio = u / w.tau;
    const double integral = stieltjes_integral(
        [&](double x) { return std::pow(scan.omega(x * ratio), s); }, w);
    return std::pow(integral / w.total_variation, 1.0 / s);
}

}  // namespace orlicz

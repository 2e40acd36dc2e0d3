#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "orlicz/norms.hpp"
#include "orlicz/shape.hpp"
#include "orlicz/spectrum.hpp"
#include "orlicz/weight.hpp"

namespace orlicz {

/// Generalized difference as a Fourier multiplier: coefficient k is
/// multiplied by phi(k h).
Spectrum generalized_difference(const Spectrum& f, const ShapeFunction& phi, double h);

struct ModulusOptions {
    int grid = 512;          // h-grid density on [0, u]
    int refine_iters = 32;   // golden-section iterations around the best grid point
};

/// Shared sup-scan for the generalized modulus of smoothness over [0, u]:
/// omega(t) = sup_{|h| <= t} ||{phi(k h) c(k)}||*. By evenness only
/// h in [0, t] is scanned. When degree(f) * u lies inside the monotone
/// interval of phi the supremum is attained at h = t (coefficient-wise
/// domination) and each query is a single norm evaluation; otherwise a
/// uniform grid plus golden-section refinement around the best grid point
/// is used, with refinements memoized across queries.
///
/// Instances cache lazily and are not safe for concurrent queries; create
/// one per thread.
class ModulusScan {
  public:
    ModulusScan(const Spectrum& f, const ShapeFunction& phi, double u, const NormContext& norms,
                ModulusOptions options = {});

    double omega(double t);

    double range() const { return u_; }
    bool fast_path() const { return fast_exact_; }

  private:
    double norm_at(double h);
    void ensure_grid();

    std::vector<int> support_;
    std::vector<double> base_;  // |c(k)|, aligned with support_
    const ShapeFunction* phi_;
    double u_;
    ModulusOptions opts_;
    SupportNormEvaluator eval_;
    bool fast_exact_ = false;

    bool grid_ready_ = false;
    double dh_ = 0.0;
    std::vector<double> grid_vals_;
    std::vector<int> prefix_arg_;            // argmax of grid_vals_[0..j]
    std::unordered_map<int, double> refined_;  // memoized peak refinements
    std::vector<double> buf_;
};

/// Generalized modulus of smoothness at t (one-shot scan on [0, t]).
double modulus(const Spectrum& f, const ShapeFunction& phi, double t, const NormContext& norms,
               ModulusOptions options = {});

/// Weighted average of the modulus: (mu(tau)-mu(0))^{-1} int_0^u omega(f,t)
/// d mu(tau t / u), realized by the substitution s = tau t / u as
/// (1/TV) int_0^tau omega(f, s u / tau) d mu(s).
double averaged_modulus(const Spectrum& f, const ShapeFunction& phi, const Weight& w, double u,
                        const NormContext& norms, ModulusOptions options = {});

/// Same average off a prebuilt scan (scan.range() must be >= u); used when
/// many values of u share one spectrum.
double averaged_modulus_with_scan(ModulusScan& scan, const Weight& w, double u);

/// (1/s)-power average ((1/TV) int_0^u omega^s d mu(tau t/u))^{1/s}.
/// Defined for the l_p presets only (norms.sp_exponent must be set).
double s_averaged_modulus(const Spectrum& f, const ShapeFunction& phi, const Weight& w, double u,
                          double s, const NormContext& norms, ModulusOptions options = {});

}  // namespace orlicz

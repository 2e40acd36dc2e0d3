#pragma once

#include <cstdint>
#include <optional>

#include "orlicz/norms.hpp"
#include "orlicz/presets.hpp"
#include "orlicz/shape.hpp"
#include "orlicz/smoothness.hpp"
#include "orlicz/spectrum.hpp"
#include "orlicz/weight.hpp"

namespace orlicz {

/// A fully specified functional class: multiplier psi, shape phi, weight mu,
/// norm handles, and either an index n (unit-ball-of-averaged-modulus class)
/// or a majorant (growth-bounded class).
struct ClassSpec {
    PsiMultiplier psi;
    ShapeFunction phi;
    Weight weight;
    NormContext norms;
    std::optional<int> n_mode;
    std::optional<Majorant> majorant;
    ModulusOptions modopts = {};

    bool majorant_mode() const { return majorant.has_value(); }
    double tau() const { return weight.tau; }

    /// Component validations: psi membership, phi invariants, the
    /// normalization condition on the conjugates (operational unit-sup form
    /// for flat conjugates), and tau <= a plus phi(a) = sup phi in majorant
    /// mode.
    ValidationReport validate() const;
};

ClassSpec class_spec_from_scenario(const Scenario& s, std::optional<int> n = std::nullopt,
                                   NormBackend backend = NormBackend::Amemiya);

/// The k-scan integral: value = min over k in [n, k_max] of
/// int_0^tau phi(k t / n) dmu(t). attained_at_n reports whether the minimum
/// equals the k = n integral within 1e-7 (relative) — the sharpness
/// hypothesis of the equality cases. The scan is truncated at k_max
/// (default 64 n) and reports only the minimum so far together with the
/// trivial sup-phi bound valid for every k.
struct InReport {
    double value = 0.0;
    long long argmin_k = 0;
    bool attained_at_n = false;
    long long k_max = 0;
    double integral_phi = 0.0;  // int_0^tau phi dmu (the k = n member)
    double sup_phi_bound = 0.0;
};
InReport compute_I_n(const ShapeFunction& phi, const Weight& w, int n, long long k_max = 0);

/// The sharp constant (mu(tau) - mu(0)) / int_0^tau phi dmu * |psi(n)|.
/// condition12 mirrors attained_at_n; when false the constant is still
/// returned (callers decide whether the equality cases apply).
struct SharpConstantResult {
    double value = 0.0;
    bool condition12 = false;
};
SharpConstantResult sharp_constant(const ClassSpec& spec, int n, const InReport* in = nullptr);

struct JacksonReport {
    int n = 0;
    double e_n = 0.0;
    double averaged = 0.0;   // averaged modulus of the psi-derivative at tau/n
    double i_n = 0.0;
    double rhs = 0.0;
    double sharp_const = 0.0;
    double ratio_extremal = 0.0;  // E_n(f_n) / averaged modulus of the extremal
    bool condition12 = false;
    bool degenerate = false;
    bool verdict = false;
};

/// Both sides of the approximation inequality: E_n(f) against
/// TV / I_n * |psi(n)| * averaged modulus of f^psi. An InReport may be
/// passed to amortize the k-scan across a batch; it is recomputed when its
/// scan is too short for the spectrum's degree.
JacksonReport jackson_verify(const Spectrum& f, const ClassSpec& spec, int n,
                             const InReport* in = nullptr);

/// The extremal spectrum gamma + delta e^{i side n x}: {0: gamma, side*n: delta}.
Spectrum extremal_function(int n, Complex delta, Complex gamma, int side);

/// E_n(f_n) / averaged modulus of f_n^psi for the extremal spectrum; equals
/// the sharp constant under the attainment condition.
double sharpness_ratio(const ClassSpec& spec, int n);

/// Class membership. margin is the worst violation (<= 0 for members):
/// n-mode compares the averaged modulus at tau/n against 1; majorant mode
/// compares against Omega(u) on a u-grid over (0, tau].
struct MembershipResult {
    bool member = false;
    double margin = 0.0;
};
MembershipResult class_membership(const Spectrum& f, const ClassSpec& spec,
                                  int u_grid_points = 64);

/// Width bounds for N in {2n-1, 2n}: lower = TV/int phi dmu * |psi(n)|,
/// upper = TV/I_n * |psi(n)|, both times Omega(tau/n) in majorant mode;
/// exact is set when the k-scan minimum is attained at n. radius is the
/// ball radius of the embedding construction (the lower value).
struct WidthReport {
    int n = 0;
    int N = 0;
    double lower = 0.0;
    double upper = 0.0;
    std::optional<double> exact;
    double radius = 0.0;
    double i_n = 0.0;
    bool attained_at_n = false;
};
WidthReport width_value(const ClassSpec& spec, int n, const InReport* in = nullptr);

/// Ball embedding probe: `samples` spectra of degree <= n (the extremal
/// direction first, then random) scaled to Orlicz norm = radius_scale * R_n,
/// counted as violations when the membership margin exceeds 1e-6.
struct BernsteinResult {
    int violations = 0;
    double worst_margin = 0.0;
};
BernsteinResult verify_bernstein_lower(const ClassSpec& spec, int n, int samples,
                                       std::uint64_t seed, double radius_scale = 1.0);

/// Projection upper bound probe: random class members (rescaled to
/// membership margin ~ 0), sup of E_n over the sample against the width
/// upper bound.
struct ProjectionResult {
    double sup_ratio = 0.0;
    double sup_e_n = 0.0;
    double upper = 0.0;
};
ProjectionResult verify_projection_upper(const ClassSpec& spec, int n, int samples,
                                         std::uint64_t seed);

/// The majorant scaling condition on a log grid of xi times a u-grid on
/// (0, a]: Omega(u/xi) * int_0^tau phi*(xi s) dmu(s) <= Omega(u) * int_0^tau
/// phi dmu. Reports the worst LHS/RHS ratio and its location.
struct MajorantCheckResult {
    bool ok = false;
    double worst_ratio = 0.0;
    double worst_xi = 0.0;
    double worst_u = 0.0;
};
MajorantCheckResult majorant_condition(const ShapeFunction& phi, const Weight& w,
                                       const Majorant& omega, int xi_points = 64,
                                       int u_points = 64, double xi_lo = 0.1,
                                       double xi_hi = 10.0);

}  // namespace orlicz

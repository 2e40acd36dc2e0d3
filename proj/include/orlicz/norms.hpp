#pragma once

#include <memory>
#include <optional>
#include <string>

#include "orlicz/coefficients.hpp"
#include "orlicz/orlicz_function.hpp"

namespace orlicz {

/// Luxemburg norm: inf{ a > 0 : sum_k M_k(c_k / a) <= 1 }, by bisection on
/// the nonincreasing modular. Returns 0 for the zero sequence. Relative
/// tolerance 1e-10.
double luxemburg_norm(const CoefficientSeq& c, const OrliczFamily& fam);

/// Orlicz norm, dual route: sup{ sum lambda_k c_k : sum M*_k(lambda_k) <= 1 }
/// via per-index concave maximization against a KKT multiplier, bisection on
/// the multiplier, and a final feasibility rescale. Relative tolerance 1e-8.
/// Throws UnboundedNormError when the supremum diverges (some M*_k vanishes
/// along an unbounded ray).
double orlicz_norm_dual(const CoefficientSeq& c, const ConjugateFamily& conj);

/// Orlicz norm, Amemiya route: inf_{t>0} (1 + sum_k M_k(t c_k)) / t via
/// golden section in log t. Independent backend; agrees with the dual route
/// (classical identity, cross-checked in tests).
double orlicz_norm_amemiya(const CoefficientSeq& c, const OrliczFamily& fam);

/// Test oracle: iteratively refined grid maximization of sum lambda_k c_k
/// over the feasible set. Supports at most 3 nonzero entries
/// (UnsupportedSizeError otherwise). `grid_resolution` is the number of grid
/// points per axis per refinement round.
double orlicz_norm_bruteforce(const CoefficientSeq& c, const ConjugateFamily& conj,
                              int grid_resolution = 33);

enum class NormBackend { Dual, Amemiya };

/// Norm evaluator bound to a fixed support set. Family members are fetched
/// once; repeated evaluations (the h-scans of the smoothness module) then
/// run on plain value buffers without rebuilding sparse sequences.
class SupportNormEvaluator {
  public:
    SupportNormEvaluator(const class NormContext& ctx, std::vector<int> support);

    /// Orlicz norm of {support[i] -> values[i]}; values must be >= 0.
    double norm(const std::vector<double>& values) const;

  private:
    std::vector<int> support_;
    std::vector<OrliczFunction> fam_members_;
    std::vector<OrliczFunction> conj_members_;
    NormBackend backend_;
};

/// Bundle of a family, its conjugate family and a backend selection; the
/// "norm handle" passed to the spectral and smoothness layers. Both sides
/// of any verified inequality evaluate through the same context.
class NormContext {
  public:
    NormContext(OrliczFamily fam, ConjugateFamily conj,
                NormBackend backend = NormBackend::Amemiya)
        : fam_(std::move(fam)), conj_(std::move(conj)), backend_(backend) {}

    double norm(const CoefficientSeq& c) const {
        return backend_ == NormBackend::Dual ? orlicz_norm_dual(c, conj_)
                                             : orlicz_norm_amemiya(c, fam_);
    }

    double luxemburg(const CoefficientSeq& c) const { return luxemburg_norm(c, fam_); }

    const OrliczFamily& family() const { return fam_; }
    const ConjugateFamily& conjugate_family() const { return conj_; }
    NormBackend backend() const { return backend_; }
    void set_backend(NormBackend b) { backend_ = b; }

    /// Set when the family is a power preset with Orlicz norm == l_p norm;
    /// enables the s-averaged moduli.
    std::optional<double> sp_exponent;

  private:
    OrliczFamily fam_;
    ConjugateFamily conj_;
    NormBackend backend_;
};

}  // namespace orlicz

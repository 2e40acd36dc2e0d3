#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace orlicz {

/// A single Orlicz function M: [0, inf) -> [0, inf], convex, nondecreasing,
/// M(0) = 0, M(t) -> inf. Values may be +inf (the distinguished overflow
/// value used throughout; never an error by itself).
struct OrliczFunction {
    std::function<double(double)> eval;
    /// Beyond this argument eval may return +inf (finite only for families
    /// with bounded effective domain, e.g. conjugates of linear functions).
    double domain_hint = std::numeric_limits<double>::infinity();

    double operator()(double t) const { return eval(t); }
};

struct ValidationIssue {
    std::string what;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;

    void fail(std::string msg) {
        ok = false;
        issues.push_back({std::move(msg)});
    }
};

/// Sampled-grid check of the OrliczFunction invariants: M(0)=0, midpoint
/// convexity, monotonicity, growth to infinity (unless the domain ends
/// first).
ValidationReport validate_orlicz(const OrliczFunction& m, double t_max = 64.0, int samples = 256);

/// Piecewise-linear Orlicz function from a table of (t, M(t)) nodes.
/// The table must start at (0, 0) with nondecreasing convex values; the last
/// slope extends linearly to +inf. Non-convex tables are rejected.
OrliczFunction orlicz_from_table(std::vector<std::pair<double, double>> table);

/// Legendre transform value  M*(v) = sup{ u v - M(u) : u >= 0 }.
/// Computed by expanding-bracket golden search on the concave objective;
/// +inf is returned when the supremum still grows at the search horizon
/// (1e6). Detected non-convexity of M raises InvalidInputError.
double conjugate(const OrliczFunction& m, double v);

/// sup{ v >= 0 : M*(v) <= 1 } for a conjugate member. Returns +inf when the
/// set is unbounded within the horizon. This is the operational content of
/// the normalization condition: it equals 1 exactly when single-harmonic
/// Orlicz norms reproduce the coefficient modulus.
double unit_sup(const OrliczFunction& conj_member);

/// Indexed family {M_k}. Presets are symmetric in k but the index map is an
/// arbitrary function of k in Z.
class OrliczFamily {
  public:
    OrliczFamily(std::function<OrliczFunction(int)> member, std::string label)
        : member_(std::move(member)), label_(std::move(label)) {}

    OrliczFunction member(int k) const { return member_(k); }
    const std::string& label() const { return label_; }

  private:
    std::function<OrliczFunction(int)> member_;
    std::string label_;
};

/// The conjugate family {M*_k}. Either closed-form (presets) or obtained by
/// numeric conjugation of a source family.
class ConjugateFamily {
  public:
    static ConjugateFamily closed(std::function<OrliczFunction(int)> member, std::string label) {
        return ConjugateFamily(std::move(member), std::move(label), true);
    }

    /// Members computed pointwise through conjugate(); no closed form.
    static ConjugateFamily numeric_of(const OrliczFamily& source);

    OrliczFunction member(int k) const { return member_(k); }
    bool closed_form() const { return closed_form_; }
    const std::string& label() const { return label_; }

  private:
    ConjugateFamily(std::function<OrliczFunction(int)> member, std::string label, bool closed_form)
        : member_(std::move(member)), label_(std::move(label)), closed_form_(closed_form) {}

    std::function<OrliczFunction(int)> member_;
    std::string label_;
    bool closed_form_;
};

struct NormalizationReport {
    bool ok = true;
    std::vector<int> failing;  // indices k that violate the condition
};

/// Checks M*_k(1) = 1 (within 1e-9) and M*_k(1 + eps) > 1 for
/// eps in {1e-3, 1e-1, 1} on the given indices.
NormalizationReport check_normalization(const ConjugateFamily& conj, const std::vector<int>& ks);

}  // namespace orlicz

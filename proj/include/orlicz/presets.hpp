#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orlicz/norms.hpp"
#include "orlicz/shape.hpp"
#include "orlicz/spectrum.hpp"
#include "orlicz/weight.hpp"

// Forward declaration of the vendored JSON type.
#include "json.hpp"

namespace orlicz {

struct FamilyPair {
    OrliczFamily family;
    ConjugateFamily conjugate;
    /// Set when the Orlicz norm coincides with the l_p coefficient norm.
    std::optional<double> sp_exponent;
};

/// M_k(t) = t^p (p^{-1/p} q^{-1/q})^p with 1/p + 1/q = 1; the scaling makes
/// the Orlicz norm equal to the l_p norm of the coefficients. Conjugates are
/// the closed-form v^q. Requires p > 1 (use l1_family otherwise).
FamilyPair power_family(double p);

/// M_k(u) = u; conjugates are 0 on [0, 1] and +inf beyond. Orlicz norm is
/// the l_1 sum.
FamilyPair l1_family();

/// power_family(2): M_k(t) = t^2/4, the Lebesgue L_2 case.
FamilyPair l2_family();

/// phi_alpha(t) = 2^{alpha/2} (1 - cos t)^{alpha/2}, nondecreasing on
/// [0, pi], sup value 2^alpha.
ShapeFunction phi_alpha(double alpha);

/// Bounded everywhere-monotone shape t / (1 + t); makes the k-scan infimum
/// attain at k = n for every weight.
ShapeFunction phi_monotone_bounded();

struct ClassicalWeightPair {
    Weight mu1;  // density sin t  (mu(t) = 1 - cos t)
    Weight mu2;  // Lebesgue       (mu(t) = t)
};
ClassicalWeightPair classical_weights(double tau);

/// psi(k) = (ik)^{-r} on the principal branch; |psi(k)| = |k|^{-r}.
PsiMultiplier psi_power(double r);

/// Power majorant u^r.
Majorant majorant_power(double r);

/// A fully assembled verification scenario.
struct Scenario {
    std::string name;
    FamilyPair families;
    ShapeFunction phi;
    Weight weight;
    PsiMultiplier psi;
    std::optional<Majorant> majorant;
    std::string provenance;

    double tau() const { return weight.tau; }

    NormContext make_context(NormBackend backend = NormBackend::Amemiya) const {
        NormContext ctx(families.family, families.conjugate, backend);
        ctx.sp_exponent = families.sp_exponent;
        return ctx;
    }
};

/// Names of the built-in scenarios, in deterministic order.
const std::vector<std::string>& scenario_registry();

/// Builds a registry scenario by name (ConfigError for unknown names).
Scenario make_scenario(const std::string& name);

/// Free-form scenario from a JSON config record; see README for the schema.
Scenario scenario_from_json(const nlohmann::json& cfg);

}  // namespace orlicz

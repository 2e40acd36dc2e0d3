#include "orlicz/presets.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/solvers.hpp"

namespace orlicz {

namespace {

std::string trim_number(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// coef * t^expo with cheap special cases for the common exponents
std::function<double(double)> power_eval(double coef, double expo) {
    if (expo == 1.0) return [coef](double t) { return coef * t; };
    if (expo == 2.0) return [coef](double t) { return coef * t * t; };
    if (expo == 3.0) return [coef](double t) { return coef * t * t * t; };
    return [coef, expo](double t) { return t <= 0.0 ? 0.0 : coef * std::pow(t, expo); };
}

}  // namespace

FamilyPair power_family(double p) {
    if (!(p > 1.0))
        throw ConfigError("power_family requires p > 1 (use l1_family for the p = 1 case)");
    const double q = p / (p - 1.0);
    // (p^{-1/p} q^{-1/q})^p = 1 / (p q^{p-1})
    const double coef = 1.0 / (p * std::pow(q, p - 1.0));

    auto m_eval = power_eval(coef, p);
    OrliczFamily fam([m_eval](int) { return OrliczFunction{m_eval}; },
                     "power-p" + trim_number(p));

    auto mstar_eval = power_eval(1.0, q);
    ConjugateFamily conj = ConjugateFamily::closed(
        [mstar_eval](int) { return OrliczFunction{mstar_eval}; }, "vq-q" + trim_number(q));
    return FamilyPair{std::move(fam), std::move(conj), p};
}

FamilyPair l1_family() {
    OrliczFamily fam([](int) { return OrliczFunction{[](double u) { return u; }}; }, "l1");
    ConjugateFamily conj = ConjugateFamily::closed(
        [](int) {
            return OrliczFunction{
                [](double v) { return v <= 1.0 ? 0.0 : num::kInf; }, 1.0};
        },
        "l1-conj");
    return FamilyPair{std::move(fam), std::move(conj), 1.0};
}

FamilyPair l2_family() { return power_family(2.0); }

ShapeFunction phi_alpha(double alpha) {
    if (!(alpha > 0.0)) throw ConfigError("phi_alpha requires alpha > 0");
    ShapeFunction phi;
    phi.eval = [alpha](double t) { return alpha_multiplier(alpha, 1, t); };
    phi.monotone_end = std::numbers::pi;
    phi.sup_value = std::pow(2.0, alpha);
    phi.label = "phi-alpha-" + trim_number(alpha);
    return phi;
}

ShapeFunction phi_monotone_bounded() {
    ShapeFunction phi;
    phi.eval = [](double t) {
        t = std::abs(t);
        return t / (1.0 + t);
    };
    phi.monotone_end = num::kInf;
    phi.sup_value = std::nullopt;  // the sup (= 1) is not attained
    phi.label = "bounded-ratio";
    return phi;
}

ClassicalWeightPair classical_weights(double tau) {
    if (!(tau > 0.0)) throw ConfigError("classical_weights: tau must be positive");
    return {make_one_minus_cos_weight(tau), make_lebesgue_weight(tau)};
}

PsiMultiplier psi_power(double r) {
    if (r < 0.0) throw ConfigError("psi_power requires r >= 0");
    auto eval = [r](int k) -> Complex {
        if (k == 0) return {1.0, 0.0};  // never consumed: the zero mode is dropped
        const double mag = std::pow(std::abs(static_cast<double>(k)), -r);
        const double phase = -r * 0.5 * std::numbers::pi * (k > 0 ? 1.0 : -1.0);
        return std::polar(mag, phase);
    };
    return PsiMultiplier(std::move(eval), "(ik)^-" + trim_number(r));
}

Majorant majorant_power(double r) {
    if (!(r > 0.0)) throw ConfigError("majorant_power requires r > 0");
    return Majorant{[r](double u) { return u <= 0.0 ? 0.0 : std::pow(u, r); },
                    "u^" + trim_number(r)};
}

namespace {

constexpr double kPi = std::numbers::pi;

Scenario build_scenario(const std::string& name) {
    if (name == "l1") {
        return Scenario{name,    l1_family(),           phi_alpha(1.0), make_lebesgue_weight(kPi),
                        psi_power(0.0), std::nullopt, "linear family, l1 coefficient norm"};
    }
    if (name == "l2") {
        return Scenario{name,    l2_family(),           phi_alpha(1.0), make_lebesgue_weight(kPi),
                        psi_power(0.0), std::nullopt, "M_k(t) = t^2/4, Lebesgue L2 case"};
    }
    if (name == "power-p1.5") {
        return Scenario{name,    power_family(1.5),     phi_alpha(1.0), make_lebesgue_weight(kPi),
                        psi_power(0.0), std::nullopt, "power family, p = 3/2"};
    }
    if (name == "power-p3") {
        return Scenario{name,    power_family(3.0),     phi_alpha(1.0), make_lebesgue_weight(kPi),
                        psi_power(0.0), std::nullopt, "power family, p = 3"};
    }
    if (name == "sp-p2-taikov") {
        // The exponent (pi - 2)/2 is the unique power for which the scaling
        // condition holds against phi_1 with the Lebesgue weight.
        return Scenario{name,
                        l2_family(),
                        phi_alpha(1.0),
                        make_lebesgue_weight(kPi),
                        psi_power(1.0),
                        majorant_power(0.5 * (kPi - 2.0)),
                        "L2, weight mu(t) = t, psi = (ik)^-1"};
    }
    if (name == "sp-p2-chernykh") {
        return Scenario{name,
                        l2_family(),
                        phi_alpha(1.0),
                        make_one_minus_cos_weight(kPi),
                        psi_power(0.0),
                        std::nullopt,
                        "L2, weight mu(t) = 1 - cos t"};
    }
    if (name == "l2-monotone") {
        return Scenario{name,
                        l2_family(),
                        phi_monotone_bounded(),
                        make_lebesgue_weight(kPi),
                        psi_power(1.0),
                        std::nullopt,
                        "L2 with an everywhere-monotone bounded shape"};
    }
    throw ConfigError("unknown scenario: " + name);
}

}  // namespace

const std::vector<std::string>& scenario_registry() {
    static const std::vector<std::string> names = {
        "l1",           "l2",           "power-p1.5", "power-p3",
        "sp-p2-taikov", "sp-p2-chernykh", "l2-monotone"};
    return names;
}

Scenario make_scenario(const std::string& name) { return build_scenario(name); }

namespace {

std::vector<std::pair<double, double>> parse_table(const nlohmann::json& j) {
    std::vector<std::pair<double, double>> table;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 2)
            throw ConfigError("table rows must be [t, value] pairs");
        table.emplace_back(row[0].get<double>(), row[1].get<double>());
    }
    return table;
}

}  // namespace

Scenario scenario_from_json(const nlohmann::json& cfg) {
    const std::string name = cfg.value("name", std::string("custom"));

    FamilyPair families = l2_family();
    if (cfg.contains("family")) {
        const auto& fj = cfg.at("family");
        const std::string kind = fj.value("kind", std::string("l2"));
        if (kind == "power")
            families = power_family(fj.at("p").get<double>());
        else if (kind == "l2")
            families = l2_family();
        else if (kind == "l1")
            families = l1_family();
        else if (kind == "custom-table") {
            OrliczFunction m = orlicz_from_table(parse_table(fj.at("table")));
            OrliczFamily fam([m](int) { return m; }, "custom-table");
            ConjugateFamily conj = ConjugateFamily::numeric_of(fam);
            families = FamilyPair{std::move(fam), std::move(conj), std::nullopt};
        } else {
            throw ConfigError("family.kind must be power | l2 | l1 | custom-table");
        }
    }

    ShapeFunction phi = phi_alpha(1.0);
    if (cfg.contains("phi")) {
        const auto& pj = cfg.at("phi");
        const std::string kind = pj.value("kind", std::string("alpha"));
        if (kind == "alpha")
            phi = phi_alpha(pj.value("alpha", 1.0));
        else if (kind == "monotone-bounded")
            phi = phi_monotone_bounded();
        else if (kind == "custom-table")
            phi = shape_from_table(parse_table(pj.at("table")));
        else
            throw ConfigError("phi.kind must be alpha | monotone-bounded | custom-table");
    }

    Weight weight = make_lebesgue_weight(kPi);
    if (cfg.contains("weight")) {
        const auto& wj = cfg.at("weight");
        const double tau = wj.value("tau", kPi);
        const std::string kind = wj.value("kind", std::string("lebesgue"));
        if (kind == "lebesgue")
            weight = make_lebesgue_weight(tau);
        else if (kind == "one-minus-cos")
            weight = make_one_minus_cos_weight(tau);
        else if (kind == "atoms") {
            std::vector<std::pair<double, double>> atoms;
            for (const auto& row : wj.at("atoms"))
                atoms.emplace_back(row[0].get<double>(), row[1].get<double>());
            weight = make_atomic_weight(tau, std::move(atoms));
        } else {
            throw ConfigError("weight.kind must be lebesgue | one-minus-cos | atoms");
        }
    }

    PsiMultiplier psi = psi_power(0.0);
    if (cfg.contains("psi")) psi = psi_power(cfg.at("psi").value("r", 0.0));

    std::optional<Majorant> majorant;
    if (cfg.contains("majorant")) majorant = majorant_power(cfg.at("majorant").at("r").get<double>());

    return Scenario{name,  std::move(families), std::move(phi), std::move(weight),
                    std::move(psi), std::move(majorant), "config"};
}

}  // namespace orlicz

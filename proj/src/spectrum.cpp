#include "orlicz/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "orlicz/errors.hpp"

namespace orlicz {

Spectrum coefficients_from_samples(std::span<const Complex> samples, int degree) {
    const int n = static_cast<int>(samples.size());
    if (degree < 0) throw InvalidInputError("degree must be nonnegative");
    if (n < 2 * degree + 1)
        throw AliasingError("sample grid too small for requested degree (need >= 2*degree + 1)");

    double scale = 0.0;
    for (const Complex& s : samples) scale = std::max(scale, std::abs(s));

    Spectrum out;
    const double step = 2.0 * std::numbers::pi / n;
    for (int k = -degree; k <= degree; ++k) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
            const double angle = -k * step * j;
            acc += samples[j] * Complex{std::cos(angle), std::sin(angle)};
        }
        acc /= static_cast<double>(n);
        // Roundoff residue of the transform itself is cleared so that the
        // result is exact on trigonometric polynomials of matching degree.
        if (std::abs(acc) > 1e-13 * std::max(1.0, scale)) out.set(k, acc);
    }
    return out;
}

Spectrum partial_sum(const Spectrum& f, int n) {
    Spectrum out;
    for (const auto& [k, v] : f.entries())
        if (std::abs(k) <= n - 1) out.set(k, v);
    return out;
}

double best_approximation(const Spectrum& f, int n, const NormContext& norms) {
    return norms.norm(f.tail(n).abs_coefficients());
}

ValidationReport PsiMultiplier::validate(int k_max) const {
    ValidationReport report;
    double prev = std::abs(eval_(1));
    for (int k = 1; k <= k_max; ++k) {
        const double pos = std::abs(eval_(k));
        const double neg = std::abs(eval_(-k));
        if (std::abs(pos - neg) > 1e-12 * (1.0 + pos)) {
            report.fail("psi: |psi(k)| != |psi(-k)| at k = " + std::to_string(k));
            break;
        }
        if (pos > prev + 1e-12 * (1.0 + prev)) {
            report.fail("psi: |psi(k)| increases at k = " + std::to_string(k));
            break;
        }
        prev = pos;
    }
    return report;
}

Spectrum psi_derivative(const Spectrum& f, const PsiMultiplier& psi) {
    Spectrum out;
    for (const auto& [k, v] : f.entries()) {
        if (k == 0) continue;  // zero-mode policy: constants are annihilated
        const Complex p = psi(k);
        if (p == Complex{0.0, 0.0})
            throw DivisionByZeroError("psi(k) = 0 on the support at k = " + std::to_string(k));
        out.set(k, v / p);
    }
    return out;
}

Spectrum psi_integral(const Spectrum& f, const PsiMultiplier& psi) {
    Spectrum out;
    for (const auto& [k, v] : f.entries()) {
        if (k == 0) continue;
        out.set(k, v * psi(k));
    }
    return out;
}

std::string spectrum_to_json(const Spectrum& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, v] : f.entries()) {
        arr.push_back({{"k", k}, {"re", v.real()}, {"im", v.imag()}});
    }
    return arr.dump();
}

Spectrum spectrum_from_json_text(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("spectrum JSON parse error: ") + e.what());
    }
    if (!arr.is_array()) throw ConfigError("spectrum JSON must be an array of {k, re, im}");
    Spectrum out;
    for (const auto& item : arr) {
        if (!item.contains("k")) throw ConfigError("spectrum entry missing 'k'");
        const int k = item.at("k").get<int>();
        const double re = item.value("re", 0.0);
        const double im = item.value("im", 0.0);
        out.set(k, {re, im});
    }
    return out;
}

}  // namespace orlicz

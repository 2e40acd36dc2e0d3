#include "orlicz/shape.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/solvers.hpp"

namespace orlicz {

double alpha_multiplier(double alpha, long long k, double h) {
    if (alpha <= 0.0) throw InvalidInputError("alpha must be positive");
    const double c = 1.0 - std::cos(static_cast<double>(k) * h);
    if (c <= 0.0) return 0.0;
    return std::pow(2.0, 0.5 * alpha) * std::pow(c, 0.5 * alpha);
}

double phi_star(const ShapeFunction& phi, double t) {
    if (!std::isfinite(phi.monotone_end))
        throw InvalidInputError("phi_star requires a finite monotone endpoint");
    const double a = phi.monotone_end;
    const double x = std::abs(t);
    return x <= a ? phi.eval(x) : phi.eval(a);
}

ValidationReport validate_shape(const ShapeFunction& phi, double t_max, int samples) {
    ValidationReport report;
    if (std::abs(phi.eval(0.0)) > 1e-12) report.fail("phi(0) != 0");

    for (int i = 1; i <= 32; ++i) {
        const double t = t_max * i / 32.0;
        if (std::abs(phi.eval(t) - phi.eval(-t)) > 1e-12 * (1.0 + std::abs(phi.eval(t)))) {
            report.fail("phi is not even on the sampled grid");
            break;
        }
    }

    double prev = phi.eval(0.0);
    double sup = 0.0;
    int zero_run = 0, max_zero_run = 0;
    const double mono_end = std::min(phi.monotone_end, t_max);
    for (int i = 0; i <= samples; ++i) {
        const double t = t_max * i / samples;
        const double v = phi.eval(t);
        if (v < 0.0) {
            report.fail("phi takes a negative value");
            break;
        }
        if (!std::isfinite(v)) {
            report.fail("phi is unbounded on the sampled range");
            break;
        }
        sup = std::max(sup, v);
        if (t <= mono_end && v < prev - 1e-10 * (1.0 + prev)) {
            report.fail("phi is not nondecreasing on [0, a]");
            break;
        }
        if (t <= mono_end) prev = v;
        // measure-zero heuristic: no zero intervals away from the origin
        if (t > 0.0 && v == 0.0) {
            ++zero_run;
            max_zero_run = std::max(max_zero_run, zero_run);
        } else {
            zero_run = 0;
        }
    }
    if (max_zero_run > 2) report.fail("phi vanishes on an interval (zero set not null)");

    // continuity heuristic: refine the grid and compare the largest jumps
    double coarse_jump = 0.0, fine_jump = 0.0;
    for (int i = 1; i <= 128; ++i)
        coarse_jump = std::max(coarse_jump,
                               std::abs(phi.eval(t_max * i / 128.0) - phi.eval(t_max * (i - 1) / 128.0)));
    for (int i = 1; i <= 1024; ++i)
        fine_jump = std::max(fine_jump,
                             std::abs(phi.eval(t_max * i / 1024.0) - phi.eval(t_max * (i - 1) / 1024.0)));
    if (fine_jump > 0.55 * coarse_jump && fine_jump > 1e-6 * (1.0 + sup))
        report.fail("phi looks discontinuous under grid refinement");

    if (phi.sup_value && std::isfinite(phi.monotone_end)) {
        if (sup > *phi.sup_value + 1e-9 * (1.0 + sup))
            report.fail("phi exceeds its declared sup value on the sampled range");
    }
    return report;
}

ShapeFunction shape_from_table(std::vector<std::pair<double, double>> table) {
    if (table.size() < 2) throw ConfigError("shape table needs at least two nodes");
    std::sort(table.begin(), table.end());
    if (std::abs(table.front().first) > 1e-15 || std::abs(table.front().second) > 1e-15)
        throw ConfigError("shape table must start at (0, 0)");
    for (std::size_t i = 1; i < table.size(); ++i) {
        if (table[i].first <= table[i - 1].first)
            throw ConfigError("shape table abscissae must be strictly increasing");
        if (table[i].second < 0.0) throw ConfigError("shape values must be nonnegative");
    }

    // monotone endpoint: largest prefix on which the values are nondecreasing
    double mono_end = table.back().first;
    for (std::size_t i = 1; i < table.size(); ++i) {
        if (table[i].second < table[i - 1].second) {
            mono_end = table[i - 1].first;
            break;
        }
    }

    auto eval = [nodes = std::move(table)](double t) {
        t = std::abs(t);
        if (t >= nodes.back().first) return nodes.back().second;
        auto it = std::upper_bound(nodes.begin(), nodes.end(), std::make_pair(t, num::kInf));
        const auto& b = *it;
        const auto& a = *(it - 1);
        const double w = (t - a.first) / (b.first - a.first);
        return a.second + w * (b.second - a.second);
    };
    ShapeFunction out{std::move(eval), mono_end, std::nullopt, "custom-table"};
    return out;
}

ValidationReport validate_majorant(const Majorant& omega, double u_max, int samples) {
    ValidationReport report;
    if (std::abs(omega.eval(0.0)) > 1e-12) report.fail("majorant(0) != 0");
    double prev = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double u = u_max * i / samples;
        const double v = omega.eval(u);
        if (!std::isfinite(v)) {
            report.fail("majorant not finite on sampled range");
            break;
        }
        if (v <= prev) {
            report.fail("majorant not strictly increasing on sampled grid");
            break;
        }
        prev = v;
    }
    return report;
}

}  // namespace orlicz

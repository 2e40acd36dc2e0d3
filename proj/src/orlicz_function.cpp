#include "orlicz/orlicz_function.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/solvers.hpp"

namespace orlicz {

namespace {

constexpr double kConjugateHorizon = 1e6;

// Midpoint convexity probe at three equally spaced points.
void spot_check_convex(const OrliczFunction& m, double u) {
    const double a = 0.5 * u, b = 1.5 * u;
    const double fa = m.eval(a), fmid = m.eval(u), fb = m.eval(b);
    if (!std::isfinite(fa) || !std::isfinite(fmid) || !std::isfinite(fb)) return;
    const double chord = 0.5 * (fa + fb);
    const double tol = 1e-9 * (1.0 + std::abs(fa) + std::abs(fb));
    if (fmid > chord + tol)
        throw InvalidInputError("conjugate: non-convex function detected during bracketing");
}

}  // namespace

double conjugate(const OrliczFunction& m, double v) {
    if (v < 0.0) throw InvalidInputError("conjugate: argument must be nonnegative");
    const auto g = [&](double u) {
        const double mu = m.eval(u);
        return std::isfinite(mu) ? u * v - mu : -num::kInf;
    };
    if (v == 0.0) return 0.0;  // sup of -M(u) is attained at u = 0

    // Shrink into the finite region if M(1) is already +inf.
    double hi = 1.0;
    double ghi = g(hi);
    int guard = 0;
    while (!(ghi > -num::kInf) && ++guard < 200) {
        hi *= 0.5;
        ghi = g(hi);
    }
    if (!(ghi > -num::kInf))
        throw BracketError("conjugate: objective nowhere finite");

    // Expand while each doubling still gains; reaching the horizon this way
    // is the divergence signal.
    while (true) {
        if (hi >= kConjugateHorizon) return num::kInf;
        const double g2 = g(2.0 * hi);
        if (g2 > ghi) {
            hi *= 2.0;
            ghi = g2;
        } else {
            break;
        }
    }
    spot_check_convex(m, hi);

    const double arg = num::golden_max_arg(g, 0.0, 2.0 * hi, 90);
    return std::max(g(arg), 0.0);  // the supremum is >= g(0) = 0
}

double unit_sup(const OrliczFunction& conj_member) {
    const auto h = [&](double s) {
        const double x = conj_member.eval(s);
        return std::isfinite(x) ? x : num::kInf;
    };
    const double s = num::max_feasible_nondecreasing(h, 1.0, 1.0, 60, 110);
    if (s > 1e15) return num::kInf;
    return s;
}

ConjugateFamily ConjugateFamily::numeric_of(const OrliczFamily& source) {
    auto member = [src = source](int k) {
        OrliczFunction m = src.member(k);
        return OrliczFunction{[m](double v) { return conjugate(m, v); }};
    };
    return ConjugateFamily(std::move(member), "conj(" + source.label() + ")", false);
}

NormalizationReport check_normalization(const ConjugateFamily& conj, const std::vector<int>& ks) {
    NormalizationReport report;
    for (int k : ks) {
        const OrliczFunction mstar = conj.member(k);
        bool good = std::abs(mstar.eval(1.0) - 1.0) <= 1e-9;
        for (double eps : {1e-3, 1e-1, 1.0}) {
            if (!(mstar.eval(1.0 + eps) > 1.0)) good = false;
        }
        if (!good) {
            report.ok = false;
            report.failing.push_back(k);
        }
    }
    return report;
}

ValidationReport validate_orlicz(const OrliczFunction& m, double t_max, int samples) {
    ValidationReport report;
    if (std::abs(m.eval(0.0)) > 1e-12) report.fail("M(0) != 0");

    const double cap = std::min(t_max, m.domain_hint);
    double prev = 0.0;
    std::vector<double> ts, vals;
    for (int i = 0; i <= samples; ++i) {
        const double t = cap * i / samples;
        const double x = m.eval(t);
        if (std::isfinite(x)) {
            ts.push_back(t);
            vals.push_back(x);
            if (x < prev - 1e-12 * (1.0 + std::abs(prev))) {
                report.fail("not nondecreasing on sampled grid");
                break;
            }
            prev = x;
        }
    }
    for (std::size_t i = 1; i + 1 < vals.size(); ++i) {
        const double chord = 0.5 * (vals[i - 1] + vals[i + 1]);
        if (vals[i] > chord + 1e-9 * (1.0 + chord)) {
            report.fail("midpoint convexity violated on sampled grid");
            break;
        }
    }
    // Growth: either the effective domain ends (beyond which M is +inf) or
    // the sampled values keep strictly increasing at large arguments.
    if (std::isfinite(m.domain_hint)) {
        // bounded domain implies M -> +inf at the boundary by convention
    } else {
        const double big = m.eval(1e6), bigger = m.eval(2e6);
        const bool grows = !std::isfinite(big) || bigger > big * 1.2 || bigger > 1e12;
        if (!grows) report.fail("M(t) does not grow to infinity on sampled horizon");
    }
    return report;
}

OrliczFunction orlicz_from_table(std::vector<std::pair<double, double>> table) {
    if (table.size() < 2) throw ConfigError("custom table needs at least two nodes");
    std::sort(table.begin(), table.end());
    if (std::abs(table.front().first) > 1e-15 || std::abs(table.front().second) > 1e-15)
        throw ConfigError("custom table must start at (0, 0)");
    double prev_slope = -num::kInf;
    for (std::size_t i = 1; i < table.size(); ++i) {
        const double dt = table[i].first - table[i - 1].first;
        const double dv = table[i].second - table[i - 1].second;
        if (dt <= 0.0) throw ConfigError("custom table abscissae must be strictly increasing");
        if (dv < 0.0) throw ConfigError("custom table values must be nondecreasing");
        const double slope = dv / dt;
        if (slope < prev_slope - 1e-12 * (1.0 + std::abs(prev_slope)))
            throw ConfigError("custom table is not convex");
        prev_slope = slope;
    }
    if (!(prev_slope > 0.0))
        throw ConfigError("custom table must end with positive slope (growth to infinity)");

    auto eval = [nodes = std::move(table)](double t) {
        t = std::abs(t);
        if (t >= nodes.back().first) {
            const auto& a = nodes[nodes.size() - 2];
            const auto& b = nodes.back();
            const double slope = (b.second - a.second) / (b.first - a.first);
            return b.second + slope * (t - b.first);
        }
        auto it = std::upper_bound(nodes.begin(), nodes.end(), std::make_pair(t, num::kInf));
        const auto& b = *it;
        const auto& a = *(it - 1);
        const double w = (t - a.first) / (b.first - a.first);
        return a.second + w * (b.second - a.second);
    };
    return OrliczFunction{std::move(eval)};
}

}  // namespace orlicz

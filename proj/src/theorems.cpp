#include "orlicz/theorems.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/sampling.hpp"
#include "orlicz/solvers.hpp"

namespace orlicz {

ValidationReport ClassSpec::validate() const {
    ValidationReport report;

    auto psi_report = psi.validate(1000);
    for (auto& issue : psi_report.issues) report.fail(issue.what);

    auto phi_report = validate_shape(phi, std::max(2.0 * tau(), 8.0));
    for (auto& issue : phi_report.issues) report.fail(issue.what);

    // Normalization of the conjugates: strict form where it holds, the
    // operational unit-sup form for flat conjugates (the linear family).
    const std::vector<int> probe = {-5, -2, -1, 0, 1, 2, 5};
    for (int k : probe) {
        const double us = unit_sup(norms.conjugate_family().member(k));
        if (std::abs(us - 1.0) > 1e-7) {
            report.fail("conjugate normalization fails at k = " + std::to_string(k) +
                        " (unit sup = " + std::to_string(us) + ")");
            break;
        }
    }

    if (n_mode && *n_mode < 1) report.fail("class index n must be >= 1");
    if (majorant_mode()) {
        if (!std::isfinite(phi.monotone_end))
            report.fail("majorant mode requires a finite monotone endpoint a");
        else if (tau() > phi.monotone_end * (1.0 + 1e-12))
            report.fail("majorant mode requires tau <= a");
        if (std::isfinite(phi.monotone_end)) {
            // phi(a) = sup phi, validated on a sampled range
            const double a = phi.monotone_end;
            const double phia = phi.eval(a);
            double sup = 0.0;
            for (int i = 0; i <= 2048; ++i) sup = std::max(sup, phi.eval(4.0 * a * i / 2048.0));
            if (sup > phia + 1e-9 * (1.0 + phia))
                report.fail("majorant mode requires phi(a) = sup phi");
        }
        auto maj_report = validate_majorant(*majorant, std::max(1.0, tau()));
        for (auto& issue : maj_report.issues) report.fail(issue.what);
    }
    return report;
}

ClassSpec class_spec_from_scenario(const Scenario& s, std::optional<int> n, NormBackend backend) {
    ClassSpec spec{s.psi, s.phi, s.weight, s.make_context(backend), n, s.majorant, {}};
    return spec;
}

InReport compute_I_n(const ShapeFunction& phi, const Weight& w, int n, long long k_max) {
    if (n < 1) throw InvalidInputError("I_n requires n >= 1");
    if (k_max <= 0) k_max = 64LL * n;
    if (k_max < n) throw InvalidInputError("I_n requires k_max >= n");

    InReport report;
    report.k_max = k_max;

    double sup_phi = 0.0;
    for (int i = 0; i <= 4096; ++i) {
        const double t = (static_cast<double>(k_max) / n) * w.tau * i / 4096.0;
        sup_phi = std::max(sup_phi, phi(t));
    }
    report.sup_phi_bound = sup_phi * w.total_variation;

    double best = num::kInf;
    long long arg = n;
    for (long long k = n; k <= k_max; ++k) {
        const double ratio = static_cast<double>(k) / n;
        const double value =
            stieltjes_integral([&](double t) { return phi(ratio * t); }, w);
        if (k == n) report.integral_phi = value;
        if (value < best) {
            best = value;
            arg = k;
        }
    }
    report.value = best;
    report.argmin_k = arg;
    report.attained_at_n =
        best >= report.integral_phi - 1e-7 * std::max(1.0, std::abs(report.integral_phi));
    return report;
}

SharpConstantResult sharp_constant(const ClassSpec& spec, int n, const InReport* in) {
    InReport local;
    if (!in) {
        local = compute_I_n(spec.phi, spec.weight, n);
        in = &local;
    }
    const double psi_n = std::abs(spec.psi(n));
    return {spec.weight.total_variation / in->integral_phi * psi_n, in->attained_at_n};
}

Spectrum extremal_function(int n, Complex delta, Complex gamma, int side) {
    if (n < 1) throw InvalidInputError("extremal function requires n >= 1");
    if (side != 1 && side != -1) throw InvalidInputError("side must be +1 or -1");
    Spectrum f;
    f.set(0, gamma);
    f.set(side * n, delta);
    return f;
}

double sharpness_ratio(const ClassSpec& spec, int n) {
    const Spectrum fn = extremal_function(n, {1.0, 0.0}, {0.0, 0.0}, +1);
    const double e_n = best_approximation(fn, n, spec.norms);
    const Spectrum fpsi = psi_derivative(fn, spec.psi);
    const double omega =
        averaged_modulus(fpsi, spec.phi, spec.weight, spec.tau() / n, spec.norms, spec.modopts);
    if (!(omega > 0.0)) throw IntegrationError("sharpness ratio: degenerate averaged modulus");
    return e_n / omega;
}

JacksonReport jackson_verify(const Spectrum& f, const ClassSpec& spec, int n,
                             const InReport* in) {
    if (n < 1) throw InvalidInputError("jackson_verify requires n >= 1");
    InReport local;
    const long long need_k = std::max<long long>(64LL * n, f.degree());
    if (!in || in->k_max < need_k) {
        local = compute_I_n(spec.phi, spec.weight, n, need_k);
        in = &local;
    }

    JacksonReport report;
    report.n = n;
    report.i_n = in->value;
    report.condition12 = in->attained_at_n;

    report.e_n = best_approximation(f, n, spec.norms);
    const Spectrum fpsi = psi_derivative(f, spec.psi);
    report.averaged =
        averaged_modulus(fpsi, spec.phi, spec.weight, spec.tau() / n, spec.norms, spec.modopts);

    const double psi_n = std::abs(spec.psi(n));
    report.rhs = spec.weight.total_variation / in->value * psi_n * report.averaged;
    report.sharp_const = spec.weight.total_variation / in->integral_phi * psi_n;
    report.ratio_extremal = sharpness_ratio(spec, n);
    report.degenerate = !(report.averaged > 0.0) && report.e_n > 0.0;
    report.verdict = !report.degenerate && report.e_n <= report.rhs + 1e-7;
    return report;
}

MembershipResult class_membership(const Spectrum& f, const ClassSpec& spec, int u_grid_points) {
    const Spectrum fpsi = psi_derivative(f, spec.psi);

    if (spec.majorant_mode()) {
        const Majorant& omega = *spec.majorant;
        ModulusScan scan(fpsi, spec.phi, spec.tau(), spec.norms, spec.modopts);
        double worst = -num::kInf;
        for (int i = 1; i <= u_grid_points; ++i) {
            const double u = spec.tau() * i / u_grid_points;
            const double lhs = averaged_modulus_with_scan(scan, spec.weight, u);
            worst = std::max(worst, lhs - omega(u));
        }
        return {worst <= 0.0, worst};
    }

    if (!spec.n_mode) throw ConfigError("class membership requires either n or a majorant");
    const int n = *spec.n_mode;
    const double lhs =
        averaged_modulus(fpsi, spec.phi, spec.weight, spec.tau() / n, spec.norms, spec.modopts);
    const double margin = lhs - 1.0;
    return {margin <= 0.0, margin};
}

WidthReport width_value(const ClassSpec& spec, int n, const InReport* in) {
    if (n < 1) throw InvalidInputError("width_value requires n >= 1");
    InReport local;
    if (!in) {
        local = compute_I_n(spec.phi, spec.weight, n);
        in = &local;
    }
    const double psi_n = std::abs(spec.psi(n));
    const double tv = spec.weight.total_variation;
    double factor = 1.0;
    if (spec.majorant_mode()) factor = (*spec.majorant)(spec.tau() / n);

    WidthReport report;
    report.n = n;
    report.N = 2 * n;
    report.i_n = in->value;
    report.attained_at_n = in->attained_at_n;
    report.lower = tv / in->integral_phi * psi_n * factor;
    report.upper = tv / in->value * psi_n * factor;
    if (in->attained_at_n) report.exact = report.lower;
    report.radius = report.lower;
    return report;
}

namespace {

// A degree <= n spectrum scaled so that its Orlicz norm is exactly `target`.
Spectrum ball_sample(Rng& rng, int n, double target, const NormContext& norms, bool extremal) {
    Spectrum f;
    if (extremal) {
        f.set(n, {1.0, 0.0});
    } else {
        f = random_spectrum(rng, n, 2 * n + 1);
    }
    const double nrm = norms.norm(f.abs_coefficients());
    return f.scaled({target / nrm, 0.0});
}

}  // namespace

BernsteinResult verify_bernstein_lower(const ClassSpec& spec, int n, int samples,
                                       std::uint64_t seed, double radius_scale) {
    const WidthReport wr = width_value(spec, n);
    const double radius = wr.radius * radius_scale;

    BernsteinResult result;
    result.worst_margin = -num::kInf;
    for (int i = 0; i < samples; ++i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        const Spectrum t = ball_sample(rng, n, radius, spec.norms, i == 0);
        const MembershipResult ms = class_membership(t, spec);
        result.worst_margin = std::max(result.worst_margin, ms.margin);
        if (ms.margin > 1e-6) ++result.violations;
    }
    return result;
}

ProjectionResult verify_projection_upper(const ClassSpec& spec, int n, int samples,
                                         std::uint64_t seed) {
    const WidthReport wr = width_value(spec, n);

    ProjectionResult result;
    result.upper = wr.upper;
    const int band = 2 * n + 4;
    for (int i = 0; i < samples; ++i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        Spectrum f = (i == 0) ? extremal_function(n, {1.0, 0.0}, {0.0, 0.0}, +1)
                              : random_spectrum(rng, band, 8);
        const Spectrum fpsi = psi_derivative(f, spec.psi);
        if (fpsi.empty()) continue;  // constants: E_n = 0, nothing to measure

        double functional = 0.0;
        if (spec.majorant_mode()) {
            ModulusScan scan(fpsi, spec.phi, spec.tau(), spec.norms, spec.modopts);
            for (int j = 1; j <= 64; ++j) {
                const double u = spec.tau() * j / 64.0;
                functional = std::max(functional, averaged_modulus_with_scan(scan, spec.weight, u) /
                                                      (*spec.majorant)(u));
            }
        } else {
            if (!spec.n_mode && n < 1) throw ConfigError("projection probe requires n");
            functional = averaged_modulus(fpsi, spec.phi, spec.weight, spec.tau() / n, spec.norms,
                                          spec.modopts);
        }
        if (!(functional > 0.0)) continue;

        // Positive homogeneity of the membership functional: dividing by it
        // lands exactly on the class boundary.
        const Spectrum member = f.scaled({1.0 / functional, 0.0});
        result.sup_e_n = std::max(result.sup_e_n, best_approximation(member, n, spec.norms));
    }
    result.sup_ratio = result.sup_e_n / result.upper;
    return result;
}

MajorantCheckResult majorant_condition(const ShapeFunction& phi, const Weight& w,
                                       const Majorant& omega, int xi_points, int u_points,
                                       double xi_lo, double xi_hi) {
    if (!std::isfinite(phi.monotone_end))
        throw InvalidInputError("majorant condition requires a finite monotone endpoint");
    const double a = phi.monotone_end;
    const double rhs_integral = stieltjes_integral([&](double t) { return phi(t); }, w);

    MajorantCheckResult result;
    result.worst_ratio = -num::kInf;
    for (int i = 0; i < xi_points; ++i) {
        const double xi =
            xi_lo * std::pow(xi_hi / xi_lo, xi_points == 1 ? 0.0
                                                           : static_cast<double>(i) / (xi_points - 1));
        // substitution t = xi s maps the scaled integral onto the weight's
        // own segment
        const double lhs_integral =
            stieltjes_integral([&](double s) { return phi_star(phi, xi * s); }, w);
        for (int j = 1; j <= u_points; ++j) {
            const double u = a * j / u_points;
            const double lhs = omega(u / xi) * lhs_integral;
            const double rhs = omega(u) * rhs_integral;
            const double ratio = lhs / rhs;
            if (ratio > result.worst_ratio) {
                result.worst_ratio = ratio;
                result.worst_xi = xi;
                result.worst_u = u;
            }
        }
    }
    result.ok = result.worst_ratio <= 1.0 + 1e-9;
    return result;
}

}  // namespace orlicz

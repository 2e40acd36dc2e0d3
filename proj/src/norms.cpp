#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "orlicz/errors.hpp"
#include "orlicz/solvers.hpp"

namespace orlicz {

namespace {

constexpr double kLambdaHorizon = 1e9;

double safe_eval(const OrliczFunction& f, double x) {
    const double v = f.eval(x);
    return std::isnan(v) ? num::kInf : v;
}

// ---------------------------------------------------------------------------
// Luxemburg
// ---------------------------------------------------------------------------

double luxemburg_impl(const std::vector<double>& vals, const std::vector<OrliczFunction>& members) {
    const auto modular = [&](double a) {
        double s = 0.0;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (vals[i] == 0.0) continue;
            s += safe_eval(members[i], vals[i] / a);
            if (!std::isfinite(s)) return num::kInf;
        }
        return s;
    };

    double vmax = 0.0, vsum = 0.0;
    for (double v : vals) {
        vmax = std::max(vmax, v);
        vsum += v;
    }
    if (vmax == 0.0) return 0.0;

    double hi = std::max(vsum, vmax);
    int guard = 0;
    while (modular(hi) > 1.0) {
        hi *= 2.0;
        if (++guard > 300)
            throw BracketError("luxemburg: modular never drops to 1 (ill-posed family)");
    }
    double lo = hi;
    guard = 0;
    while (modular(lo) <= 1.0) {
        lo *= 0.5;
        if (++guard > 400)
            throw BracketError("luxemburg: modular never exceeds 1 (ill-posed family)");
    }
    return num::bisect_nonincreasing(modular, lo, hi, 1.0, 110);
}

// ---------------------------------------------------------------------------
// Amemiya:  inf_{t>0} (1 + sum M_k(t c_k)) / t, searched in log t.
// ---------------------------------------------------------------------------

double amemiya_impl(const std::vector<double>& vals, const std::vector<OrliczFunction>& members) {
    double vsum = 0.0;
    for (double v : vals) vsum += v;
    if (vsum == 0.0) return 0.0;

    const auto obj = [&](double x) {
        const double t = std::exp(x);
        double s = 1.0;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (vals[i] == 0.0) continue;
            s += safe_eval(members[i], t * vals[i]);
            if (!std::isfinite(s)) return num::kInf;
        }
        return s / t;
    };

    double x0 = std::log(1.0 / vsum);
    double f0 = obj(x0);
    int guard = 0;
    while (!std::isfinite(f0) && ++guard < 300) {
        x0 -= 1.0;
        f0 = obj(x0);
    }
    if (!std::isfinite(f0)) throw BracketError("amemiya: objective nowhere finite");

    const double step = std::log(2.0);
    double xr = x0, fr = f0;
    for (int i = 0; i < 140; ++i) {
        const double f2 = obj(xr + step);
        if (f2 < fr) {
            xr += step;
            fr = f2;
        } else {
            break;
        }
    }
    double xl = x0, fl = f0;
    for (int i = 0; i < 140; ++i) {
        const double f2 = obj(xl - step);
        if (f2 < fl) {
            xl -= step;
            fl = f2;
        } else {
            break;
        }
    }
    const double xbest = num::golden_min(obj, xl - step, xr + step, 56);
    return std::min({obj(xbest), fl, fr});
}

// ---------------------------------------------------------------------------
// Dual (KKT route). For t > 0 each coordinate maximizes
// lambda*c - t*M*(lambda); bisection on t drives the modular of the
// maximizer to 1; a final rescale restores exact feasibility.
// ---------------------------------------------------------------------------

double dual_domain_end(const OrliczFunction& mstar) {
    if (std::isfinite(safe_eval(mstar, kLambdaHorizon))) return kLambdaHorizon;
    double lo = 0.0, hi = kLambdaHorizon;
    for (int i = 0; i < 140; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (std::isfinite(safe_eval(mstar, mid)))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

double dual_argmax_lambda(double c, double t, const OrliczFunction& mstar, double dom) {
    const auto g = [&](double l) {
        const double ms = safe_eval(mstar, l);
        return std::isfinite(ms) ? l * c - t * ms : -num::kInf;
    };
    double hi = std::min(1.0, dom);
    double ghi = g(hi);
    while (2.0 * hi <= dom) {
        const double g2 = g(2.0 * hi);
        if (g2 > ghi) {
            hi *= 2.0;
            ghi = g2;
        } else {
            break;
        }
    }
    const double ub = std::min(2.0 * hi, dom);
    const double arg = num::golden_max_arg(g, 0.0, ub, 72);
    return (g(arg) >= 0.0) ? arg : 0.0;
}

double dual_impl(const std::vector<double>& vals, const std::vector<OrliczFunction>& mstars) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] > 0.0) active.push_back(i);
    if (active.empty()) return 0.0;

    std::vector<double> dom(active.size());
    for (std::size_t j = 0; j < active.size(); ++j) dom[j] = dual_domain_end(mstars[active[j]]);

    std::vector<double> lambda(active.size(), 0.0);
    const auto direction = [&](double t) {
        for (std::size_t j = 0; j < active.size(); ++j)
            lambda[j] = dual_argmax_lambda(vals[active[j]], t, mstars[active[j]], dom[j]);
    };
    const auto modular = [&](double scale) {
        double s = 0.0;
        for (std::size_t j = 0; j < active.size(); ++j) {
            s += safe_eval(mstars[active[j]], scale * lambda[j]);
            if (!std::isfinite(s)) return num::kInf;
        }
        return s;
    };

    double vmax = 0.0;
    for (std::size_t j : active) vmax = std::max(vmax, vals[j]);

    double t_hi = vmax;
    direction(t_hi);
    int guard = 0;
    while (modular(1.0) > 1.0) {
        t_hi *= 2.0;
        if (++guard > 300) throw BracketError("dual norm: multiplier bracket failed upward");
        direction(t_hi);
    }
    double t_lo = t_hi;
    bool inactive = false;
    guard = 0;
    while (true) {
        t_lo *= 0.5;
        direction(t_lo);
        if (modular(1.0) > 1.0) break;
        if (++guard > 200) {
            inactive = true;  // constraint never binds (flat conjugates)
            break;
        }
    }

    if (!inactive) {
        for (int i = 0; i < 90; ++i) {
            const double mid = 0.5 * (t_lo + t_hi);
            direction(mid);
            if (modular(1.0) <= 1.0)
                t_hi = mid;
            else
                t_lo = mid;
        }
        direction(t_hi);  // feasible-side direction
    }

    // Unbounded supremum: a maximizer ran to the horizon along a ray where
    // the conjugate stays at zero.
    for (std::size_t j = 0; j < active.size(); ++j) {
        if (lambda[j] >= 0.25 * kLambdaHorizon &&
            safe_eval(mstars[active[j]], lambda[j]) == 0.0)
            throw UnboundedNormError("orlicz norm: supremum diverges (conjugate vanishes on a ray)");
    }

    // Exact feasibility rescale: largest s with sum M*(s * lambda) <= 1.
    // Direction suboptimality is second order, so this pins the value.
    int expands = 0;
    double s_hi = 1.0;
    while (modular(s_hi) <= 1.0) {
        s_hi *= 2.0;
        if (++expands > 190)
            throw UnboundedNormError("orlicz norm: feasible set unbounded under rescale");
    }
    double s_lo = (expands == 0) ? 0.0 : s_hi * 0.5;
    for (int i = 0; i < 110; ++i) {
        const double mid = 0.5 * (s_lo + s_hi);
        if (modular(mid) <= 1.0)
            s_lo = mid;
        else
            s_hi = mid;
    }
    const double scale = s_lo;

    double value = 0.0;
    for (std::size_t j = 0; j < active.size(); ++j) value += lambda[j] * vals[active[j]];
    return scale * value;
}

void fetch_members(const CoefficientSeq& c, const OrliczFamily& fam,
                   std::vector<double>& vals, std::vector<OrliczFunction>& members) {
    vals.reserve(c.entries().size());
    members.reserve(c.entries().size());
    for (const auto& [k, v] : c.entries()) {
        vals.push_back(v);
        members.push_back(fam.member(k));
    }
}

void fetch_conj_members(const CoefficientSeq& c, const ConjugateFamily& conj,
                        std::vector<double>& vals, std::vector<OrliczFunction>& members) {
    vals.reserve(c.entries().size());
    members.reserve(c.entries().size());
    for (const auto& [k, v] : c.entries()) {
        vals.push_back(v);
        members.push_back(conj.member(k));
    }
}

}  // namespace

double luxemburg_norm(const CoefficientSeq& c, const OrliczFamily& fam) {
    if (c.empty()) return 0.0;
    std::vector<double> vals;
    std::vector<OrliczFunction> members;
    fetch_members(c, fam, vals, members);
    return luxemburg_impl(vals, members);
}

double orlicz_norm_amemiya(const CoefficientSeq& c, const OrliczFamily& fam) {
    if (c.empty()) return 0.0;
    std::vector<double> vals;
    std::vector<OrliczFunction> members;
    fetch_members(c, fam, vals, members);
    return amemiya_impl(vals, members);
}

double orlicz_norm_dual(const CoefficientSeq& c, const ConjugateFamily& conj) {
    if (c.empty()) return 0.0;
    std::vector<double> vals;
    std::vector<OrliczFunction> members;
    fetch_conj_members(c, conj, vals, members);
    return dual_impl(vals, members);
}

double orlicz_norm_bruteforce(const CoefficientSeq& c, const ConjugateFamily& conj,
                              int grid_resolution) {
    if (c.empty()) return 0.0;
    const std::size_t m = c.support_size();
    if (m > 3) throw UnsupportedSizeError("brute-force norm supports at most 3 nonzero entries");
    if (grid_resolution < 5) grid_resolution = 5;

    std::vector<double> vals;
    std::vector<OrliczFunction> members;
    fetch_conj_members(c, conj, vals, members);

    std::vector<double> ub(m);
    for (std::size_t i = 0; i < m; ++i) {
        ub[i] = unit_sup(members[i]);
        if (!std::isfinite(ub[i]))
            throw UnboundedNormError("brute-force norm: feasible set unbounded");
    }

    std::vector<double> lo(m, 0.0), hi = ub, best_pt(m, 0.0);
    double best = 0.0;
    const int res = grid_resolution;
    const int rounds = 12;
    std::vector<int> idx(m, 0);
    std::vector<double> pt(m, 0.0);

    for (int round = 0; round < rounds; ++round) {
        std::fill(idx.begin(), idx.end(), 0);
        bool carry = false;
        while (!carry) {
            double modular = 0.0, value = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                pt[i] = lo[i] + (hi[i] - lo[i]) * idx[i] / (res - 1);
                modular += safe_eval(members[i], pt[i]);
                value += pt[i] * vals[i];
            }
            if (modular <= 1.0 + 1e-12 && value > best) {
                best = value;
                best_pt = pt;
            }
            // odometer increment
            carry = true;
            for (std::size_t i = 0; i < m && carry; ++i) {
                if (++idx[i] < res) {
                    carry = false;
                } else {
                    idx[i] = 0;
                }
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            const double step = (hi[i] - lo[i]) / (res - 1);
            lo[i] = std::max(0.0, best_pt[i] - 1.5 * step);
            hi[i] = std::min(ub[i], best_pt[i] + 1.5 * step);
            if (hi[i] <= lo[i]) hi[i] = std::min(ub[i], lo[i] + step);
        }
    }
    return best;
}

SupportNormEvaluator::SupportNormEvaluator(const NormContext& ctx, std::vector<int> support)
    : support_(std::move(support)), backend_(ctx.backend()) {
    fam_members_.reserve(support_.size());
    conj_members_.reserve(support_.size());
    for (int k : support_) {
        if (backend_ == NormBackend::Amemiya)
            fam_members_.push_back(ctx.family().member(k));
        else
            conj_members_.push_back(ctx.conjugate_family().member(k));
    }
}

double SupportNormEvaluator::norm(const std::vector<double>& values) const {
    if (backend_ == NormBackend::Amemiya) return amemiya_impl(values, fam_members_);
    return dual_impl(values, conj_members_);
}

}  // namespace orlicz

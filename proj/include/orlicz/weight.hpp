#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace orlicz {

/// A weight mu on [0, tau]: nondecreasing, non-constant, represented as an
/// absolutely continuous density plus atomic jumps. total_variation is
/// mu(tau) - mu(0).
struct Weight {
    double tau = 0.0;
    std::function<double(double)> density;           // may be empty (purely atomic)
    std::vector<std::pair<double, double>> jumps;    // (location in [0, tau], mass > 0)
    double total_variation = 0.0;
    std::string label;
};

/// Builds a weight and computes its total variation; validates tau > 0,
/// jump locations and masses, and total_variation > 0.
Weight make_weight(double tau, std::function<double(double)> density,
                   std::vector<std::pair<double, double>> jumps, std::string label);

Weight make_lebesgue_weight(double tau);        // mu(t) = t
Weight make_one_minus_cos_weight(double tau);   // mu(t) = 1 - cos t
Weight make_atomic_weight(double tau, std::vector<std::pair<double, double>> atoms);

/// Riemann-Stieltjes integral of g over [0, tau] against the weight:
/// adaptive Simpson on the density part (absolute tolerance 1e-9, scaled by
/// the integrand's magnitude) plus the atomic sum.
double stieltjes_integral(const std::function<double(double)>& g, const Weight& w);

}  // namespace orlicz

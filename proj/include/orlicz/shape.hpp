#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/orlicz_function.hpp"

namespace orlicz {

/// A shape function phi: continuous bounded nonnegative even function with
/// phi(0) = 0 and zero set of measure zero. Evaluation is normalized through
/// |t| (evenness of the raw callable is still validated separately).
struct ShapeFunction {
    std::function<double(double)> eval;
    /// Endpoint a of the interval [0, a] on which phi is nondecreasing;
    /// +inf for everywhere-monotone shapes.
    double monotone_end = std::numeric_limits<double>::infinity();
    /// phi(a) when the "phi(a) = sup phi" hypothesis applies.
    std::optional<double> sup_value;
    std::string label;

    double operator()(double t) const { return eval(std::abs(t)); }
};

/// The classical multiplier |1 - e^{-ikh}|^alpha = 2^{alpha/2}(1 - cos kh)^{alpha/2}.
double alpha_multiplier(double alpha, long long k, double h);

/// Truncation phi*(t): phi(t) on [0, a], frozen at phi(a) beyond; even.
/// Requires a finite monotone_end.
double phi_star(const ShapeFunction& phi, double t);

/// Sampled-grid validation: evenness of the raw callable, phi(0) = 0,
/// boundedness, continuity heuristic, monotonicity on [0, a], and the
/// measure-zero heuristic for the zero set (no zero intervals on a fine
/// grid).
ValidationReport validate_shape(const ShapeFunction& phi, double t_max = 16.0, int samples = 2048);

/// Piecewise-linear even shape from a table of (t >= 0, phi(t)) nodes
/// starting at (0, 0); constant beyond the last node.
ShapeFunction shape_from_table(std::vector<std::pair<double, double>> table);

/// Majorant of averaged moduli: continuous, strictly increasing, zero at 0.
struct Majorant {
    std::function<double(double)> eval;
    std::string label;

    double operator()(double u) const { return eval(u); }
};

ValidationReport validate_majorant(const Majorant& omega, double u_max = 8.0, int samples = 512);

}  // namespace orlicz

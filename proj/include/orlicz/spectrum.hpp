#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/coefficients.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/orlicz_function.hpp"

namespace orlicz {

using Complex = std::complex<double>;

/// Finitely supported map k -> c(k) of Fourier coefficients; the artifact's
/// representation of a 2pi-periodic function. Exact sparse object: no
/// implicit floating truncation is ever applied.
class Spectrum {
  public:
    Spectrum() = default;

    explicit Spectrum(std::vector<std::pair<int, Complex>> entries) {
        for (auto& [k, v] : entries) set(k, v);
    }

    void set(int k, Complex v) {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                                   [](const auto& e, int key) { return e.first < key; });
        if (it != entries_.end() && it->first == k) {
            if (v == Complex{0.0, 0.0})
                entries_.erase(it);
            else
                it->second = v;
        } else if (v != Complex{0.0, 0.0}) {
            entries_.insert(it, {k, v});
        }
    }

    Complex at(int k) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                                   [](const auto& e, int key) { return e.first < key; });
        if (it != entries_.end() && it->first == k) return it->second;
        return {0.0, 0.0};
    }

    bool empty() const { return entries_.empty(); }

    /// Max |k| with nonzero coefficient; 0 for the empty spectrum.
    int degree() const {
        int d = 0;
        for (const auto& [k, v] : entries_) d = std::max(d, std::abs(k));
        return d;
    }

    /// Coefficients with |k| >= n (the tail measured by E_n).
    Spectrum tail(int n) const {
        Spectrum out;
        for (const auto& [k, v] : entries_)
            if (std::abs(k) >= n) out.set(k, v);
        return out;
    }

    CoefficientSeq abs_coefficients() const {
        CoefficientSeq out;
        for (const auto& [k, v] : entries_) out.set(k, std::abs(v));
        return out;
    }

    Spectrum scaled(Complex a) const {
        Spectrum out;
        for (const auto& [k, v] : entries_) out.set(k, a * v);
        return out;
    }

    Spectrum operator-(const Spectrum& other) const {
        Spectrum out = *this;
        for (const auto& [k, v] : other.entries_) out.set(k, out.at(k) - v);
        return out;
    }

    Spectrum operator+(const Spectrum& other) const {
        Spectrum out = *this;
        for (const auto& [k, v] : other.entries_) out.set(k, out.at(k) + v);
        return out;
    }

    const std::vector<std::pair<int, Complex>>& entries() const { return entries_; }

  private:
    std::vector<std::pair<int, Complex>> entries_;  // sorted by k, no exact zeros
};

/// Discrete Fourier coefficients of uniform samples on [0, 2pi): exact for
/// trigonometric polynomials of degree <= (grid-1)/2. Requires
/// samples.size() >= 2*degree + 1, otherwise AliasingError.
Spectrum coefficients_from_samples(std::span<const Complex> samples, int degree);

/// Restriction to |k| <= n - 1 (the partial sum S_{n-1}).
Spectrum partial_sum(const Spectrum& f, int n);

/// Best approximation E_n by polynomials of degree <= n - 1: the Orlicz norm
/// of the tail {c(k) : |k| >= n}, which the partial sum attains.
double best_approximation(const Spectrum& f, int n, const NormContext& norms);

/// Fourier multiplier sequence psi(k); k = 0 is always dropped by the
/// derivative/integral operations (classes built on these are insensitive to
/// constants).
class PsiMultiplier {
  public:
    PsiMultiplier(std::function<Complex(int)> eval, std::string label)
        : eval_(std::move(eval)), label_(std::move(label)) {}

    Complex operator()(int k) const { return eval_(k); }
    const std::string& label() const { return label_; }

    /// Membership in the admissible multiplier set on [1, k_max]:
    /// |psi(k)| = |psi(-k)| and |psi(k)| >= |psi(k+1)|.
    ValidationReport validate(int k_max) const;

  private:
    std::function<Complex(int)> eval_;
    std::string label_;
};

/// Coefficient-wise division by psi(k), k != 0; the k = 0 coefficient is
/// dropped. Throws DivisionByZeroError naming k when psi vanishes on the
/// support.
Spectrum psi_derivative(const Spectrum& f, const PsiMultiplier& psi);

/// Coefficient-wise multiplication by psi(k), k != 0; inverse of
/// psi_derivative on zero-mean spectra.
Spectrum psi_integral(const Spectrum& f, const PsiMultiplier& psi);

/// JSON serialization: array of {"k": int, "re": float, "im": float}.
std::string spectrum_to_json(const Spectrum& f);
Spectrum spectrum_from_json_text(const std::string& text);

}  // namespace orlicz

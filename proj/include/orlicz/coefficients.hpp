#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

/// Finitely supported map k -> |c(k)| >= 0; the input the norms consume.
/// Entries are kept sorted by k; exact zeros are pruned.
class CoefficientSeq {
  public:
    CoefficientSeq() = default;

    explicit CoefficientSeq(std::vector<std::pair<int, double>> entries) {
        for (auto& [k, v] : entries) set(k, v);
    }

    void set(int k, double v) {
        if (v < 0.0) throw InvalidInputError("coefficient values must be nonnegative");
        auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                                   [](const auto& e, int key) { return e.first < key; });
        if (it != entries_.end() && it->first == k) {
            if (v == 0.0)
                entries_.erase(it);
            else
                it->second = v;
        } else if (v != 0.0) {
            entries_.insert(it, {k, v});
        }
    }

    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    double max_value() const {
        double m = 0.0;
        for (const auto& [k, v] : entries_) m = std::max(m, v);
        return m;
    }

    double sum() const {
        double s = 0.0;
        for (const auto& [k, v] : entries_) s += v;
        return s;
    }

    int max_abs_index() const {
        int d = 0;
        for (const auto& [k, v] : entries_) d = std::max(d, std::abs(k));
        return d;
    }

    CoefficientSeq scaled(double a) const {
        CoefficientSeq out;
        out.entries_ = entries_;
        for (auto& [k, v] : out.entries_) v *= a;
        return out;
    }

    const std::vector<std::pair<int, double>>& entries() const { return entries_; }

  private:
    std::vector<std::pair<int, double>> entries_;
};

}  // namespace orlicz

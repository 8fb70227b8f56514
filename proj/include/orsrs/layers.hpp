#pragma once

// Label-vector layers: a ∈ [t]^k grouped by coordinate sum s ∈ [k, kt].

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core.hpp"

namespace orsrs {

/// Exact counts. Layer sizes grow like t^k, so they are kept in arbitrary
/// precision throughout and narrowed only where a caller needs a machine size.
using BigCount = boost::multiprecision::cpp_int;

class LayerTable {
 public:
  /// count_k(s) = Σ_{a=1..t} count_{k-1}(s - a), count_0(0) = 1.
  LayerTable(std::size_t t, std::size_t k) : t_(t), k_(k) {
    if (t < 1 || k < 1) throw PreconditionError("layer_counts needs t >= 1 and k >= 1");
    std::vector<BigCount> row{1};  // row[s] for s in [0, level*t]
    for (std::size_t level = 1; level <= k; ++level) {
      std::vector<BigCount> next(level * t + 1);
      for (std::size_t s = level; s <= level * t; ++s)
        for (std::size_t a = 1; a <= t && a <= s; ++a)
          if (s - a < row.size()) next[s] += row[s - a];
      row = std::move(next);
    }
    counts_.assign(row.begin() + static_cast<std::ptrdiff_t>(k), row.end());

    best_ = k;
    for (std::size_t s = k; s <= k * t; ++s)
      if (count(s) > count(best_)) best_ = s;
  }

  std::size_t t() const noexcept { return t_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t min_sum() const noexcept { return k_; }
  std::size_t max_sum() const noexcept { return k_ * t_; }

  /// Number of a ∈ [t]^k with Σ a_i = s; zero outside [k, kt].
  BigCount count(std::size_t s) const {
    if (s < k_ || s > k_ * t_) return 0;
    return counts_[s - k_];
  }

  /// Smallest s maximizing count(s).
  std::size_t best_sum() const noexcept { return best_; }
  const BigCount& best_count() const { return counts_[best_ - k_]; }

  BigCount total() const {
    BigCount sum = 0;
    for (const auto& c : counts_) sum += c;
    return sum;
  }

  /// count(s*) · k · t ≥ t^k, i.e. count(s*) ≥ t^{k-1}/k, in exact arithmetic.
  bool pigeonhole_holds() const {
    return best_count() * BigCount(k_) * BigCount(t_) >= boost::multiprecision::pow(BigCount(t_), static_cast<unsigned>(k_));
  }

 private:
  std::size_t t_;
  std::size_t k_;
  std::vector<BigCount> counts_;
  std::size_t best_ = 0;
};

inline LayerTable layer_counts(std::size_t t, std::size_t k) { return LayerTable(t, k); }

using LabelVector = std::vector<Label>;

/// Calls f(a) for each a ∈ [t]^k with Σ a_i = s, in lexicographic order.
template <typename F>
void for_each_in_layer(std::size_t t, std::size_t k, std::size_t s, F&& f) {
  if (t < 1 || k < 1 || s < k || s > k * t)
    throw PreconditionError("layer s=" + std::to_string(s) + " outside [" + std::to_string(k) + ", " +
                            std::to_string(k * t) + "]");
  LabelVector a(k);
  // Fill position p onward with `rest`, choosing the smallest feasible value
  // at each step; the remaining k-p-1 slots must absorb rest - a[p].
  auto fill = [&](auto& self, std::size_t p, std::size_t rest) -> void {
    if (p + 1 == k) {
      a[p] = static_cast<Label>(rest);
      f(static_cast<const LabelVector&>(a));
      return;
    }
    const std::size_t slots = k - p - 1;
    const std::size_t lo = rest > slots * t ? rest - slots * t : 1;
    const std::size_t hi = std::min(t, rest - slots);
    for (std::size_t v = std::max<std::size_t>(lo, 1); v <= hi; ++v) {
      a[p] = static_cast<Label>(v);
      self(self, p + 1, rest - v);
    }
  };
  fill(fill, 0, s);
}

inline std::vector<LabelVector> enumerate_layer(std::size_t t, std::size_t k, std::size_t s) {
  std::vector<LabelVector> out;
  for_each_in_layer(t, k, s, [&](const LabelVector& a) { out.push_back(a); });
  return out;
}

}  // namespace orsrs

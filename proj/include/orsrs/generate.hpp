#pragma once

// Certificate sources: classical RS graphs from 3-AP-free sets, complete
// graphs split into singleton matchings, and seeded random decompositions for
// fuzzing.

#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"
#include "verify.hpp"

namespace orsrs {

/// True if some x < y < z in `xs` has x + z = 2y. `xs` must be ascending.
inline bool has_three_term_ap(std::span<const Vertex> xs) {
  const std::set<Vertex> members(xs.begin(), xs.end());
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      if (members.contains(2 * xs[b] - xs[a])) return true;
  return false;
}

/// Ascending subset of [1, m] with no 3-term arithmetic progression.
class APFreeSet {
 public:
  static APFreeSet make(Vertex m, std::vector<Vertex> elements) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
      throw PreconditionError("AP-free set has repeated elements");
    for (Vertex x : elements)
      if (x < 1 || x > m)
        throw PreconditionError("element " + std::to_string(x) + " outside [1," + std::to_string(m) + "]");
    if (has_three_term_ap(elements)) throw PreconditionError("set contains a 3-term arithmetic progression");
    APFreeSet s;
    s.m_ = m;
    s.elements_ = std::move(elements);
    return s;
  }

  Vertex universe() const noexcept { return m_; }
  const std::vector<Vertex>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  friend bool operator==(const APFreeSet&, const APFreeSet&) = default;

 private:
  Vertex m_ = 0;
  std::vector<Vertex> elements_;
};

/// Adds x = 1, 2, ..., m whenever it does not complete a progression.
inline APFreeSet ap_free_greedy(Vertex m) {
  if (m < 1) throw PreconditionError("m must be >= 1");
  std::vector<char> in(static_cast<std::size_t>(m) + 1, 0);
  std::vector<Vertex> chosen;
  for (Vertex x = 1; x <= m; ++x) {
    // x would be the largest term: need y in set with 2y - x in set.
    bool blocked = false;
    for (Vertex y : chosen)
      if (2 * y > x && in[2 * y - x]) {
        blocked = true;
        break;
      }
    if (!blocked) {
      chosen.push_back(x);
      in[x] = 1;
    }
  }
  return APFreeSet::make(m, std::move(chosen));
}

inline constexpr Vertex kExhaustiveApLimit = 20;

/// Maximum-size 3-AP-free subset of [1, m], lexicographically least among
/// maximizers. Branch and bound with include-first ordering, so the first
/// set reaching the optimum is the least one.
inline APFreeSet ap_free_exhaustive(Vertex m) {
  if (m < 1) throw PreconditionError("m must be >= 1");
  if (m > kExhaustiveApLimit)
    throw PreconditionError("exhaustive 3-AP-free search is limited to m <= " +
                            std::to_string(kExhaustiveApLimit));

  std::vector<char> in(static_cast<std::size_t>(m) + 1, 0);
  std::vector<Vertex> current;
  std::vector<Vertex> best;

  auto extendable = [&](Vertex x) {
    for (Vertex y : current)
      if (2 * y > x && in[2 * y - x]) return false;
    return true;
  };
  auto search = [&](auto& self, Vertex x) -> void {
    if (current.size() + (m - x + 1) <= best.size()) return;
    if (x > m) {
      best = current;
      return;
    }
    if (extendable(x)) {
      current.push_back(x);
      in[x] = 1;
      self(self, x + 1);
      in[x] = 0;
      current.pop_back();
    }
    self(self, x + 1);
  };
  search(search, 1);
  return APFreeSet::make(m, std::move(best));
}

/// Matchings M_a = {(a + d, a + 2d) : d ∈ shifts}, one per a ∈ [1, m], on
/// 5m vertices: the first endpoint a + d ∈ [2, 2m] keeps its id, the second
/// a + 2d ∈ [3, 3m] maps to 2m + a + 2d. No AP or RS check is made here.
inline Certificate shift_matchings(Vertex m, std::span<const Vertex> shifts) {
  if (m < 1) throw PreconditionError("m must be >= 1");
  if (shifts.empty()) throw PreconditionError("shift set is empty");
  std::vector<Matching> ms;
  ms.reserve(m);
  for (Vertex a = 1; a <= m; ++a) {
    Matching mm;
    for (Vertex d : shifts) {
      if (d < 1 || d > m) throw PreconditionError("shift " + std::to_string(d) + " outside [1,m]");
      mm.push_back(Edge::of(a + d, 2 * m + a + 2 * d));
    }
    ms.push_back(std::move(mm));
  }
  return Certificate::make(5 * m, std::move(ms));
}

/// Classical RS graph from a 3-AP-free set S ⊆ [1, m]: t = m matchings of
/// size |S| on 5m vertices. An edge of M_{a'} inside V(M_a) would give
/// d1 + d' = 2 d2 with d1, d', d2 ∈ S, which AP-freeness forbids unless all
/// three coincide and a' = a.
inline Certificate behrend_rs(const APFreeSet& set) {
  Certificate c = shift_matchings(set.universe(), set.elements());
  const VerifyReport rs = verify_rs_fast(c, CoverIndex(c));
  if (!rs.valid())
    throw PostconditionError("3-AP-free construction is not RS-valid: " + to_json(*rs.witness).dump());
  return c;
}

/// All C(n,2) edges of K_n, each its own matching, in canonical order.
inline Certificate complete_graph_singletons(Vertex n) {
  if (n < 2) throw PreconditionError("complete graph needs n >= 2");
  std::vector<Matching> ms;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) ms.push_back({Edge{u, v}});
  return Certificate::make(n, std::move(ms));
}

namespace detail {

// Uniform draw from [0, bound) by rejection; independent of the standard
// library's distribution implementations so seeds reproduce everywhere.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

/// Seeded edge-disjoint decomposition into t matchings of size r on n
/// vertices. Each matching pairs up a random vertex permutation, skipping
/// pairs whose edge is already used. Validity as ORS/RS is not controlled.
inline Certificate random_ordered_decomposition(Vertex n, std::size_t r, std::size_t t, std::uint64_t seed) {
  if (r < 1 || t < 1) throw PreconditionError("r and t must be >= 1");
  if (static_cast<std::uint64_t>(n) < 2 * r)
    throw PreconditionError("infeasible: n < 2r");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (static_cast<std::uint64_t>(r) * t > pairs)
    throw PreconditionError("infeasible: t*r exceeds the number of vertex pairs");

  constexpr int kAttempts = 1000;
  std::mt19937_64 rng(seed);
  std::set<Edge> used;
  std::vector<Matching> ms;
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < t; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kAttempts && !placed; ++attempt) {
      std::iota(order.begin(), order.end(), Vertex{1});
      for (std::size_t p = order.size(); p > 1; --p)
        std::swap(order[p - 1], order[detail::bounded(rng, p)]);
      // Scan the permutation, pairing each unmatched vertex with the next
      // unmatched vertex whose edge is fresh.
      Matching m;
      std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
      for (std::size_t p = 0; p < order.size() && m.size() < r; ++p) {
        if (taken[order[p]]) continue;
        for (std::size_t q = p + 1; q < order.size(); ++q) {
          if (taken[order[q]]) continue;
          const Edge e = Edge::of(order[p], order[q]);
          if (used.contains(e)) continue;
          m.push_back(e);
          taken[order[p]] = taken[order[q]] = 1;
          break;
        }
      }
      if (m.size() == r) {
        used.insert(m.begin(), m.end());
        ms.push_back(std::move(m));
        placed = true;
      }
    }
    if (!placed)
      throw PreconditionError("could not place matching " + std::to_string(i + 1) + " after " +
                              std::to_string(kAttempts) + " attempts");
  }
  return Certificate::make(n, std::move(ms));
}

}  // namespace orsrs

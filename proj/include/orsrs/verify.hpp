#pragma once

// ORS / RS verifiers.
//
// An ORS certificate requires, for every i, that no edge of a later matching
// M_j (j > i) has both endpoints in V(M_i). An RS certificate requires that
// no edge outside M_i has both endpoints in V(M_i).
//
// Two independent engines are provided. The naive engine materializes V(M_i)
// and scans edges; the fast engine decides everything per edge from the cover
// lists of its two endpoints. Both report the same lexicographically first
// violation: smallest i, then smallest offending edge.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "core.hpp"
#include "parallel.hpp"

namespace orsrs {

enum class Property { ors, rs };

inline const char* to_string(Property p) noexcept { return p == Property::ors ? "ors" : "rs"; }

struct Witness {
  /// Matching whose induced subgraph is violated.
  Label i = 0;
  /// Offending edge, inside V(M_i).
  Edge edge;
  /// Label of the offending edge.
  Label j = 0;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct VerifyReport {
  std::optional<Witness> witness;

  bool valid() const noexcept { return !witness.has_value(); }
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

inline nlohmann::json to_json(const Witness& w) {
  return nlohmann::json{{"i", w.i}, {"edge", {w.edge.u, w.edge.v}}, {"j", w.j}};
}

// ---------------------------------------------------------------------------
// Naive engine

namespace detail {

// For each i in order, marks V(M_i) and scans edges whose label satisfies
// `counts(i, j)`; the smallest contained edge at the first violated i wins.
template <typename Counts>
VerifyReport verify_naive(const Certificate& c, Counts counts) {
  std::vector<char> in_cover(static_cast<std::size_t>(c.vertex_count()) + 1, 0);
  const auto& ms = c.matchings();
  for (std::size_t a = 0; a < ms.size(); ++a) {
    const Label i = static_cast<Label>(a + 1);
    for (const Edge& e : ms[a]) in_cover[e.u] = in_cover[e.v] = 1;

    std::optional<Witness> best;
    c.for_each_edge([&](Label j, const Edge& e) {
      if (!counts(i, j)) return;
      if (in_cover[e.u] && in_cover[e.v] && (!best || e < best->edge)) best = Witness{i, e, j};
    });

    for (const Edge& e : ms[a]) in_cover[e.u] = in_cover[e.v] = 0;
    if (best) return VerifyReport{best};
  }
  return {};
}

}  // namespace detail

inline VerifyReport verify_ors_naive(const Certificate& c) {
  return detail::verify_naive(c, [](Label i, Label j) { return j > i; });
}

inline VerifyReport verify_rs_naive(const Certificate& c) {
  return detail::verify_naive(c, [](Label i, Label j) { return j != i; });
}

// ---------------------------------------------------------------------------
// Fast engine

namespace detail {

// Smallest common element of two ascending lists that is not `skip`, or 0.
// With `below` set, only elements < skip qualify and the merge stops there.
inline Label first_common(std::span<const Label> a, std::span<const Label> b, Label skip,
                          bool below) {
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (*x < *y) {
      ++x;
    } else if (*y < *x) {
      ++y;
    } else {
      if (below && *x >= skip) return 0;
      if (*x != skip) return *x;
      ++x;
      ++y;
    }
  }
  return 0;
}

inline VerifyReport verify_fast(const Certificate& c, const CoverIndex& idx, bool ors,
                                unsigned threads) {
  std::vector<std::pair<Label, Edge>> edges;
  edges.reserve(c.edge_count());
  c.for_each_edge([&](Label j, const Edge& e) { edges.emplace_back(j, e); });

  std::vector<std::optional<Witness>> partial(chunk_count(edges.size(), threads));
  parallel_chunks(edges.size(), threads, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    std::optional<Witness> best;
    for (std::size_t p = begin; p < end; ++p) {
      const auto& [j, e] = edges[p];
      const Label i = first_common(idx.cover(e.u), idx.cover(e.v), j, ors);
      if (i == 0) continue;
      Witness w{i, e, j};
      if (!best || std::pair(w.i, w.edge) < std::pair(best->i, best->edge)) best = w;
    }
    partial[chunk] = best;
  });

  std::optional<Witness> best;
  for (const auto& w : partial)
    if (w && (!best || std::pair(w->i, w->edge) < std::pair(best->i, best->edge))) best = w;
  return VerifyReport{best};
}

}  // namespace detail

/// Valid iff for every edge (u,v) with label j, min(cover(u) ∩ cover(v)) = j.
inline VerifyReport verify_ors_fast(const Certificate& c, const CoverIndex& idx,
                                    unsigned threads = 1) {
  return detail::verify_fast(c, idx, true, threads);
}

/// Valid iff for every edge (u,v) with label j, cover(u) ∩ cover(v) = {j}.
inline VerifyReport verify_rs_fast(const Certificate& c, const CoverIndex& idx,
                                   unsigned threads = 1) {
  return detail::verify_fast(c, idx, false, threads);
}

// ---------------------------------------------------------------------------
// Convenience

enum class Engine { naive, fast };

inline VerifyReport verify(const Certificate& c, Property p, Engine engine = Engine::fast,
                           unsigned threads = 1) {
  if (engine == Engine::naive) return p == Property::ors ? verify_ors_naive(c) : verify_rs_naive(c);
  const CoverIndex idx(c);
  return p == Property::ors ? verify_ors_fast(c, idx, threads) : verify_rs_fast(c, idx, threads);
}

struct CrossCheck {
  VerifyReport naive;
  VerifyReport fast;
  bool agree() const noexcept { return naive == fast; }
};

/// Runs both engines.
inline CrossCheck cross_check(const Certificate& c, Property p, unsigned threads = 1) {
  return {verify(c, p, Engine::naive), verify(c, p, Engine::fast, threads)};
}

/// Re-checks a witness by direct endpoint containment in V(M_i).
inline bool witness_holds(const Certificate& c, Property p, const Witness& w) {
  if (w.i < 1 || w.i > c.matching_count() || w.j < 1 || w.j > c.matching_count()) return false;
  if (p == Property::ors ? w.j <= w.i : w.j == w.i) return false;
  const auto& mj = c.matching(w.j);
  if (!std::binary_search(mj.begin(), mj.end(), w.edge)) return false;
  bool has_u = false;
  bool has_v = false;
  for (const Edge& e : c.matching(w.i)) {
    has_u = has_u || e.u == w.edge.u || e.v == w.edge.u;
    has_v = has_v || e.u == w.edge.v || e.v == w.edge.v;
  }
  return has_u && has_v;
}

}  // namespace orsrs

#pragma once

// Padding: move a certificate down to an exact vertex count by deleting
// vertices, then restore equal matching sizes by trimming.
//
// Both steps only remove edges, vertices or whole matchings. None of these
// can put a new edge inside some V(M_i), so ORS and RS validity carry over.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"

namespace orsrs {

/// Removes every edge meeting `doomed` and relabels the survivors to
/// [1, n - |D|] in order. The result is ragged; each matching loses exactly
/// the number of its edges meeting D, which is at most |D|.
inline Certificate delete_vertices(const Certificate& c, std::span<const Vertex> doomed) {
  const Vertex n = c.vertex_count();
  std::vector<char> gone(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex x : doomed) {
    if (x < 1 || x > n)
      throw PreconditionError("cannot delete vertex " + std::to_string(x) + ": outside [1," +
                              std::to_string(n) + "]");
    gone[x] = 1;
  }

  std::vector<Vertex> relabel(static_cast<std::size_t>(n) + 1, 0);
  Vertex next = 0;
  for (Vertex x = 1; x <= n; ++x)
    if (!gone[x]) relabel[x] = ++next;
  if (next == 0) throw PreconditionError("cannot delete every vertex");

  std::vector<Matching> out;
  out.reserve(c.matching_count());
  for (const auto& m : c.matchings()) {
    Matching kept;
    for (const Edge& e : m)
      if (!gone[e.u] && !gone[e.v]) kept.push_back(Edge::of(relabel[e.u], relabel[e.v]));
    out.push_back(std::move(kept));
  }
  return Certificate::make(next, std::move(out), /*ragged=*/true);
}

/// Restores the equal-size condition. The target size r' is `r_min` when
/// given, otherwise the smallest non-empty matching. Matchings smaller than
/// r' are dropped and larger ones lose their canonical-last edges.
inline Certificate trim_to_uniform(const Certificate& c, std::optional<std::size_t> r_min = std::nullopt) {
  std::size_t target = 0;
  if (r_min) {
    target = *r_min;
  } else {
    for (const auto& m : c.matchings())
      if (!m.empty() && (target == 0 || m.size() < target)) target = m.size();
  }
  if (target == 0) throw PreconditionError("trim target r' = 0: every matching is empty");

  std::vector<Matching> out;
  for (const auto& m : c.matchings()) {
    if (m.size() < target) continue;
    out.emplace_back(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(target));
  }
  if (out.empty())
    throw PreconditionError("trim target r' = " + std::to_string(target) + " empties every matching");
  return Certificate::make(c.vertex_count(), std::move(out));
}

/// Fits a certificate to exactly `target` vertices: deletes `doomed` (default:
/// the n - N highest-numbered vertices), then trims to uniform size.
inline Certificate fit_to_n(const Certificate& c, Vertex target,
                            std::optional<std::vector<Vertex>> doomed = std::nullopt) {
  const Vertex n = c.vertex_count();
  if (target < 1 || target > n)
    throw PreconditionError("target N=" + std::to_string(target) + " outside [1," + std::to_string(n) + "]");
  if (target == n && !doomed) return c;

  std::vector<Vertex> d;
  if (doomed) {
    d = std::move(*doomed);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    if (d.size() != static_cast<std::size_t>(n - target))
      throw PreconditionError("deletion set has " + std::to_string(d.size()) + " vertices, need " +
                              std::to_string(n - target));
  } else {
    for (Vertex x = target + 1; x <= n; ++x) d.push_back(x);
  }
  return trim_to_uniform(delete_vertices(c, d));
}

}  // namespace orsrs

#pragma once

// Exact ORS(n, r) and RS(n, r) at tiny sizes.
//
// Candidates are all size-r matchings of K_n, each carried as a bitmask over
// the C(n,2) edges together with the mask of edges lying inside its vertex set.
//
// ORS: build the sequence back to front. Prepending M to a valid suffix keeps
// it valid iff no suffix edge lies inside V(M), and never affects the
// suffix's own conditions. Feasibility therefore depends only on the set of
// used edges, and the longest sequence is a memoized search over edge sets.
//
// RS: the condition is pairwise and symmetric, so the answer is the maximum
// clique of the compatibility graph on candidates.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "layers.hpp"
#include "parallel.hpp"
#include "tensor.hpp"
#include "verify.hpp"

namespace orsrs {

inline constexpr Vertex kOracleMaxN = 7;
inline constexpr std::size_t kOracleMaxR = 2;

struct OracleOptions {
  /// Wall-clock budget; exceeded searches throw PreconditionError.
  std::optional<std::chrono::duration<double>> budget;
  unsigned threads = 1;
};

struct OracleResult {
  std::size_t t_max = 0;
  /// Absent when no size-r matching exists.
  std::optional<Certificate> witness;
};

namespace detail {

using EdgeMask = std::uint32_t;  // C(7,2) = 21 edges

struct Candidate {
  Matching edges;
  EdgeMask own = 0;
  EdgeMask inside = 0;
};

class SearchClock {
 public:
  explicit SearchClock(const OracleOptions& opt) {
    if (opt.budget)
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(*opt.budget);
  }

  void tick() {
    if (deadline_ && (++ticks_ & 0xfff) == 0 && std::chrono::steady_clock::now() > *deadline_)
      throw PreconditionError("oracle search exceeded its time budget");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t ticks_ = 0;
};

struct EdgeTable {
  explicit EdgeTable(Vertex n) : n(n), bit(static_cast<std::size_t>(n + 1) * (n + 1), 0) {
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) {
        bit[u * (n + 1) + v] = static_cast<int>(edges.size());
        edges.push_back(Edge{u, v});
      }
  }
  EdgeMask mask(const Edge& e) const { return EdgeMask{1} << bit[e.u * (n + 1) + e.v]; }

  Vertex n;
  std::vector<int> bit;
  std::vector<Edge> edges;
};

// All size-r matchings of K_n in lexicographic order of their sorted edge
// lists.
inline std::vector<Candidate> matchings_of_size(const EdgeTable& table, std::size_t r) {
  std::vector<Candidate> out;
  Matching current;
  std::vector<char> used(table.n + 1, 0);
  auto grow = [&](auto& self, std::size_t from) -> void {
    if (current.size() == r) {
      Candidate c;
      c.edges = current;
      std::vector<Vertex> verts;
      for (const Edge& e : current) {
        c.own |= table.mask(e);
        verts.push_back(e.u);
        verts.push_back(e.v);
      }
      for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
          c.inside |= table.mask(Edge::of(verts[a], verts[b]));
      out.push_back(std::move(c));
      return;
    }
    for (std::size_t p = from; p < table.edges.size(); ++p) {
      const Edge& e = table.edges[p];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = 1;
      current.push_back(e);
      self(self, p + 1);
      current.pop_back();
      used[e.u] = used[e.v] = 0;
    }
  };
  grow(grow, 0);
  return out;
}

inline OracleResult max_t_ors(Vertex n, const std::vector<Candidate>& cands, SearchClock& clock) {
  const EdgeTable table(n);
  const std::size_t edge_bits = table.edges.size();
  // memo[used] = longest sequence that can still be prepended, + 1 (0 = unknown).
  std::vector<std::uint8_t> memo(std::size_t{1} << edge_bits, 0);

  auto longest = [&](auto& self, EdgeMask used) -> std::size_t {
    if (memo[used]) return memo[used] - 1u;
    clock.tick();
    std::size_t best = 0;
    for (const Candidate& c : cands)
      if ((c.inside & used) == 0) best = std::max(best, 1 + self(self, used | c.own));
    memo[used] = static_cast<std::uint8_t>(best + 1);
    return best;
  };

  OracleResult result;
  result.t_max = longest(longest, 0);
  if (result.t_max == 0) return result;

  // Walk the first optimal choice at each step; choices are made last to
  // first, so reverse at the end.
  std::vector<Matching> reversed;
  EdgeMask used = 0;
  for (std::size_t left = result.t_max; left > 0; --left) {
    for (const Candidate& c : cands) {
      if ((c.inside & used) == 0 && 1 + longest(longest, used | c.own) == left) {
        reversed.push_back(c.edges);
        used |= c.own;
        break;
      }
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  result.witness = Certificate::make(n, std::move(reversed));
  return result;
}

inline OracleResult max_t_rs(Vertex n, const std::vector<Candidate>& cands, const OracleOptions& opt) {
  const std::size_t count = cands.size();
  std::vector<std::vector<std::size_t>> compatible(count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if ((cands[a].inside & cands[b].own) == 0 && (cands[b].inside & cands[a].own) == 0)
        compatible[a].push_back(b);

  // Branch p holds the cliques whose smallest candidate is p. Each branch is
  // searched on its own so the merge below does not depend on scheduling.
  std::vector<std::vector<std::size_t>> branch_best(count);
  parallel_chunks(count, opt.threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    SearchClock clock(opt);
    for (std::size_t p = begin; p < end; ++p) {
      std::vector<std::size_t> current{p};
      std::vector<std::size_t>& best = branch_best[p];
      auto grow = [&](auto& self, const std::vector<std::size_t>& pool) -> void {
        clock.tick();
        if (current.size() > best.size()) best = current;
        for (std::size_t x = 0; x < pool.size(); ++x) {
          if (current.size() + (pool.size() - x) <= best.size()) return;
          const std::size_t v = pool[x];
          std::vector<std::size_t> next;
          const auto& adj = compatible[v];
          for (std::size_t y = x + 1; y < pool.size(); ++y)
            if (std::binary_search(adj.begin(), adj.end(), pool[y])) next.push_back(pool[y]);
          current.push_back(v);
          self(self, next);
          current.pop_back();
        }
      };
      grow(grow, compatible[p]);
    }
  });

  const std::vector<std::size_t>* best = nullptr;
  for (const auto& b : branch_best)
    if (!best || b.size() > best->size()) best = &b;

  OracleResult result;
  if (!best || best->empty()) return result;
  result.t_max = best->size();
  std::vector<Matching> ms;
  for (std::size_t idx : *best) ms.push_back(cands[idx].edges);
  result.witness = Certificate::make(n, std::move(ms));
  return result;
}

}  // namespace detail

/// Exact maximum t such that an n-vertex (r, t) certificate of the given kind
/// exists, with one witness. Limited to n <= 7, r <= 2.
inline OracleResult max_t_exhaustive(Vertex n, std::size_t r, Property kind, const OracleOptions& opt = {}) {
  if (n < 1 || n > kOracleMaxN || r < 1 || r > kOracleMaxR)
    throw PreconditionError("oracle bounds are 1 <= n <= " + std::to_string(kOracleMaxN) + ", 1 <= r <= " +
                            std::to_string(kOracleMaxR));
  const detail::EdgeTable table(n);
  const auto cands = detail::matchings_of_size(table, r);
  if (cands.empty()) return {};

  OracleResult result;
  if (kind == Property::ors) {
    detail::SearchClock clock(opt);
    result = detail::max_t_ors(n, cands, clock);
  } else {
    result = detail::max_t_rs(n, cands, opt);
  }
  if (result.witness && !verify(*result.witness, kind, Engine::naive).valid())
    throw PostconditionError("oracle witness fails its own verifier");
  return result;
}

struct LemmaReport {
  Vertex n = 0;
  std::size_t r = 0;
  std::size_t k = 0;
  std::size_t ors_t_max = 0;
  /// Layer used and its size; zero when the ORS oracle found nothing.
  std::size_t s = 0;
  std::size_t product_matchings = 0;
  std::size_t product_matching_size = 0;
  Vertex product_vertices = 0;
  bool rs_valid = true;
  /// product_matchings · k ≥ t_max^{k-1}, exactly.
  bool bound_holds = true;

  bool passed() const noexcept { return rs_valid && bound_holds; }
};

/// Feeds the ORS oracle's witness through the tensor construction and checks
/// the result against RS(n^k, r^k) ≥ ORS(n, r)^{k-1} / k.
inline LemmaReport check_lemma_small(Vertex n, std::size_t r, std::size_t k = 2,
                                     const OracleOptions& opt = {}) {
  LemmaReport rep;
  rep.n = n;
  rep.r = r;
  rep.k = k;
  const OracleResult ors = max_t_exhaustive(n, r, Property::ors, opt);
  rep.ors_t_max = ors.t_max;
  if (!ors.witness) return rep;

  TensorOptions topt;
  topt.k = k;
  topt.threads = opt.threads;
  const Certificate product = tensor_power(*ors.witness, topt);
  rep.s = layer_counts(ors.t_max, k).best_sum();
  rep.product_matchings = product.matching_count();
  rep.product_matching_size = product.matching_size();
  rep.product_vertices = product.vertex_count();
  rep.rs_valid = verify(product, Property::rs, Engine::naive).valid() &&
                 verify(product, Property::rs, Engine::fast).valid();
  rep.bound_holds = BigCount(rep.product_matchings) * BigCount(k) >=
                    boost::multiprecision::pow(BigCount(ors.t_max), static_cast<unsigned>(k - 1));
  return rep;
}

}  // namespace orsrs

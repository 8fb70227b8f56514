#pragma once

// Tensor-power construction: ORS certificate on n vertices -> RS certificate
// on n^k vertices.
//
// Vertices of the product are k-tuples of base vertices. For a label vector
// a with Σ a_i = s, the matching M_a pairs (u_1..u_k) with (v_1..v_k) for
// every choice of base edges (u_i, v_i) ∈ M_{a_i}. Each base edge is taken in
// its stored orientation (u < v), so |M_a| = r^k exactly. Any product edge of
// the layer with both endpoints in V(M_a) has f(u_i, v_i) <= a_i in every
// coordinate by the ORS property, and equal coordinate sums force equality,
// so each M_a is induced in the layer graph.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "layers.hpp"
#include "parallel.hpp"
#include "verify.hpp"

namespace orsrs {

/// Mixed-radix bijection [1,n]^k <-> [1, n^k]:
/// id = 1 + Σ (u_i - 1) · n^{k-i}.
class TupleCode {
 public:
  TupleCode(Vertex base, std::size_t power) : base_(base), power_(power) {
    if (base < 1 || power < 1) throw PreconditionError("TupleCode needs n >= 1 and k >= 1");
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < power; ++i) {
      if (size > std::numeric_limits<Vertex>::max() / base)
        throw PreconditionError("n^k = " + std::to_string(base) + "^" + std::to_string(power) +
                                " does not fit a vertex id");
      size *= base;
    }
    size_ = static_cast<Vertex>(size);
  }

  Vertex base() const noexcept { return base_; }
  std::size_t power() const noexcept { return power_; }
  Vertex size() const noexcept { return size_; }

  Vertex encode(std::span<const Vertex> tuple) const {
    if (tuple.size() != power_) throw PreconditionError("tuple length differs from k");
    std::uint64_t id = 0;
    for (Vertex u : tuple) {
      if (u < 1 || u > base_) throw PreconditionError("tuple coordinate out of range");
      id = id * base_ + (u - 1);
    }
    return static_cast<Vertex>(id + 1);
  }

  std::vector<Vertex> decode(Vertex id) const {
    if (id < 1 || id > size_) throw PreconditionError("product vertex id out of range");
    std::vector<Vertex> tuple(power_);
    std::uint64_t rest = id - 1;
    for (std::size_t i = power_; i-- > 0;) {
      tuple[i] = static_cast<Vertex>(rest % base_ + 1);
      rest /= base_;
    }
    return tuple;
  }

 private:
  Vertex base_;
  std::size_t power_;
  Vertex size_ = 0;
};

struct TensorOptions {
  std::size_t k = 2;
  /// Layer; defaults to the smallest maximizer s* of the layer table.
  std::optional<std::size_t> s;
  /// Re-verify the output with the fast RS engine.
  bool verify_output = true;
  unsigned threads = 1;
  /// Lifts the desk-scale caps on product vertices and edges.
  bool allow_large = false;
  std::uint64_t max_vertices = 10'000'000;
  std::uint64_t max_edges = 10'000'000;
};

/// count(s) · r^k.
inline BigCount product_edge_count(const Certificate& c, std::size_t k, std::size_t s) {
  const LayerTable table(c.matching_count(), k);
  return table.count(s) *
         boost::multiprecision::pow(BigCount(c.matching_size()), static_cast<unsigned>(k));
}

namespace detail {

inline Matching product_matching(const Certificate& c, const TupleCode& code, const LabelVector& a) {
  const std::size_t k = a.size();
  const std::size_t r = c.matching(a[0]).size();
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < k; ++i) expected *= r;

  Matching out;
  out.reserve(expected);
  std::vector<std::size_t> pick(k, 0);  // edge position in M_{a_i}, odometer
  std::vector<Vertex> tail(k);
  std::vector<Vertex> head(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) {
      const Edge& e = c.matching(a[i])[pick[i]];
      tail[i] = e.u;
      head[i] = e.v;
    }
    out.push_back(Edge::of(code.encode(tail), code.encode(head)));

    std::size_t p = k;
    while (p > 0 && ++pick[p - 1] == r) pick[--p] = 0;
    if (p == 0) break;
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != expected) {
    std::string label;
    for (Label x : a) label += (label.empty() ? "" : ",") + std::to_string(x);
    throw PostconditionError("|M_a| = " + std::to_string(out.size()) + " for a=(" + label +
                             "), expected r^k = " + std::to_string(expected));
  }
  return out;
}

}  // namespace detail

/// Raw product at layer s: one matching M_a per label vector a in the layer,
/// in lexicographic order of a. Checks only the size identity |M_a| = r^k and
/// well-formedness; the ORS precondition and RS conclusion are left to the
/// caller (see tensor_power).
inline Certificate layer_product(const Certificate& c, std::size_t k, std::size_t s, unsigned threads = 1) {
  if (c.ragged()) throw PreconditionError("tensor input must have uniform matching sizes");
  if (k < 1) throw PreconditionError("k must be >= 1");
  const std::size_t t = c.matching_count();
  const TupleCode code(c.vertex_count(), k);
  const std::vector<LabelVector> layer = enumerate_layer(t, k, s);
  if (BigCount(layer.size()) != LayerTable(t, k).count(s))
    throw PostconditionError("layer enumeration disagrees with layer_counts at s=" + std::to_string(s));

  std::vector<Matching> matchings(layer.size());
  detail::parallel_chunks(layer.size(), threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t p = begin; p < end; ++p) matchings[p] = detail::product_matching(c, code, layer[p]);
  });

  try {
    return Certificate::make(code.size(), std::move(matchings));
  } catch (const CertificateError& e) {
    throw PostconditionError(std::string("product is not a well-formed certificate: ") + e.what());
  }
}

/// Builds the RS product certificate at layer s (default s*). Refuses inputs
/// that are not ORS-valid or not uniform, layers outside [k, kt], and
/// products over the size caps. The output is re-verified unless disabled.
inline Certificate tensor_power(const Certificate& c, const TensorOptions& opt = {}) {
  if (c.ragged()) throw PreconditionError("tensor input must have uniform matching sizes");
  if (opt.k < 1) throw PreconditionError("k must be >= 1");
  {
    const CoverIndex idx(c);
    const VerifyReport ors = verify_ors_fast(c, idx, opt.threads);
    if (!ors.valid())
      throw PreconditionError("tensor input is not ORS-valid: " + to_json(*ors.witness).dump());
  }

  const LayerTable table(c.matching_count(), opt.k);
  const std::size_t s = opt.s.value_or(table.best_sum());
  if (s < table.min_sum() || s > table.max_sum())
    throw PreconditionError("layer s=" + std::to_string(s) + " outside [" +
                            std::to_string(table.min_sum()) + ", " + std::to_string(table.max_sum()) + "]");

  const TupleCode code(c.vertex_count(), opt.k);
  const BigCount edges = product_edge_count(c, opt.k, s);
  if (!opt.allow_large) {
    if (code.size() > opt.max_vertices)
      throw PreconditionError("product has " + std::to_string(code.size()) + " vertices, cap is " +
                              std::to_string(opt.max_vertices));
    if (edges > opt.max_edges)
      throw PreconditionError("product has " + edges.str() + " edges, cap is " +
                              std::to_string(opt.max_edges));
  }

  Certificate out = layer_product(c, opt.k, s, opt.threads);
  if (out.edge_count() != edges)
    throw PostconditionError("product edge count " + std::to_string(out.edge_count()) + " differs from count(s) * r^k = " +
                             edges.str());
  if (opt.verify_output) {
    const CoverIndex idx(out);
    const VerifyReport rs = verify_rs_fast(out, idx, opt.threads);
    if (!rs.valid())
      throw PostconditionError("product is not RS-valid: " + to_json(*rs.witness).dump());
  }
  return out;
}

}  // namespace orsrs

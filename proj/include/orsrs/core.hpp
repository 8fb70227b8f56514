#pragma once

// Certificates: ordered edge-disjoint matching decompositions of a graph on
// vertices 1..n, plus the auxiliary indices the verifiers run on.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace orsrs {

using Vertex = std::uint32_t;
/// 1-based position of a matching within a certificate.
using Label = std::uint32_t;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a Certificate invariant or cannot be parsed.
class CertificateError : public Error {
 public:
  enum class Kind {
    parse,
    vertex_count,
    vertex_out_of_range,
    self_loop,
    not_a_matching,
    duplicate_edge,
    empty_matching,
    no_matchings,
    unequal_sizes,
  };

  CertificateError(Kind kind, const std::string& detail)
      : Error(std::string(name(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

  static const char* name(Kind kind) noexcept {
    switch (kind) {
      case Kind::parse: return "parse error";
      case Kind::vertex_count: return "invalid vertex count";
      case Kind::vertex_out_of_range: return "vertex id out of range";
      case Kind::self_loop: return "self loop";
      case Kind::not_a_matching: return "not a matching";
      case Kind::duplicate_edge: return "duplicate edge";
      case Kind::empty_matching: return "empty matching";
      case Kind::no_matchings: return "no matchings";
      case Kind::unequal_sizes: return "unequal matching sizes";
    }
    return "certificate error";
  }

 private:
  Kind kind_;
  std::string detail_;
};

/// A caller-side requirement does not hold (non-ORS tensor input, layer out
/// of range, size caps, search bounds).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A mathematical postcondition failed. Always an implementation bug or a
/// misreading of the construction; never swallowed.
class PostconditionError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Edges and matchings

/// Unordered edge, stored with the smaller endpoint first.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge of(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using Matching = std::vector<Edge>;

// ---------------------------------------------------------------------------
// Certificate

class Certificate {
 public:
  /// Validates every invariant and throws CertificateError on the first
  /// violation. Edges are normalized (u < v) and sorted within each matching;
  /// matching order is kept. With `ragged` set, matchings may differ in size
  /// (and may be empty).
  static Certificate make(Vertex n, std::vector<Matching> matchings, bool ragged = false) {
    Certificate c;
    c.n_ = n;
    c.ragged_ = ragged;
    c.matchings_ = std::move(matchings);
    for (auto& m : c.matchings_) {
      for (auto& e : m) e = Edge::of(e.u, e.v);
      std::sort(m.begin(), m.end());
    }
    c.validate();
    return c;
  }

  Vertex vertex_count() const noexcept { return n_; }
  std::size_t matching_count() const noexcept { return matchings_.size(); }
  bool ragged() const noexcept { return ragged_; }
  const std::vector<Matching>& matchings() const noexcept { return matchings_; }

  /// Matching with 1-based label `i`.
  const Matching& matching(Label i) const { return matchings_.at(i - 1); }

  /// Common matching size r. For ragged certificates, the smallest size.
  std::size_t matching_size() const noexcept {
    std::size_t r = matchings_.empty() ? 0 : matchings_.front().size();
    for (const auto& m : matchings_) r = std::min(r, m.size());
    return r;
  }

  std::size_t edge_count() const noexcept {
    return std::accumulate(matchings_.begin(), matchings_.end(), std::size_t{0},
                           [](std::size_t acc, const Matching& m) { return acc + m.size(); });
  }

  /// Calls f(label, edge) for every edge, in matching order then canonical
  /// edge order.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (std::size_t i = 0; i < matchings_.size(); ++i)
      for (const Edge& e : matchings_[i]) f(static_cast<Label>(i + 1), e);
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;

 private:
  Certificate() = default;

  void validate() const {
    using K = CertificateError::Kind;
    if (n_ == 0) throw CertificateError(K::vertex_count, "n must be positive");
    if (!ragged_) {
      if (matchings_.empty()) throw CertificateError(K::no_matchings, "certificate has no matchings");
      for (std::size_t i = 0; i < matchings_.size(); ++i)
        if (matchings_[i].empty())
          throw CertificateError(K::empty_matching, "matching " + std::to_string(i + 1) + " is empty");
    }

    std::vector<Label> owner(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<Edge> all;
    all.reserve(edge_count());
    for (std::size_t i = 0; i < matchings_.size(); ++i) {
      const Label label = static_cast<Label>(i + 1);
      for (const Edge& e : matchings_[i]) {
        if (e.u < 1 || e.v > n_)
          throw CertificateError(K::vertex_out_of_range,
                                 "edge [" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                     "] outside [1," + std::to_string(n_) + "]");
        if (e.u == e.v)
          throw CertificateError(K::self_loop, "edge [" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + "]");
        for (Vertex x : {e.u, e.v}) {
          if (owner[x] == label)
            throw CertificateError(K::not_a_matching, "vertex " + std::to_string(x) +
                                                          " covered twice in matching " +
                                                          std::to_string(label));
          owner[x] = label;
        }
        all.push_back(e);
      }
    }
    std::sort(all.begin(), all.end());
    auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end())
      throw CertificateError(K::duplicate_edge, "edge [" + std::to_string(dup->u) + "," +
                                                    std::to_string(dup->v) + "]");

    if (!ragged_) {
      const std::size_t r = matchings_.front().size();
      for (std::size_t i = 1; i < matchings_.size(); ++i)
        if (matchings_[i].size() != r)
          throw CertificateError(K::unequal_sizes,
                                 "matching " + std::to_string(i + 1) + " has " +
                                     std::to_string(matchings_[i].size()) + " edges, expected " +
                                     std::to_string(r));
    }
  }

  Vertex n_ = 0;
  bool ragged_ = false;
  std::vector<Matching> matchings_;
};

// ---------------------------------------------------------------------------
// JSON interchange

/// Parses {"n": int, "ragged": bool?, "matchings": [[[u,v],...],...]}.
inline Certificate load_certificate(std::string_view text) {
  using K = CertificateError::Kind;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CertificateError(K::parse, e.what());
  }
  if (!doc.is_object()) throw CertificateError(K::parse, "top level must be an object");

  auto vertex_id = [](const nlohmann::json& j, const char* what) -> std::int64_t {
    if (!j.is_number_integer()) throw CertificateError(K::parse, std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
  };

  if (!doc.contains("n")) throw CertificateError(K::parse, "missing \"n\"");
  const std::int64_t n = vertex_id(doc["n"], "\"n\"");
  if (n <= 0 || n > std::numeric_limits<Vertex>::max())
    throw CertificateError(K::vertex_count, "n = " + std::to_string(n));

  bool ragged = false;
  if (doc.contains("ragged")) {
    if (!doc["ragged"].is_boolean()) throw CertificateError(K::parse, "\"ragged\" must be a boolean");
    ragged = doc["ragged"].get<bool>();
  }

  if (!doc.contains("matchings") || !doc["matchings"].is_array())
    throw CertificateError(K::parse, "\"matchings\" must be an array");

  std::vector<Matching> matchings;
  for (const auto& jm : doc["matchings"]) {
    if (!jm.is_array()) throw CertificateError(K::parse, "each matching must be an array of edges");
    Matching m;
    for (const auto& je : jm) {
      if (!je.is_array() || je.size() != 2)
        throw CertificateError(K::parse, "each edge must be a pair [u,v]");
      const std::int64_t a = vertex_id(je[0], "vertex id");
      const std::int64_t b = vertex_id(je[1], "vertex id");
      for (std::int64_t x : {a, b})
        if (x < 1 || x > n)
          throw CertificateError(K::vertex_out_of_range,
                                 "vertex " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
      m.push_back(Edge::of(static_cast<Vertex>(a), static_cast<Vertex>(b)));
    }
    matchings.push_back(std::move(m));
  }
  return Certificate::make(static_cast<Vertex>(n), std::move(matchings), ragged);
}

/// Canonical one-line form, newline terminated. Key order is n, ragged (only
/// when set), matchings.
inline std::string serialize(const Certificate& c) {
  std::string out = "{\"n\":" + std::to_string(c.vertex_count());
  if (c.ragged()) out += ",\"ragged\":true";
  out += ",\"matchings\":[";
  bool first_matching = true;
  for (const auto& m : c.matchings()) {
    if (!first_matching) out += ',';
    first_matching = false;
    out += '[';
    bool first_edge = true;
    for (const Edge& e : m) {
      if (!first_edge) out += ',';
      first_edge = false;
      out += '[' + std::to_string(e.u) + ',' + std::to_string(e.v) + ']';
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

// ---------------------------------------------------------------------------
// EdgeLabelMap: edge -> index of the matching containing it.

class EdgeLabelMap {
 public:
  explicit EdgeLabelMap(const Certificate& c) {
    entries_.reserve(c.edge_count());
    c.for_each_edge([&](Label i, const Edge& e) { entries_.emplace_back(e, i); });
    std::sort(entries_.begin(), entries_.end());
  }

  std::optional<Label> label(Edge e) const {
    e = Edge::of(e.u, e.v);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                               [](const auto& entry, const Edge& key) { return entry.first < key; });
    if (it == entries_.end() || it->first != e) return std::nullopt;
    return it->second;
  }

  std::optional<Label> label(Vertex a, Vertex b) const { return label(Edge::of(a, b)); }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<std::pair<Edge, Label>> entries_;
};

// ---------------------------------------------------------------------------
// CoverIndex: for each vertex, the ascending labels of matchings covering it.

class CoverIndex {
 public:
  explicit CoverIndex(const Certificate& c) : lists_(c.vertex_count()) {
    // Labels are visited in increasing order, so each list comes out sorted.
    c.for_each_edge([&](Label i, const Edge& e) {
      lists_[e.u - 1].push_back(i);
      lists_[e.v - 1].push_back(i);
    });
  }

  std::span<const Label> cover(Vertex v) const { return lists_.at(v - 1); }
  Vertex vertex_count() const noexcept { return static_cast<Vertex>(lists_.size()); }

  std::size_t incidence_count() const noexcept {
    std::size_t total = 0;
    for (const auto& l : lists_) total += l.size();
    return total;
  }

 private:
  std::vector<std::vector<Label>> lists_;
};

inline CoverIndex build_cover_index(const Certificate& c) { return CoverIndex(c); }

// ---------------------------------------------------------------------------
// Stats

struct Stats {
  Vertex n = 0;
  std::size_t t = 0;
  std::size_t r = 0;
  /// r/n in lowest terms.
  std::uint64_t fraction_num = 0;
  std::uint64_t fraction_den = 1;
  std::size_t edges = 0;
  bool ragged = false;

  double fraction() const noexcept {
    return static_cast<double>(fraction_num) / static_cast<double>(fraction_den);
  }
};

inline Stats stats(const Certificate& c) {
  Stats s;
  s.n = c.vertex_count();
  s.t = c.matching_count();
  s.r = c.matching_size();
  const std::uint64_t g = std::gcd<std::uint64_t, std::uint64_t>(s.r, s.n);
  s.fraction_num = s.r / g;
  s.fraction_den = s.n / g;
  s.edges = c.edge_count();
  s.ragged = c.ragged();
  return s;
}

}  // namespace orsrs

template <>
struct std::hash<orsrs::Edge> {
  std::size_t operator()(const orsrs::Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(e.u) << 32) | e.v);
  }
};

#pragma once

// ── Simple Temporal Problem solver over interval endpoints ──────────────────
//
// A network of difference constraints edge(u,v) ⊆ value(v) − value(u), with
// strictness tracked exactly by ConvexSet.  closure() runs all-pairs
// shortest-path tightening (Floyd–Warshall over sum/intersect), which for
// convex constraints yields the minimal network; the network is inconsistent
// iff some edge empties (self-edges start at {0}, so a cycle excluding zero —
// including a zero-length cycle through a strict bound — empties a self-edge).
// The minimal network is decomposable, so extract_solution can fix variables
// one at a time inside their propagated windows.

#include "stir/allen.hpp"
#include "stir/bounds.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace stir {

struct EndpointVar {
  enum Which : std::uint8_t { Begin, End };

  std::string interval;
  Which which = Begin;

  static EndpointVar begin(std::string id) { return {std::move(id), Begin}; }
  static EndpointVar end(std::string id) { return {std::move(id), End}; }

  auto operator<=>(const EndpointVar&) const = default;
  std::string str() const { return interval + (which == Begin ? ".b" : ".e"); }
};

class StpNetwork {
 public:
  // Low-level entry points (point variables and raw difference edges).
  void add_variable(const EndpointVar& v);  // throws std::invalid_argument on duplicates
  bool has_variable(const EndpointVar& v) const;
  // Intersects edge (u,v) with s and edge (v,u) with negate(s).
  void add_edge(const EndpointVar& u, const EndpointVar& v, const ConvexSet& s);

  // Interval-level entry points.
  // Adds id.b, id.e and the durativity edge (id.b, id.e) ⊆ (0,+inf).
  void add_interval(const std::string& id);  // throws std::invalid_argument on duplicates
  bool has_interval(const std::string& id) const;
  // Intersects the four endpoint-difference edges of (i, j) with r's
  // components.  i == j is allowed.
  void add_role(const std::string& i, const std::string& j, const EndpointRole& r);

  // All-pairs tightening to the minimal network.  Returns the consistency
  // verdict (also remembered; see consistent()).  Idempotent.
  bool closure();
  bool closed() const { return closed_; }
  bool consistent() const;  // precondition: closed()

  const ConvexSet& edge(const EndpointVar& u, const EndpointVar& v) const;
  const std::vector<EndpointVar>& variables() const { return vars_; }
  std::vector<std::string> intervals() const;  // insertion order

  // Precondition: closed() && consistent().  Deterministic: variables are
  // fixed in insertion order at the midpoint (or unit offset) of the window
  // propagated from already-fixed variables.
  std::map<EndpointVar, Rat> extract_solution() const;

  // Precondition: closed() && consistent(); i, j present intervals.
  // Every partition relation whose characteristic role, intersected with the
  // minimal edges of (i, j), leaves all four components non-empty.
  std::set<PartitionRelation> classify_pair(const std::string& i,
                                            const std::string& j) const;

  // The minimal four-edge summary of an ordered interval pair.
  EndpointRole pair_role(const std::string& i, const std::string& j) const;

 private:
  std::size_t index_of(const EndpointVar& v) const;  // throws if absent
  ConvexSet& cell(std::size_t i, std::size_t j) { return matrix_[i * vars_.size() + j]; }
  const ConvexSet& cell(std::size_t i, std::size_t j) const {
    return matrix_[i * vars_.size() + j];
  }

  std::vector<EndpointVar> vars_;
  std::map<EndpointVar, std::size_t> index_;
  std::vector<ConvexSet> matrix_;  // row-major; diag starts at {0}
  std::vector<std::string> interval_order_;
  bool closed_ = false;
  bool consistent_ = true;
};

}  // namespace stir

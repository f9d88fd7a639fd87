#pragma once

// ── Satisfiability witnesses ─────────────────────────────────────────────────
//
// A Witness is a complete, independently checkable model description for a
// satisfiable terminology: exact rational endpoints for every defined
// concept's interval, the propositional literal set asserted on each
// interval, the feature-value equivalence classes induced by intersecting
// intervals, an atomic spatial scenario over the class representatives, the
// disjunct chosen for each axiom, and the coarse temporal relation realized
// by every interval pair.  Serialization is exact (rationals as "p/q"
// strings) and deterministic.

#include "stir/allen.hpp"
#include "stir/rational.hpp"
#include "stir/tbox.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stir {

// One feature-value equivalence class.  Variables are "Concept.feature"
// strings; all members share the feature name.
struct WitnessClass {
  std::string rep;
  std::vector<std::string> members;  // sorted; contains rep

  bool operator==(const WitnessClass&) const = default;
};

struct WitnessScenarioAtom {
  std::vector<std::string> vars;  // class representatives, domain-arity many
  std::string atom;

  bool operator==(const WitnessScenarioAtom&) const = default;
};

struct WitnessPartition {
  std::string first, second;  // axiom order: first precedes second
  PartitionRelation relation = PartitionRelation::Intersects;

  bool operator==(const WitnessPartition&) const = default;
};

struct Witness {
  std::string domain;
  std::vector<std::string> concepts;  // axiom order; keys of the maps below
  std::map<std::string, std::pair<Rat, Rat>> endpoints;  // concept → (b, e)
  std::map<std::string, std::vector<Literal>> literals;  // sorted sets
  std::vector<WitnessClass> classes;
  std::vector<WitnessScenarioAtom> scenario;
  std::map<std::string, int> disjuncts;  // concept → chosen disjunct index
  std::vector<WitnessPartition> partitions;  // every distinct pair, realized

  bool operator==(const Witness&) const = default;
};

// Human-readable listing: endpoint lines ("C1 = (0, 6)"), literal sets,
// feature classes, scenario atoms, partition relations, disjunct choices.
std::string emit_witness_text(const Witness& w);

// JSON object with keys "domain", "endpoints", "literals", "scenario"
// (holding "classes" and "atoms"), "disjuncts", "partitions".  Deterministic
// key order; rationals as exact strings.
std::string emit_witness_json(const Witness& w);

// Inverse of emit_witness_json.  Returns nullopt on malformed input.
std::optional<Witness> parse_witness_json(const std::string& text);

}  // namespace stir

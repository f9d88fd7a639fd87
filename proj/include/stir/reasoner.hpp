#pragma once

// ── Satisfiability decision procedure ────────────────────────────────────────
//
// decide() determines whether a terminology has a model: a placement of one
// durative rational interval per defined concept such that every axiom's
// right-hand side holds at its interval, truths are homogeneous (a literal or
// spatial fact holding on an interval holds on all its subintervals, so
// facts on 1-dimensionally intersecting intervals must be jointly
// consistent), and every concrete feature takes a single value per interval
// (so feature values propagate transitively across chains of intersecting
// intervals).
//
// Pipeline per search branch: endpoint STP closure → homogeneity propagation
// (literal inheritance along entailed-subinterval pairs; feature-class
// merging across forced-INTERSECTS pairs) → propositional checks → global
// spatial consistency over merged classes → numeric extraction → candidate
// audit.  Search: one disjunct per axiom (source order), plus lazy partition
// branching — a pair is branched on only when an extracted candidate
// actually violates homogeneity on it.
//
// verify_witness() is an independent model checker: it re-evaluates every
// model condition numerically against the witness alone, sharing no state
// with decide().

#include "stir/stp.hpp"
#include "stir/tbox.hpp"
#include "stir/witness.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace stir {

// Per-interval conjunctive state: the propositional and spatial content of
// one chosen disjunct, later augmented by homogeneity propagation.
struct IntervalState {
  std::string concept_name;
  std::set<Literal> literals;
  std::vector<PredicateConcept> spatial;
};

// Builds the endpoint network: one interval per axiom (in order), durativity
// edges, and one add_role per ExistsRole in each chosen disjunct.
// `choice[k]` selects the disjunct of axiom k; axioms whose concept is never
// referenced still get intervals.
StpNetwork build_temporal_csp(const TBox& t, const std::vector<int>& choice);

using ConceptPair = std::pair<std::string, std::string>;  // axiom order: first < second

struct IntersectsGraph {
  std::set<ConceptPair> forced;    // classify_pair == {INTERSECTS}
  std::set<ConceptPair> possible;  // INTERSECTS among the allowed relations
};

// Precondition: net closed and consistent.
IntersectsGraph intersects_graph(const StpNetwork& net);

// Ordered pairs (i, j) such that i's interval is contained in j's in every
// solution of the (closed, consistent) network.
std::vector<ConceptPair> entailed_subinterval_pairs(const StpNetwork& net);

struct HomogeneityResult {
  std::vector<IntervalState> states;  // literal sets augmented downward
  // Feature-value identification: "Concept.feature" → class representative.
  // Contains every feature occurrence of every state; classes are merged
  // across forced-INTERSECTS pairs that both use the feature, transitively.
  std::map<std::string, std::string> feature_class;
};

HomogeneityResult propagate_homogeneity(
    std::vector<IntervalState> states,
    const std::set<ConceptPair>& forced_intersects,
    const std::vector<ConceptPair>& subinterval_pairs);

struct Verdict {
  bool sat = false;
  std::optional<Witness> witness;  // present iff sat
  std::string conflict;            // non-empty iff !sat; names stage + culprit
  long branches_explored = 0;
};

struct DecideOptions {
  // 0 = canonical deterministic order (axioms and disjuncts in source order,
  // partition branches PRECEDES, INTERSECTS, FOLLOWS).  Any other value
  // shuffles disjunct and partition-branch orders reproducibly.
  unsigned seed = 0;
  // When set, receives one line per explored branch: the disjunct choice,
  // the partition commitments, and the branch outcome.
  std::function<void(const std::string&)> trace;
};

Verdict decide(const TBox& t, const DecideOptions& opts = {});

// Independent model checker.  Accepts iff the witness, on its own numbers,
// satisfies every axiom's chosen disjunct (roles numerically, literals by
// membership, predicates against the scenario), the scenario is internally
// consistent, literal sets are complement-free, and homogeneity holds on
// every 1-dimensionally overlapping pair (complement-free literal union;
// shared used features identified in the same class).
bool verify_witness(const TBox& t, const Witness& w);

}  // namespace stir

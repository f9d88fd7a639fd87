#pragma once

// Shared test utilities: independent oracles (that never call the code paths
// they are checking) and random-instance generators.

#include "stir/allen.hpp"
#include "stir/bounds.hpp"
#include "stir/cyct.hpp"
#include "stir/rcc8.hpp"
#include "stir/reasoner.hpp"
#include "stir/stp.hpp"
#include "stir/tbox.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace stir::testsupport {

// ── Independent oracles ──────────────────────────────────────────────────────

// Classifies an endpoint configuration (ib < ie, jb < je) into an interval
// atom using only the definitional point orderings.
AllenAtom classify_endpoint_configuration(int ib, int ie, int jb, int je);

// Closed discs with collinear centers: the exact topological relation follows
// from center distance vs. radius sums/differences.
struct Disc {
  Rat center;
  Rat radius;
};
Rcc8Atom disc_relation(const Disc& a, const Disc& b);

// Circular-orientation classifier over integer 360ths of a turn:
// 0 = coincide, 1 = left half, 2 = opposite, 3 = right half
// (matching CycbAtom order).
int orientation_class_360(int from, int to);

// True iff one of `samples` random integer-degree assignments satisfies every
// constraint of the network (a one-sided consistency witness).
bool cyct_sample_sat(const CyctNetwork& net, int samples, std::mt19937& rng);

// Brute-force terminology satisfiability: every disjunct choice × every total
// coarse-relation assignment over interval pairs, each candidate checked by
// direct endpoint-network closure, literal-set scans, and the concrete
// domain.  Exponential; intended for ≤ 4 concepts.
bool oracle_tbox_sat(const TBox& t);

// ── Generators ───────────────────────────────────────────────────────────────

// Non-empty convex set with quarter-integer endpoints in [-4, 4], possibly
// half-infinite, universal, or a singleton.
ConvexSet random_quarter_set(std::mt19937& rng);

struct PlantedStp {
  StpNetwork net;
  std::map<EndpointVar, Rat> planted;  // the solution the roles were built around
  std::vector<std::tuple<std::string, std::string, EndpointRole>> roles;
};

// Consistent-by-construction network: random endpoints, then random roles
// whose components all contain the planted differences.
PlantedStp random_planted_stp(std::mt19937& rng, int max_intervals);

// Takes a consistent network and injects a directed cycle of half-open lower
// bounds summing to zero with at least one strict bound, which no assignment
// can satisfy.
void inject_strict_zero_cycle(StpNetwork& net, std::mt19937& rng);

// Random small terminology: 2..max_concepts axioms, 1..2 disjuncts each,
// literals from {p1..p3}, predicates over features {g1..g3}, roles written as
// interval-atom sugar.  Always passes validate().
TBox random_tbox(std::mt19937& rng, int max_concepts = 4);

// ── Process helper ───────────────────────────────────────────────────────────

struct ProcResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr merged
  double seconds = 0.0;
};
ProcResult run_process(const std::string& command);

}  // namespace stir::testsupport

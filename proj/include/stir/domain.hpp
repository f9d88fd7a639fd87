#pragma once

// ── Concrete-domain interface ────────────────────────────────────────────────
//
// The contract the reasoner consumes: a named domain with a fixed arity, an
// ordered atom list whose powerset is the predicate language (hence closed
// under complement and containing the universal predicate), and a decidable
// consistency procedure over constraint networks that returns an atomic
// scenario on success.  Two domains are registered: "rcc8" (binary, 8 atoms)
// and "cyct" (ternary, 24 atoms).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stir {

// One constraint of a spatial network: an atom-set over a variable tuple of
// the domain's arity.  Atom bits follow the domain's atom ordering.
struct SpatialConstraint {
  std::vector<int> vars;
  std::uint32_t atoms = 0;
};

struct SpatialNetwork {
  int var_count = 0;
  std::vector<SpatialConstraint> constraints;
};

// An atomic refinement: one atom per constrained tuple.  For the binary
// domain the scenario covers every unordered variable pair; for the ternary
// domain it covers every constrained triple.
struct ScenarioEntry {
  std::vector<int> vars;
  int atom = 0;

  bool operator==(const ScenarioEntry&) const = default;
};
using SpatialScenario = std::vector<ScenarioEntry>;

class ConcreteDomain {
 public:
  virtual ~ConcreteDomain() = default;

  virtual const std::string& name() const = 0;
  virtual int arity() const = 0;
  virtual int atom_count() const = 0;
  virtual const std::string& atom_name_at(int i) const = 0;
  virtual std::optional<int> atom_index(std::string_view name) const = 0;

  std::uint32_t universal_predicate() const {
    return (std::uint32_t{1} << atom_count()) - 1;
  }
  std::uint32_t complement(std::uint32_t atoms) const {
    return universal_predicate() & ~atoms;
  }

  // Decides the network; returns an atomic scenario when satisfiable.
  virtual std::optional<SpatialScenario> consistent(const SpatialNetwork& net) const = 0;

  // Ground-truth re-check of an atomic scenario (used by witness checking):
  // the scenario's atoms must be jointly realizable in the domain.
  virtual bool scenario_consistent(const SpatialScenario& scenario,
                                   int var_count) const = 0;

  // Looks up the scenario atom for a variable tuple, normalizing direction
  // for the binary domain (converse when the tuple is stored the other way).
  // nullopt when the scenario does not cover the tuple.
  virtual std::optional<int> scenario_atom(const SpatialScenario& scenario,
                                           const std::vector<int>& vars) const = 0;
};

// nullptr for unknown names; "rcc8" and "cyct" are registered.
const ConcreteDomain* find_domain(std::string_view name);

}  // namespace stir

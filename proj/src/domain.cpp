#include "stir/domain.hpp"

#include "stir/cyct.hpp"
#include "stir/rcc8.hpp"

#include <map>
#include <stdexcept>

namespace stir {

namespace {

class Rcc8Domain final : public ConcreteDomain {
 public:
  const std::string& name() const override {
    static const std::string n = "rcc8";
    return n;
  }
  int arity() const override { return 2; }
  int atom_count() const override { return kRcc8AtomCount; }
  const std::string& atom_name_at(int i) const override {
    static const std::vector<std::string> names = [] {
      std::vector<std::string> out;
      for (int a = 0; a < kRcc8AtomCount; ++a)
        out.push_back(rcc8_atom_name(static_cast<Rcc8Atom>(a)));
      return out;
    }();
    return names.at(i);
  }
  std::optional<int> atom_index(std::string_view n) const override {
    if (auto a = rcc8_atom_from_name(n)) return static_cast<int>(*a);
    return std::nullopt;
  }

  std::optional<SpatialScenario> consistent(const SpatialNetwork& net) const override {
    Rcc8Network rn(static_cast<std::size_t>(net.var_count));
    for (const SpatialConstraint& c : net.constraints) {
      if (c.vars.size() != 2) throw std::invalid_argument("rcc8 constraint arity");
      int u = c.vars[0], v = c.vars[1];
      rn.restrict(static_cast<std::size_t>(u), static_cast<std::size_t>(v),
                  Rcc8Rel{static_cast<std::uint8_t>(c.atoms)});
    }
    auto scenario_net = rcc8_consistent(rn);
    if (!scenario_net) return std::nullopt;
    SpatialScenario out;
    for (int i = 0; i < net.var_count; ++i)
      for (int j = i + 1; j < net.var_count; ++j) {
        Rcc8Rel r = scenario_net->rel(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        for (int a = 0; a < kRcc8AtomCount; ++a)
          if (r.contains(static_cast<Rcc8Atom>(a))) {
            out.push_back({{i, j}, a});
            break;
          }
      }
    return out;
  }

  bool scenario_consistent(const SpatialScenario& scenario, int var_count) const override {
    Rcc8Network rn(static_cast<std::size_t>(var_count));
    for (const ScenarioEntry& e : scenario) {
      if (e.vars.size() != 2) return false;
      rn.restrict(static_cast<std::size_t>(e.vars[0]), static_cast<std::size_t>(e.vars[1]),
                  Rcc8Rel::of(static_cast<Rcc8Atom>(e.atom)));
    }
    // Atomic networks are decided by path consistency.
    return rn.path_consistency();
  }

  std::optional<int> scenario_atom(const SpatialScenario& scenario,
                                   const std::vector<int>& vars) const override {
    if (vars.size() != 2) return std::nullopt;
    if (vars[0] == vars[1]) return static_cast<int>(Rcc8Atom::EQ);
    for (const ScenarioEntry& e : scenario) {
      if (e.vars == vars) return e.atom;
      if (e.vars.size() == 2 && e.vars[0] == vars[1] && e.vars[1] == vars[0])
        return static_cast<int>(rcc8_converse(static_cast<Rcc8Atom>(e.atom)));
    }
    return std::nullopt;
  }
};

class CyctDomain final : public ConcreteDomain {
 public:
  const std::string& name() const override {
    static const std::string n = "cyct";
    return n;
  }
  int arity() const override { return 3; }
  int atom_count() const override { return static_cast<int>(realizable_atoms().size()); }
  const std::string& atom_name_at(int i) const override {
    static const std::vector<std::string> names = [] {
      std::vector<std::string> out;
      for (const CyctAtom& a : realizable_atoms()) out.push_back(a.str());
      return out;
    }();
    return names.at(i);
  }
  std::optional<int> atom_index(std::string_view n) const override {
    auto atom = cyct_atom_from_name(n);
    if (!atom) return std::nullopt;
    return realizable_atom_index(*atom);
  }

  std::optional<SpatialScenario> consistent(const SpatialNetwork& net) const override {
    CyctNetwork cn;
    cn.var_count = net.var_count;
    for (const SpatialConstraint& c : net.constraints) {
      if (c.vars.size() != 3) throw std::invalid_argument("cyct constraint arity");
      cn.constraints.push_back({c.vars[0], c.vars[1], c.vars[2], c.atoms});
    }
    auto placement = cyct_consistent(cn);
    if (!placement) return std::nullopt;
    SpatialScenario out;
    for (const SpatialConstraint& c : net.constraints) {
      CyctAtom atom{cycb_class((*placement)[c.vars[0]], (*placement)[c.vars[1]]),
                    cycb_class((*placement)[c.vars[1]], (*placement)[c.vars[2]]),
                    cycb_class((*placement)[c.vars[0]], (*placement)[c.vars[2]])};
      ScenarioEntry entry{c.vars, *realizable_atom_index(atom)};
      bool present = false;
      for (const ScenarioEntry& e : out) present = present || e == entry;
      if (!present) out.push_back(entry);
    }
    return out;
  }

  bool scenario_consistent(const SpatialScenario& scenario, int var_count) const override {
    CyctNetwork cn;
    cn.var_count = var_count;
    for (const ScenarioEntry& e : scenario) {
      if (e.vars.size() != 3) return false;
      cn.constraints.push_back(
          {e.vars[0], e.vars[1], e.vars[2], std::uint32_t{1} << e.atom});
    }
    return cyct_consistent(cn).has_value();
  }

  std::optional<int> scenario_atom(const SpatialScenario& scenario,
                                   const std::vector<int>& vars) const override {
    for (const ScenarioEntry& e : scenario)
      if (e.vars == vars) return e.atom;
    return std::nullopt;
  }
};

}  // namespace

const ConcreteDomain* find_domain(std::string_view name) {
  static const Rcc8Domain rcc8;
  static const CyctDomain cyct;
  if (name == "rcc8") return &rcc8;
  if (name == "cyct") return &cyct;
  return nullptr;
}

}  // namespace stir

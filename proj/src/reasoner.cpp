#include "stir/reasoner.hpp"

#include "stir/domain.hpp"
#include "stir/rcc8.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace stir {

namespace {

ConvexSet nonpositive_set() {
  return ConvexSet(Bound::neg_inf(), Bound::closed(Rat(0)));
}
ConvexSet nonnegative_set() {
  return ConvexSet(Bound::closed(Rat(0)), Bound::pos_inf());
}

std::string feature_var(const std::string& concept_name, const std::string& feature) {
  return concept_name + "." + feature;
}

// Union-find over string keys; the earliest-inserted member of a class is its
// representative, which keeps class naming deterministic.
class UnionFind {
 public:
  int add(const std::string& key) {
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(keys_.size());
    ids_.emplace(key, id);
    keys_.push_back(key);
    parent_.push_back(id);
    return id;
  }

  bool has(const std::string& key) const { return ids_.count(key) > 0; }
  int id(const std::string& key) const { return ids_.at(key); }
  const std::string& key(int id) const { return keys_[id]; }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
  }

  int size() const { return static_cast<int>(keys_.size()); }

 private:
  std::map<std::string, int> ids_;
  std::vector<std::string> keys_;
  std::vector<int> parent_;
};

bool has_complement(const std::set<Literal>& lits, std::string* name) {
  // Sorted by (name, positive): a complementary pair is adjacent.
  const Literal* prev = nullptr;
  for (const Literal& l : lits) {
    if (prev != nullptr && prev->name == l.name && prev->positive != l.positive) {
      if (name != nullptr) *name = l.name;
      return true;
    }
    prev = &l;
  }
  return false;
}

bool union_has_complement(const std::set<Literal>& a, const std::set<Literal>& b,
                          std::string* name) {
  std::set<Literal> u = a;
  u.insert(b.begin(), b.end());
  return has_complement(u, name);
}

std::set<std::string> features_used(const IntervalState& s) {
  std::set<std::string> out;
  for (const PredicateConcept& p : s.spatial)
    for (const std::string& f : p.features) out.insert(f);
  return out;
}

bool intervals_overlap(const Rat& b1, const Rat& e1, const Rat& b2, const Rat& e2) {
  Rat lo = std::max(b1, b2);
  Rat hi = std::min(e1, e2);
  return lo < hi;  // strictly 1-dimensional overlap
}

PartitionRelation realized_partition(const Rat& b1, const Rat& e1, const Rat& b2,
                                     const Rat& e2) {
  if (intervals_overlap(b1, e1, b2, e2)) return PartitionRelation::Intersects;
  if (e1 <= b2) return PartitionRelation::Precedes;
  return PartitionRelation::Follows;
}

}  // namespace

// ── Temporal layer ───────────────────────────────────────────────────────────

StpNetwork build_temporal_csp(const TBox& t, const std::vector<int>& choice) {
  StpNetwork net;
  for (const Axiom& a : t.axioms) net.add_interval(a.name);
  for (std::size_t k = 0; k < t.axioms.size(); ++k) {
    NormalizedAxiom na = normalize(t.axioms[k]);
    if (na.disjuncts.empty()) continue;  // unsatisfiable axiom; caller rejects
    const Disjunct& d = na.disjuncts.at(static_cast<std::size_t>(choice.at(k)));
    for (const RoleRestriction& r : d.roles)
      net.add_role(t.axioms[k].name, r.target, r.role);
  }
  return net;
}

IntersectsGraph intersects_graph(const StpNetwork& net) {
  IntersectsGraph g;
  std::vector<std::string> ivs = net.intervals();
  for (std::size_t i = 0; i < ivs.size(); ++i)
    for (std::size_t j = i + 1; j < ivs.size(); ++j) {
      std::set<PartitionRelation> rels = net.classify_pair(ivs[i], ivs[j]);
      if (rels.count(PartitionRelation::Intersects) > 0) {
        g.possible.insert({ivs[i], ivs[j]});
        if (rels.size() == 1) g.forced.insert({ivs[i], ivs[j]});
      }
    }
  return g;
}

std::vector<ConceptPair> entailed_subinterval_pairs(const StpNetwork& net) {
  std::vector<ConceptPair> out;
  const ConvexSet nonpos = nonpositive_set();
  const ConvexSet nonneg = nonnegative_set();
  std::vector<std::string> ivs = net.intervals();
  for (const std::string& i : ivs)
    for (const std::string& j : ivs) {
      if (i == j) continue;
      EndpointRole r = net.pair_role(i, j);
      // i ⊆ j in every solution iff j.b − i.b ≤ 0 and j.e − i.e ≥ 0 throughout.
      if (r.rbb.subset_of(nonpos) && r.ree.subset_of(nonneg))
        out.push_back({i, j});
    }
  return out;
}

// ── Homogeneity propagation ──────────────────────────────────────────────────

HomogeneityResult propagate_homogeneity(
    std::vector<IntervalState> states, const std::set<ConceptPair>& forced_intersects,
    const std::vector<ConceptPair>& subinterval_pairs) {
  std::map<std::string, std::set<Literal>> original;
  std::map<std::string, IntervalState*> by_name;
  for (IntervalState& s : states) {
    original[s.concept_name] = s.literals;
    by_name[s.concept_name] = &s;
  }

  // Literal inheritance downward.  Containment entailment is transitive in a
  // minimal network, so one pass over the original sets is complete.
  for (const auto& [sub, super] : subinterval_pairs) {
    auto dst = by_name.find(sub);
    auto src = original.find(super);
    if (dst == by_name.end() || src == original.end()) continue;
    dst->second->literals.insert(src->second.begin(), src->second.end());
  }

  // Feature-value classes: one value per (interval, feature); intersecting
  // intervals share the value, and sharing is transitive across chains.
  UnionFind uf;
  std::map<std::string, std::set<std::string>> used;
  for (const IntervalState& s : states) {
    used[s.concept_name] = features_used(s);
    for (const PredicateConcept& p : s.spatial)
      for (const std::string& f : p.features) uf.add(feature_var(s.concept_name, f));
  }
  for (const auto& [i, j] : forced_intersects) {
    auto ui = used.find(i), uj = used.find(j);
    if (ui == used.end() || uj == used.end()) continue;
    for (const std::string& g : ui->second)
      if (uj->second.count(g) > 0)
        uf.unite(uf.id(feature_var(i, g)), uf.id(feature_var(j, g)));
  }

  HomogeneityResult res;
  res.states = std::move(states);
  for (int v = 0; v < uf.size(); ++v)
    res.feature_class[uf.key(v)] = uf.key(uf.find(v));
  return res;
}

// ── Decision procedure ───────────────────────────────────────────────────────

namespace {

struct SpatialAssembly {
  std::vector<std::string> class_reps;  // network variable index → class rep
  SpatialNetwork network;
  struct Provenance {
    std::string concept_name;
    std::vector<std::string> features;
  };
  std::vector<Provenance> provenance;  // parallel to network.constraints
};

SpatialAssembly assemble_spatial(const std::vector<IntervalState>& states,
                                 const std::map<std::string, std::string>& feature_class) {
  SpatialAssembly a;
  std::map<std::string, int> rep_index;
  auto var_of = [&](const std::string& concept_name, const std::string& feature) {
    const std::string& rep = feature_class.at(feature_var(concept_name, feature));
    auto it = rep_index.find(rep);
    if (it != rep_index.end()) return it->second;
    int idx = static_cast<int>(a.class_reps.size());
    rep_index.emplace(rep, idx);
    a.class_reps.push_back(rep);
    return idx;
  };
  for (const IntervalState& s : states)
    for (const PredicateConcept& p : s.spatial) {
      SpatialConstraint c;
      for (const std::string& f : p.features) c.vars.push_back(var_of(s.concept_name, f));
      c.atoms = p.atoms;
      a.network.constraints.push_back(std::move(c));
      a.provenance.push_back({s.concept_name, p.features});
    }
  a.network.var_count = static_cast<int>(a.class_reps.size());
  return a;
}

// Cheap pairwise screen: intersect the atom sets of all constraints that land
// on the same class tuple; an empty intersection names a two-concept culprit
// long before the global consistency check runs.
std::optional<std::string> pairwise_prefilter(const SpatialAssembly& a,
                                              const ConcreteDomain& domain) {
  const bool binary = domain.arity() == 2;
  const std::uint32_t full =
      domain.atom_count() >= 32
          ? ~std::uint32_t{0}
          : (std::uint32_t{1} << domain.atom_count()) - 1;
  std::map<std::vector<int>, std::pair<std::uint32_t, int>> cells;  // tuple → (atoms, tightener)
  for (std::size_t idx = 0; idx < a.network.constraints.size(); ++idx) {
    const SpatialConstraint& c = a.network.constraints[idx];
    std::vector<int> key = c.vars;
    std::uint32_t atoms = c.atoms;
    if (binary) {
      if (key[0] == key[1]) continue;  // diagonal cells are the global check's job
      if (key[0] > key[1]) {
        std::swap(key[0], key[1]);
        atoms = converse_rel(Rcc8Rel{static_cast<std::uint8_t>(atoms)}).bits;
      }
    }
    auto [it, fresh] = cells.try_emplace(key, std::make_pair(full, -1));
    std::uint32_t next = it->second.first & atoms;
    if (next == 0) {
      int prev = it->second.second;
      const auto& culprit = a.provenance[idx];
      std::string other =
          prev >= 0 ? a.provenance[static_cast<std::size_t>(prev)].concept_name
                    : culprit.concept_name;
      std::string feats;
      for (const std::string& f : culprit.features)
        feats += (feats.empty() ? "" : ",") + f;
      return "spatial conflict " + other + "/" + culprit.concept_name + " on (" +
             feats + ")";
    }
    if (next != it->second.first) {
      it->second.first = next;
      it->second.second = static_cast<int>(idx);
    }
  }
  return std::nullopt;
}

struct Solver {
  const TBox& t;
  const DecideOptions& opts;
  const ConcreteDomain& domain;
  std::vector<NormalizedAxiom> normals;
  std::vector<std::vector<int>> disjunct_order;
  Verdict verdict;
  std::mt19937 rng;
  bool shuffle = false;

  Solver(const TBox& tbox, const DecideOptions& options)
      : t(tbox), opts(options), domain(*tbox.domain), rng(options.seed) {
    shuffle = options.seed != 0;
    for (const Axiom& a : t.axioms) {
      normals.push_back(normalize(a));
      std::vector<int> order(normals.back().disjuncts.size());
      std::iota(order.begin(), order.end(), 0);
      if (shuffle) std::shuffle(order.begin(), order.end(), rng);
      disjunct_order.push_back(std::move(order));
    }
  }

  void trace_branch(const std::vector<int>& choice,
                    const std::map<ConceptPair, PartitionRelation>& commitments,
                    const std::string& outcome) {
    if (!opts.trace) return;
    std::ostringstream os;
    os << "branch " << verdict.branches_explored << ": disjuncts {";
    for (std::size_t k = 0; k < choice.size(); ++k) {
      if (k != 0) os << " ";
      os << t.axioms[k].name << ":" << choice[k];
    }
    os << "} partitions {";
    bool first = true;
    for (const auto& [pair, rel] : commitments) {
      if (!first) os << " ";
      first = false;
      os << pair.first << "/" << pair.second << ":" << partition_name(rel);
    }
    os << "} -> " << outcome;
    opts.trace(os.str());
  }

  bool fail(const std::vector<int>& choice,
            const std::map<ConceptPair, PartitionRelation>& commitments,
            const std::string& conflict) {
    verdict.conflict = conflict;
    trace_branch(choice, commitments, conflict);
    return false;
  }

  std::string temporal_culprit(const StpNetwork& net) {
    std::vector<std::string> ivs = net.intervals();
    for (std::size_t i = 0; i < ivs.size(); ++i)
      for (std::size_t j = i; j < ivs.size(); ++j) {
        EndpointRole r = net.pair_role(ivs[i], ivs[j]);
        if (!r.any_empty()) continue;
        if (i == j) return "temporal conflict " + ivs[i] + " (empty endpoint window)";
        return "temporal conflict " + ivs[i] + "/" + ivs[j] +
               " (contradictory endpoint constraints)";
      }
    return "temporal conflict (endpoint network inconsistent)";
  }

  std::vector<IntervalState> make_states(const std::vector<int>& choice) const {
    std::vector<IntervalState> states;
    for (std::size_t k = 0; k < t.axioms.size(); ++k) {
      IntervalState s;
      s.concept_name = t.axioms[k].name;
      const Disjunct& d =
          normals[k].disjuncts.at(static_cast<std::size_t>(choice[k]));
      s.literals.insert(d.literals.begin(), d.literals.end());
      s.spatial = d.preds;
      states.push_back(std::move(s));
    }
    return states;
  }

  bool solve(const std::vector<int>& choice,
             std::map<ConceptPair, PartitionRelation> commitments) {
    ++verdict.branches_explored;

    StpNetwork net = build_temporal_csp(t, choice);
    for (const auto& [pair, rel] : commitments)
      net.add_role(pair.first, pair.second, partition_role(rel));
    if (!net.closure())
      return fail(choice, commitments, temporal_culprit(net));

    IntersectsGraph graph = intersects_graph(net);
    std::vector<ConceptPair> subpairs = entailed_subinterval_pairs(net);
    HomogeneityResult homo =
        propagate_homogeneity(make_states(choice), graph.forced, subpairs);

    for (const IntervalState& s : homo.states) {
      std::string p;
      if (has_complement(s.literals, &p))
        return fail(choice, commitments,
                    "propositional conflict " + s.concept_name + " on " + p);
    }
    std::map<std::string, const IntervalState*> by_name;
    for (const IntervalState& s : homo.states) by_name[s.concept_name] = &s;
    for (const auto& [i, j] : graph.forced) {
      std::string p;
      if (union_has_complement(by_name.at(i)->literals, by_name.at(j)->literals, &p))
        return fail(choice, commitments,
                    "propositional conflict " + i + "/" + j + " on " + p);
    }

    SpatialAssembly assembly = assemble_spatial(homo.states, homo.feature_class);
    if (std::optional<std::string> culprit = pairwise_prefilter(assembly, domain))
      return fail(choice, commitments, *culprit);
    std::optional<SpatialScenario> scenario = domain.consistent(assembly.network);
    if (!scenario)
      return fail(choice, commitments,
                  "spatial conflict: merged " + domain.name() +
                      " network over feature classes is inconsistent");

    std::map<EndpointVar, Rat> sol = net.extract_solution();
    auto begin_of = [&](const std::string& c) { return sol.at(EndpointVar::begin(c)); };
    auto end_of = [&](const std::string& c) { return sol.at(EndpointVar::end(c)); };

    // Candidate audit: homogeneity must hold on the pairs that actually
    // overlap in the extracted numbers.  Pairs already forced to INTERSECTS
    // were handled above; a violation on an undecided pair opens a lazy
    // partition branch instead of failing outright.
    for (std::size_t i = 0; i < t.axioms.size(); ++i)
      for (std::size_t j = i + 1; j < t.axioms.size(); ++j) {
        const std::string& ci = t.axioms[i].name;
        const std::string& cj = t.axioms[j].name;
        ConceptPair pair{ci, cj};
        if (graph.forced.count(pair) > 0 || commitments.count(pair) > 0) continue;
        if (!intervals_overlap(begin_of(ci), end_of(ci), begin_of(cj), end_of(cj)))
          continue;
        bool violated = false;
        std::string p;
        if (union_has_complement(by_name.at(ci)->literals, by_name.at(cj)->literals, &p))
          violated = true;
        if (!violated) {
          std::set<std::string> ui = features_used(*by_name.at(ci));
          std::set<std::string> uj = features_used(*by_name.at(cj));
          for (const std::string& g : ui)
            if (uj.count(g) > 0 && homo.feature_class.at(feature_var(ci, g)) !=
                                       homo.feature_class.at(feature_var(cj, g))) {
              violated = true;
              break;
            }
        }
        if (!violated) continue;

        trace_branch(choice, commitments,
                     "candidate overlaps undecided pair " + ci + "/" + cj +
                         "; branching");
        std::set<PartitionRelation> allowed = net.classify_pair(ci, cj);
        std::vector<PartitionRelation> order{PartitionRelation::Precedes,
                                             PartitionRelation::Intersects,
                                             PartitionRelation::Follows};
        if (shuffle) std::shuffle(order.begin(), order.end(), rng);
        bool any = false;
        for (PartitionRelation rel : order) {
          if (allowed.count(rel) == 0) continue;
          any = true;
          std::map<ConceptPair, PartitionRelation> next = commitments;
          next.emplace(pair, rel);
          if (solve(choice, std::move(next))) return true;
        }
        if (!any)
          return fail(choice, commitments,
                      "temporal conflict " + ci + "/" + cj + " (no relation allowed)");
        return false;  // children recorded their conflicts
      }

    verdict.witness = make_witness(choice, homo, assembly, *scenario, sol);
    trace_branch(choice, commitments, "sat");
    return true;
  }

  Witness make_witness(const std::vector<int>& choice, const HomogeneityResult& homo,
                       const SpatialAssembly& assembly, const SpatialScenario& scenario,
                       const std::map<EndpointVar, Rat>& sol) const {
    Witness w;
    w.domain = domain.name();
    for (std::size_t k = 0; k < t.axioms.size(); ++k) {
      const std::string& name = t.axioms[k].name;
      w.concepts.push_back(name);
      w.endpoints[name] = {sol.at(EndpointVar::begin(name)),
                           sol.at(EndpointVar::end(name))};
      const IntervalState& s = homo.states[k];
      w.literals[name] = std::vector<Literal>(s.literals.begin(), s.literals.end());
      w.disjuncts[name] = choice[k];
    }
    for (const std::string& rep : assembly.class_reps) {
      WitnessClass cls;
      cls.rep = rep;
      for (const auto& [member, r] : homo.feature_class)
        if (r == rep) cls.members.push_back(member);
      w.classes.push_back(std::move(cls));
    }
    for (const ScenarioEntry& e : scenario) {
      WitnessScenarioAtom atom;
      for (int v : e.vars)
        atom.vars.push_back(assembly.class_reps.at(static_cast<std::size_t>(v)));
      atom.atom = domain.atom_name_at(e.atom);
      w.scenario.push_back(std::move(atom));
    }
    for (std::size_t i = 0; i < t.axioms.size(); ++i)
      for (std::size_t j = i + 1; j < t.axioms.size(); ++j) {
        const std::string& ci = t.axioms[i].name;
        const std::string& cj = t.axioms[j].name;
        const auto& [bi, ei] = w.endpoints.at(ci);
        const auto& [bj, ej] = w.endpoints.at(cj);
        w.partitions.push_back({ci, cj, realized_partition(bi, ei, bj, ej)});
      }
    return w;
  }

  bool dfs(std::size_t k, std::vector<int>& choice) {
    if (k == normals.size()) return solve(choice, {});
    for (int idx : disjunct_order[k]) {
      choice[k] = idx;
      if (dfs(k + 1, choice)) return true;
    }
    return false;
  }

  Verdict run() {
    if (t.axioms.empty()) {
      verdict.sat = true;
      Witness w;
      w.domain = domain.name();
      verdict.witness = std::move(w);
      return std::move(verdict);
    }
    for (std::size_t k = 0; k < normals.size(); ++k)
      if (normals[k].disjuncts.empty()) {
        verdict.sat = false;
        verdict.conflict = "propositional conflict: " + normals[k].name +
                           " has no satisfiable disjunct";
        return std::move(verdict);
      }
    std::vector<int> choice(normals.size(), 0);
    verdict.sat = dfs(0, choice);
    if (verdict.sat)
      verdict.conflict.clear();
    else if (verdict.conflict.empty())
      verdict.conflict = "unsatisfiable (no branch succeeded)";
    if (!verdict.sat) verdict.witness.reset();
    return std::move(verdict);
  }
};

}  // namespace

Verdict decide(const TBox& t, const DecideOptions& opts) {
  if (t.domain == nullptr) {
    Verdict v;
    v.sat = false;
    v.conflict = "terminology has no concrete domain";
    return v;
  }
  Solver solver(t, opts);
  return solver.run();
}

// ── Independent witness checker ──────────────────────────────────────────────

namespace {

struct WitnessIndex {
  std::map<std::string, std::string> member_to_rep;
  std::map<std::string, int> rep_to_var;
  std::vector<ScenarioEntry> entries;
};

bool feature_suffix(const std::string& var, std::string* concept_name,
                    std::string* feature) {
  std::size_t dot = var.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= var.size()) return false;
  *concept_name = var.substr(0, dot);
  *feature = var.substr(dot + 1);
  return true;
}

}  // namespace

bool verify_witness(const TBox& t, const Witness& w) {
  if (t.domain == nullptr || w.domain != t.domain->name()) return false;
  const ConcreteDomain& domain = *t.domain;

  if (w.concepts.size() != t.axioms.size()) return false;
  if (w.endpoints.size() != t.axioms.size() || w.literals.size() != t.axioms.size() ||
      w.disjuncts.size() != t.axioms.size())
    return false;

  std::map<std::string, Disjunct> chosen;
  for (const Axiom& a : t.axioms) {
    auto ep = w.endpoints.find(a.name);
    if (ep == w.endpoints.end()) return false;
    if (!(ep->second.first < ep->second.second)) return false;  // durative

    auto lit = w.literals.find(a.name);
    if (lit == w.literals.end()) return false;
    std::set<Literal> litset(lit->second.begin(), lit->second.end());
    if (has_complement(litset, nullptr)) return false;

    auto dj = w.disjuncts.find(a.name);
    if (dj == w.disjuncts.end()) return false;
    std::vector<Disjunct> ds = to_dnf(a.rhs);
    if (dj->second < 0 || static_cast<std::size_t>(dj->second) >= ds.size())
      return false;
    const Disjunct& d = ds[static_cast<std::size_t>(dj->second)];
    for (const Literal& l : d.literals)
      if (litset.count(l) == 0) return false;
    chosen[a.name] = d;
  }

  // Endpoint roles, checked purely numerically.
  for (const Axiom& a : t.axioms) {
    const auto& [ib, ie] = w.endpoints.at(a.name);
    for (const RoleRestriction& r : chosen.at(a.name).roles) {
      auto target = w.endpoints.find(r.target);
      if (target == w.endpoints.end()) return false;
      const auto& [jb, je] = target->second;
      Rat dbb = jb - ib, dbe = je - ib, deb = jb - ie, dee = je - ie;
      if (!r.role.rbb.contains(dbb) || !r.role.rbe.contains(dbe) ||
          !r.role.reb.contains(deb) || !r.role.ree.contains(dee))
        return false;
    }
  }

  // Feature classes: well-formed, disjoint, feature-name-uniform.
  WitnessIndex idx;
  for (std::size_t c = 0; c < w.classes.size(); ++c) {
    const WitnessClass& cls = w.classes[c];
    std::string rep_concept, rep_feature;
    if (!feature_suffix(cls.rep, &rep_concept, &rep_feature)) return false;
    bool rep_listed = false;
    for (const std::string& m : cls.members) {
      std::string mc, mf;
      if (!feature_suffix(m, &mc, &mf)) return false;
      if (mf != rep_feature) return false;  // classes never mix feature names
      if (t.find_axiom(mc) == nullptr) return false;
      if (idx.member_to_rep.count(m) > 0) return false;  // classes are disjoint
      idx.member_to_rep[m] = cls.rep;
      if (m == cls.rep) rep_listed = true;
    }
    if (!rep_listed) return false;
    idx.rep_to_var[cls.rep] = static_cast<int>(c);
  }

  // Scenario entries over class representatives.
  for (const WitnessScenarioAtom& s : w.scenario) {
    if (static_cast<int>(s.vars.size()) != domain.arity()) return false;
    ScenarioEntry e;
    for (const std::string& v : s.vars) {
      auto it = idx.rep_to_var.find(v);
      if (it == idx.rep_to_var.end()) return false;
      e.vars.push_back(it->second);
    }
    std::optional<int> atom = domain.atom_index(s.atom);
    if (!atom) return false;
    e.atom = *atom;
    idx.entries.push_back(std::move(e));
  }
  if (!domain.scenario_consistent(idx.entries, static_cast<int>(w.classes.size())))
    return false;

  // Predicate concepts hold under the scenario.
  for (const Axiom& a : t.axioms) {
    for (const PredicateConcept& p : chosen.at(a.name).preds) {
      std::vector<int> vars;
      for (const std::string& f : p.features) {
        auto member = idx.member_to_rep.find(feature_var(a.name, f));
        if (member == idx.member_to_rep.end()) return false;
        vars.push_back(idx.rep_to_var.at(member->second));
      }
      std::optional<int> atom = domain.scenario_atom(idx.entries, vars);
      if (!atom) return false;
      if ((p.atoms & (std::uint32_t{1} << *atom)) == 0) return false;
    }
  }

  // Homogeneity on every pair that overlaps 1-dimensionally in the numbers:
  // complement-free joint literals; shared used features identified.
  for (std::size_t i = 0; i < t.axioms.size(); ++i)
    for (std::size_t j = i + 1; j < t.axioms.size(); ++j) {
      const std::string& ci = t.axioms[i].name;
      const std::string& cj = t.axioms[j].name;
      const auto& [bi, ei] = w.endpoints.at(ci);
      const auto& [bj, ej] = w.endpoints.at(cj);
      if (!intervals_overlap(bi, ei, bj, ej)) continue;
      std::set<Literal> li(w.literals.at(ci).begin(), w.literals.at(ci).end());
      std::set<Literal> lj(w.literals.at(cj).begin(), w.literals.at(cj).end());
      if (union_has_complement(li, lj, nullptr)) return false;
      std::set<std::string> ui, uj;
      for (const PredicateConcept& p : chosen.at(ci).preds)
        ui.insert(p.features.begin(), p.features.end());
      for (const PredicateConcept& p : chosen.at(cj).preds)
        uj.insert(p.features.begin(), p.features.end());
      for (const std::string& g : ui) {
        if (uj.count(g) == 0) continue;
        auto mi = idx.member_to_rep.find(feature_var(ci, g));
        auto mj = idx.member_to_rep.find(feature_var(cj, g));
        if (mi == idx.member_to_rep.end() || mj == idx.member_to_rep.end())
          return false;
        if (mi->second != mj->second) return false;
      }
    }

  // Partition choices list every pair once, matching the numbers.
  std::size_t n = t.axioms.size();
  if (w.partitions.size() != (n == 0 ? 0 : n * (n - 1) / 2)) return false;
  std::set<ConceptPair> seen;
  std::map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) order[t.axioms[i].name] = i;
  for (const WitnessPartition& p : w.partitions) {
    auto oi = order.find(p.first), oj = order.find(p.second);
    if (oi == order.end() || oj == order.end() || oi->second >= oj->second) return false;
    if (!seen.insert({p.first, p.second}).second) return false;
    const auto& [bi, ei] = w.endpoints.at(p.first);
    const auto& [bj, ej] = w.endpoints.at(p.second);
    if (realized_partition(bi, ei, bj, ej) != p.relation) return false;
  }
  return true;
}

}  // namespace stir

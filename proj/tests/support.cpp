#include "support.hpp"

#include "stir/domain.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stir::testsupport {

// ── Independent oracles ──────────────────────────────────────────────────────

AllenAtom classify_endpoint_configuration(int ib, int ie, int jb, int je) {
  if (ib >= ie || jb >= je) throw std::invalid_argument("intervals must be durative");
  if (ie < jb) return AllenAtom::Before;
  if (ie == jb) return AllenAtom::Meets;
  if (je < ib) return AllenAtom::After;
  if (je == ib) return AllenAtom::MetBy;
  // The intervals overlap 1-dimensionally from here on.
  if (ib == jb && ie == je) return AllenAtom::Equals;
  if (ib == jb) return ie < je ? AllenAtom::Starts : AllenAtom::StartedBy;
  if (ie == je) return ib > jb ? AllenAtom::Finishes : AllenAtom::FinishedBy;
  if (ib > jb && ie < je) return AllenAtom::During;
  if (ib < jb && ie > je) return AllenAtom::Contains;
  return ib < jb ? AllenAtom::Overlaps : AllenAtom::OverlappedBy;
}

Rcc8Atom disc_relation(const Disc& a, const Disc& b) {
  Rat diff = a.center - b.center;
  Rat d = diff < 0 ? Rat(-diff) : diff;
  Rat sum_r = a.radius + b.radius;
  Rat a_span = d + a.radius;  // how far disc a reaches past b's center
  Rat b_span = d + b.radius;
  if (d == 0 && a.radius == b.radius) return Rcc8Atom::EQ;
  if (a_span < b.radius) return Rcc8Atom::NTPP;
  if (a_span == b.radius) return Rcc8Atom::TPP;
  if (b_span < a.radius) return Rcc8Atom::NTPPi;
  if (b_span == a.radius) return Rcc8Atom::TPPi;
  if (d > sum_r) return Rcc8Atom::DC;
  if (d == sum_r) return Rcc8Atom::EC;
  return Rcc8Atom::PO;
}

int orientation_class_360(int from, int to) {
  int d = ((to - from) % 360 + 360) % 360;
  if (d == 0) return 0;
  if (d < 180) return 1;
  if (d == 180) return 2;
  return 3;
}

bool cyct_sample_sat(const CyctNetwork& net, int samples, std::mt19937& rng) {
  if (net.constraints.empty()) return true;
  std::uniform_int_distribution<int> deg(0, 359);
  std::vector<int> a(std::max(net.var_count, 1));
  for (int s = 0; s < samples; ++s) {
    for (auto& v : a) v = deg(rng);
    bool ok = true;
    for (const auto& c : net.constraints) {
      CyctAtom realized{static_cast<CycbAtom>(orientation_class_360(a[c.x], a[c.y])),
                        static_cast<CycbAtom>(orientation_class_360(a[c.y], a[c.z])),
                        static_cast<CycbAtom>(orientation_class_360(a[c.x], a[c.z]))};
      std::optional<int> idx = realizable_atom_index(realized);
      if (!idx || (c.atoms & (std::uint32_t{1} << *idx)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

namespace {

bool set_complement_free(const std::set<Literal>& s) {
  for (const auto& l : s)
    if (!l.positive && s.count(Literal{l.name, true})) return false;
  return true;
}

bool cross_complement_free(const std::set<Literal>& a, const std::set<Literal>& b) {
  for (const auto& l : a)
    if (b.count(Literal{l.name, !l.positive})) return false;
  return true;
}

// Checks one fully committed candidate: a disjunct per axiom plus a total
// coarse-relation assignment over all interval pairs.
bool oracle_check_total(const TBox& t, const std::vector<NormalizedAxiom>& normals,
                        const std::vector<int>& choice,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                        const std::vector<PartitionRelation>& sigma, const StpNetwork& base) {
  const ConcreteDomain& domain = *t.domain;
  const std::size_t n = t.axioms.size();

  StpNetwork net = base;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    net.add_role(t.axioms[pairs[p].first].name, t.axioms[pairs[p].second].name,
                 partition_role(sigma[p]));
  if (!net.closure()) return false;

  std::vector<std::set<Literal>> lits(n);
  std::vector<std::set<std::string>> used(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Disjunct& d = normals[k].disjuncts[static_cast<std::size_t>(choice[k])];
    lits[k].insert(d.literals.begin(), d.literals.end());
    for (const auto& pc : d.preds)
      for (const auto& f : pc.features) used[k].insert(f);
  }

  // Literal inheritance downward along entailed containments, to the fixpoint.
  const ConvexSet nonpos(Bound::neg_inf(), Bound::closed(Rat(0)));
  const ConvexSet nonneg(Bound::closed(Rat(0)), Bound::pos_inf());
  std::vector<std::pair<std::size_t, std::size_t>> inside;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      EndpointRole r = net.pair_role(t.axioms[i].name, t.axioms[j].name);
      if (r.rbb.subset_of(nonpos) && r.ree.subset_of(nonneg)) inside.emplace_back(i, j);
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [i, j] : inside) {
      std::size_t before = lits[i].size();
      lits[i].insert(lits[j].begin(), lits[j].end());
      if (lits[i].size() != before) changed = true;
    }
  }

  for (const auto& s : lits)
    if (!set_complement_free(s)) return false;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (sigma[p] != PartitionRelation::Intersects) continue;
    if (!cross_complement_free(lits[pairs[p].first], lits[pairs[p].second])) return false;
  }

  // Feature-value classes: iterative merging across intersecting pairs that
  // both use a feature, until nothing changes.
  std::map<std::string, int> cls;
  int next_class = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Disjunct& d = normals[k].disjuncts[static_cast<std::size_t>(choice[k])];
    for (const auto& pc : d.preds)
      for (const auto& f : pc.features) {
        std::string key = t.axioms[k].name + "." + f;
        if (!cls.count(key)) cls[key] = next_class++;
      }
  }
  changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (sigma[p] != PartitionRelation::Intersects) continue;
      const std::size_t i = pairs[p].first, j = pairs[p].second;
      for (const auto& f : used[i]) {
        if (!used[j].count(f)) continue;
        int a = cls[t.axioms[i].name + "." + f];
        int b = cls[t.axioms[j].name + "." + f];
        if (a == b) continue;
        const int lo = std::min(a, b), hi = std::max(a, b);
        for (auto& [key, c] : cls)
          if (c == hi) c = lo;
        changed = true;
      }
    }
  }

  // One merged constraint network over dense class ids.
  std::map<int, int> dense;
  SpatialNetwork sn;
  for (std::size_t k = 0; k < n; ++k) {
    const Disjunct& d = normals[k].disjuncts[static_cast<std::size_t>(choice[k])];
    for (const auto& pc : d.preds) {
      SpatialConstraint c;
      for (const auto& f : pc.features) {
        const int cl = cls[t.axioms[k].name + "." + f];
        auto it = dense.find(cl);
        if (it == dense.end()) it = dense.emplace(cl, sn.var_count++).first;
        c.vars.push_back(it->second);
      }
      c.atoms = pc.atoms;
      sn.constraints.push_back(std::move(c));
    }
  }
  return domain.consistent(sn).has_value();
}

}  // namespace

bool oracle_tbox_sat(const TBox& t) {
  if (!t.domain) return false;
  const std::size_t n = t.axioms.size();
  std::vector<NormalizedAxiom> normals;
  normals.reserve(n);
  for (const auto& a : t.axioms) normals.push_back(normalize(a));
  for (const auto& na : normals)
    if (na.disjuncts.empty()) return false;
  if (n == 0) return true;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<int> choice(n, 0);
  std::function<bool(std::size_t)> pick = [&](std::size_t k) -> bool {
    if (k == n) {
      StpNetwork base = build_temporal_csp(t, choice);
      StpNetwork probe = base;
      if (!probe.closure()) return false;
      // Enumerate only coarse relations the endpoint network does not already
      // exclude; excluded ones would just fail the closure below.
      std::vector<std::vector<PartitionRelation>> allowed(pairs.size());
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto s =
            probe.classify_pair(t.axioms[pairs[p].first].name, t.axioms[pairs[p].second].name);
        allowed[p].assign(s.begin(), s.end());
        if (allowed[p].empty()) return false;
      }
      std::vector<PartitionRelation> sigma(pairs.size(), PartitionRelation::Precedes);
      std::function<bool(std::size_t)> assign = [&](std::size_t p) -> bool {
        if (p == pairs.size())
          return oracle_check_total(t, normals, choice, pairs, sigma, base);
        for (PartitionRelation rel : allowed[p]) {
          sigma[p] = rel;
          if (assign(p + 1)) return true;
        }
        return false;
      };
      return assign(0);
    }
    for (std::size_t d = 0; d < normals[k].disjuncts.size(); ++d) {
      choice[k] = static_cast<int>(d);
      if (pick(k + 1)) return true;
    }
    return false;
  };
  return pick(0);
}

// ── Generators ───────────────────────────────────────────────────────────────

ConvexSet random_quarter_set(std::mt19937& rng) {
  auto q = [&](int lo, int hi) {
    return make_rat(std::uniform_int_distribution<int>(lo, hi)(rng), 4);
  };
  switch (std::uniform_int_distribution<int>(0, 9)(rng)) {
    case 0:
      return ConvexSet::universal();
    case 1:
      return ConvexSet::singleton(q(-16, 16));
    case 2:
    case 3: {
      Rat v = q(-16, 16);
      return ConvexSet(rng() % 2 ? Bound::open(v) : Bound::closed(v), Bound::pos_inf());
    }
    case 4:
    case 5: {
      Rat v = q(-16, 16);
      return ConvexSet(Bound::neg_inf(), rng() % 2 ? Bound::open(v) : Bound::closed(v));
    }
    default: {
      Rat a = q(-16, 16), b = q(-16, 16);
      if (a > b) std::swap(a, b);
      if (a == b) return ConvexSet::singleton(a);
      return ConvexSet(rng() % 2 ? Bound::open(a) : Bound::closed(a),
                       rng() % 2 ? Bound::open(b) : Bound::closed(b));
    }
  }
}

PlantedStp random_planted_stp(std::mt19937& rng, int max_intervals) {
  PlantedStp out;
  const int n = std::uniform_int_distribution<int>(2, std::max(2, max_intervals))(rng);
  std::uniform_int_distribution<int> pos(-16, 16);  // quarters
  std::uniform_int_distribution<int> dur(1, 12);    // quarters
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) {
    std::string id = "I" + std::to_string(k + 1);
    names.push_back(id);
    out.net.add_interval(id);
    Rat b = make_rat(pos(rng), 4);
    Rat e = b + make_rat(dur(rng), 4);
    out.planted[EndpointVar::begin(id)] = b;
    out.planted[EndpointVar::end(id)] = e;
  }
  // A random convex set guaranteed to contain delta.
  auto around = [&](const Rat& delta) -> ConvexSet {
    auto margin = [&]() {
      return make_rat(std::uniform_int_distribution<int>(0, 8)(rng), 4);
    };
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
      case 0:
        return ConvexSet::singleton(delta);
      case 1:
        return ConvexSet::universal();
      case 2: {
        Rat v = margin();
        Rat hi = delta + v;
        return ConvexSet(Bound::neg_inf(),
                         (rng() % 2 && v != 0) ? Bound::open(hi) : Bound::closed(hi));
      }
      case 3: {
        Rat u = margin();
        Rat lo = delta - u;
        return ConvexSet((rng() % 2 && u != 0) ? Bound::open(lo) : Bound::closed(lo),
                         Bound::pos_inf());
      }
      default: {
        Rat u = margin(), v = margin();
        Rat lo = delta - u, hi = delta + v;
        return ConvexSet((rng() % 2 && u != 0) ? Bound::open(lo) : Bound::closed(lo),
                         (rng() % 2 && v != 0) ? Bound::open(hi) : Bound::closed(hi));
      }
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || rng() % 2) continue;
      const Rat& ib = out.planted.at(EndpointVar::begin(names[i]));
      const Rat& ie = out.planted.at(EndpointVar::end(names[i]));
      const Rat& jb = out.planted.at(EndpointVar::begin(names[j]));
      const Rat& je = out.planted.at(EndpointVar::end(names[j]));
      EndpointRole r{around(Rat(jb - ib)), around(Rat(je - ib)), around(Rat(jb - ie)),
                     around(Rat(je - ie))};
      out.net.add_role(names[i], names[j], r);
      out.roles.emplace_back(names[i], names[j], r);
    }
  return out;
}

void inject_strict_zero_cycle(StpNetwork& net, std::mt19937& rng) {
  const auto vars = net.variables();
  if (vars.size() < 2) throw std::invalid_argument("need at least two variables");
  std::vector<std::size_t> idx(vars.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::shuffle(idx.begin(), idx.end(), rng);
  const std::size_t k = std::min<std::size_t>(vars.size(), 3 + rng() % 4);
  // Lower bounds around the cycle sum to zero; one of them is strict, so the
  // telescoping sum of differences would have to be positive — impossible.
  std::vector<Rat> w(k);
  Rat sum(0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    w[i] = make_rat(static_cast<int>(rng() % 17) - 8, 4);
    sum += w[i];
  }
  w[k - 1] = Rat(-sum);
  const std::size_t strict_at = rng() % k;
  for (std::size_t i = 0; i < k; ++i) {
    const EndpointVar& u = vars[idx[i]];
    const EndpointVar& v = vars[idx[(i + 1) % k]];
    net.add_edge(u, v,
                 ConvexSet(i == strict_at ? Bound::open(w[i]) : Bound::closed(w[i]),
                           Bound::pos_inf()));
  }
}

TBox random_tbox(std::mt19937& rng, int max_concepts) {
  TBox t;
  const bool rcc = std::uniform_int_distribution<int>(0, 3)(rng) != 0;
  t.domain = find_domain(rcc ? "rcc8" : "cyct");
  const int n = std::uniform_int_distribution<int>(2, std::max(2, max_concepts))(rng);
  const std::array<const char*, 3> feats{"g1", "g2", "g3"};
  const std::array<const char*, 3> prims{"p1", "p2", "p3"};
  // Overlap-forcing atoms dominate so homogeneity interactions actually occur.
  const std::array<AllenAtom, 6> overlapish{AllenAtom::Overlaps,  AllenAtom::During,
                                            AllenAtom::Starts,    AllenAtom::Finishes,
                                            AllenAtom::Equals,    AllenAtom::Contains};
  for (int k = 0; k < n; ++k) {
    std::vector<Concept> disjuncts;
    const int dn = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int d = 0; d < dn; ++d) {
      std::vector<Concept> units;
      const int nl = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int x = 0; x < nl; ++x)
        units.push_back(Concept::literal(prims[rng() % 3], rng() % 2 == 0));
      const int np = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int x = 0; x < np; ++x) {
        std::vector<std::string> fs;
        if (rcc) {
          int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
          if (a == b && rng() % 8 != 0) b = (b + 1) % 3;
          fs = {feats[a], feats[b]};
        } else {
          std::array<int, 3> pickf{0, 1, 2};
          std::shuffle(pickf.begin(), pickf.end(), rng);
          if (rng() % 8 == 0) pickf[1] = pickf[0];
          fs = {feats[pickf[0]], feats[pickf[1]], feats[pickf[2]]};
        }
        std::uint32_t atoms = 0;
        const int na = 1 + static_cast<int>(rng() % 2);
        for (int x2 = 0; x2 < na; ++x2)
          atoms |= std::uint32_t{1} << (rng() % t.domain->atom_count());
        units.push_back(Concept::predicate(std::move(fs), atoms));
      }
      const int nr = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int x = 0; x < nr; ++x) {
        const int target = static_cast<int>(rng() % n);
        const EndpointRole role = rng() % 3 == 0
                                      ? translate_atom(static_cast<AllenAtom>(rng() % 13))
                                      : translate_atom(overlapish[rng() % 6]);
        units.push_back(Concept::exists_role(role, "C" + std::to_string(target + 1)));
      }
      if (units.empty()) units.push_back(Concept::top());
      disjuncts.push_back(units.size() == 1 ? units[0] : Concept::conj(std::move(units)));
    }
    Axiom ax;
    ax.name = "C" + std::to_string(k + 1);
    ax.rhs = disjuncts.size() == 1 ? disjuncts[0] : Concept::disj(std::move(disjuncts));
    t.axioms.push_back(std::move(ax));
  }
  return t;
}

// ── Process helper ───────────────────────────────────────────────────────────

ProcResult run_process(const std::string& command) {
  ProcResult r;
  const auto start = std::chrono::steady_clock::now();
  const std::string cmd = command + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace stir::testsupport

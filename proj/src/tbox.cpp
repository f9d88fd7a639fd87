#include "stir/tbox.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace stir {

// ── Concept factories ────────────────────────────────────────────────────────

Concept Concept::bottom() {
  Concept c;
  c.kind = Kind::Bottom;
  return c;
}

Concept Concept::literal(std::string name, bool positive) {
  Concept c;
  c.kind = Kind::Lit;
  c.lit = Literal{std::move(name), positive};
  return c;
}

Concept Concept::predicate(std::vector<std::string> features, std::uint32_t atoms) {
  Concept c;
  c.kind = Kind::Pred;
  c.pred = PredicateConcept{std::move(features), atoms};
  return c;
}

Concept Concept::exists_role(EndpointRole role, std::string target) {
  Concept c;
  c.kind = Kind::Exists;
  c.exists = RoleRestriction{std::move(role), std::move(target)};
  return c;
}

Concept Concept::conj(std::vector<Concept> kids) {
  Concept c;
  c.kind = Kind::And;
  c.kids = std::move(kids);
  return c;
}

Concept Concept::disj(std::vector<Concept> kids) {
  Concept c;
  c.kind = Kind::Or;
  c.kids = std::move(kids);
  return c;
}

const Axiom* TBox::find_axiom(std::string_view name) const {
  for (const Axiom& a : axioms)
    if (a.name == name) return &a;
  return nullptr;
}

std::string Diagnostic::str() const {
  std::ostringstream os;
  os << line << ":" << col << ": " << message;
  return os.str();
}

// ── Validation ───────────────────────────────────────────────────────────────

namespace {

void walk_validate(const Concept& c, const Axiom& owner, const TBox& t,
                   std::vector<Diagnostic>& out) {
  switch (c.kind) {
    case Concept::Kind::Top:
    case Concept::Kind::Bottom:
      return;
    case Concept::Kind::Lit:
      if (c.lit.name.empty() || c.lit.name[0] != 'p')
        out.push_back({owner.line, owner.col,
                       "in " + owner.name + ": primitive concept name '" +
                           c.lit.name + "' must start with 'p'"});
      return;
    case Concept::Kind::Pred: {
      if (t.domain != nullptr &&
          static_cast<int>(c.pred.features.size()) != t.domain->arity())
        out.push_back({owner.line, owner.col,
                       "in " + owner.name + ": predicate arity " +
                           std::to_string(c.pred.features.size()) +
                           " does not match domain " + t.domain->name()});
      for (const std::string& f : c.pred.features)
        if (f.empty() || f[0] != 'g')
          out.push_back({owner.line, owner.col,
                         "in " + owner.name + ": feature name '" + f +
                             "' must start with 'g'"});
      if (c.pred.atoms == 0)
        out.push_back({owner.line, owner.col,
                       "in " + owner.name + ": predicate has an empty atom set"});
      return;
    }
    case Concept::Kind::Exists: {
      if (t.find_axiom(c.exists.target) == nullptr)
        out.push_back({owner.line, owner.col,
                       "in " + owner.name + ": role target " + c.exists.target +
                           " is not defined"});
      if (c.exists.role.any_empty())
        out.push_back({owner.line, owner.col,
                       "in " + owner.name + ": role has an empty component"});
      return;
    }
    case Concept::Kind::And:
    case Concept::Kind::Or:
      for (const Concept& k : c.kids) walk_validate(k, owner, t, out);
      return;
  }
}

}  // namespace

std::vector<Diagnostic> validate(const TBox& t) {
  std::vector<Diagnostic> out;
  if (t.domain == nullptr) {
    out.push_back({0, 0, "terminology has no concrete domain"});
    return out;
  }
  for (std::size_t i = 0; i < t.axioms.size(); ++i) {
    const Axiom& a = t.axioms[i];
    if (a.name.empty() || !std::isupper(static_cast<unsigned char>(a.name[0])))
      out.push_back({a.line, a.col,
                     "defined concept name '" + a.name +
                         "' must start with an uppercase letter"});
    for (std::size_t j = 0; j < i; ++j)
      if (t.axioms[j].name == a.name) {
        out.push_back({a.line, a.col, "duplicate definition " + a.name});
        break;
      }
  }
  for (const Axiom& a : t.axioms) walk_validate(a.rhs, a, t, out);
  return out;
}

// ── Canonical printer ────────────────────────────────────────────────────────

namespace {

// Empty components print as "(0,0)" (an empty interval in grammar syntax) so
// that even degenerate ASTs stay re-parseable.
std::string print_interval_set(const ConvexSet& s) {
  if (s.is_empty()) return "(0,0)";
  return s.str();
}

std::string print_role(const EndpointRole& r) {
  return "<" + print_interval_set(r.rbb) + "," + print_interval_set(r.rbe) +
         "," + print_interval_set(r.reb) + "," + print_interval_set(r.ree) + ">";
}

std::string print_atom_set(std::uint32_t atoms, const ConcreteDomain& domain) {
  std::vector<std::string> names;
  for (int i = 0; i < domain.atom_count(); ++i)
    if (atoms & (std::uint32_t{1} << i)) names.push_back(domain.atom_name_at(i));
  if (names.size() == 1) return names.front();
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != 0) out += ",";
    out += names[i];
  }
  return out + "}";
}

void print_rec(const Concept& c, const ConcreteDomain& domain, bool parenthesize,
               std::string& out) {
  switch (c.kind) {
    case Concept::Kind::Top:
      out += "top";
      return;
    case Concept::Kind::Bottom:
      out += "bottom";
      return;
    case Concept::Kind::Lit:
      out += c.lit.str();
      return;
    case Concept::Kind::Pred: {
      out += "some(";
      for (std::size_t i = 0; i < c.pred.features.size(); ++i) {
        if (i != 0) out += ",";
        out += c.pred.features[i];
      }
      out += ").";
      out += print_atom_set(c.pred.atoms, domain);
      return;
    }
    case Concept::Kind::Exists:
      out += "exists " + print_role(c.exists.role) + " . " + c.exists.target;
      return;
    case Concept::Kind::And:
    case Concept::Kind::Or: {
      if (parenthesize) out += "(";
      const char* sep = (c.kind == Concept::Kind::And) ? " and " : " or ";
      for (std::size_t i = 0; i < c.kids.size(); ++i) {
        if (i != 0) out += sep;
        // Children that are themselves and/or must be parenthesized: the
        // parser folds unparenthesized chains into a single node, so bare
        // nesting would not survive a round trip.
        print_rec(c.kids[i], domain, true, out);
      }
      if (parenthesize) out += ")";
      return;
    }
  }
}

}  // namespace

std::string print_concept(const Concept& c, const ConcreteDomain& domain) {
  std::string out;
  print_rec(c, domain, false, out);
  return out;
}

std::string print_tbox(const TBox& t) {
  std::string out = "domain " + t.domain->name() + " .\n\n";
  for (const Axiom& a : t.axioms)
    out += a.name + " := " + print_concept(a.rhs, *t.domain) + " .\n";
  return out;
}

// ── Disjunctive normal form ──────────────────────────────────────────────────

std::vector<Disjunct> to_dnf(const Concept& c) {
  switch (c.kind) {
    case Concept::Kind::Top:
      return {Disjunct{}};
    case Concept::Kind::Bottom:
      return {};
    case Concept::Kind::Lit: {
      Disjunct d;
      d.literals.push_back(c.lit);
      return {std::move(d)};
    }
    case Concept::Kind::Pred: {
      Disjunct d;
      d.preds.push_back(c.pred);
      return {std::move(d)};
    }
    case Concept::Kind::Exists: {
      Disjunct d;
      d.roles.push_back(c.exists);
      return {std::move(d)};
    }
    case Concept::Kind::Or: {
      std::vector<Disjunct> out;
      for (const Concept& k : c.kids) {
        std::vector<Disjunct> sub = to_dnf(k);
        out.insert(out.end(), std::make_move_iterator(sub.begin()),
                   std::make_move_iterator(sub.end()));
      }
      return out;
    }
    case Concept::Kind::And: {
      std::vector<Disjunct> acc = {Disjunct{}};
      for (const Concept& k : c.kids) {
        std::vector<Disjunct> sub = to_dnf(k);
        std::vector<Disjunct> next;
        next.reserve(acc.size() * sub.size());
        for (const Disjunct& left : acc)
          for (const Disjunct& right : sub) {
            Disjunct merged = left;
            merged.literals.insert(merged.literals.end(), right.literals.begin(),
                                   right.literals.end());
            merged.preds.insert(merged.preds.end(), right.preds.begin(),
                                right.preds.end());
            merged.roles.insert(merged.roles.end(), right.roles.begin(),
                                right.roles.end());
            next.push_back(std::move(merged));
          }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

NormalizedAxiom normalize(const Axiom& a) {
  return NormalizedAxiom{a.name, to_dnf(a.rhs)};
}

}  // namespace stir

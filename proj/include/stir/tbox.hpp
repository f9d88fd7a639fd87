#pragma once

// ── Terminology model ────────────────────────────────────────────────────────
//
// Abstract syntax for interval terminologies: axioms `Name := concept .` over
// a single concrete domain declared in the header line.  Concepts are built
// from top/bottom, primitive literals (negation on primitives only),
// predicate concepts over concrete features, existential endpoint-role
// restrictions targeting defined concepts, and and/or.
//
// The concrete syntax (see the parser) is whitespace-insensitive with `#`
// comments; Allen atom names are accepted as role sugar and expanded to their
// endpoint translation at parse time, so the AST holds only EndpointRoles.

#include "stir/allen.hpp"
#include "stir/domain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stir {

struct Literal {
  std::string name;  // primitive concept name
  bool positive = true;

  auto operator<=>(const Literal&) const = default;
  std::string str() const { return positive ? name : "not " + name; }
};

struct PredicateConcept {
  std::vector<std::string> features;
  std::uint32_t atoms = 0;  // bitmask over the TBox domain's atom order

  bool operator==(const PredicateConcept&) const = default;
};

struct RoleRestriction {
  EndpointRole role;
  std::string target;  // defined concept name

  bool operator==(const RoleRestriction&) const = default;
};

struct Concept {
  enum class Kind { Top, Bottom, Lit, Pred, Exists, And, Or };

  Kind kind = Kind::Top;
  Literal lit;              // Kind::Lit
  PredicateConcept pred;    // Kind::Pred
  RoleRestriction exists;   // Kind::Exists
  std::vector<Concept> kids;  // Kind::And / Kind::Or (always ≥ 2 children)

  static Concept top() { return {}; }
  static Concept bottom();
  static Concept literal(std::string name, bool positive = true);
  static Concept predicate(std::vector<std::string> features, std::uint32_t atoms);
  static Concept exists_role(EndpointRole role, std::string target);
  static Concept conj(std::vector<Concept> kids);
  static Concept disj(std::vector<Concept> kids);

  bool operator==(const Concept&) const = default;
};

struct Axiom {
  std::string name;
  Concept rhs;
  int line = 0, col = 0;  // of the defining occurrence; not part of identity

  friend bool operator==(const Axiom& a, const Axiom& b) {
    return a.name == b.name && a.rhs == b.rhs;
  }
};

struct TBox {
  const ConcreteDomain* domain = nullptr;
  std::vector<Axiom> axioms;

  const Axiom* find_axiom(std::string_view name) const;
  bool operator==(const TBox&) const = default;
};

struct Diagnostic {
  int line = 0, col = 0;
  std::string message;

  std::string str() const;
};

struct ParseResult {
  std::optional<TBox> tbox;
  std::vector<Diagnostic> errors;  // non-empty iff !tbox
};

ParseResult parse_tbox(std::string_view text);

// Empty iff the TBox is well-formed: unique axiom names, every role target
// defined, primitive/defined namespaces disjoint, predicate arities matching
// the domain, and no empty role component.
std::vector<Diagnostic> validate(const TBox& t);

// Canonical re-parseable concrete syntax.  parse(print(t)) == t.
std::string print_tbox(const TBox& t);
std::string print_concept(const Concept& c, const ConcreteDomain& domain);

// ── Disjunctive normal form ──────────────────────────────────────────────────

struct Disjunct {
  std::vector<Literal> literals;
  std::vector<PredicateConcept> preds;
  std::vector<RoleRestriction> roles;

  bool operator==(const Disjunct&) const = default;
};

// Distributes and over or; drops top; a disjunct containing bottom is pruned.
// The empty list means the concept is unsatisfiable; a disjunct with no
// leaves at all (from `top`) is trivially satisfiable.
std::vector<Disjunct> to_dnf(const Concept& c);

struct NormalizedAxiom {
  std::string name;
  std::vector<Disjunct> disjuncts;  // empty = always-unsatisfiable axiom
};

NormalizedAxiom normalize(const Axiom& a);

}  // namespace stir

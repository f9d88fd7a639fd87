#pragma once

// ── Convex subsets of the rational line ─────────────────────────────────────
//
// ConvexSet is the value type for every quantitative constraint in the
// system: an interval with independently open or closed endpoints, possibly
// half-infinite, possibly a single point, possibly empty.  The solver's
// correctness hangs on strictness being tracked exactly:
//
//   * intersect keeps the tighter of two equal-valued bounds (strict wins),
//   * sum (Minkowski) produces a strict bound whenever either operand's
//     bound is strict or infinite,
//   * Empty is canonical — every empty result compares equal to every other.
//
// Infinite bounds are always strict; the constructors normalize.

#include "stir/rational.hpp"

#include <optional>
#include <string>

namespace stir {

struct Bound {
  enum Kind { NegInf, Finite, PosInf };

  Kind kind = Finite;
  Rat value;  // meaningful only when kind == Finite
  bool strict = false;

  static Bound neg_inf() { return {NegInf, Rat(0), true}; }
  static Bound pos_inf() { return {PosInf, Rat(0), true}; }
  static Bound closed(Rat v) { return {Finite, std::move(v), false}; }
  static Bound open(Rat v) { return {Finite, std::move(v), true}; }

  bool infinite() const { return kind != Finite; }
  bool operator==(const Bound& o) const;
};

class ConvexSet {
 public:
  ConvexSet();                    // universal (-inf, +inf)
  ConvexSet(Bound lo, Bound hi);  // normalizes; may come out empty

  static ConvexSet empty();
  static ConvexSet universal();
  static ConvexSet singleton(Rat v);
  static ConvexSet positive();  // (0, +inf)
  static ConvexSet negative();  // (-inf, 0)

  bool is_empty() const { return empty_; }
  bool is_universal() const;
  bool is_singleton() const;

  // Preconditions: !is_empty().
  const Bound& lo() const;
  const Bound& hi() const;

  bool contains(const Rat& v) const;
  bool subset_of(const ConvexSet& other) const;

  bool operator==(const ConvexSet& o) const;

  // Textual form used by the grammar and all printers: "[a,b]", "(a,b]",
  // "(-inf,b)", "{a}" for singletons, "(-inf,+inf)" for the universal set,
  // "empty" for the empty set.
  std::string str() const;

 private:
  bool empty_ = false;
  Bound lo_;
  Bound hi_;
};

ConvexSet intersect(const ConvexSet& a, const ConvexSet& b);
// Minkowski sum {x + y | x in a, y in b}; empty absorbs.
ConvexSet sum(const ConvexSet& a, const ConvexSet& b);
// Pointwise negation {-x | x in a}.
ConvexSet negate(const ConvexSet& a);

// Parses the textual forms accepted by the grammar: "[a,b]", "(a,b)",
// "[a,b)", "(a,b]", "-inf"/"+inf" endpoints (any bracket style; normalized
// to strict), and the singleton sugar "{a}".  Whitespace-insensitive.
std::optional<ConvexSet> parse_convex(std::string_view text);

}  // namespace stir

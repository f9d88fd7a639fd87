#pragma once

// ── RCC8 relation algebra ────────────────────────────────────────────────────
//
// The eight topological base relations, relations as atom bitsets, converse,
// composition, and consistency of binary constraint networks.  Composition is
// a transcription of the standard table; the algebraic-law tests (identity,
// composition–converse) and disc-configuration spot checks lock it down.
// Atomic networks are decided by path consistency alone; disjunctive networks
// by chronological backtracking with smallest-relation-first pair selection
// and atoms tried in declaration order, so scenarios are deterministic.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stir {

enum class Rcc8Atom : std::uint8_t { DC, EC, PO, TPP, NTPP, TPPi, NTPPi, EQ };

inline constexpr int kRcc8AtomCount = 8;

// Atom set as a bitmask; bit i = atom with enum value i.
struct Rcc8Rel {
  std::uint8_t bits = 0;

  static Rcc8Rel none() { return {0}; }
  static Rcc8Rel full() { return {0xFF}; }
  static Rcc8Rel of(Rcc8Atom a) { return {static_cast<std::uint8_t>(1u << static_cast<int>(a))}; }

  bool empty() const { return bits == 0; }
  bool contains(Rcc8Atom a) const { return bits & (1u << static_cast<int>(a)); }
  int count() const { return __builtin_popcount(bits); }
  Rcc8Rel with(Rcc8Atom a) const { return {static_cast<std::uint8_t>(bits | of(a).bits)}; }

  friend Rcc8Rel operator&(Rcc8Rel a, Rcc8Rel b) { return {static_cast<std::uint8_t>(a.bits & b.bits)}; }
  friend Rcc8Rel operator|(Rcc8Rel a, Rcc8Rel b) { return {static_cast<std::uint8_t>(a.bits | b.bits)}; }
  bool operator==(const Rcc8Rel&) const = default;

  std::string str() const;  // "{EC,PO}"
};

const char* rcc8_atom_name(Rcc8Atom a);
std::optional<Rcc8Atom> rcc8_atom_from_name(std::string_view name);

Rcc8Atom rcc8_converse(Rcc8Atom a);
Rcc8Rel converse_rel(Rcc8Rel r);

Rcc8Rel compose(Rcc8Atom a, Rcc8Atom b);
Rcc8Rel compose(Rcc8Rel a, Rcc8Rel b);

// Binary constraint network over variables 0..n-1.  Constraints are kept
// converse-normalized: rel(j,i) == converse_rel(rel(i,j)), rel(i,i) ⊆ {EQ}.
class Rcc8Network {
 public:
  explicit Rcc8Network(std::size_t n);

  std::size_t size() const { return n_; }
  // Intersects (i,j) with r (and (j,i) with its converse).  i == j allowed:
  // intersects the self-relation with r (anything without EQ empties it).
  void restrict(std::size_t i, std::size_t j, Rcc8Rel r);
  Rcc8Rel rel(std::size_t i, std::size_t j) const { return grid_[i * n_ + j]; }

  // Refines to the path-consistent fixpoint; false iff some relation empties.
  bool path_consistency();

  bool all_atomic() const;

 private:
  std::size_t n_;
  std::vector<Rcc8Rel> grid_;
};

// Backtracking refinement to a consistent atomic network (scenario).
// For already-atomic networks this is path consistency alone.
std::optional<Rcc8Network> rcc8_consistent(const Rcc8Network& net);

}  // namespace stir

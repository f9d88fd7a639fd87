#pragma once

// ── Cyclic-orientation algebras CYC_b and CYC_t ─────────────────────────────
//
// Orientations of the plane modeled as points on the circle, stored as exact
// rational fractions of a full turn in [0,1).  The binary atoms classify the
// anticlockwise angle from x to y: e at 0, l in (0,1/2), o at 1/2, r in
// (1/2,1).  A ternary atom b1b2b3 over (x,y,z) holds iff b1 classifies the
// x→y angle, b2 the y→z angle and b3 the x→z angle; exactly 24 of the 64
// letter triples are realizable.
//
// There is no composition table here: consistency of a ternary network is
// decided by qualitative placement search.  Variables are placed one at a
// time, branching over coinciding with an existing placement, being opposite
// to one, or sitting at the midpoint of an open arc bounded by existing
// placements and their antipodes.  Atom truth depends only on which of those
// cells a point occupies, so midpoint representatives are exhaustive.

#include "stir/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stir {

enum class CycbAtom : std::uint8_t { E, L, O, R };

struct CyctAtom {
  CycbAtom b1, b2, b3;

  bool operator==(const CyctAtom&) const = default;
  std::string str() const;  // "lll", "eoo", ...
};

std::optional<CyctAtom> cyct_atom_from_name(std::string_view name);

// Value reduced into [0,1) turns.
Rat turn_mod1(const Rat& t);

// The class of the anticlockwise angle from `from` to `to`.
CycbAtom cycb_class(const Rat& from, const Rat& to);
bool cycb_holds(CycbAtom a, const Rat& theta_x, const Rat& theta_y);
bool cyct_holds(const CyctAtom& t, const Rat& x, const Rat& y, const Rat& z);

// The 24 realizable atoms in (b1,b2,b3) lexicographic order, derived by
// qualitative placement enumeration over three variables.
const std::vector<CyctAtom>& realizable_atoms();
// Position of an atom in realizable_atoms(); nullopt for unrealizable triples.
std::optional<int> realizable_atom_index(const CyctAtom& a);

struct CyctConstraint {
  int x, y, z;         // variable indices
  std::uint32_t atoms;  // bitmask over realizable_atoms() positions
};

struct CyctNetwork {
  int var_count = 0;
  std::vector<CyctConstraint> constraints;
};

// Placement search; returns orientation angles (rational turns in [0,1))
// satisfying every constraint, or nullopt.  branch_counter, when given,
// accumulates the number of candidate placements tried.
std::optional<std::vector<Rat>> cyct_consistent(const CyctNetwork& net,
                                                long* branch_counter = nullptr);

}  // namespace stir

#pragma once

// ── Allen interval atoms and their endpoint semantics ───────────────────────
//
// The 13 atoms over durative intervals (I.b < I.e strictly), the coarse
// three-way partition PRECEDES / INTERSECTS / FOLLOWS, and the translation of
// each atom into an EndpointRole: a 4-tuple of convex sets constraining the
// endpoint differences of an ordered interval pair (I, J).
//
// translate_atom() is not transcribed from anywhere: it is derived once, at
// startup, by exhaustively enumerating the orderings of the four endpoints
// and reading off the sign of each difference.  The commonly published
// version of this table gets two entries wrong (oi and eq); the derived
// table is ground truth and published_translation() retains the published
// entries so the divergence can be reported (see docs/ERRATA.md).

#include "stir/bounds.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace stir {

enum class AllenAtom : std::uint8_t {
  Before,        // <
  Meets,         // m
  Overlaps,      // o
  Starts,        // s
  During,        // d
  Finishes,      // f
  After,         // >
  MetBy,         // mi
  OverlappedBy,  // oi
  StartedBy,     // si
  Contains,      // di
  FinishedBy,    // fi
  Equals,        // eq
};

inline constexpr int kAllenAtomCount = 13;

const std::array<AllenAtom, kAllenAtomCount>& all_allen_atoms();

enum class PartitionRelation : std::uint8_t { Precedes, Intersects, Follows };

// Constraints on the four endpoint differences of an ordered pair (I, J):
//   rbb: J.b − I.b,   rbe: J.e − I.b,   reb: J.b − I.e,   ree: J.e − I.e.
struct EndpointRole {
  ConvexSet rbb, rbe, reb, ree;

  bool operator==(const EndpointRole&) const = default;
  bool any_empty() const {
    return rbb.is_empty() || rbe.is_empty() || reb.is_empty() || ree.is_empty();
  }
  std::string str() const;  // "<rbb,rbe,reb,ree>" in grammar syntax
};

// Sign of one endpoint difference under an atom's defining configuration.
enum class DiffSign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

struct EndpointSigns {
  DiffSign bb, be, eb, ee;
  bool operator==(const EndpointSigns&) const = default;
};

// Derived by enumerating all orderings of I.b < I.e, J.b < J.e over a small
// rational grid; each atom corresponds to exactly one sign 4-tuple.
EndpointSigns atom_endpoint_semantics(AllenAtom a);

// The sign tuple lifted to convex sets: + → (0,+inf), 0 → {0}, − → (−inf,0).
EndpointRole translate_atom(AllenAtom a);

// The table as commonly published.  Differs from translate_atom on exactly
// the atoms for which published_entry_is_erratum() is true.
EndpointRole published_translation(AllenAtom a);
bool published_entry_is_erratum(AllenAtom a);

AllenAtom converse_atom(AllenAtom a);

PartitionRelation partition_of(AllenAtom a);

// The characteristic endpoint constraints of a coarse relation:
//   PRECEDES   → reb ∈ [0,+inf)            (I ends before or when J begins)
//   INTERSECTS → rbe ∈ (0,+inf), reb ∈ (−inf,0)   (1-dimensional overlap)
//   FOLLOWS    → rbe ∈ (−inf,0]            (J ends before or when I begins)
EndpointRole partition_role(PartitionRelation p);

const char* atom_name(AllenAtom a);       // short form: "<", "m", "oi", ...
const char* atom_long_name(AllenAtom a);  // "before", "meets", ...
// Accepts both short and long forms.
std::optional<AllenAtom> atom_from_name(std::string_view name);

const char* partition_name(PartitionRelation p);  // "PRECEDES", ...
std::optional<PartitionRelation> partition_from_name(std::string_view name);

}  // namespace stir

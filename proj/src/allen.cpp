#include "stir/allen.hpp"

#include <map>
#include <stdexcept>

namespace stir {

namespace {

int idx(AllenAtom a) { return static_cast<int>(a); }

// Classification of a concrete endpoint configuration by the definitional
// orderings of the atoms (before: I.e < J.b; meets: I.e = J.b; and so on).
AllenAtom classify_configuration(int ib, int ie, int jb, int je) {
  if (ie < jb) return AllenAtom::Before;
  if (ie == jb) return AllenAtom::Meets;
  if (je < ib) return AllenAtom::After;
  if (je == ib) return AllenAtom::MetBy;
  // The intervals now have a 1-dimensional intersection.
  if (ib == jb && ie == je) return AllenAtom::Equals;
  if (ib == jb) return ie < je ? AllenAtom::Starts : AllenAtom::StartedBy;
  if (ie == je) return ib > jb ? AllenAtom::Finishes : AllenAtom::FinishedBy;
  if (ib > jb && ie < je) return AllenAtom::During;
  if (ib < jb && ie > je) return AllenAtom::Contains;
  return ib < jb ? AllenAtom::Overlaps : AllenAtom::OverlappedBy;
}

DiffSign sign_of(int d) {
  if (d < 0) return DiffSign::Negative;
  if (d > 0) return DiffSign::Positive;
  return DiffSign::Zero;
}

// Enumerate every ordering of four points (values 0..3 reach all weak orders
// of four points) subject to durativity, and record the sign tuple each atom
// induces.  Each atom must induce exactly one tuple — checked here.
std::array<EndpointSigns, kAllenAtomCount> derive_sign_table() {
  std::array<EndpointSigns, kAllenAtomCount> table{};
  std::array<bool, kAllenAtomCount> seen{};
  for (int ib = 0; ib < 4; ++ib)
    for (int ie = ib + 1; ie < 4; ++ie)
      for (int jb = 0; jb < 4; ++jb)
        for (int je = jb + 1; je < 4; ++je) {
          AllenAtom a = classify_configuration(ib, ie, jb, je);
          EndpointSigns s{sign_of(jb - ib), sign_of(je - ib), sign_of(jb - ie),
                          sign_of(je - ie)};
          if (seen[idx(a)]) {
            if (!(table[idx(a)] == s))
              throw std::logic_error("endpoint enumeration: atom maps to two sign tuples");
          } else {
            table[idx(a)] = s;
            seen[idx(a)] = true;
          }
        }
  for (bool b : seen)
    if (!b) throw std::logic_error("endpoint enumeration: atom never realized");
  return table;
}

const std::array<EndpointSigns, kAllenAtomCount>& sign_table() {
  static const auto table = derive_sign_table();
  return table;
}

ConvexSet sign_set(DiffSign s) {
  switch (s) {
    case DiffSign::Negative: return ConvexSet::negative();
    case DiffSign::Zero: return ConvexSet::singleton(Rat(0));
    case DiffSign::Positive: return ConvexSet::positive();
  }
  throw std::logic_error("sign_set: bad sign");
}

struct AtomNames {
  AllenAtom atom;
  const char* short_name;
  const char* long_name;
};

constexpr AtomNames kNames[kAllenAtomCount] = {
    {AllenAtom::Before, "<", "before"},
    {AllenAtom::Meets, "m", "meets"},
    {AllenAtom::Overlaps, "o", "overlaps"},
    {AllenAtom::Starts, "s", "starts"},
    {AllenAtom::During, "d", "during"},
    {AllenAtom::Finishes, "f", "finishes"},
    {AllenAtom::After, ">", "after"},
    {AllenAtom::MetBy, "mi", "met-by"},
    {AllenAtom::OverlappedBy, "oi", "overlapped-by"},
    {AllenAtom::StartedBy, "si", "started-by"},
    {AllenAtom::Contains, "di", "contains"},
    {AllenAtom::FinishedBy, "fi", "finished-by"},
    {AllenAtom::Equals, "eq", "equals"},
};

}  // namespace

const std::array<AllenAtom, kAllenAtomCount>& all_allen_atoms() {
  static const std::array<AllenAtom, kAllenAtomCount> atoms = [] {
    std::array<AllenAtom, kAllenAtomCount> out{};
    for (int i = 0; i < kAllenAtomCount; ++i) out[i] = static_cast<AllenAtom>(i);
    return out;
  }();
  return atoms;
}

std::string EndpointRole::str() const {
  return "<" + rbb.str() + "," + rbe.str() + "," + reb.str() + "," + ree.str() + ">";
}

EndpointSigns atom_endpoint_semantics(AllenAtom a) { return sign_table()[idx(a)]; }

EndpointRole translate_atom(AllenAtom a) {
  EndpointSigns s = atom_endpoint_semantics(a);
  return {sign_set(s.bb), sign_set(s.be), sign_set(s.eb), sign_set(s.ee)};
}

EndpointRole published_translation(AllenAtom a) {
  // The published table agrees with the derivation except on oi and eq:
  // oi's fourth slot is printed positive (which would collapse oi into d) and
  // eq's third slot is printed positive (contradicting J.b − I.e < 0 for
  // equal durative intervals).
  EndpointRole r = translate_atom(a);
  if (a == AllenAtom::OverlappedBy) r.ree = ConvexSet::positive();
  if (a == AllenAtom::Equals) r.reb = ConvexSet::positive();
  return r;
}

bool published_entry_is_erratum(AllenAtom a) {
  return !(published_translation(a) == translate_atom(a));
}

AllenAtom converse_atom(AllenAtom a) {
  switch (a) {
    case AllenAtom::Before: return AllenAtom::After;
    case AllenAtom::Meets: return AllenAtom::MetBy;
    case AllenAtom::Overlaps: return AllenAtom::OverlappedBy;
    case AllenAtom::Starts: return AllenAtom::StartedBy;
    case AllenAtom::During: return AllenAtom::Contains;
    case AllenAtom::Finishes: return AllenAtom::FinishedBy;
    case AllenAtom::After: return AllenAtom::Before;
    case AllenAtom::MetBy: return AllenAtom::Meets;
    case AllenAtom::OverlappedBy: return AllenAtom::Overlaps;
    case AllenAtom::StartedBy: return AllenAtom::Starts;
    case AllenAtom::Contains: return AllenAtom::During;
    case AllenAtom::FinishedBy: return AllenAtom::Finishes;
    case AllenAtom::Equals: return AllenAtom::Equals;
  }
  throw std::logic_error("converse_atom: bad atom");
}

PartitionRelation partition_of(AllenAtom a) {
  switch (a) {
    case AllenAtom::Before:
    case AllenAtom::Meets:
      return PartitionRelation::Precedes;
    case AllenAtom::After:
    case AllenAtom::MetBy:
      return PartitionRelation::Follows;
    default:
      return PartitionRelation::Intersects;
  }
}

EndpointRole partition_role(PartitionRelation p) {
  EndpointRole r{ConvexSet::universal(), ConvexSet::universal(),
                 ConvexSet::universal(), ConvexSet::universal()};
  switch (p) {
    case PartitionRelation::Precedes:
      r.reb = ConvexSet{Bound::closed(Rat(0)), Bound::pos_inf()};
      break;
    case PartitionRelation::Intersects:
      r.rbe = ConvexSet::positive();
      r.reb = ConvexSet::negative();
      break;
    case PartitionRelation::Follows:
      r.rbe = ConvexSet{Bound::neg_inf(), Bound::closed(Rat(0))};
      break;
  }
  return r;
}

const char* atom_name(AllenAtom a) { return kNames[idx(a)].short_name; }
const char* atom_long_name(AllenAtom a) { return kNames[idx(a)].long_name; }

std::optional<AllenAtom> atom_from_name(std::string_view name) {
  for (const auto& n : kNames)
    if (name == n.short_name || name == n.long_name) return n.atom;
  return std::nullopt;
}

const char* partition_name(PartitionRelation p) {
  switch (p) {
    case PartitionRelation::Precedes: return "PRECEDES";
    case PartitionRelation::Intersects: return "INTERSECTS";
    case PartitionRelation::Follows: return "FOLLOWS";
  }
  throw std::logic_error("partition_name: bad value");
}

std::optional<PartitionRelation> partition_from_name(std::string_view name) {
  if (name == "PRECEDES") return PartitionRelation::Precedes;
  if (name == "INTERSECTS") return PartitionRelation::Intersects;
  if (name == "FOLLOWS") return PartitionRelation::Follows;
  return std::nullopt;
}

}  // namespace stir

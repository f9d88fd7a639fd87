// Interval-atom endpoint semantics locked down three ways: a frozen,
// hand-checked sign table; an exhaustive enumeration of integer endpoint
// configurations classified by definitional orderings alone; and the
// algebraic converse law.  The published-table divergence is pinned to
// exactly two entries.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stir/allen.hpp"
#include "support.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

using namespace stir;
using namespace stir::testsupport;

namespace {

constexpr DiffSign P = DiffSign::Positive;
constexpr DiffSign Z = DiffSign::Zero;
constexpr DiffSign N = DiffSign::Negative;

// Hand-checked ground truth: the sign of (J.b−I.b, J.e−I.b, J.b−I.e, J.e−I.e)
// in each atom's defining configuration.
const std::map<AllenAtom, EndpointSigns> kFrozenSigns = {
    {AllenAtom::Before, {P, P, P, P}},       {AllenAtom::Meets, {P, P, Z, P}},
    {AllenAtom::Overlaps, {P, P, N, P}},     {AllenAtom::Starts, {Z, P, N, P}},
    {AllenAtom::During, {N, P, N, P}},       {AllenAtom::Finishes, {N, P, N, Z}},
    {AllenAtom::After, {N, N, N, N}},        {AllenAtom::MetBy, {N, Z, N, N}},
    {AllenAtom::OverlappedBy, {N, P, N, N}}, {AllenAtom::StartedBy, {Z, P, N, N}},
    {AllenAtom::Contains, {P, P, N, N}},     {AllenAtom::FinishedBy, {P, P, N, Z}},
    {AllenAtom::Equals, {Z, P, N, Z}},
};

DiffSign sign_of(int d) { return d < 0 ? N : d > 0 ? P : Z; }

ConvexSet sign_set(DiffSign s) {
  switch (s) {
    case DiffSign::Positive: return ConvexSet::positive();
    case DiffSign::Zero: return ConvexSet::singleton(Rat(0));
    case DiffSign::Negative: return ConvexSet::negative();
  }
  return ConvexSet::empty();
}

}  // namespace

TEST_CASE("exhaustive endpoint enumeration reproduces the frozen sign table") {
  // Every atom must map to exactly one sign tuple over all configurations,
  // every configuration must be classified, and each of the 13 atoms occurs.
  std::map<AllenAtom, std::set<std::array<DiffSign, 4>>> seen;
  for (int ib = 0; ib <= 5; ++ib)
    for (int ie = ib + 1; ie <= 6; ++ie)
      for (int jb = 0; jb <= 5; ++jb)
        for (int je = jb + 1; je <= 6; ++je) {
          const AllenAtom a = classify_endpoint_configuration(ib, ie, jb, je);
          seen[a].insert({sign_of(jb - ib), sign_of(je - ib), sign_of(jb - ie),
                          sign_of(je - ie)});
        }
  REQUIRE(seen.size() == 13);
  for (const auto& [atom, signs] : kFrozenSigns) {
    REQUIRE(seen.count(atom) == 1);
    REQUIRE(seen.at(atom).size() == 1);
    const auto& s = *seen.at(atom).begin();
    CHECK(EndpointSigns{s[0], s[1], s[2], s[3]} == signs);
    CHECK(atom_endpoint_semantics(atom) == signs);
  }
}

TEST_CASE("atom translation lifts the sign table to convex sets") {
  for (AllenAtom a : all_allen_atoms()) {
    const EndpointSigns s = kFrozenSigns.at(a);
    const EndpointRole r = translate_atom(a);
    CHECK(r.rbb == sign_set(s.bb));
    CHECK(r.rbe == sign_set(s.be));
    CHECK(r.reb == sign_set(s.eb));
    CHECK(r.ree == sign_set(s.ee));
    CHECK(!r.any_empty());
  }
}

TEST_CASE("published table diverges on exactly two entries") {
  std::vector<AllenAtom> errata;
  for (AllenAtom a : all_allen_atoms()) {
    const bool differs = !(published_translation(a) == translate_atom(a));
    CHECK(differs == published_entry_is_erratum(a));
    if (differs) errata.push_back(a);
  }
  REQUIRE(errata.size() == 2);
  CHECK(errata[0] == AllenAtom::OverlappedBy);
  CHECK(errata[1] == AllenAtom::Equals);

  // The published overlapped-by entry claims J ends after I ends — which is
  // the configuration of `during`, not overlapped-by.
  const EndpointRole oi_pub = published_translation(AllenAtom::OverlappedBy);
  CHECK(oi_pub.ree == ConvexSet::positive());
  CHECK(oi_pub.rbb == translate_atom(AllenAtom::OverlappedBy).rbb);
  CHECK(oi_pub.rbe == translate_atom(AllenAtom::OverlappedBy).rbe);
  CHECK(oi_pub.reb == translate_atom(AllenAtom::OverlappedBy).reb);
  CHECK(oi_pub == published_translation(AllenAtom::During));

  // The published equals entry claims J begins after I ends: intervals that
  // never even intersect could then be "equal".
  const EndpointRole eq_pub = published_translation(AllenAtom::Equals);
  CHECK(eq_pub.reb == ConvexSet::positive());
  CHECK(eq_pub.rbb == translate_atom(AllenAtom::Equals).rbb);
  CHECK(eq_pub.rbe == translate_atom(AllenAtom::Equals).rbe);
  CHECK(eq_pub.ree == translate_atom(AllenAtom::Equals).ree);
}

TEST_CASE("converse atoms match classification with arguments swapped") {
  CHECK(converse_atom(AllenAtom::Before) == AllenAtom::After);
  CHECK(converse_atom(AllenAtom::Meets) == AllenAtom::MetBy);
  CHECK(converse_atom(AllenAtom::Overlaps) == AllenAtom::OverlappedBy);
  CHECK(converse_atom(AllenAtom::Starts) == AllenAtom::StartedBy);
  CHECK(converse_atom(AllenAtom::During) == AllenAtom::Contains);
  CHECK(converse_atom(AllenAtom::Finishes) == AllenAtom::FinishedBy);
  CHECK(converse_atom(AllenAtom::Equals) == AllenAtom::Equals);
  for (AllenAtom a : all_allen_atoms()) CHECK(converse_atom(converse_atom(a)) == a);

  for (int ib = 0; ib <= 4; ++ib)
    for (int ie = ib + 1; ie <= 5; ++ie)
      for (int jb = 0; jb <= 4; ++jb)
        for (int je = jb + 1; je <= 5; ++je)
          CHECK(converse_atom(classify_endpoint_configuration(ib, ie, jb, je)) ==
                classify_endpoint_configuration(jb, je, ib, ie));
}

TEST_CASE("converse translation swaps and negates the cross components") {
  for (AllenAtom a : all_allen_atoms()) {
    const EndpointRole r = translate_atom(a);
    const EndpointRole c = translate_atom(converse_atom(a));
    CHECK(c.rbb == negate(r.rbb));
    CHECK(c.rbe == negate(r.reb));
    CHECK(c.reb == negate(r.rbe));
    CHECK(c.ree == negate(r.ree));
  }
}

TEST_CASE("coarse partition is jointly exhaustive and pairwise disjoint") {
  int precedes = 0, intersects = 0, follows = 0;
  for (AllenAtom a : all_allen_atoms()) {
    switch (partition_of(a)) {
      case PartitionRelation::Precedes: ++precedes; break;
      case PartitionRelation::Intersects: ++intersects; break;
      case PartitionRelation::Follows: ++follows; break;
    }
  }
  CHECK(precedes == 2);
  CHECK(intersects == 9);
  CHECK(follows == 2);
  CHECK(partition_of(AllenAtom::Before) == PartitionRelation::Precedes);
  CHECK(partition_of(AllenAtom::Meets) == PartitionRelation::Precedes);
  CHECK(partition_of(AllenAtom::After) == PartitionRelation::Follows);
  CHECK(partition_of(AllenAtom::MetBy) == PartitionRelation::Follows);
  CHECK(partition_of(AllenAtom::Overlaps) == PartitionRelation::Intersects);
  CHECK(partition_of(AllenAtom::Equals) == PartitionRelation::Intersects);

  // Semantically: INTERSECTS iff the intervals share more than a point.
  for (int ib = 0; ib <= 4; ++ib)
    for (int ie = ib + 1; ie <= 5; ++ie)
      for (int jb = 0; jb <= 4; ++jb)
        for (int je = jb + 1; je <= 5; ++je) {
          const bool overlap = std::max(ib, jb) < std::min(ie, je);
          const PartitionRelation p =
              partition_of(classify_endpoint_configuration(ib, ie, jb, je));
          if (overlap) {
            CHECK(p == PartitionRelation::Intersects);
          } else if (ie <= jb) {
            CHECK(p == PartitionRelation::Precedes);
          } else {
            CHECK(p == PartitionRelation::Follows);
          }
        }
}

TEST_CASE("partition roles carry the characteristic constraints") {
  const EndpointRole p = partition_role(PartitionRelation::Precedes);
  CHECK(p.reb == ConvexSet(Bound::closed(Rat(0)), Bound::pos_inf()));
  CHECK(p.rbb.is_universal());
  CHECK(p.rbe.is_universal());
  CHECK(p.ree.is_universal());

  const EndpointRole i = partition_role(PartitionRelation::Intersects);
  CHECK(i.rbe == ConvexSet::positive());
  CHECK(i.reb == ConvexSet::negative());
  CHECK(i.rbb.is_universal());
  CHECK(i.ree.is_universal());

  const EndpointRole f = partition_role(PartitionRelation::Follows);
  CHECK(f.rbe == ConvexSet(Bound::neg_inf(), Bound::closed(Rat(0))));
  CHECK(f.rbb.is_universal());
  CHECK(f.reb.is_universal());
  CHECK(f.ree.is_universal());
}

TEST_CASE("atom names round-trip in both short and long form") {
  CHECK(atom_name(AllenAtom::Before) == std::string("<"));
  CHECK(atom_name(AllenAtom::OverlappedBy) == std::string("oi"));
  CHECK(atom_long_name(AllenAtom::MetBy) == std::string("met-by"));
  CHECK(atom_long_name(AllenAtom::Contains) == std::string("contains"));
  for (AllenAtom a : all_allen_atoms()) {
    CHECK(atom_from_name(atom_name(a)) == a);
    CHECK(atom_from_name(atom_long_name(a)) == a);
  }
  CHECK(!atom_from_name("bogus").has_value());
  CHECK(!atom_from_name("").has_value());

  CHECK(partition_name(PartitionRelation::Precedes) == std::string("PRECEDES"));
  CHECK(partition_from_name("INTERSECTS") == PartitionRelation::Intersects);
  CHECK(!partition_from_name("intersects").has_value());
}

#include "stir/cyct.hpp"

#include <algorithm>
#include <stdexcept>

namespace stir {

namespace {

char letter(CycbAtom a) {
  switch (a) {
    case CycbAtom::E: return 'e';
    case CycbAtom::L: return 'l';
    case CycbAtom::O: return 'o';
    case CycbAtom::R: return 'r';
  }
  throw std::logic_error("letter: bad atom");
}

std::optional<CycbAtom> from_letter(char c) {
  switch (c) {
    case 'e': return CycbAtom::E;
    case 'l': return CycbAtom::L;
    case 'o': return CycbAtom::O;
    case 'r': return CycbAtom::R;
    default: return std::nullopt;
  }
}

const Rat& half() {
  static const Rat h = make_rat(1, 2);
  return h;
}

// Candidate positions for the next variable given the points already placed:
// each landmark (a placed value or its antipode) and the midpoint of each open
// arc between cyclically consecutive landmarks.
std::vector<Rat> placement_candidates(const std::vector<Rat>& placed) {
  std::vector<Rat> landmarks;
  for (const Rat& p : placed) {
    landmarks.push_back(p);
    landmarks.push_back(turn_mod1(p + half()));
  }
  std::sort(landmarks.begin(), landmarks.end());
  landmarks.erase(std::unique(landmarks.begin(), landmarks.end()), landmarks.end());
  // A placed value and its antipode always differ, so there are at least two
  // landmarks and every arc between cyclic neighbours is proper.
  std::vector<Rat> out = landmarks;
  for (std::size_t i = 0; i < landmarks.size(); ++i) {
    const Rat& a = landmarks[i];
    Rat b = i + 1 < landmarks.size() ? landmarks[i + 1] : landmarks[0] + 1;
    out.push_back(turn_mod1((a + b) / 2));
  }
  return out;
}

bool search(const CyctNetwork& net, std::vector<Rat>& placed, long* branches) {
  int k = static_cast<int>(placed.size());
  if (k == net.var_count) return true;
  std::vector<Rat> candidates =
      k == 0 ? std::vector<Rat>{Rat(0)} : placement_candidates(placed);
  for (const Rat& c : candidates) {
    if (branches) ++*branches;
    placed.push_back(c);
    bool ok = true;
    for (const CyctConstraint& con : net.constraints) {
      if (con.x >= k + 1 || con.y >= k + 1 || con.z >= k + 1) continue;
      // Re-check only constraints completed by this placement.
      if (con.x != k && con.y != k && con.z != k) continue;
      bool sat = false;
      const auto& atoms = realizable_atoms();
      for (std::size_t t = 0; t < atoms.size() && !sat; ++t)
        if ((con.atoms >> t) & 1u)
          sat = cyct_holds(atoms[t], placed[con.x], placed[con.y], placed[con.z]);
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok && search(net, placed, branches)) return true;
    placed.pop_back();
  }
  return false;
}

}  // namespace

std::string CyctAtom::str() const {
  return {letter(b1), letter(b2), letter(b3)};
}

std::optional<CyctAtom> cyct_atom_from_name(std::string_view name) {
  if (name.size() != 3) return std::nullopt;
  auto a = from_letter(name[0]), b = from_letter(name[1]), c = from_letter(name[2]);
  if (!a || !b || !c) return std::nullopt;
  return CyctAtom{*a, *b, *c};
}

Rat turn_mod1(const Rat& t) {
  // floor division: t - floor(t)
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  Rat out = t - Rat(fl);
  return out;
}

CycbAtom cycb_class(const Rat& from, const Rat& to) {
  Rat d = turn_mod1(to - from);
  if (d == 0) return CycbAtom::E;
  if (d == half()) return CycbAtom::O;
  return d < half() ? CycbAtom::L : CycbAtom::R;
}

bool cycb_holds(CycbAtom a, const Rat& theta_x, const Rat& theta_y) {
  return cycb_class(theta_x, theta_y) == a;
}

bool cyct_holds(const CyctAtom& t, const Rat& x, const Rat& y, const Rat& z) {
  return cycb_class(x, y) == t.b1 && cycb_class(y, z) == t.b2 &&
         cycb_class(x, z) == t.b3;
}

const std::vector<CyctAtom>& realizable_atoms() {
  static const std::vector<CyctAtom> atoms = [] {
    // Qualitative placement enumeration for three orientations: x at 0, y on
    // a cell of {0, 1/2} (points and arc midpoints), z on a cell of the
    // landmark arrangement of {0, 1/2, y, y+1/2}.
    bool seen[4][4][4] = {};
    std::vector<Rat> base{Rat(0)};
    for (const Rat& y : placement_candidates(base)) {
      std::vector<Rat> two{Rat(0), y};
      for (const Rat& z : placement_candidates(two)) {
        seen[static_cast<int>(cycb_class(Rat(0), y))]
            [static_cast<int>(cycb_class(y, z))]
            [static_cast<int>(cycb_class(Rat(0), z))] = true;
      }
    }
    std::vector<CyctAtom> out;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          if (seen[a][b][c])
            out.push_back(CyctAtom{static_cast<CycbAtom>(a), static_cast<CycbAtom>(b),
                                   static_cast<CycbAtom>(c)});
    return out;
  }();
  return atoms;
}

std::optional<int> realizable_atom_index(const CyctAtom& a) {
  const auto& atoms = realizable_atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i] == a) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<std::vector<Rat>> cyct_consistent(const CyctNetwork& net,
                                                long* branch_counter) {
  for (const CyctConstraint& c : net.constraints)
    if (c.atoms == 0) return std::nullopt;
  if (net.var_count == 0) return std::vector<Rat>{};
  std::vector<Rat> placed;
  placed.reserve(net.var_count);
  if (search(net, placed, branch_counter)) return placed;
  return std::nullopt;
}

}  // namespace stir

#include "stir/rcc8.hpp"

#include <array>
#include <stdexcept>

namespace stir {

namespace {

constexpr int idx(Rcc8Atom a) { return static_cast<int>(a); }

constexpr const char* kAtomNames[kRcc8AtomCount] = {"DC",   "EC",    "PO",
                                                    "TPP",  "NTPP",  "TPPi",
                                                    "NTPPi", "EQ"};

// Shorthand for table entries.
constexpr std::uint8_t DC = 1u << idx(Rcc8Atom::DC);
constexpr std::uint8_t EC = 1u << idx(Rcc8Atom::EC);
constexpr std::uint8_t PO = 1u << idx(Rcc8Atom::PO);
constexpr std::uint8_t TPP = 1u << idx(Rcc8Atom::TPP);
constexpr std::uint8_t NTPP = 1u << idx(Rcc8Atom::NTPP);
constexpr std::uint8_t TPPi = 1u << idx(Rcc8Atom::TPPi);
constexpr std::uint8_t NTPPi = 1u << idx(Rcc8Atom::NTPPi);
constexpr std::uint8_t EQ = 1u << idx(Rcc8Atom::EQ);
constexpr std::uint8_t ALL = 0xFF;

// The standard RCC8 composition table, rows ∘ columns in enum order
// DC, EC, PO, TPP, NTPP, TPPi, NTPPi, EQ.
constexpr std::uint8_t kCompose[kRcc8AtomCount][kRcc8AtomCount] = {
    // a = DC
    {ALL,
     DC | EC | PO | TPP | NTPP,
     DC | EC | PO | TPP | NTPP,
     DC | EC | PO | TPP | NTPP,
     DC | EC | PO | TPP | NTPP,
     DC,
     DC,
     DC},
    // a = EC
    {DC | EC | PO | TPPi | NTPPi,
     DC | EC | PO | TPP | TPPi | EQ,
     DC | EC | PO | TPP | NTPP,
     EC | PO | TPP | NTPP,
     PO | TPP | NTPP,
     DC | EC,
     DC,
     EC},
    // a = PO
    {DC | EC | PO | TPPi | NTPPi,
     DC | EC | PO | TPPi | NTPPi,
     ALL,
     PO | TPP | NTPP,
     PO | TPP | NTPP,
     DC | EC | PO | TPPi | NTPPi,
     DC | EC | PO | TPPi | NTPPi,
     PO},
    // a = TPP
    {DC,
     DC | EC,
     DC | EC | PO | TPP | NTPP,
     TPP | NTPP,
     NTPP,
     DC | EC | PO | TPP | TPPi | EQ,
     DC | EC | PO | TPPi | NTPPi,
     TPP},
    // a = NTPP
    {DC,
     DC,
     DC | EC | PO | TPP | NTPP,
     NTPP,
     NTPP,
     DC | EC | PO | TPP | NTPP,
     ALL,
     NTPP},
    // a = TPPi
    {DC | EC | PO | TPPi | NTPPi,
     EC | PO | TPPi | NTPPi,
     PO | TPPi | NTPPi,
     PO | TPP | TPPi | EQ,
     PO | TPP | NTPP,
     TPPi | NTPPi,
     NTPPi,
     TPPi},
    // a = NTPPi
    {DC | EC | PO | TPPi | NTPPi,
     PO | TPPi | NTPPi,
     PO | TPPi | NTPPi,
     PO | TPPi | NTPPi,
     PO | TPP | NTPP | TPPi | NTPPi | EQ,
     NTPPi,
     NTPPi,
     NTPPi},
    // a = EQ
    {DC, EC, PO, TPP, NTPP, TPPi, NTPPi, EQ},
};

}  // namespace

std::string Rcc8Rel::str() const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < kRcc8AtomCount; ++i)
    if (bits & (1u << i)) {
      if (!first) out += ",";
      out += kAtomNames[i];
      first = false;
    }
  return out + "}";
}

const char* rcc8_atom_name(Rcc8Atom a) { return kAtomNames[idx(a)]; }

std::optional<Rcc8Atom> rcc8_atom_from_name(std::string_view name) {
  for (int i = 0; i < kRcc8AtomCount; ++i)
    if (name == kAtomNames[i]) return static_cast<Rcc8Atom>(i);
  return std::nullopt;
}

Rcc8Atom rcc8_converse(Rcc8Atom a) {
  switch (a) {
    case Rcc8Atom::TPP: return Rcc8Atom::TPPi;
    case Rcc8Atom::TPPi: return Rcc8Atom::TPP;
    case Rcc8Atom::NTPP: return Rcc8Atom::NTPPi;
    case Rcc8Atom::NTPPi: return Rcc8Atom::NTPP;
    default: return a;  // DC, EC, PO, EQ are symmetric
  }
}

Rcc8Rel converse_rel(Rcc8Rel r) {
  Rcc8Rel out;
  for (int i = 0; i < kRcc8AtomCount; ++i)
    if (r.bits & (1u << i)) out = out.with(rcc8_converse(static_cast<Rcc8Atom>(i)));
  return out;
}

Rcc8Rel compose(Rcc8Atom a, Rcc8Atom b) { return {kCompose[idx(a)][idx(b)]}; }

Rcc8Rel compose(Rcc8Rel a, Rcc8Rel b) {
  Rcc8Rel out;
  for (int i = 0; i < kRcc8AtomCount; ++i) {
    if (!(a.bits & (1u << i))) continue;
    for (int j = 0; j < kRcc8AtomCount; ++j)
      if (b.bits & (1u << j))
        out = out | compose(static_cast<Rcc8Atom>(i), static_cast<Rcc8Atom>(j));
  }
  return out;
}

Rcc8Network::Rcc8Network(std::size_t n) : n_(n), grid_(n * n, Rcc8Rel::full()) {
  for (std::size_t i = 0; i < n; ++i) grid_[i * n + i] = Rcc8Rel::of(Rcc8Atom::EQ);
}

void Rcc8Network::restrict(std::size_t i, std::size_t j, Rcc8Rel r) {
  if (i == j) {
    grid_[i * n_ + i] = grid_[i * n_ + i] & r;
    return;
  }
  grid_[i * n_ + j] = grid_[i * n_ + j] & r;
  grid_[j * n_ + i] = grid_[j * n_ + i] & converse_rel(r);
}

bool Rcc8Network::path_consistency() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t j = 0; j < n_; ++j) {
          if (i == j || i == k || j == k) continue;
          Rcc8Rel refined = rel(i, j) & compose(rel(i, k), rel(k, j));
          if (!(refined == rel(i, j))) {
            grid_[i * n_ + j] = refined;
            grid_[j * n_ + i] = converse_rel(refined);
            changed = true;
            if (refined.empty()) return false;
          }
        }
  }
  for (const Rcc8Rel& r : grid_)
    if (r.empty()) return false;
  return true;
}

bool Rcc8Network::all_atomic() const {
  for (const Rcc8Rel& r : grid_)
    if (r.count() != 1) return false;
  return true;
}

std::optional<Rcc8Network> rcc8_consistent(const Rcc8Network& input) {
  Rcc8Network net = input;
  if (!net.path_consistency()) return std::nullopt;
  // Smallest non-singleton relation first; deterministic.
  std::size_t best_i = 0, best_j = 0;
  int best = kRcc8AtomCount + 1;
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      int c = net.rel(i, j).count();
      if (c > 1 && c < best) {
        best = c;
        best_i = i;
        best_j = j;
      }
    }
  if (best == kRcc8AtomCount + 1) return net;  // atomic and path-consistent
  for (int a = 0; a < kRcc8AtomCount; ++a) {
    Rcc8Atom atom = static_cast<Rcc8Atom>(a);
    if (!net.rel(best_i, best_j).contains(atom)) continue;
    Rcc8Network branch = net;
    branch.restrict(best_i, best_j, Rcc8Rel::of(atom));
    if (auto result = rcc8_consistent(branch)) return result;
  }
  return std::nullopt;
}

}  // namespace stir

#include "stir/bounds.hpp"

#include <stdexcept>

namespace stir {

namespace {

// -1 / 0 / +1 with NegInf < every finite value < PosInf.
int cmp_positions(const Bound& a, const Bound& b) {
  if (a.kind == b.kind) {
    if (a.kind != Bound::Finite) return 0;
    return cmp(a.value, b.value);  // gmp three-way compare
  }
  if (a.kind == Bound::NegInf || b.kind == Bound::PosInf) return -1;
  return 1;
}

// As lower bounds: does a exclude at least everything b excludes?
bool lower_at_least_as_tight(const Bound& a, const Bound& b) {
  int c = cmp_positions(a, b);
  if (c != 0) return c > 0;
  return a.strict || !b.strict;
}

bool upper_at_least_as_tight(const Bound& a, const Bound& b) {
  int c = cmp_positions(a, b);
  if (c != 0) return c < 0;
  return a.strict || !b.strict;
}

Bound add_lower(const Bound& a, const Bound& b) {
  if (a.kind == Bound::NegInf || b.kind == Bound::NegInf) return Bound::neg_inf();
  return {Bound::Finite, a.value + b.value, a.strict || b.strict};
}

Bound add_upper(const Bound& a, const Bound& b) {
  if (a.kind == Bound::PosInf || b.kind == Bound::PosInf) return Bound::pos_inf();
  return {Bound::Finite, a.value + b.value, a.strict || b.strict};
}

Bound negate_bound(const Bound& a) {
  switch (a.kind) {
    case Bound::NegInf: return Bound::pos_inf();
    case Bound::PosInf: return Bound::neg_inf();
    case Bound::Finite: return {Bound::Finite, -a.value, a.strict};
  }
  throw std::logic_error("negate_bound: bad kind");
}

}  // namespace

bool Bound::operator==(const Bound& o) const {
  if (kind != o.kind) return false;
  if (kind != Finite) return true;  // infinite bounds are always strict
  return strict == o.strict && value == o.value;
}

ConvexSet::ConvexSet() : lo_(Bound::neg_inf()), hi_(Bound::pos_inf()) {}

ConvexSet::ConvexSet(Bound lo, Bound hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.kind != Bound::Finite) lo_.strict = true;
  if (hi_.kind != Bound::Finite) hi_.strict = true;
  int c = cmp_positions(lo_, hi_);
  if (c > 0 || (c == 0 && (lo_.infinite() || lo_.strict || hi_.strict))) {
    empty_ = true;
    lo_ = Bound::closed(Rat(0));
    hi_ = Bound::closed(Rat(0));
  }
}

ConvexSet ConvexSet::empty() {
  ConvexSet s{Bound::closed(Rat(1)), Bound::closed(Rat(0))};
  return s;
}

ConvexSet ConvexSet::universal() { return ConvexSet(); }

ConvexSet ConvexSet::singleton(Rat v) {
  return ConvexSet{Bound::closed(v), Bound::closed(v)};
}

ConvexSet ConvexSet::positive() {
  return ConvexSet{Bound::open(Rat(0)), Bound::pos_inf()};
}

ConvexSet ConvexSet::negative() {
  return ConvexSet{Bound::neg_inf(), Bound::open(Rat(0))};
}

bool ConvexSet::is_universal() const {
  return !empty_ && lo_.kind == Bound::NegInf && hi_.kind == Bound::PosInf;
}

bool ConvexSet::is_singleton() const {
  return !empty_ && lo_.kind == Bound::Finite && hi_.kind == Bound::Finite &&
         !lo_.strict && !hi_.strict && lo_.value == hi_.value;
}

const Bound& ConvexSet::lo() const {
  if (empty_) throw std::logic_error("ConvexSet::lo on empty set");
  return lo_;
}

const Bound& ConvexSet::hi() const {
  if (empty_) throw std::logic_error("ConvexSet::hi on empty set");
  return hi_;
}

bool ConvexSet::contains(const Rat& v) const {
  if (empty_) return false;
  if (lo_.kind == Bound::Finite) {
    int c = cmp(v, lo_.value);
    if (c < 0 || (c == 0 && lo_.strict)) return false;
  }
  if (hi_.kind == Bound::Finite) {
    int c = cmp(v, hi_.value);
    if (c > 0 || (c == 0 && hi_.strict)) return false;
  }
  return true;
}

bool ConvexSet::subset_of(const ConvexSet& other) const {
  if (empty_) return true;
  if (other.empty_) return false;
  return lower_at_least_as_tight(lo_, other.lo_) &&
         upper_at_least_as_tight(hi_, other.hi_);
}

bool ConvexSet::operator==(const ConvexSet& o) const {
  if (empty_ || o.empty_) return empty_ == o.empty_;
  return lo_ == o.lo_ && hi_ == o.hi_;
}

std::string ConvexSet::str() const {
  if (empty_) return "empty";
  if (is_singleton()) return "{" + rat_str(lo_.value) + "}";
  std::string out;
  out += lo_.strict ? '(' : '[';
  out += lo_.kind == Bound::NegInf ? "-inf" : rat_str(lo_.value);
  out += ',';
  out += hi_.kind == Bound::PosInf ? "+inf" : rat_str(hi_.value);
  out += hi_.strict ? ')' : ']';
  return out;
}

ConvexSet intersect(const ConvexSet& a, const ConvexSet& b) {
  if (a.is_empty() || b.is_empty()) return ConvexSet::empty();
  Bound lo = lower_at_least_as_tight(a.lo(), b.lo()) ? a.lo() : b.lo();
  Bound hi = upper_at_least_as_tight(a.hi(), b.hi()) ? a.hi() : b.hi();
  return ConvexSet{lo, hi};
}

ConvexSet sum(const ConvexSet& a, const ConvexSet& b) {
  if (a.is_empty() || b.is_empty()) return ConvexSet::empty();
  return ConvexSet{add_lower(a.lo(), b.lo()), add_upper(a.hi(), b.hi())};
}

ConvexSet negate(const ConvexSet& a) {
  if (a.is_empty()) return ConvexSet::empty();
  return ConvexSet{negate_bound(a.hi()), negate_bound(a.lo())};
}

std::optional<ConvexSet> parse_convex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 3) return std::nullopt;

  if (s.front() == '{' && s.back() == '}') {
    auto v = parse_rat(std::string_view(s).substr(1, s.size() - 2));
    if (!v) return std::nullopt;
    return ConvexSet::singleton(*v);
  }

  bool lo_strict = s.front() == '(';
  bool hi_strict = s.back() == ')';
  if (!lo_strict && s.front() != '[') return std::nullopt;
  if (!hi_strict && s.back() != ']') return std::nullopt;
  auto comma = s.find(',');
  if (comma == std::string::npos) return std::nullopt;
  std::string lo_text = s.substr(1, comma - 1);
  std::string hi_text = s.substr(comma + 1, s.size() - comma - 2);

  Bound lo, hi;
  if (lo_text == "-inf") {
    lo = Bound::neg_inf();
  } else {
    auto v = parse_rat(lo_text);
    if (!v) return std::nullopt;
    lo = Bound{Bound::Finite, *v, lo_strict};
  }
  if (hi_text == "+inf") {
    hi = Bound::pos_inf();
  } else {
    auto v = parse_rat(hi_text);
    if (!v) return std::nullopt;
    hi = Bound{Bound::Finite, *v, hi_strict};
  }
  return ConvexSet{lo, hi};
}

}  // namespace stir

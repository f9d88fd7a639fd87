#include "stir/rational.hpp"

#include <cctype>

namespace stir {

Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rat> parse_rat(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    return i > start;
  };
  std::string num;
  if (text[i] == '+' || text[i] == '-') {
    if (text[i] == '-') num += '-';
    ++i;
  }
  if (!digits(num)) return std::nullopt;
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    if (!digits(den)) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  Rat d(den);
  if (d == 0) return std::nullopt;
  Rat q(num + "/" + den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace stir

#pragma once

// Exact rational arithmetic for endpoint values and constraint bounds.
// Backed by GMP so path sums never overflow; everything downstream relies on
// comparisons being exact (strict vs. non-strict bounds, zero-length cycles).

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace stir {

using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize on its own; this does.
Rat make_rat(long num, long den = 1);

// "p", "-p", "p/q" with optional sign on the numerator.  Rejects d == 0,
// embedded whitespace, and trailing garbage.
std::optional<Rat> parse_rat(std::string_view text);

// Exact text form: "p" for integers, "p/q" otherwise.  Never decimal.
std::string rat_str(const Rat& q);

}  // namespace stir

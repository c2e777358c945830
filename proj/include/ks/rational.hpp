#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ks {

// Exact rational. mpq_class keeps values in lowest terms with a positive
// denominator as long as every constructor path goes through canonicalize().
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Parses "a" or "a/b" (optional leading '-'); throws std::invalid_argument.
Rat parse_rat(std::string_view text);

// "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace ks

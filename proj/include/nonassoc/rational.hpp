#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace nonassoc {

// Exact rational scalar. GMP keeps mpq_class canonical (gcd(num,den)=1,
// den>0) as long as values are built through arithmetic or canonicalize().
using Rat = mpq_class;

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }

inline Rat rat_inv(const Rat& a) { return Rat(1) / a; }

// Parses "n" or "n/d" with optional leading sign. Returns nullopt on junk.
std::optional<Rat> parse_rat(const std::string& s);

std::string to_string(const Rat& a);

}  // namespace nonassoc

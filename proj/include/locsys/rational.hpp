#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace locsys {

using Rational = mpq_class;

/// Bit set over line indices. Bit i set means "line i is a member".
using LineSet = std::uint32_t;

inline constexpr int kMaxLineSetBits = 32;

inline bool contains(LineSet set, int i) { return (set >> i) & 1U; }
inline LineSet bit(int i) { return LineSet{1} << i; }
inline int popcount(LineSet set) { return __builtin_popcount(set); }

/// Parses "3", "-2/5" or "0.125" into an exact rational.
Rational parse_rational(std::string_view token);

std::string to_string(const Rational& r);

}  // namespace locsys

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbertkit {

// Grid sizes and counts. A grid is required to have at most 2^127 elements.
using u128 = unsigned __int128;

// Exact rationals for probabilities, statistical distances and bounds.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(u128 value);
u128 parse_u128(const std::string& text);

BigInt to_bigint(u128 value);

// Returns false on overflow.
bool checked_mul(u128 a, u128 b, u128& out);
bool checked_add(u128 a, u128 b, u128& out);

// "n choose at most d": number of subsets of an n-set of size <= d.
u128 binom_le(std::uint64_t n, std::int64_t d);

std::string to_string(const Rational& value);

}  // namespace hilbertkit

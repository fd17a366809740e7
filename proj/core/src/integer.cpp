#include "hilbertkit/integer.hpp"

#include <algorithm>
#include <limits>

#include "hilbertkit/error.hpp"

namespace hilbertkit {

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

u128 parse_u128(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  u128 value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "not an unsigned integer: " + text);
    u128 next = 0;
    if (!checked_mul(value, 10, next) || !checked_add(next, static_cast<u128>(c - '0'), next)) {
      throw Error(ErrorCode::OutOfRange, "integer does not fit 128 bits: " + text);
    }
    value = next;
  }
  return value;
}

BigInt to_bigint(u128 value) {
  BigInt hi = static_cast<std::uint64_t>(value >> 64);
  BigInt lo = static_cast<std::uint64_t>(value);
  return (hi << 64) | lo;
}

bool checked_mul(u128 a, u128 b, u128& out) {
  if (a != 0 && b > std::numeric_limits<u128>::max() / a) return false;
  out = a * b;
  return true;
}

bool checked_add(u128 a, u128 b, u128& out) {
  if (b > std::numeric_limits<u128>::max() - a) return false;
  out = a + b;
  return true;
}

u128 binom_le(std::uint64_t n, std::int64_t d) {
  if (d < 0) return 0;
  const std::uint64_t top = std::min<std::uint64_t>(n, static_cast<std::uint64_t>(d));
  u128 term = 1;
  u128 total = 1;
  for (std::uint64_t j = 1; j <= top; ++j) {
    // term = C(n, j) computed from C(n, j-1); the division is exact.
    u128 next = 0;
    if (!checked_mul(term, n - j + 1, next)) throw Error(ErrorCode::OutOfRange, "binomial overflow");
    term = next / j;
    if (!checked_add(total, term, total)) throw Error(ErrorCode::OutOfRange, "binomial overflow");
  }
  return total;
}

std::string to_string(const Rational& value) { return value.str(); }

}  // namespace hilbertkit

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <utility>

#include "pairfold/error.hpp"

namespace pairfold {

/// Exact arbitrary-precision integer. Every quantity in this library is one
/// of these; nothing is ever rounded or truncated to a machine word.
using Int = boost::multiprecision::cpp_int;

/// Signum: -1, 0 or +1.
inline int sgn(const Int& x) {
  if (x < 0) return -1;
  return x > 0 ? 1 : 0;
}

/// Clamped signum: 0 for x <= 0, 1 for x > 0.
/// Identical to (sgn(x)^2 + sgn(x)) / 2.
inline int sgn_prime(const Int& x) { return x > 0 ? 1 : 0; }

/// Larger of two integers; equals (x + y + |x - y|) / 2.
inline Int max2(const Int& x, const Int& y) { return x < y ? y : x; }

/// Smaller of two integers; equals (x + y - |x - y|) / 2.
inline Int min2(const Int& x, const Int& y) { return x < y ? x : y; }

/// Least non-negative residue of n modulo m: the unique r with 0 <= r < m
/// and m dividing n - r. Requires m >= 1.
inline Int residue(const Int& n, const Int& m) {
  if (m < 1) throw DomainError("residue: modulus must be >= 1");
  Int r = n % m;  // truncated toward zero, so r can be negative
  if (r < 0) r += m;
  return r;
}

/// floor(sqrt(c)) for c >= 0, by integer Newton iteration. No floating
/// point is involved, so the result is exact at any magnitude.
///
/// The start value 2^(floor(msb/2) + 1) is strictly above sqrt(c); from
/// there the iterate decreases strictly until it reaches floor(sqrt(c)),
/// so the loop terminates.
inline Int floor_sqrt(const Int& c) {
  if (c < 0) throw DomainError("floor_sqrt: input must be >= 0");
  if (c == 0) return Int(0);
  Int x = Int(1) << (boost::multiprecision::msb(c) / 2 + 1);
  for (;;) {
    Int next = (x + c / x) >> 1;
    if (next >= x) break;
    x = std::move(next);
  }
  assert(x * x <= c && c < (x + 1) * (x + 1));
  return x;
}

namespace detail {

/// v / 2^bits with an exactness check; the pairing formulas only ever
/// divide quantities that are exact multiples.
inline Int exact_div_pow2(Int v, unsigned bits, const char* context) {
  if ((v & ((Int(1) << bits) - 1)) != 0)
    throw Error(std::string(context) + ": inexact division by " +
                std::to_string(1u << bits));
  return v >> bits;
}

}  // namespace detail

}  // namespace pairfold

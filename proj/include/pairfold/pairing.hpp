#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "pairfold/error.hpp"
#include "pairfold/integer.hpp"

namespace pairfold {

/// Selects one of the three pairing schemes. Names match the CLI spelling.
///
///   cantor  ordered bijection from pairs of non-negative integers
///   f       symmetric scheme on positive integers
///   g       symmetric scheme on non-negative integers
enum class Scheme { Cantor, F, G };

inline std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::Cantor: return "cantor";
    case Scheme::F: return "f";
    case Scheme::G: return "g";
  }
  return "?";
}

inline Scheme scheme_from_string(std::string_view name) {
  if (name == "cantor") return Scheme::Cantor;
  if (name == "f") return Scheme::F;
  if (name == "g") return Scheme::G;
  throw UsageError("unknown scheme '" + std::string(name) +
                   "' (expected cantor, f or g)");
}

/// Smallest coordinate a scheme admits: 1 for f, 0 for cantor and g.
inline Int scheme_origin(Scheme s) { return s == Scheme::F ? 1 : 0; }

/// An unordered pair held in canonical (max, min) form: m >= n >= 0.
/// The unique representative of {m, n} when order does not matter.
struct CanonicalPair {
  Int m;  ///< larger coordinate
  Int n;  ///< smaller coordinate

  CanonicalPair(Int m_, Int n_) : m(std::move(m_)), n(std::move(n_)) {
    if (n < 0 || m < n) throw DomainError("canonical pair requires m >= n >= 0");
  }

  /// Canonicalizes an unordered pair.
  static CanonicalPair of_unordered(const Int& u, const Int& v) {
    return CanonicalPair(max2(u, v), min2(u, v));
  }

  friend bool operator==(const CanonicalPair&, const CanonicalPair&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const CanonicalPair& p) {
  return os << '(' << p.m << ", " << p.n << ')';
}

/// Symmetric pairing on positive integers:
///
///   f_pair(m, n) = ((m+n-1)^2 - (m+n-1) % 2) / 4 + min(m, n)
///
/// f_pair(m, n) == f_pair(n, m) for all m, n >= 1, and the restriction to
/// canonical pairs (m >= n >= 1) is a bijection onto the positive integers.
inline Int f_pair(const Int& m, const Int& n) {
  if (m < 1 || n < 1) throw DomainError("f_pair is defined for m >= 1, n >= 1");
  const Int s = m + n - 1;
  // s*s - s%2 is a multiple of 4 for every s >= 1.
  return detail::exact_div_pow2(s * s - residue(s, 2), 2, "f_pair") + min2(m, n);
}

/// Inverse of f_pair: the unique canonical (m, n) with m >= n >= 1 and
/// f_pair(m, n) == c. Requires c >= 1; no positive pair maps to 0.
/// The closed form is re-checked by forward evaluation before returning.
inline CanonicalPair f_unpair(const Int& c) {
  if (c < 1) throw DomainError("f_unpair is defined for c >= 1");
  const Int t = floor_sqrt(c);
  const Int t_sq = t * t;
  const int a = sgn(c - t_sq);  // 0 iff c is a perfect square
  const int b = sgn_prime(c - t_sq - t);
  Int m = (1 - a) * t + a * ((t + 1) * (t + 1 + b) - c);
  Int n = (1 - a) * t + a * (c - t * (t + b));
  if (n < 1 || m < n || f_pair(m, n) != c)
    throw Error("f_unpair: inverse verification failed for c = " + c.str());
  return CanonicalPair(std::move(m), std::move(n));
}

/// Symmetric pairing on non-negative integers:
///
///   g_pair(m, n) = ((m+n+1)^2 - (m+n+1) % 2) / 4 + min(m, n)
///
/// Satisfies g_pair(m, n) == g_pair(n, m) and the shift identity
/// g_pair(m, n) == f_pair(m+1, n+1) - 1.
inline Int g_pair(const Int& m, const Int& n) {
  if (m < 0 || n < 0) throw DomainError("g_pair is defined for m >= 0, n >= 0");
  const Int s = m + n + 1;
  return detail::exact_div_pow2(s * s - residue(s, 2), 2, "g_pair") + min2(m, n);
}

/// Inverse of g_pair: the unique canonical (m, n) with m >= n >= 0 and
/// g_pair(m, n) == c. Total on c >= 0; re-checked by forward evaluation.
inline CanonicalPair g_unpair(const Int& c) {
  if (c < 0) throw DomainError("g_unpair is defined for c >= 0");
  const Int t = floor_sqrt(c);
  const Int t_sq = t * t;
  const int a = sgn(c - t_sq);
  const int b = sgn_prime(t_sq + t - c);
  const int t_pos = sgn(t);  // zero only when c == 0
  Int m = t_pos * ((2 * t - 1) * (1 - a) + a * (t * (t + 3) - (t + 1) * b - c));
  Int n = t_pos * (a * (c - t * (t + 1 - b)));
  if (n < 0 || m < n || g_pair(m, n) != c)
    throw Error("g_unpair: inverse verification failed for c = " + c.str());
  return CanonicalPair(std::move(m), std::move(n));
}

/// Order-preserving pairing on non-negative integers:
///
///   cantor_pair(m, n) = (m+n)(m+n+1)/2 + n
///
/// A bijection from ordered pairs onto the non-negative integers; this is
/// the scheme to use when (m, n) and (n, m) must stay distinguishable.
inline Int cantor_pair(const Int& m, const Int& n) {
  if (m < 0 || n < 0)
    throw DomainError("cantor_pair is defined for m >= 0, n >= 0");
  // (m+n)(m+n+1) is a product of consecutive integers, hence even.
  return detail::exact_div_pow2((m + n) * (m + n + 1), 1, "cantor_pair") + n;
}

/// Inverse of cantor_pair; total on z >= 0. The diagonal is recovered with
/// the exact integer square root and the result is re-checked by forward
/// evaluation before returning.
inline std::pair<Int, Int> cantor_unpair(const Int& z) {
  if (z < 0) throw DomainError("cantor_unpair is defined for z >= 0");
  const Int w = (floor_sqrt(8 * z + 1) - 1) / 2;  // diagonal: w(w+1)/2 <= z
  Int n = z - w * (w + 1) / 2;
  Int m = w - n;
  if (m < 0 || n < 0 || cantor_pair(m, n) != z)
    throw Error("cantor_unpair: inverse verification failed for z = " + z.str());
  return {std::move(m), std::move(n)};
}

/// Scheme-dispatched forward evaluation.
inline Int pair_value(Scheme s, const Int& m, const Int& n) {
  switch (s) {
    case Scheme::Cantor: return cantor_pair(m, n);
    case Scheme::F: return f_pair(m, n);
    case Scheme::G: return g_pair(m, n);
  }
  throw UsageError("unknown scheme");
}

/// Scheme-dispatched inverse. For the symmetric schemes the result is the
/// canonical (max, min) pair; for cantor it is the exact ordered preimage.
inline std::pair<Int, Int> unpair_value(Scheme s, const Int& c) {
  switch (s) {
    case Scheme::Cantor: return cantor_unpair(c);
    case Scheme::F: {
      CanonicalPair p = f_unpair(c);
      return {std::move(p.m), std::move(p.n)};
    }
    case Scheme::G: {
      CanonicalPair p = g_unpair(c);
      return {std::move(p.m), std::move(p.n)};
    }
  }
  throw UsageError("unknown scheme");
}

}  // namespace pairfold

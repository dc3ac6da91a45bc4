#pragma once

#include <cctype>
#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pairfold/pairing.hpp"

namespace pairfold {

/// An ordered tuple folded onto one code. The arity is not recoverable
/// from the code; decoding needs it back.
struct TupleCode {
  Int code;
  std::size_t arity = 0;

  friend bool operator==(const TupleCode&, const TupleCode&) = default;
};

/// A scalar key for an unordered pair of endpoints. Swapping the endpoints
/// produces the same key; distinct endpoint multisets produce distinct keys.
struct EdgeKey {
  Int key;
  Scheme scheme = Scheme::F;  // f or g

  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
};

/// Folds a non-empty tuple of non-negative integers onto one code by
/// left-folding with cantor_pair. The fold is order-sensitive: cantor is
/// the one scheme that keeps (m, n) and (n, m) apart, so the tuple comes
/// back in its original order.
inline TupleCode encode_tuple(const std::vector<Int>& values) {
  if (values.empty()) throw DomainError("encode_tuple requires a non-empty tuple");
  for (const Int& v : values)
    if (v < 0) throw DomainError("encode_tuple requires non-negative entries");
  Int code = values.front();
  for (std::size_t i = 1; i < values.size(); ++i)
    code = cantor_pair(code, values[i]);
  return {std::move(code), values.size()};
}

/// Unfolds a tuple code back into its entries by peeling the last
/// coordinate arity-1 times. Total: every code decodes at every arity.
inline std::vector<Int> decode_tuple(const TupleCode& t) {
  if (t.arity < 1) throw DomainError("decode_tuple requires arity >= 1");
  if (t.code < 0) throw DomainError("decode_tuple requires a non-negative code");
  std::vector<Int> out(t.arity);
  Int rest = t.code;
  for (std::size_t i = t.arity; i-- > 1;) {
    auto [head, tail] = cantor_unpair(rest);
    out[i] = std::move(tail);
    rest = std::move(head);
  }
  out[0] = std::move(rest);
  return out;
}

/// Key for the unordered pair {u, v} under a symmetric scheme (f or g).
/// Scheme f needs both endpoints >= 1.
inline EdgeKey encode_unordered(const Int& u, const Int& v, Scheme scheme) {
  switch (scheme) {
    case Scheme::F: return {f_pair(u, v), scheme};
    case Scheme::G: return {g_pair(u, v), scheme};
    default: throw DomainError("unordered keys use scheme f or g");
  }
}

/// Recovers the canonical (max, min) endpoint pair from an edge key.
inline CanonicalPair decode_unordered(const EdgeKey& k) {
  switch (k.scheme) {
    case Scheme::F: return f_unpair(k.key);
    case Scheme::G: return g_unpair(k.key);
    default: throw DomainError("unordered keys use scheme f or g");
  }
}

namespace detail {

inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char ch : s)
    if (!std::isdigit(ch)) return false;
  return true;
}

}  // namespace detail

/// Encodes a two-column edge list, one key per input line, in input order.
///
/// Each payload line holds two whitespace-separated decimal naturals.
/// Blank lines and lines whose first non-blank character is '#' are
/// skipped. LF and CRLF are both accepted; output is LF only. Errors name
/// the offending 1-based line number.
inline void encode_edge_stream(std::istream& in, Scheme scheme,
                               std::ostream& out) {
  if (scheme != Scheme::F && scheme != Scheme::G)
    throw DomainError("edge keys use scheme f or g");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
      if (pos > start) tokens.push_back(line.substr(start, pos - start));
    }
    if (tokens.empty()) continue;            // blank line
    if (tokens.front()[0] == '#') continue;  // comment line

    if (tokens.size() != 2 || !detail::all_digits(tokens[0]) ||
        !detail::all_digits(tokens[1]))
      throw ParseError(line_no, "expected two whitespace-separated decimal naturals");
    const Int u(tokens[0]);
    const Int v(tokens[1]);
    if (scheme == Scheme::F && (u < 1 || v < 1))
      throw DomainError("line " + std::to_string(line_no) +
                        ": scheme f requires endpoints >= 1");
    out << encode_unordered(u, v, scheme).key << '\n';
  }
}

}  // namespace pairfold

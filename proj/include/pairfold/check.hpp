#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pairfold/codec.hpp"
#include "pairfold/enumeration.hpp"

namespace pairfold {

/// Outcome of one verification suite.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // range note, or first counterexample on failure
};

/// Outcome of a run_checks invocation.
struct CheckReport {
  std::vector<CheckResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

namespace detail {

inline std::string pair_str(const Int& m, const Int& n) {
  return "(" + m.str() + ", " + n.str() + ")";
}

}  // namespace detail

/// Runs every self-verification suite at the given scale and reports one
/// result per suite. `limit` bounds the code ranges and the diagonal sums;
/// the quadratic grid sweeps are capped at 1000 and the codec sweeps at
/// their own desk scales, independent of larger limits.
inline CheckReport run_checks(std::uint64_t limit) {
  CheckReport report;
  const std::uint64_t grid =
      limit < 1000 ? (limit < 2 ? 2 : limit) : 1000;

  {  // Forward and inverse of f against the diagonal walk.
    CheckResult r{.name = "f forward/inverse along the diagonal walk",
                  .detail = "codes 1.." + std::to_string(limit)};
    DiagonalOrderIterator it;
    for (std::uint64_t k = 1; k <= limit; ++k, ++it) {
      const CanonicalPair p = *it;
      if (f_pair(p.m, p.n) != k) {
        r.pass = false;
        r.detail = "f" + detail::pair_str(p.m, p.n) + " != " + std::to_string(k);
        break;
      }
      if (const CanonicalPair q = f_unpair(Int(k)); q != p) {
        r.pass = false;
        r.detail = "f_unpair(" + std::to_string(k) + ") = " +
                   detail::pair_str(q.m, q.n) + ", walk gives " +
                   detail::pair_str(p.m, p.n);
        break;
      }
    }
    report.results.push_back(std::move(r));
  }

  {  // Inverse of g: round trip plus the shift identity.
    CheckResult r{.name = "g inverse round-trip and shift identity",
                  .detail = "codes 0.." + std::to_string(limit)};
    for (std::uint64_t c = 0; c <= limit; ++c) {
      const CanonicalPair p = g_unpair(Int(c));
      if (g_pair(p.m, p.n) != c) {
        r.pass = false;
        r.detail = "g" + detail::pair_str(p.m, p.n) + " != " + std::to_string(c);
        break;
      }
      const CanonicalPair q = f_unpair(Int(c) + 1);
      if (q.m - 1 != p.m || q.n - 1 != p.n) {
        r.pass = false;
        r.detail = "g_unpair(" + std::to_string(c) + ") = " +
                   detail::pair_str(p.m, p.n) + " but f_unpair(" +
                   std::to_string(c + 1) + ") = " + detail::pair_str(q.m, q.n);
        break;
      }
    }
    report.results.push_back(std::move(r));
  }

  {  // Cantor inverse: code round trip and pair round trip.
    CheckResult r{.name = "cantor inverse round-trip",
                  .detail = "codes 0.." + std::to_string(limit) +
                            ", pairs up to " + std::to_string(grid < 300 ? grid : 300)};
    for (std::uint64_t z = 0; z <= limit && r.pass; ++z) {
      const auto [m, n] = cantor_unpair(Int(z));
      if (cantor_pair(m, n) != z) {
        r.pass = false;
        r.detail = "cantor" + detail::pair_str(m, n) + " != " + std::to_string(z);
      }
    }
    const std::uint64_t side = grid < 300 ? grid : 300;
    for (std::uint64_t m = 0; m <= side && r.pass; ++m)
      for (std::uint64_t n = 0; n <= side && r.pass; ++n) {
        const auto back = cantor_unpair(cantor_pair(Int(m), Int(n)));
        if (back.first != m || back.second != n) {
          r.pass = false;
          r.detail = "pair " + detail::pair_str(Int(m), Int(n)) +
                     " came back as " + detail::pair_str(back.first, back.second);
        }
      }
    report.results.push_back(std::move(r));
  }

  {  // Symmetry of f and g, and the shift identity, on a grid.
    CheckResult r{.name = "symmetry and shift identity on a grid",
                  .detail = "coordinates up to " + std::to_string(grid)};
    for (std::uint64_t m = 1; m <= grid && r.pass; ++m)
      for (std::uint64_t n = 1; n <= m; ++n) {
        const Int im(m), in_(n);
        const Int fv = f_pair(im, in_);
        if (f_pair(in_, im) != fv) {
          r.pass = false;
          r.detail = "f" + detail::pair_str(im, in_) + " != f" +
                     detail::pair_str(in_, im);
          break;
        }
        const Int gv = g_pair(im - 1, in_ - 1);
        if (g_pair(in_ - 1, im - 1) != gv) {
          r.pass = false;
          r.detail = "g" + detail::pair_str(im - 1, in_ - 1) + " != g" +
                     detail::pair_str(in_ - 1, im - 1);
          break;
        }
        if (gv != fv - 1) {
          r.pass = false;
          r.detail = "g" + detail::pair_str(im - 1, in_ - 1) + " = " + gv.str() +
                     " but f" + detail::pair_str(im, in_) + " - 1 = " +
                     Int(fv - 1).str();
          break;
        }
      }
    report.results.push_back(std::move(r));
  }

  {  // Helper identities: floor/parity decompositions, clamped signum,
     // extremum closed forms.
    CheckResult r{.name = "arithmetic helper identities",
                  .detail = "x up to " +
                            std::to_string(limit < 10000 ? limit : 10000)};
    const std::uint64_t top = limit < 10000 ? limit : 10000;
    for (std::uint64_t x = 1; x <= top; ++x) {
      const Int ix(x);
      if (((ix + 1) / 2) * 2 - residue(ix, 2) != ix ||
          (ix / 2) * 2 + residue(ix, 2) != ix) {
        r.pass = false;
        r.detail = "floor/parity decomposition fails at x = " + std::to_string(x);
        break;
      }
    }
    for (long long x = -1000; x <= 1000 && r.pass; ++x) {
      const Int ix(x);
      const int s = sgn(ix);
      if (sgn_prime(ix) != (s * s + s) / 2) {
        r.pass = false;
        r.detail = "clamped signum mismatch at x = " + std::to_string(x);
      }
    }
    for (long long x = -40; x <= 40 && r.pass; ++x)
      for (long long y = -40; y <= 40 && r.pass; ++y) {
        const Int ix(x), iy(y);
        const Int d = ix - iy < 0 ? iy - ix : ix - iy;
        if (max2(ix, iy) != (ix + iy + d) / 2 || min2(ix, iy) != (ix + iy - d) / 2) {
          r.pass = false;
          r.detail = "extremum closed form fails at (" + std::to_string(x) +
                     ", " + std::to_string(y) + ")";
        }
      }
    report.results.push_back(std::move(r));
  }

  {  // Diagonal structure: size and shape of each materialized diagonal.
    CheckResult r{.name = "diagonal sizes and shapes",
                  .detail = "sums 2.." + std::to_string(grid)};
    for (std::uint64_t sum = 2; sum <= grid && r.pass; ++sum) {
      const auto diag = diagonal_elements(Int(sum));
      if (diag.size() != sum / 2) {
        r.pass = false;
        r.detail = "|diagonal " + std::to_string(sum) + "| = " +
                   std::to_string(diag.size()) + ", want " +
                   std::to_string(sum / 2);
        break;
      }
      for (std::size_t idx = 0; idx < diag.size(); ++idx) {
        const auto& p = diag[idx];
        if (p.m + p.n != sum || p.m < p.n || p.n != idx + 1) {
          r.pass = false;
          r.detail = "diagonal " + std::to_string(sum) + " entry " +
                     std::to_string(idx) + " is " + detail::pair_str(p.m, p.n);
          break;
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  {  // Enumeration law suite.
    const LemmaReport laws = check_lemmas(Int(limit < 2 ? 2 : limit));
    for (const auto& law : laws.checks) {
      CheckResult r{.name = law.name,
                    .pass = law.pass,
                    .detail = law.pass
                                  ? "sums 2.." + std::to_string(limit < 2 ? 2 : limit)
                                  : law.counterexample};
      report.results.push_back(std::move(r));
    }
  }

  {  // Codec round trips: ordered tuples and unordered keys.
    CheckResult r{.name = "tuple and edge codec round-trips",
                  .detail = "tuples of arity <= 3 over 0..12, endpoints up to 40"};
    for (std::uint64_t a = 0; a <= 12 && r.pass; ++a) {
      if (decode_tuple(encode_tuple({Int(a)})) != std::vector<Int>{Int(a)})
        r.pass = false;
      for (std::uint64_t b = 0; b <= 12 && r.pass; ++b) {
        if (decode_tuple(encode_tuple({Int(a), Int(b)})) !=
            std::vector<Int>({Int(a), Int(b)}))
          r.pass = false;
        for (std::uint64_t c = 0; c <= 12 && r.pass; ++c)
          if (decode_tuple(encode_tuple({Int(a), Int(b), Int(c)})) !=
              std::vector<Int>({Int(a), Int(b), Int(c)}))
            r.pass = false;
      }
    }
    if (!r.pass) r.detail = "a tuple failed to round-trip";
    std::map<Int, std::pair<std::uint64_t, std::uint64_t>> seen_f, seen_g;
    for (std::uint64_t u = 0; u <= 40 && r.pass; ++u)
      for (std::uint64_t v = 0; v <= u && r.pass; ++v) {
        if (u >= 1 && v >= 1) {
          const EdgeKey k = encode_unordered(Int(u), Int(v), Scheme::F);
          if (encode_unordered(Int(v), Int(u), Scheme::F) != k ||
              decode_unordered(k) != CanonicalPair(Int(u), Int(v)) ||
              !seen_f.emplace(k.key, std::make_pair(u, v)).second) {
            r.pass = false;
            r.detail = "scheme f key misbehaves for {" + std::to_string(u) +
                       ", " + std::to_string(v) + "}";
          }
        }
        const EdgeKey k = encode_unordered(Int(u), Int(v), Scheme::G);
        if (encode_unordered(Int(v), Int(u), Scheme::G) != k ||
            decode_unordered(k) != CanonicalPair(Int(u), Int(v)) ||
            !seen_g.emplace(k.key, std::make_pair(u, v)).second) {
          r.pass = false;
          r.detail = "scheme g key misbehaves for {" + std::to_string(u) +
                     ", " + std::to_string(v) + "}";
        }
      }
    report.results.push_back(std::move(r));
  }

  return report;
}

/// One line per suite plus a summary line.
inline void print_report(const CheckReport& report, std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& r : report.results) {
    if (r.pass) {
      ++passed;
      out << "ok    " << r.name << "  (" << r.detail << ")\n";
    } else {
      out << "FAIL  " << r.name << ": " << r.detail << "\n";
    }
  }
  out << passed << "/" << report.results.size() << " suites passed\n";
}

}  // namespace pairfold

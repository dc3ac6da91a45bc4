#pragma once

#include <cstddef>
#include <iterator>
#include <limits>
#include <ranges>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pairfold/pairing.hpp"

namespace pairfold {

/// Forward iterator over every canonical pair with m >= n >= 1, ordered by
/// coordinate sum and, within one sum, by ascending smaller coordinate:
///
///   (1,1), (2,1), (3,1), (2,2), (4,1), (3,2), (5,1), (4,2), (3,3), ...
///
/// The 1-based position of a pair in this sequence equals f_pair of the
/// pair. The sequence is infinite: bound it with std::views::take or an
/// explicit break. Walking it touches neither f_pair nor f_unpair, so it
/// doubles as an independent reference for both.
class DiagonalOrderIterator {
 public:
  using value_type = CanonicalPair;
  using difference_type = std::ptrdiff_t;

  DiagonalOrderIterator() = default;

  CanonicalPair operator*() const { return CanonicalPair(sum_ - y_, y_); }

  DiagonalOrderIterator& operator++() {
    if (2 * (y_ + 1) <= sum_) {
      ++y_;
    } else {
      ++sum_;
      y_ = 1;
    }
    return *this;
  }

  DiagonalOrderIterator operator++(int) {
    DiagonalOrderIterator copy = *this;
    ++*this;
    return copy;
  }

  friend bool operator==(const DiagonalOrderIterator&,
                         const DiagonalOrderIterator&) = default;

 private:
  Int sum_ = 2;  // current coordinate sum
  Int y_ = 1;    // smaller coordinate, 1 .. sum/2
};

/// The enumeration above as an (infinite) C++20 view.
struct DiagonalOrder : std::ranges::view_interface<DiagonalOrder> {
  DiagonalOrderIterator begin() const { return {}; }
  std::unreachable_sentinel_t end() const { return {}; }
};

/// All canonical pairs whose coordinates sum to `sum`, by ascending smaller
/// coordinate: (sum-1, 1), (sum-2, 2), ... Requires sum >= 2; the result
/// has exactly floor(sum/2) entries.
inline std::vector<CanonicalPair> diagonal_elements(const Int& sum) {
  if (sum < 2) throw DomainError("diagonal_elements requires sum >= 2");
  const Int count = sum / 2;
  if (count > std::numeric_limits<std::size_t>::max())
    throw std::length_error("diagonal_elements: diagonal too large to materialize");
  std::vector<CanonicalPair> out;
  out.reserve(count.convert_to<std::size_t>());
  for (Int y = 1; 2 * y <= sum; ++y) out.emplace_back(sum - y, y);
  return out;
}

/// k-th element (1-based) of the diagonal-order enumeration, found by
/// walking the diagonals. Linear in k; never consults the closed-form
/// inverse.
inline CanonicalPair unrank(const Int& k) {
  if (k < 1) throw DomainError("unrank requires k >= 1");
  DiagonalOrderIterator it;
  for (Int step = 1; step < k; ++step) ++it;
  return *it;
}

/// 1-based position of a canonical pair in the enumeration. Equals
/// f_pair(p.m, p.n); both coordinates must be >= 1.
inline Int rank(const CanonicalPair& p) {
  if (p.n < 1) throw DomainError("rank requires coordinates >= 1");
  return f_pair(p.m, p.n);
}

/// Outcome of one enumeration law at one scale.
struct LemmaCheck {
  std::string name;
  bool pass = true;
  std::string counterexample;  // empty while pass
};

/// Outcome of the whole law suite.
struct LemmaReport {
  std::vector<LemmaCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

/// Law suite over an arbitrary pair function, used so the checker itself
/// can be exercised against a deliberately broken function in tests.
template <typename PairFn>
LemmaReport check_diagonal_laws(const Int& max_sum, PairFn&& value_of) {
  LemmaCheck within{"unit step within a diagonal"};
  LemmaCheck across{"unit step across the diagonal boundary"};
  LemmaCheck disjoint{"diagonal value ranges are disjoint and increasing"};

  auto note = [](LemmaCheck& check, const std::string& text) {
    if (check.pass) {
      check.pass = false;
      check.counterexample = text;
    }
  };
  auto cell = [](const Int& m, const Int& n) {
    std::ostringstream os;
    os << "value(" << m << ", " << n << ")";
    return os.str();
  };

  bool have_prev = false;
  Int prev_lo = 0, prev_hi = 0;   // value extrema of the previous diagonal
  Int prev_last = 0;              // value of its positionally last pair
  Int prev_m = 0, prev_n = 0;     // that pair
  for (Int sum = 2; sum <= max_sum; ++sum) {
    Int lo = 0, hi = 0, last = 0;
    bool first = true;
    for (Int y = 1; 2 * y <= sum; ++y) {
      const Int x = sum - y;
      const Int v = value_of(x, y);
      if (first) {
        lo = hi = v;
        first = false;
        if (have_prev && v != prev_last + 1)
          note(across, cell(x, y) + " = " + v.str() + " but " +
                           cell(prev_m, prev_n) + " = " + prev_last.str());
      } else {
        if (v != last + 1)
          note(within, cell(x, y) + " = " + v.str() + " after " +
                           cell(x + 1, y - 1) + " = " + last.str());
        if (v < lo) lo = v;
        if (v > hi) hi = v;
      }
      last = v;
      prev_m = x;
      prev_n = y;
    }
    if (have_prev && !(prev_hi < lo))
      note(disjoint, "sums " + Int(sum - 1).str() + " and " + sum.str() +
                         " span [" + prev_lo.str() + ", " + prev_hi.str() +
                         "] and [" + lo.str() + ", " + hi.str() + "]");
    prev_lo = lo;
    prev_hi = hi;
    prev_last = last;
    have_prev = true;
  }

  return LemmaReport{{within, across, disjoint}};
}

}  // namespace detail

/// Checks, for every coordinate sum up to and including max_sum, that
///
///   - consecutive pairs within one diagonal have f-values one apart,
///   - the first f-value of a diagonal is one past the last of the
///     previous diagonal,
///   - every f-value on a diagonal lies below every f-value on the next.
///
/// Each law reports its first counterexample, if any. Requires max_sum >= 2.
inline LemmaReport check_lemmas(const Int& max_sum) {
  if (max_sum < 2) throw DomainError("check_lemmas requires max_sum >= 2");
  return detail::check_diagonal_laws(
      max_sum, [](const Int& m, const Int& n) { return f_pair(m, n); });
}

}  // namespace pairfold

#pragma once

// Test-only brute force over explicit finite sets. Nothing here calls into
// the library apart from constructing values to compare against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "numdup/ideal.hpp"
#include "numdup/semigroup.hpp"

namespace brute {

using numdup::Int;

// Members of the monoid generated by `gens` below `bound`, by sieving sums.
inline std::set<Int> closure(std::vector<Int> const& gens, Int bound) {
  std::vector<bool> reach(static_cast<std::size_t>(bound), false);
  reach[0] = true;
  for (Int x = 1; x < bound; ++x) {
    for (Int a : gens) {
      if (a <= x && reach[static_cast<std::size_t>(x - a)]) {
        reach[static_cast<std::size_t>(x)] = true;
      }
    }
  }
  std::set<Int> out;
  for (Int x = 0; x < bound; ++x) {
    if (reach[static_cast<std::size_t>(x)]) out.insert(x);
  }
  return out;
}

inline std::vector<Int> gaps_below(std::set<Int> const& members, Int bound) {
  std::vector<Int> out;
  for (Int x = 1; x < bound; ++x) {
    if (!members.count(x)) out.push_back(x);
  }
  return out;
}

// All gap sets of numerical semigroups of genus <= max_genus: subsets of
// [1, 2 max_genus - 1] whose complement is additively closed.
inline std::vector<std::vector<Int>> gap_sets(Int max_genus) {
  std::vector<std::vector<Int>> out;
  Int const top = std::max<Int>(2 * max_genus - 1, 0);
  std::uint64_t const subsets = std::uint64_t{1} << top;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (std::popcount(mask) > max_genus) continue;
    std::vector<bool> gap(static_cast<std::size_t>(2 * top + 2), false);
    std::vector<Int> gaps;
    for (Int i = 0; i < top; ++i) {
      if (mask >> i & 1U) {
        gap[static_cast<std::size_t>(i + 1)] = true;
        gaps.push_back(i + 1);
      }
    }
    bool closed = true;
    for (Int a = 1; a <= top && closed; ++a) {
      if (gap[static_cast<std::size_t>(a)]) continue;
      for (Int b = a; a + b <= top && closed; ++b) {
        closed = gap[static_cast<std::size_t>(b)] ||
                 !gap[static_cast<std::size_t>(a + b)];
      }
    }
    if (closed) out.push_back(gaps);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<numdup::NumericalSemigroup> semigroups(Int max_genus) {
  std::vector<numdup::NumericalSemigroup> out;
  for (auto const& g : gap_sets(max_genus)) {
    out.push_back(numdup::NumericalSemigroup::from_gaps(g));
  }
  return out;
}

// A finite window [lo, hi] of a set together with "everything above hi".
struct TailSet {
  Int lo = 0;
  Int hi = 0;
  std::set<Int> window;

  bool contains(Int x) const {
    return x > hi || (x >= lo && window.count(x) != 0);
  }
};

inline TailSet of(numdup::RelativeIdeal const& e, Int lo, Int hi) {
  TailSet t{lo, hi, {}};
  for (Int x = lo; x <= hi; ++x) {
    if (e.contains(x)) t.window.insert(x);
  }
  return t;
}

// Pseudo-Frobenius numbers straight from the definition on a window large
// enough for the given membership test.
template <typename Member>
std::vector<Int> pseudo_frobenius(Member const& in, Int f) {
  std::vector<Int> out;
  for (Int x = -2 * f - 4; x <= 2 * f + 4; ++x) {
    if (in(x)) continue;
    bool ok = true;
    for (Int s = 1; s <= 4 * f + 10 && ok; ++s) {
      if (in(s)) ok = in(x + s) && x + s != 0;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace brute

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<std::vector<numdup::Int>> {
  static String convert(std::vector<numdup::Int> const& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(xs[i]);
    }
    return (out + "}").c_str();
  }
};
}  // namespace doctest
#endif

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "numdup/semigroup.hpp"

namespace numdup {

// A relative ideal E of a numerical semigroup S: E + S within E, E bounded
// below and containing every integer past f(E).
//
// Normal form: m(E) = min E, f(E) = max(Z \ E) and a membership table over
// [m(E), f(E)]. When E has no holes, f(E) = m(E) - 1 and the table is empty.
class RelativeIdeal {
 public:
  // Members of E are exactly the x >= lo with member(x) true, plus all
  // x > hi. Validates S-stability (NotAnIdeal).
  static RelativeIdeal from_predicate(NumericalSemigroup base, Int lo, Int hi,
                                      std::function<bool(Int)> const& member);

  // Same, without the stability check. Used only by the verification
  // harness to build deliberately broken inputs.
  static RelativeIdeal unchecked(NumericalSemigroup base, Int lo, Int hi,
                                 std::function<bool(Int)> const& member);

  NumericalSemigroup const& base() const noexcept { return base_; }

  bool contains(Int x) const noexcept {
    if (x < min_) return false;
    if (x > frobenius_) return true;
    return window_[static_cast<std::size_t>(x - min_)] != 0;
  }

  Int min() const noexcept { return min_; }
  Int frobenius() const noexcept { return frobenius_; }
  // g(E) = |(Z \ E) in [m(E), f(E)]|.
  Int genus() const noexcept;

  // Membership over [m(E), f(E)]; empty when E = {m(E), ->}.
  std::vector<std::uint8_t> const& window() const noexcept { return window_; }

  // Elements of E in [m(E), f(E) + 1].
  std::vector<Int> small_elements() const;

  friend bool operator==(RelativeIdeal const& a, RelativeIdeal const& b) {
    return a.min_ == b.min_ && a.frobenius_ == b.frobenius_ &&
           a.window_ == b.window_ && a.base_ == b.base_;
  }

 private:
  RelativeIdeal(NumericalSemigroup base, Int min, Int frobenius,
                std::vector<std::uint8_t> window)
      : base_(std::move(base)),
        min_(min),
        frobenius_(frobenius),
        window_(std::move(window)) {}

  NumericalSemigroup base_;
  Int min_ = 0;
  Int frobenius_ = -1;
  std::vector<std::uint8_t> window_;
};

// Union of t + S over `elems`. EmptyGenerators for an empty list.
RelativeIdeal ideal_generated_by(NumericalSemigroup const& s,
                                 std::span<Int const> elems);
inline RelativeIdeal ideal_generated_by(NumericalSemigroup const& s,
                                        std::initializer_list<Int> elems) {
  return ideal_generated_by(s, std::span<Int const>(elems.begin(),
                                                    elems.size()));
}

// S as an ideal of itself.
RelativeIdeal as_ideal(NumericalSemigroup const& s);
// M(S) = S \ {0}; NaturalsUnsupported for N.
RelativeIdeal maximal_ideal(NumericalSemigroup const& s);
// C(S) = {f(S) + 1, ->}.
RelativeIdeal conductor_ideal(NumericalSemigroup const& s);
// K(S) = {x : f(S) - x not in S}; K(N) = N.
RelativeIdeal canonical_ideal(NumericalSemigroup const& s);

RelativeIdeal sum(RelativeIdeal const& e, RelativeIdeal const& f);
// e + e + ... + e, n times; n_fold(e, 0) == S.
RelativeIdeal n_fold(RelativeIdeal const& e, Int n);
// E - F = {z : z + F within E}.
RelativeIdeal difference(RelativeIdeal const& e, RelativeIdeal const& f);
RelativeIdeal intersect(RelativeIdeal const& e, RelativeIdeal const& f);
RelativeIdeal unite(RelativeIdeal const& e, RelativeIdeal const& f);

RelativeIdeal translate(RelativeIdeal const& e, Int x);
// The translate with f(E~) = f(S).
RelativeIdeal normalize(RelativeIdeal const& e);

enum class DualCheck { Fast, CrossCheck };

// K(S) - E via {x : f(S) - x not in E}. With DualCheck::CrossCheck the raw
// difference K(S) - E is computed as well and InternalMismatch is thrown if
// the two disagree.
RelativeIdeal dual(RelativeIdeal const& e, DualCheck check = DualCheck::Fast);

bool is_canonical(RelativeIdeal const& e);

// 0 in E, E within N, and E closed under addition.
bool is_semigroup_set(RelativeIdeal const& e);
// A pair of elements whose sum escapes E, if E contains 0 and lies in N but
// is not additively closed.
std::optional<std::pair<Int, Int>> closure_witness(RelativeIdeal const& e);
// E as a numerical semigroup. NotClosed if is_semigroup_set(e) is false.
NumericalSemigroup to_semigroup(RelativeIdeal const& e);

bool is_subset(RelativeIdeal const& e, RelativeIdeal const& f);
// |E \ F|; always finite because F contains a tail of Z.
Int count_difference(RelativeIdeal const& e, RelativeIdeal const& f);
// Elements of E \ F, ascending.
std::vector<Int> set_difference(RelativeIdeal const& e, RelativeIdeal const& f);
// |E \ S| with S the base semigroup.
Int count_outside_base(RelativeIdeal const& e);

// Elements of E not in E + M(S): the unique minimal generating set.
std::vector<Int> minimal_generators(RelativeIdeal const& e);

inline Int ideal_min(RelativeIdeal const& e) { return e.min(); }
inline Int ideal_frobenius(RelativeIdeal const& e) { return e.frobenius(); }
inline Int ideal_genus(RelativeIdeal const& e) { return e.genus(); }

}  // namespace numdup

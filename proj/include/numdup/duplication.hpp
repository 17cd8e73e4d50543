#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "numdup/ideal.hpp"
#include "numdup/semigroup.hpp"

namespace numdup {

enum class IdealMode {
  // E is an ideal contained in S.
  Strict,
  // E is a relative ideal with b + E + E within S.
  Relaxed,
};

// A validated triple (S, E, b).
class DuplicationInput {
 public:
  // Throws BaseMismatch, BNotOddMember, IdealNotInS (strict) or
  // RelaxedConditionFails (relaxed).
  DuplicationInput(RelativeIdeal ideal, Int b,
                   IdealMode mode = IdealMode::Strict);

  NumericalSemigroup const& base() const noexcept { return ideal_.base(); }
  RelativeIdeal const& ideal() const noexcept { return ideal_; }
  Int b() const noexcept { return b_; }
  IdealMode mode() const noexcept { return mode_; }
  // e = f(E) - f(S).
  Int shift() const noexcept {
    return ideal_.frobenius() - base().frobenius();
  }

 private:
  RelativeIdeal ideal_;
  Int b_;
  IdealMode mode_;
};

// 2.S u (2.E + b).
NumericalSemigroup duplicate(DuplicationInput const& in);

// 2 f(E) + b.
Int predicted_frobenius(DuplicationInput const& in);
// g(S) + g(E) + m(E) + (b - 1) / 2.
Int predicted_genus(DuplicationInput const& in);
// |((M - M) n (E - E)) \ S| + |(E - M) \ E|; independent of b.
// IdealNotInS unless E lies in S.
Int predicted_type(RelativeIdeal const& e);

// z in K(S x_b E), decided from S and E alone: with a = 2 f(E) + b - z,
// a even needs a/2 not in S, a odd needs (a - b)/2 not in E.
bool duplication_canonical_membership(DuplicationInput const& in, Int z);

enum class AlmostSymmetricClause {
  None,
  // K - (M - M) is not inside E~; witness is an element of the difference.
  LowerBound,
  // E~ is not inside K; witness is an element of the difference.
  UpperBound,
  // K - E~ is not additively closed; witness pair sums outside it.
  DualNotSemigroup,
};

struct AlmostSymmetricVerdict {
  bool holds = false;
  AlmostSymmetricClause failed = AlmostSymmetricClause::None;
  std::optional<Int> witness;
  std::optional<std::pair<Int, Int>> witness_pair;
  RelativeIdeal normalized;
  RelativeIdeal dual;
};

// Whether S x_b E is almost symmetric, judged on E~ = normalize(E):
// K - (M - M) within E~ within K, and K - E~ a numerical semigroup.
// IdealNotInS unless E lies in S.
AlmostSymmetricVerdict is_almost_symmetric_duplication(RelativeIdeal const& e);

// Type of an almost symmetric duplication from the three closed forms
// 2|(E - M) \ E| - 1, 2|(K - E~) \ S| + 1 and 2|K \ E~| + 1, which must
// agree. NotAlmostSymmetric otherwise.
Int almost_symmetric_type(RelativeIdeal const& e);

struct AdmissibleIdeal {
  RelativeIdeal normalized;
  RelativeIdeal dual;
  bool dual_is_semigroup = false;
  // Set iff the dual is a semigroup, i.e. the duplication is almost
  // symmetric.
  std::optional<Int> type;
};

// Every relative ideal E~ with K - (M - M) within E~ within K, smallest
// first; ties broken so the largest added elements come first.
// CapacityExceeded past 2^20 candidate subsets.
std::vector<AdmissibleIdeal> enumerate_admissible(NumericalSemigroup const& s);

// Least z >= 0 with e + z inside S (exists because E is bounded below).
Int minimal_shift_into_base(RelativeIdeal const& e);

// Successive z >= 0 with e + z inside S, ascending.
class ShiftSequence {
 public:
  explicit ShiftSequence(RelativeIdeal e) : ideal_(std::move(e)) {}
  Int next();

 private:
  RelativeIdeal ideal_;
  Int cursor_ = 0;
};

struct ShiftPolicy {
  // Unset: the least valid shift.
  std::optional<Int> shift;
  static ShiftPolicy minimal() { return {}; }
  static ShiftPolicy exact(Int z) { return {z}; }
};

// E~ = K - F with F = S plus the (x - 1)/2 largest pseudo-Frobenius numbers.
RelativeIdeal prescribed_type_normalized(NumericalSemigroup const& s, Int x);

// An ideal E inside S with S x_b E almost symmetric of type x, for any odd b.
// TypeEven, TypeOutOfRange (x outside [1, 2 t(S) + 1]), IdealNotInS for an
// explicit shift that leaves S.
RelativeIdeal construct_prescribed_type(NumericalSemigroup const& s, Int x,
                                        ShiftPolicy policy = {});

// `count` shift-distinct ideals of type x, from the least valid shift up.
std::vector<RelativeIdeal> construct_prescribed_family(
    NumericalSemigroup const& s, Int x, Int count);

// n.S u (n.E + b) u (n.(2E) + 2b) u ... u (n.((n-1)E) + (n-1)b).
// InvalidArgument for n < 2, BNotMember, GcdCondition, IdealNotInS.
NumericalSemigroup n_tuplicate(RelativeIdeal const& e, Int b, Int n);

}  // namespace numdup

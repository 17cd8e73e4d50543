#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "numdup/error.hpp"

namespace numdup {

// A numerical semigroup S: a submonoid of N with finite complement.
//
// Stored as a membership table over [0, c] where c = f(S) + 1 is the
// conductor value; every integer >= c is an element. Instances are
// immutable and share their table, so copies are cheap.
class NumericalSemigroup {
 public:
  // The semigroup N.
  NumericalSemigroup();

  // Smallest numerical semigroup containing `gens`.
  // Throws InvalidArgument for empty or non-positive input and GcdNotOne
  // when the generated monoid has infinite complement.
  static NumericalSemigroup from_generators(std::span<Int const> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<Int const>(gens.begin(), gens.size()));
  }

  // N minus `gaps`. Throws NotClosed(a, b) if a, b are members but a + b is a
  // gap, InvalidArgument for non-positive gaps.
  static NumericalSemigroup from_gaps(std::span<Int const> gaps);
  static NumericalSemigroup from_gaps(std::initializer_list<Int> gaps) {
    return from_gaps(std::span<Int const>(gaps.begin(), gaps.size()));
  }

  // Membership of [0, table.size()) given by `table`, everything beyond is a
  // member. Validates 0 in S and additive closure (NotClosed).
  static NumericalSemigroup from_membership(std::vector<std::uint8_t> table);

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    if (x >= conductor()) return true;
    return d_->table[static_cast<std::size_t>(x)] != 0;
  }

  bool is_naturals() const noexcept { return conductor() == 0; }

  Int conductor() const noexcept { return d_->conductor; }
  Int frobenius() const noexcept { return d_->conductor - 1; }
  Int genus() const noexcept { return d_->genus; }
  // Smallest nonzero element.
  Int multiplicity() const noexcept { return d_->min_generators.front(); }

  std::vector<Int> const& min_generators() const noexcept {
    return d_->min_generators;
  }
  std::vector<Int> gaps() const;
  // Elements in [0, c], i.e. up to and including the conductor value.
  std::vector<Int> small_elements() const;

  friend bool operator==(NumericalSemigroup const& a,
                         NumericalSemigroup const& b) noexcept {
    return a.d_ == b.d_ || (a.d_->conductor == b.d_->conductor &&
                            a.d_->table == b.d_->table);
  }

 private:
  struct Data {
    Int conductor = 0;
    Int genus = 0;
    // table[x] for x in [0, conductor]; table[conductor] == 1.
    std::vector<std::uint8_t> table;
    std::vector<Int> min_generators;
  };

  explicit NumericalSemigroup(std::shared_ptr<Data const> d)
      : d_(std::move(d)) {}

  // Trims `table` to the tight conductor and fills the derived fields. The
  // table must already be a semigroup.
  static NumericalSemigroup normalized(std::vector<std::uint8_t> table);

  std::shared_ptr<Data const> d_;
};

// Pseudo-Frobenius numbers (M - M) \ S, ascending. NaturalsUnsupported on N.
std::vector<Int> pseudo_frobenius(NumericalSemigroup const& s);

// t(S) = |pseudo_frobenius(S)|.
Int type(NumericalSemigroup const& s);

// Gaps y with f(S) - y also a gap, ascending. Does not include f(S) itself
// (f - f = 0 is a member).
std::vector<Int> gaps_second_type(NumericalSemigroup const& s);

// f(S) + 1 == 2 g(S), cross-checked with z in S <=> f - z not in S.
bool is_symmetric(NumericalSemigroup const& s);

// L(S) u {f(S)} == PF(S), cross-checked with K(S) + M(S) subset of M(S).
bool is_almost_symmetric(NumericalSemigroup const& s);

bool is_pseudo_symmetric(NumericalSemigroup const& s);

struct AperyData {
  Int modulus = 0;
  // elements[i] is the least element congruent to i modulo `modulus`.
  std::vector<Int> elements;
  // maximal[i] iff elements[i] is maximal for w <= w' <=> w' - w in S.
  std::vector<bool> maximal;
};

// Throws NotMember unless n is a nonzero element of S.
AperyData apery_set(NumericalSemigroup const& s, Int n);

// True iff no maximal w_i, w_j, w_k (repetitions allowed) satisfy
// w_i + w_j == w_k + n.
bool apery_pairwise_condition(NumericalSemigroup const& s, Int n);

// {x in N : n x in S}. Throws InvalidArgument for n < 1.
NumericalSemigroup quotient(NumericalSemigroup const& s, Int n);

}  // namespace numdup

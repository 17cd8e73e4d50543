#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "numdup/verify.hpp"

using namespace numdup;

namespace {

using V = std::vector<Int>;

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("genus-tree enumeration matches the subset filter") {
  auto const e = enumerate_semigroups(9);
  CHECK(e.counts == V{1, 1, 2, 4, 7, 12, 23, 39, 67, 118});
  auto const brute_sets = brute::gap_sets(9);
  REQUIRE(e.semigroups.size() == brute_sets.size());
  for (std::size_t i = 0; i < brute_sets.size(); ++i) {
    CHECK(e.semigroups[i].gaps() == brute_sets[i]);
  }
  CHECK(enumerate_semigroups(0).counts == V{1});
  CHECK(code_of([] { enumerate_semigroups(13); }) ==
        ErrorCode::CapacityExceeded);
  CHECK(enumerate_semigroups(10, 10).counts.back() == 204);
}

TEST_CASE("oracle invariants") {
  auto const t = NumericalSemigroup::from_gaps(
      {1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 13, 17, 19, 23});
  auto const o = oracle_invariants(t);
  CHECK(o.frobenius == 23);
  CHECK(o.genus == 14);
  CHECK(o.type == 4);
  CHECK(o.pseudo_frobenius == V{6, 17, 19, 23});
  CHECK_FALSE(o.symmetric);
  CHECK_FALSE(o.almost_symmetric);

  auto const w = oracle_almost_symmetry_witness(t);
  REQUIRE(w.has_value());
  CHECK(*w == std::array<Int, 2>{4, 15});
  CHECK(oracle_canonical_member(t, 4));
  CHECK_FALSE(oracle_canonical_member(t, 0 - 1));

  auto const s23 = oracle_invariants(NumericalSemigroup::from_generators({2, 3}));
  CHECK(s23.type == 1);
  CHECK(s23.symmetric);
  CHECK(s23.almost_symmetric);
  CHECK_FALSE(oracle_almost_symmetry_witness(
                  NumericalSemigroup::from_generators({3, 4, 5}))
                  .has_value());

  auto const n = oracle_invariants(NumericalSemigroup{});
  CHECK(n.frobenius == -1);
  CHECK(n.type == 0);
}

TEST_CASE("oracle agrees with the definitions on every semigroup of genus <= 8") {
  for (auto const& s : brute::semigroups(8)) {
    if (s.is_naturals()) continue;
    auto const o = oracle_invariants(s);
    CHECK(o.frobenius == s.frobenius());
    CHECK(o.genus == s.genus());
    CHECK(o.pseudo_frobenius ==
          brute::pseudo_frobenius([&](Int x) { return s.contains(x); },
                                  s.frobenius()));
    CHECK(o.symmetric == is_symmetric(s));
    CHECK(o.almost_symmetric == is_almost_symmetric(s));
    CHECK(o.almost_symmetric == !oracle_almost_symmetry_witness(s).has_value());
  }
}

TEST_CASE("ideal enumeration") {
  auto const s48 = NumericalSemigroup::from_gaps({1, 2, 3, 5, 6, 7});
  // K \ C = {0, 1, 2, 4, 5, 6}; every S-stable subset above C.
  auto const ideals = enumerate_ideals(s48);
  std::size_t stable = 0;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    V const pool = {0, 1, 2, 4, 5, 6};
    auto in = [&](Int x) {
      if (x >= 8) return true;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i] == x) return (mask >> i & 1U) != 0;
      }
      return false;
    };
    bool ok = true;
    for (Int x = 0; x < 8; ++x) {
      if (in(x) && !(in(x + 4) && in(x + 8))) ok = false;
    }
    stable += ok ? 1 : 0;
  }
  CHECK(ideals.size() == stable);
  for (auto const& e : ideals) {
    CHECK(is_subset(conductor_ideal(s48), e));
    CHECK(is_subset(e, canonical_ideal(s48)));
  }

  IdealEnumerationOptions shifted;
  shifted.shift_into_base = true;
  for (auto const& e : enumerate_ideals(s48, shifted)) {
    CHECK(count_outside_base(e) == 0);
  }

  IdealEnumerationOptions loose;
  loose.check_stability = false;
  CHECK(enumerate_ideals(s48, loose).size() == 64);

  IdealEnumerationOptions tight;
  tight.max_subsets = 32;
  CHECK(code_of([&] { enumerate_ideals(s48, tight); }) ==
        ErrorCode::CapacityExceeded);
  CHECK(code_of([] { enumerate_ideals(NumericalSemigroup{}); }) ==
        ErrorCode::NaturalsUnsupported);
}

TEST_CASE("a small sweep has no failures") {
  VerifyOptions opts;
  opts.max_genus = 4;
  opts.workers = 2;
  auto const reports = verify_all(opts);
  CHECK(count_failures(reports) == 0);
  CHECK_FALSE(reports.empty());
  auto const tally = summarize(reports);
  for (char const* name :
       {"formula.frobenius", "formula.genus", "formula.type",
        "characterization.almost_symmetric", "type2.formula", "quotient.half",
        "ideal.cardinality_bound", "apery.duals_closed"}) {
    CAPTURE(name);
    REQUIRE(tally.count(name) == 1);
    CHECK(tally.at(name).passed > 0);
    CHECK(tally.at(name).failed == 0);
  }
}

TEST_CASE("sweep output does not depend on the worker count") {
  VerifyOptions one;
  one.max_genus = 4;
  one.workers = 1;
  VerifyOptions many = one;
  many.workers = 4;
  auto const a = verify_all(one);
  auto const b = verify_all(many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].instance.generators == b[i].instance.generators);
    CHECK(a[i].instance.b == b[i].instance.b);
    CHECK(a[i].checks.size() == b[i].checks.size());
  }
}

TEST_CASE("the mutant is caught") {
  VerifyOptions opts;
  opts.max_genus = 3;
  opts.mutation = Mutation::DropStabilityFilter;
  auto const reports = verify_all(opts);
  CHECK(count_failures(reports) > 0);
  bool has_counterexample = false;
  for (auto const& r : reports) {
    if (!r.passed()) has_counterexample |= r.counterexample.has_value();
  }
  CHECK(has_counterexample);
}

TEST_CASE("reports for one semigroup") {
  auto const s = NumericalSemigroup::from_generators({3, 4, 5});
  VerifyOptions opts;
  opts.b_count = 1;
  auto const reports = verify_semigroup(s, opts);
  REQUIRE_FALSE(reports.empty());
  CHECK(reports.front().instance.b == 0);
  CHECK_FALSE(reports.front().instance.ideal.has_value());
  CHECK(reports.front().instance.generators == V{3, 4, 5});
  for (auto const& r : reports) CHECK(r.passed());
  // One report for S plus one per class of ideals.
  CHECK(reports.size() == 1 + enumerate_ideals(s).size());
}

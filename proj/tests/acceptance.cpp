// Acceptance suite: one PASS/FAIL line per criterion, exact integer checks.

#include <algorithm>
#include <bit>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "numdup/duplication.hpp"
#include "numdup/format.hpp"
#include "numdup/verify.hpp"

using namespace numdup;

namespace {

using V = std::vector<Int>;

// Collects the first few mismatches of one criterion.
class Criterion {
 public:
  void expect(bool ok, std::string const& what) {
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  template <typename T>
  void equal(T const& got, T const& want, std::string const& what) {
    expect(got == want, what);
  }
  int failures() const { return failures_; }
  std::vector<std::string> const& notes() const { return notes_; }

 private:
  int failures_ = 0;
  std::vector<std::string> notes_;
};

int report(char const* id, char const* title,
           std::function<std::string(Criterion&)> const& body) {
  Criterion c;
  std::string detail;
  try {
    detail = body(c);
  } catch (std::exception const& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  bool const ok = c.failures() == 0;
  std::printf("[%s] %s %s", ok ? "PASS" : "FAIL", id, title);
  if (!detail.empty()) std::printf(" (%s)", detail.c_str());
  std::printf("\n");
  for (std::string const& n : c.notes()) std::printf("       %s\n", n.c_str());
  return ok ? 0 : 1;
}

// Members of e in [min, top].
V upto(RelativeIdeal const& e, Int top) {
  V out;
  for (Int x = e.min(); x <= top; ++x) {
    if (e.contains(x)) out.push_back(x);
  }
  return out;
}

V smallest_odd_members(NumericalSemigroup const& s, Int count) {
  V out;
  for (Int x = 1; static_cast<Int>(out.size()) < count; x += 2) {
    if (s.contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<NumericalSemigroup> nontrivial(Int max_genus) {
  std::vector<NumericalSemigroup> out;
  for (auto const& s : enumerate_semigroups(max_genus).semigroups) {
    if (!s.is_naturals()) out.push_back(s);
  }
  return out;
}

std::string ac1(Criterion& c) {
  auto const s = NumericalSemigroup::from_generators({5, 6, 7, 8, 9});
  DuplicationInput const in(ideal_generated_by(s, {5, 8, 10}), 5);
  auto const t = duplicate(in);
  auto const o = oracle_invariants(t);
  c.equal(t.small_elements(), V{0, 10, 12, 14, 15, 16, 18, 20, 21, 22, 24},
          "T");
  c.equal(o.frobenius, Int{23}, "f(T)");
  c.equal(predicted_frobenius(in), Int{23}, "f(T) formula");
  c.equal(o.genus, Int{14}, "g(T)");
  c.equal(predicted_genus(in), Int{14}, "g(T) formula");
  c.equal(o.type, Int{4}, "t(T)");
  c.equal(predicted_type(in.ideal()), Int{4}, "t(T) formula");
  c.equal(o.pseudo_frobenius, V{6, 17, 19, 23}, "PF(T)");
  c.equal(pseudo_frobenius(t), V{6, 17, 19, 23}, "PF(T) library");
  return "T=" + notation(t) + ", PF=" + finite_notation(o.pseudo_frobenius);
}

std::string ac2(Criterion& c) {
  auto const s = NumericalSemigroup::from_gaps({1, 2, 3, 5, 6, 7});
  auto const k = canonical_ideal(s);
  auto const m = maximal_ideal(s);
  c.equal(upto(k, 8), V{0, 1, 2, 4, 5, 6, 8}, "K");
  c.equal(k.frobenius(), Int{7}, "K tail");
  auto const lower = dual(difference(m, m));
  c.equal(upto(lower, 8), V{4, 5, 6, 8}, "K-(M-M)");
  c.equal(lower.frobenius(), Int{7}, "K-(M-M) tail");

  // Every row written up to 8, after which both sides are full.
  std::vector<V> const tilde = {
      {4, 5, 6, 8},       {2, 4, 5, 6, 8},    {1, 4, 5, 6, 8},
      {0, 4, 5, 6, 8},    {1, 2, 4, 5, 6, 8}, {0, 2, 4, 5, 6, 8},
      {0, 1, 4, 5, 6, 8}, {0, 1, 2, 4, 5, 6, 8}};
  std::vector<V> const duals = {
      {0, 4, 5, 6, 7, 8}, {0, 4, 6, 7, 8}, {0, 4, 5, 7, 8}, {0, 4, 5, 6, 8},
      {0, 4, 7, 8},       {0, 4, 6, 8},    {0, 4, 5, 8},    {0, 4, 8}};
  auto const rows = enumerate_admissible(s);
  c.equal(rows.size(), tilde.size(), "row count");
  V types;
  for (std::size_t i = 0; i < std::min(rows.size(), tilde.size()); ++i) {
    std::string const tag = "row " + std::to_string(i + 1);
    auto const& r = rows[i];
    c.equal(upto(r.normalized, 8), tilde[i], tag + " E~");
    c.expect(r.normalized.frobenius() == 7 && r.dual.frobenius() <= 7,
             tag + " tail");
    c.equal(upto(r.dual, 8), duals[i], tag + " K-E~");
    c.expect(r.dual_is_semigroup && is_semigroup_set(r.dual),
             tag + " dual is a semigroup");
    // Brute force on the expanded duplication, for two values of b.
    auto const e = translate(r.normalized, minimal_shift_into_base(r.normalized));
    Int row_type = -1;
    for (Int b : smallest_odd_members(s, 2)) {
      auto const o = oracle_invariants(duplicate(DuplicationInput(e, b)));
      c.expect(o.almost_symmetric, tag + " almost symmetric");
      if (row_type < 0) row_type = o.type;
      c.expect(o.type == row_type, tag + " type independent of b");
    }
    c.expect(r.type == row_type, tag + " reported type");
    types.push_back(row_type);
  }
  V sorted = types;
  std::sort(sorted.begin(), sorted.end());
  c.equal(sorted, V{1, 3, 3, 3, 5, 5, 5, 7}, "type multiset");
  std::string list;
  for (Int t : types) list += (list.empty() ? "" : ",") + std::to_string(t);
  return "types " + list;
}

std::string ac3(Criterion& c) {
  auto const s = NumericalSemigroup::from_generators({5, 6, 7, 8, 9});
  auto const e = ideal_generated_by(s, {5, 8, 10});
  auto const v = is_almost_symmetric_duplication(e);
  c.equal(upto(v.normalized, 5), V{0, 3, 5}, "E~");
  c.equal(v.normalized.frobenius(), Int{4}, "E~ tail");
  c.equal(upto(v.dual, 5), V{0, 2, 3, 5}, "K-E~");
  c.equal(v.dual.frobenius(), Int{4}, "K-E~ tail");
  c.expect(!is_semigroup_set(v.dual), "K-E~ is not a semigroup");
  c.expect(!v.holds, "characterization fails");
  auto const t = duplicate(DuplicationInput(e, 5));
  c.expect(!oracle_invariants(t).almost_symmetric, "T not almost symmetric");
  auto const w = oracle_almost_symmetry_witness(t);
  c.expect(w.has_value(), "witness exists");
  if (!w) return {};
  Int const k = (*w)[0];
  Int const m = (*w)[1];
  c.equal(k, Int{4}, "witness in K(T)");
  c.equal(m, Int{15}, "witness in M(T)");
  c.expect(oracle_canonical_member(t, 4), "4 in K(T)");
  c.expect(t.contains(15), "15 in M(T)");
  c.expect(!t.contains(19), "19 not in M(T)");
  return std::to_string(k) + " in K(T), " + std::to_string(m) + " in M(T), " +
         std::to_string(k + m) + " not in M(T)";
}

std::string ac4(Criterion& c) {
  VerifyOptions opts;
  opts.max_genus = 6;
  opts.ideal_cap = 4096;
  opts.b_count = 2;
  auto const reports = verify_all(opts);
  auto const tally = summarize(reports);
  Int checks = 0;
  for (auto const& [name, t] : tally) {
    checks += t.passed + t.failed;
    c.expect(t.failed == 0, name + " failed " + std::to_string(t.failed));
  }
  c.equal(count_failures(reports), Int{0}, "failures");
  for (char const* family :
       {"formula.frobenius", "formula.genus", "formula.type",
        "formula.type_independent_of_b", "symmetric_iff_canonical",
        "characterization.almost_symmetric", "type2.formula", "type2.odd",
        "type2.bounds", "quotient.half", "duality.reflexive",
        "duality.order_reversal", "duality.cardinality", "duality.k_minus_k",
        "duality.k_generator_count", "duality.k_generated_by_pf",
        "apery.duals_closed", "ideal.bijection", "gap_reflection.m_minus_m",
        "gap_reflection.e_minus_e"}) {
    auto const it = tally.find(family);
    c.expect(it != tally.end() && it->second.passed > 0,
             std::string(family) + " never ran");
  }
  return std::to_string(reports.size()) + " reports, " +
         std::to_string(checks) + " checks";
}

std::string ac5(Criterion& c) {
  Int instances = 0;
  for (auto const& s : nontrivial(6)) {
    for (Int x = 1; x <= 2 * type(s) + 1; x += 2) {
      auto const family = construct_prescribed_family(s, x, 3);
      std::string const tag =
          "gaps " + finite_notation(s.gaps()) + " x=" + std::to_string(x);
      c.expect(family.size() >= 3, tag + " family size");
      V shifts;
      for (auto const& e : family) shifts.push_back(e.min());
      c.expect(std::adjacent_find(shifts.begin(), shifts.end(),
                                  std::greater_equal<>()) == shifts.end(),
               tag + " shift-distinct");
      for (auto const& e : family) {
        c.expect(count_outside_base(e) == 0, tag + " E inside S");
        for (Int b : smallest_odd_members(s, 2)) {
          auto const o = oracle_invariants(duplicate(DuplicationInput(e, b)));
          c.expect(o.almost_symmetric, tag + " almost symmetric");
          c.expect(o.type == x, tag + " type");
          ++instances;
        }
      }
    }
  }
  return std::to_string(instances) + " duplications";
}

std::string ac6(Criterion& c) {
  auto const pool = nontrivial(6);
  Int built = 0;
  for (Int n = 3; n <= 5; ++n) {
    for (std::size_t i = 0; i < 50; ++i) {
      auto const& s = pool[i % pool.size()];
      IdealEnumerationOptions opts;
      opts.shift_into_base = true;
      auto const ideals = enumerate_ideals(s, opts);
      auto const& e = ideals[i % ideals.size()];
      Int b = 1;
      while (!s.contains(b) || std::gcd(b, n) != 1) ++b;
      std::string const tag = "n=" + std::to_string(n) + " #" +
                              std::to_string(i) + " gaps " +
                              finite_notation(s.gaps());
      auto const t = n_tuplicate(e, b, n);
      // Additive closure straight from membership, past the conductor.
      bool closed = t.contains(0);
      for (Int a = 1; a <= t.conductor() && closed; ++a) {
        for (Int d = a; d <= t.conductor() && closed; ++d) {
          if (t.contains(a) && t.contains(d)) closed = t.contains(a + d);
        }
      }
      c.expect(closed, tag + " closed");
      c.expect(quotient(t, n) == s, tag + " quotient");
      ++built;
    }
  }
  return std::to_string(built) + " n-tuplications";
}

std::string ac7(Criterion& c) {
  auto const e = enumerate_semigroups(10);
  c.equal(e.counts, V{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204}, "counts");

  // Independent oracle: subsets of [1, 2g - 1] with closed complement.
  V filtered(7, 0);
  for (std::uint32_t mask = 0; mask < (1U << 11); ++mask) {
    auto gap = [&](Int x) { return x >= 1 && x <= 11 && (mask >> (x - 1) & 1U); };
    Int const g = std::popcount(mask);
    if (g > 6) continue;
    bool closed = true;
    for (Int a = 1; a <= 11 && closed; ++a) {
      for (Int b = a; a + b <= 11 && closed; ++b) {
        if (!gap(a) && !gap(b) && gap(a + b)) closed = false;
      }
    }
    if (closed) ++filtered[static_cast<std::size_t>(g)];
  }
  c.equal(V(e.counts.begin(), e.counts.begin() + 7), filtered,
          "subset filter, g <= 6");
  std::string list;
  for (Int n : e.counts) list += (list.empty() ? "" : ",") + std::to_string(n);
  return list;
}

std::string ac8(Criterion& c) {
  Int ideals = 0;
  Int equalities = 0;
  for (auto const& s : nontrivial(6)) {
    auto const k = canonical_ideal(s);
    Int const lhs = s.frobenius() + 1 - s.genus();
    for (auto const& e : enumerate_ideals(s)) {
      // Genus and minimum counted directly: gaps of e above its minimum.
      Int m = e.min();
      while (!e.contains(m)) ++m;
      Int g = 0;
      for (Int x = m; x <= s.frobenius(); ++x) g += e.contains(x) ? 0 : 1;
      std::string const tag = "gaps " + finite_notation(s.gaps()) + " E~ " +
                              notation(e);
      c.expect(lhs <= g + m, tag + " bound");
      c.expect((lhs == g + m) == (e == k), tag + " equality iff canonical");
      ++ideals;
      equalities += lhs == g + m ? 1 : 0;
    }
  }
  return std::to_string(ideals) + " ideals, " + std::to_string(equalities) +
         " equalities";
}

}  // namespace

int main() {
  int failed = 0;
  failed += report("AC1", "duplication of {0,5,->} by <5,8,10>, b=5", ac1);
  failed += report("AC2", "ideals between K-(M-M) and K for {0,4,8,->}", ac2);
  failed += report("AC3", "non-almost-symmetric duplication witness", ac3);
  failed += report("AC4", "exhaustive sweep, genus <= 6", ac4);
  failed += report("AC5", "prescribed odd type, genus <= 6", ac5);
  failed += report("AC6", "n-tuplication quotients, n = 3, 4, 5", ac6);
  failed += report("AC7", "semigroup counts by genus, g <= 10", ac7);
  failed += report("AC8", "cardinality bound, equality iff canonical", ac8);
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}

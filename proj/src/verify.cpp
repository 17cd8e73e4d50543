#include "numdup/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "numdup/duplication.hpp"

namespace numdup {

namespace {

// Largest gap found by scanning the raw table.
Int scan_frobenius(NumericalSemigroup const& t) {
  for (Int x = 2 * t.conductor() + 2; x >= 0; --x) {
    if (!t.contains(x)) return x;
  }
  return -1;
}

bool in_maximal(NumericalSemigroup const& t, Int x) {
  return x != 0 && t.contains(x);
}

}  // namespace

OracleInvariants oracle_invariants(NumericalSemigroup const& t) {
  OracleInvariants o;
  Int const f = scan_frobenius(t);
  Int const lo = -f - 2;
  Int const hi = 2 * f + 2;
  o.frobenius = f;
  for (Int x = 0; x <= hi; ++x) {
    if (!t.contains(x)) ++o.genus;
  }
  // x + s lands past f for every s beyond hi + 2, so the scan is complete.
  for (Int x = lo; x <= hi; ++x) {
    if (t.contains(x)) continue;
    bool pf = true;
    for (Int s = 1; s <= hi + 2 && pf; ++s) {
      pf = !in_maximal(t, s) || in_maximal(t, x + s);
    }
    if (pf) o.pseudo_frobenius.push_back(x);
  }
  o.type = static_cast<Int>(o.pseudo_frobenius.size());
  for (Int z = lo; z <= hi && o.symmetric; ++z) {
    o.symmetric = t.contains(z) != t.contains(f - z);
  }
  std::vector<Int> second_type_and_f;
  for (Int y = 0; y <= hi; ++y) {
    if (!t.contains(y) && (!t.contains(f - y) || y == f)) {
      second_type_and_f.push_back(y);
    }
  }
  // For N there is no nonnegative f to add, and both sides are empty.
  o.almost_symmetric = second_type_and_f == o.pseudo_frobenius;
  return o;
}

std::optional<std::array<Int, 2>> oracle_almost_symmetry_witness(
    NumericalSemigroup const& t) {
  Int const f = scan_frobenius(t);
  Int const hi = 2 * f + 2;
  for (Int k = 0; k <= hi; ++k) {
    if (t.contains(f - k)) continue;
    for (Int s = 1; s <= hi + 2; ++s) {
      if (in_maximal(t, s) && !in_maximal(t, k + s)) {
        return std::array<Int, 2>{k, s};
      }
    }
  }
  return std::nullopt;
}

bool oracle_canonical_member(NumericalSemigroup const& t, Int z) {
  return !t.contains(scan_frobenius(t) - z);
}

SemigroupEnumeration enumerate_semigroups(Int max_genus, Int genus_cap) {
  if (max_genus < 0) {
    throw Error(ErrorCode::InvalidArgument, "max_genus must be >= 0");
  }
  if (max_genus > genus_cap) {
    throw Error(ErrorCode::CapacityExceeded,
                "max_genus " + std::to_string(max_genus) + " exceeds cap " +
                    std::to_string(genus_cap));
  }
  SemigroupEnumeration out;
  std::vector<NumericalSemigroup> level{NumericalSemigroup{}};
  for (Int g = 0;; ++g) {
    out.counts.push_back(static_cast<Int>(level.size()));
    out.semigroups.insert(out.semigroups.end(), level.begin(), level.end());
    if (g == max_genus) break;
    std::vector<NumericalSemigroup> next;
    for (NumericalSemigroup const& s : level) {
      for (Int m : s.min_generators()) {
        if (m <= s.frobenius()) continue;
        std::vector<std::uint8_t> table(static_cast<std::size_t>(m) + 1);
        for (Int x = 0; x < m; ++x) {
          table[static_cast<std::size_t>(x)] = s.contains(x) ? 1 : 0;
        }
        next.push_back(NumericalSemigroup::from_membership(std::move(table)));
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<std::vector<Int>, std::size_t>> keys;
  for (std::size_t i = 0; i < out.semigroups.size(); ++i) {
    keys.emplace_back(out.semigroups[i].gaps(), i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<NumericalSemigroup> sorted;
  sorted.reserve(keys.size());
  for (auto const& [gaps, i] : keys) sorted.push_back(out.semigroups[i]);
  out.semigroups = std::move(sorted);
  return out;
}

std::vector<RelativeIdeal> enumerate_ideals(
    NumericalSemigroup const& s, IdealEnumerationOptions const& opts) {
  if (s.is_naturals()) {
    throw Error(ErrorCode::NaturalsUnsupported,
                "ideal enumeration needs a gap");
  }
  Int const f = s.frobenius();
  RelativeIdeal const k = canonical_ideal(s);
  std::vector<Int> free;
  for (Int x = 0; x <= f; ++x) {
    if (k.contains(x)) free.push_back(x);
  }
  if (free.size() >= 63 ||
      (std::uint64_t{1} << free.size()) > opts.max_subsets) {
    throw Error(ErrorCode::CapacityExceeded,
                "2^" + std::to_string(free.size()) +
                    " candidate ideals exceed the configured cap");
  }
  std::vector<RelativeIdeal> out;
  std::uint64_t const subsets = std::uint64_t{1} << free.size();
  std::vector<std::uint8_t> chosen(static_cast<std::size_t>(f) + 1);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::fill(chosen.begin(), chosen.end(), 0);
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask >> i & 1U) chosen[static_cast<std::size_t>(free[i])] = 1;
    }
    auto member = [&](Int x) {
      return x > f || (x >= 0 && chosen[static_cast<std::size_t>(x)] != 0);
    };
    if (opts.check_stability) {
      bool stable = true;
      for (Int x = 0; x <= f && stable; ++x) {
        if (!member(x)) continue;
        for (Int a : s.min_generators()) {
          if (!member(x + a)) {
            stable = false;
            break;
          }
        }
      }
      if (!stable) continue;
    }
    RelativeIdeal e =
        opts.check_stability
            ? RelativeIdeal::from_predicate(s, 0, f, member)
            : RelativeIdeal::unchecked(s, 0, f, member);
    if (opts.shift_into_base) e = translate(e, minimal_shift_into_base(e));
    out.push_back(std::move(e));
  }
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](Check const& c) { return c.pass; });
}

namespace {

void add(VerificationReport& r, std::string name, Int predicted, Int oracle) {
  r.checks.push_back({std::move(name), predicted, oracle, predicted == oracle});
}

template <typename Body>
void guarded(VerificationReport& r, Body&& body) {
  try {
    body();
  } catch (Error const& e) {
    r.checks.push_back({"exception", 0, 1, false});
    r.counterexample = e.what();
  }
}

InstanceIdeal describe(RelativeIdeal const& e) {
  return {e.min(), e.frobenius(), e.window()};
}

bool contains_value(std::vector<Int> const& v, Int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void check_semigroup_level(VerificationReport& r, NumericalSemigroup const& s,
                           std::vector<RelativeIdeal> const& ideals) {
  OracleInvariants const oracle = oracle_invariants(s);
  std::vector<Int> const pf = pseudo_frobenius(s);
  auto const t = static_cast<Int>(pf.size());
  Int const f = s.frobenius();

  add(r, "core.type", t, oracle.type);
  add(r, "core.pseudo_frobenius", pf == oracle.pseudo_frobenius, 1);
  add(r, "core.symmetric", is_symmetric(s), oracle.symmetric);
  add(r, "core.symmetric_iff_type_one", is_symmetric(s), t == 1);
  add(r, "core.almost_symmetric", is_almost_symmetric(s),
      oracle.almost_symmetric);
  std::vector<Int> second = gaps_second_type(s);
  second.push_back(f);
  std::sort(second.begin(), second.end());
  add(r, "core.pf_within_second_type",
      std::includes(second.begin(), second.end(), pf.begin(), pf.end()), 1);
  Int below_conductor = 0;
  for (Int x = 0; x <= f; ++x) below_conductor += s.contains(x) ? 1 : 0;
  add(r, "core.counting_identity", f + 1 - s.genus(), below_conductor);
  Int apery_mismatch = 0;
  for (Int n : s.min_generators()) {
    AperyData const ap = apery_set(s, n);
    for (std::size_t i = 0; i < ap.elements.size(); ++i) {
      if (ap.maximal[i] != contains_value(pf, ap.elements[i] - n)) {
        ++apery_mismatch;
      }
    }
  }
  add(r, "core.apery_maximal_is_pf", apery_mismatch, 0);

  RelativeIdeal const k = canonical_ideal(s);
  RelativeIdeal const m = maximal_ideal(s);
  RelativeIdeal const mm = difference(m, m);
  add(r, "duality.k_minus_k", difference(k, k) == as_ideal(s), 1);
  add(r, "duality.k_generator_count",
      static_cast<Int>(minimal_generators(k).size()), t);
  std::vector<Int> reflected_pf;
  for (Int x : pf) reflected_pf.push_back(f - x);
  add(r, "duality.k_generated_by_pf", ideal_generated_by(s, reflected_pf) == k,
      1);
  add(r, "duality.km_within_dual_mm", is_subset(sum(k, m), dual(mm)), 1);

  std::vector<RelativeIdeal> duals;
  Int cross = 0;
  Int reflexive = 0;
  for (RelativeIdeal const& e : ideals) {
    duals.push_back(dual(e));
    cross += difference(k, e) == duals.back() ? 0 : 1;
    reflexive += dual(duals.back()) == e ? 0 : 1;
  }
  add(r, "duality.reflection_formula", cross, 0);
  add(r, "duality.reflexive", reflexive, 0);
  Int order = 0;
  Int cardinality = 0;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      bool const inside = is_subset(ideals[i], ideals[j]);
      if (inside != is_subset(duals[j], duals[i])) ++order;
      if (inside && count_difference(ideals[j], ideals[i]) !=
                        count_difference(duals[i], duals[j])) {
        ++cardinality;
      }
    }
  }
  add(r, "duality.order_reversal", order, 0);
  add(r, "duality.cardinality", cardinality, 0);

  std::vector<AdmissibleIdeal> const admissible = enumerate_admissible(s);
  bool const all_duals_closed =
      std::all_of(admissible.begin(), admissible.end(),
                  [](AdmissibleIdeal const& a) { return a.dual_is_semigroup; });
  add(r, "apery.duals_closed", apery_pairwise_condition(s, s.multiplicity()),
      all_duals_closed);
}

// Checks that depend on E~ only, attached to the first b.
void check_ideal_level(VerificationReport& r, RelativeIdeal const& normalized,
                       RelativeIdeal const& e) {
  NumericalSemigroup const& s = e.base();
  RelativeIdeal const k = canonical_ideal(s);
  RelativeIdeal const m = maximal_ideal(s);
  RelativeIdeal const mm = difference(m, m);
  RelativeIdeal const lower = dual(mm);
  RelativeIdeal const d = dual(normalized, DualCheck::CrossCheck);

  add(r, "ideal.between_conductor_and_canonical",
      is_subset(conductor_ideal(s), normalized) && is_subset(normalized, k),
      1);
  Int const lhs = s.frobenius() + 1 - s.genus();
  Int const rhs = normalized.genus() + normalized.min();
  add(r, "ideal.cardinality_bound", lhs <= rhs, 1);
  add(r, "ideal.cardinality_equality", lhs == rhs, normalized == k);

  if (!is_subset(lower, normalized)) return;
  add(r, "ideal.bijection", count_outside_base(d),
      count_difference(difference(normalized, m), normalized) - 1);
  Int outside_mm = 0;
  for (Int x = e.min() - 1; x <= e.frobenius(); ++x) {
    if (!e.contains(x) && !mm.contains(e.frobenius() - x)) ++outside_mm;
  }
  add(r, "gap_reflection.m_minus_m", outside_mm, 0);
  if (!is_semigroup_set(d)) return;
  RelativeIdeal const ee = difference(e, e);
  Int outside_ee = 0;
  for (Int x = e.min() - 1; x <= e.frobenius(); ++x) {
    if (!e.contains(x) && !ee.contains(e.frobenius() - x)) ++outside_ee;
  }
  add(r, "gap_reflection.e_minus_e", outside_ee, 0);
}

void check_duplication(VerificationReport& r, RelativeIdeal const& e, Int b,
                       std::optional<Int>& first_type) {
  NumericalSemigroup const& s = e.base();
  DuplicationInput const in(e, b);
  NumericalSemigroup const t = duplicate(in);
  OracleInvariants const o = oracle_invariants(t);
  if (!first_type) first_type = o.type;

  add(r, "formula.frobenius", predicted_frobenius(in), o.frobenius);
  add(r, "formula.genus", predicted_genus(in), o.genus);
  add(r, "formula.type", predicted_type(e), o.type);
  add(r, "formula.type_independent_of_b", o.type, *first_type);
  add(r, "symmetric_iff_canonical", is_canonical(e), o.symmetric);
  AlmostSymmetricVerdict const verdict = is_almost_symmetric_duplication(e);
  add(r, "characterization.almost_symmetric", verdict.holds, o.almost_symmetric);
  if (o.almost_symmetric) {
    RelativeIdeal const m = maximal_ideal(s);
    add(r, "type2.formula", almost_symmetric_type(e), o.type);
    add(r, "type2.colon", 2 * count_difference(difference(e, m), e) - 1,
        o.type);
    add(r, "type2.dual", 2 * count_outside_base(verdict.dual) + 1, o.type);
    add(r, "type2.complement",
        2 * count_difference(canonical_ideal(s), verdict.normalized) + 1,
        o.type);
    add(r, "type2.odd", o.type % 2, 1);
    add(r, "type2.bounds", 1 <= o.type && o.type <= 2 * type(s) + 1, 1);
  }
  add(r, "quotient.half", quotient(t, 2) == s, 1);
  Int mismatched = 0;
  for (Int z = -1; z <= 2 * e.frobenius() + b + 1; ++z) {
    if (duplication_canonical_membership(in, z) !=
        oracle_canonical_member(t, z)) {
      ++mismatched;
    }
  }
  add(r, "canonical.membership", mismatched, 0);
}

}  // namespace

std::vector<VerificationReport> verify_semigroup(NumericalSemigroup const& s,
                                                 VerifyOptions const& opts) {
  std::vector<VerificationReport> out;
  Instance const base{s.min_generators(), std::nullopt, 0, 0};

  IdealEnumerationOptions io;
  io.max_subsets = opts.ideal_cap;
  io.check_stability = opts.mutation != Mutation::DropStabilityFilter;
  std::vector<RelativeIdeal> const ideals = enumerate_ideals(s, io);

  VerificationReport& semigroup_report = out.emplace_back();
  semigroup_report.instance = base;
  guarded(semigroup_report,
          [&] { check_semigroup_level(semigroup_report, s, ideals); });

  std::vector<Int> bs;
  for (Int x = 1; static_cast<Int>(bs.size()) < opts.b_count; x += 2) {
    if (s.contains(x)) bs.push_back(x);
  }

  for (RelativeIdeal const& normalized : ideals) {
    VerificationReport head;
    head.instance = base;
    head.instance.ideal = describe(normalized);
    std::optional<RelativeIdeal> shifted;
    guarded(head, [&] {
      shifted = translate(normalized, minimal_shift_into_base(normalized));
    });
    if (!shifted) {
      out.push_back(std::move(head));
      continue;
    }
    std::optional<Int> first_type;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      VerificationReport r;
      r.instance = base;
      r.instance.ideal = describe(*shifted);
      r.instance.b = bs[i];
      r.instance.n = 2;
      guarded(r, [&] {
        if (i == 0) check_ideal_level(r, normalized, *shifted);
        check_duplication(r, *shifted, bs[i], first_type);
      });
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<VerificationReport> verify_all(VerifyOptions const& opts) {
  if (opts.max_genus < 0 || opts.ideal_cap == 0 || opts.b_count < 1) {
    throw Error(ErrorCode::InvalidArgument, "verification bounds must be positive");
  }
  std::vector<NumericalSemigroup> targets;
  for (NumericalSemigroup const& s :
       enumerate_semigroups(opts.max_genus).semigroups) {
    if (!s.is_naturals()) targets.push_back(s);
  }

  std::vector<std::vector<VerificationReport>> per(targets.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&] {
    for (std::size_t i = cursor++; i < targets.size(); i = cursor++) {
      try {
        per[i] = verify_semigroup(targets[i], opts);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned workers = opts.workers != 0 ? opts.workers
                                       : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1U, 64U);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<VerificationReport> out;
  for (auto& chunk : per) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  }
  return out;
}

std::map<std::string, CheckTally> summarize(
    std::vector<VerificationReport> const& reports) {
  std::map<std::string, CheckTally> out;
  for (VerificationReport const& r : reports) {
    for (Check const& c : r.checks) {
      CheckTally& tally = out[c.name];
      (c.pass ? tally.passed : tally.failed) += 1;
    }
  }
  return out;
}

Int count_failures(std::vector<VerificationReport> const& reports) {
  Int n = 0;
  for (VerificationReport const& r : reports) {
    for (Check const& c : r.checks) n += c.pass ? 0 : 1;
  }
  return n;
}

}  // namespace numdup

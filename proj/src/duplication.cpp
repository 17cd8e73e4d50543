#include "numdup/duplication.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace numdup {

namespace {

constexpr std::size_t kMaxAdmissibleBits = 20;

bool inside_base(RelativeIdeal const& e) {
  return is_subset(e, as_ideal(e.base()));
}

void require_inside_base(RelativeIdeal const& e) {
  if (!inside_base(e)) {
    throw Error(ErrorCode::IdealNotInS, "E must be contained in S");
  }
}

bool shifted_inside_base(RelativeIdeal const& e, Int z) {
  NumericalSemigroup const& s = e.base();
  if (e.frobenius() + 1 + z < s.conductor()) return false;
  for (Int x = e.min(); x <= e.frobenius(); ++x) {
    if (e.contains(x) && !s.contains(x + z)) return false;
  }
  return true;
}

}  // namespace

DuplicationInput::DuplicationInput(RelativeIdeal ideal, Int b, IdealMode mode)
    : ideal_(std::move(ideal)), b_(b), mode_(mode) {
  if (b_ <= 0 || b_ % 2 == 0 || !base().contains(b_)) {
    throw Error(ErrorCode::BNotOddMember,
                "b = " + std::to_string(b_) + " must be an odd element of S");
  }
  if (mode_ == IdealMode::Strict) {
    require_inside_base(ideal_);
  } else if (!inside_base(translate(sum(ideal_, ideal_), b_))) {
    throw Error(ErrorCode::RelaxedConditionFails, "b + E + E is not inside S");
  }
}

NumericalSemigroup duplicate(DuplicationInput const& in) {
  NumericalSemigroup const& s = in.base();
  RelativeIdeal const& e = in.ideal();
  Int const b = in.b();
  Int const top = std::max(2 * s.frobenius(), 2 * e.frobenius() + b) + 1;
  std::vector<std::uint8_t> table(static_cast<std::size_t>(top) + 1);
  for (Int x = 0; x <= top; ++x) {
    bool const member =
        x % 2 == 0 ? s.contains(x / 2) : e.contains((x - b) / 2);
    table[static_cast<std::size_t>(x)] = member ? 1 : 0;
  }
  return NumericalSemigroup::from_membership(std::move(table));
}

Int predicted_frobenius(DuplicationInput const& in) {
  return 2 * in.ideal().frobenius() + in.b();
}

Int predicted_genus(DuplicationInput const& in) {
  RelativeIdeal const& e = in.ideal();
  return in.base().genus() + e.genus() + e.min() + (in.b() - 1) / 2;
}

Int predicted_type(RelativeIdeal const& e) {
  require_inside_base(e);
  RelativeIdeal const m = maximal_ideal(e.base());
  RelativeIdeal const common = intersect(difference(m, m), difference(e, e));
  return count_outside_base(common) +
         count_difference(difference(e, m), e);
}

bool duplication_canonical_membership(DuplicationInput const& in, Int z) {
  Int const a = 2 * in.ideal().frobenius() + in.b() - z;
  if (a % 2 == 0) return !in.base().contains(a / 2);
  return !in.ideal().contains((a - in.b()) / 2);
}

AlmostSymmetricVerdict is_almost_symmetric_duplication(
    RelativeIdeal const& e) {
  require_inside_base(e);
  NumericalSemigroup const& s = e.base();
  RelativeIdeal const m = maximal_ideal(s);
  RelativeIdeal const k = canonical_ideal(s);
  RelativeIdeal const lower = dual(difference(m, m));
  RelativeIdeal normalized = normalize(e);
  RelativeIdeal dual_ideal = dual(normalized);

  AlmostSymmetricVerdict v{.holds = false,
                           .failed = AlmostSymmetricClause::None,
                           .witness = std::nullopt,
                           .witness_pair = std::nullopt,
                           .normalized = normalized,
                           .dual = dual_ideal};
  if (auto missing = set_difference(lower, normalized); !missing.empty()) {
    v.failed = AlmostSymmetricClause::LowerBound;
    v.witness = missing.front();
    return v;
  }
  if (auto extra = set_difference(normalized, k); !extra.empty()) {
    v.failed = AlmostSymmetricClause::UpperBound;
    v.witness = extra.front();
    return v;
  }
  if (!is_semigroup_set(dual_ideal)) {
    v.failed = AlmostSymmetricClause::DualNotSemigroup;
    v.witness_pair = closure_witness(dual_ideal);
    return v;
  }
  v.holds = true;
  return v;
}

Int almost_symmetric_type(RelativeIdeal const& e) {
  AlmostSymmetricVerdict const v = is_almost_symmetric_duplication(e);
  if (!v.holds) {
    throw Error(ErrorCode::NotAlmostSymmetric,
                "the duplication is not almost symmetric");
  }
  NumericalSemigroup const& s = e.base();
  RelativeIdeal const m = maximal_ideal(s);
  Int const by_colon = 2 * count_difference(difference(e, m), e) - 1;
  Int const by_dual = 2 * count_outside_base(v.dual) + 1;
  Int const by_canonical =
      2 * count_difference(canonical_ideal(s), v.normalized) + 1;
  if (by_colon != by_dual || by_dual != by_canonical) {
    throw Error(ErrorCode::InternalMismatch,
                "type formulas disagree: " + std::to_string(by_colon) + ", " +
                    std::to_string(by_dual) + ", " +
                    std::to_string(by_canonical));
  }
  if (by_dual < 1 || by_dual > 2 * type(s) + 1) {
    throw Error(ErrorCode::InternalMismatch, "type outside [1, 2 t(S) + 1]");
  }
  return by_dual;
}

std::vector<AdmissibleIdeal> enumerate_admissible(
    NumericalSemigroup const& s) {
  RelativeIdeal const m = maximal_ideal(s);
  RelativeIdeal const k = canonical_ideal(s);
  RelativeIdeal const lower = dual(difference(m, m));
  std::vector<Int> const free = set_difference(k, lower);
  if (free.size() > kMaxAdmissibleBits) {
    throw Error(ErrorCode::CapacityExceeded,
                std::to_string(free.size()) + " free elements exceed 2^20 "
                "candidate subsets");
  }

  struct Candidate {
    std::vector<Int> added;  // descending
    RelativeIdeal ideal;
  };
  std::vector<Candidate> found;
  std::uint64_t const subsets = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<Int> added;
    for (std::size_t i = free.size(); i-- > 0;) {
      if (mask >> i & 1U) added.push_back(free[i]);
    }
    auto member = [&](Int x) {
      return lower.contains(x) ||
             std::find(added.begin(), added.end(), x) != added.end();
    };
    bool stable = true;
    for (Int x : added) {
      for (Int a : s.min_generators()) {
        if (!member(x + a)) {
          stable = false;
          break;
        }
      }
      if (!stable) break;
    }
    if (!stable) continue;
    found.push_back(
        {added, RelativeIdeal::from_predicate(s, 0, s.frobenius(), member)});
  }
  std::sort(found.begin(), found.end(),
            [](Candidate const& a, Candidate const& b) {
              if (a.added.size() != b.added.size()) {
                return a.added.size() < b.added.size();
              }
              return a.added > b.added;
            });

  std::vector<AdmissibleIdeal> out;
  out.reserve(found.size());
  for (Candidate const& c : found) {
    RelativeIdeal d = dual(c.ideal);
    bool const closed = is_semigroup_set(d);
    std::optional<Int> t;
    if (closed) {
      t = almost_symmetric_type(
          translate(c.ideal, minimal_shift_into_base(c.ideal)));
    }
    out.push_back({c.ideal, std::move(d), closed, t});
  }
  return out;
}

Int minimal_shift_into_base(RelativeIdeal const& e) {
  return ShiftSequence(e).next();
}

Int ShiftSequence::next() {
  // z = c - m(E) always works, so the scan is bounded.
  for (Int z = std::max<Int>(cursor_, 0);; ++z) {
    if (shifted_inside_base(ideal_, z)) {
      cursor_ = z + 1;
      return z;
    }
  }
}

RelativeIdeal prescribed_type_normalized(NumericalSemigroup const& s, Int x) {
  if (x % 2 == 0) {
    throw Error(ErrorCode::TypeEven,
                "an almost symmetric duplication has odd type, got " +
                    std::to_string(x));
  }
  std::vector<Int> const pf = pseudo_frobenius(s);
  Int const t = static_cast<Int>(pf.size());
  if (x < 1 || x > 2 * t + 1) {
    throw Error(ErrorCode::TypeOutOfRange,
                "type must lie in [1, " + std::to_string(2 * t + 1) +
                    "], got " + std::to_string(x));
  }
  auto const count = static_cast<std::size_t>((x - 1) / 2);
  std::vector<Int> gens{0};
  gens.insert(gens.end(), pf.end() - static_cast<std::ptrdiff_t>(count),
              pf.end());
  RelativeIdeal const f = ideal_generated_by(s, gens);
  return difference(canonical_ideal(s), f);
}

RelativeIdeal construct_prescribed_type(NumericalSemigroup const& s, Int x,
                                        ShiftPolicy policy) {
  RelativeIdeal const normalized = prescribed_type_normalized(s, x);
  Int z = 0;
  if (policy.shift) {
    z = *policy.shift;
    if (z < 0 || !shifted_inside_base(normalized, z)) {
      throw Error(ErrorCode::IdealNotInS,
                  "shift " + std::to_string(z) + " does not land inside S");
    }
  } else {
    z = minimal_shift_into_base(normalized);
  }
  return translate(normalized, z);
}

std::vector<RelativeIdeal> construct_prescribed_family(
    NumericalSemigroup const& s, Int x, Int count) {
  RelativeIdeal const normalized = prescribed_type_normalized(s, x);
  ShiftSequence shifts(normalized);
  std::vector<RelativeIdeal> out;
  for (Int i = 0; i < count; ++i) {
    out.push_back(translate(normalized, shifts.next()));
  }
  return out;
}

NumericalSemigroup n_tuplicate(RelativeIdeal const& e, Int b, Int n) {
  NumericalSemigroup const& s = e.base();
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "n-tuplication needs n >= 2, got " + std::to_string(n));
  }
  if (b <= 0 || !s.contains(b)) {
    throw Error(ErrorCode::BNotMember,
                "b = " + std::to_string(b) + " must be a positive element");
  }
  if (std::gcd(b, n) != 1) {
    throw Error(ErrorCode::GcdCondition,
                "gcd(b, n) = " + std::to_string(std::gcd(b, n)));
  }
  require_inside_base(e);

  std::vector<RelativeIdeal> parts{as_ideal(s)};
  for (Int k = 1; k < n; ++k) parts.push_back(sum(parts.back(), e));
  Int top = 0;
  for (Int k = 0; k < n; ++k) {
    top = std::max(top, n * parts[static_cast<std::size_t>(k)].frobenius() +
                            k * b + 1);
  }
  std::vector<std::uint8_t> table(static_cast<std::size_t>(top) + 1, 0);
  for (Int x = 0; x <= top; ++x) {
    for (Int k = 0; k < n; ++k) {
      Int const rest = x - k * b;
      if (rest >= 0 && rest % n == 0 &&
          parts[static_cast<std::size_t>(k)].contains(rest / n)) {
        table[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return NumericalSemigroup::from_membership(std::move(table));
}

}  // namespace numdup

#include "numdup/ideal.hpp"

#include <algorithm>
#include <string>

namespace numdup {

namespace {

constexpr Int kMaxWindow = Int{1} << 26;

void require_same_base(RelativeIdeal const& e, RelativeIdeal const& f) {
  if (!(e.base() == f.base())) {
    throw Error(ErrorCode::BaseMismatch,
                "ideals belong to different semigroups");
  }
}

struct Normal {
  Int min = 0;
  Int frobenius = -1;
  std::vector<std::uint8_t> window;
};

// Members: x >= lo with (x > hi or member(x)).
Normal normal_form(Int lo, Int hi, std::function<bool(Int)> const& member) {
  if (hi - lo > kMaxWindow) {
    throw Error(ErrorCode::CapacityExceeded, "ideal window too large");
  }
  Normal n;
  n.min = std::max(lo, hi + 1);
  for (Int x = lo; x <= hi; ++x) {
    if (member(x)) {
      n.min = x;
      break;
    }
  }
  n.frobenius = n.min - 1;
  for (Int x = hi; x > n.min; --x) {
    if (!member(x)) {
      n.frobenius = x;
      break;
    }
  }
  n.window.reserve(static_cast<std::size_t>(n.frobenius - n.min + 1));
  for (Int x = n.min; x <= n.frobenius; ++x) {
    n.window.push_back(member(x) ? 1 : 0);
  }
  return n;
}

}  // namespace

RelativeIdeal RelativeIdeal::unchecked(NumericalSemigroup base, Int lo, Int hi,
                                       std::function<bool(Int)> const& member) {
  Normal n = normal_form(lo, hi, member);
  return RelativeIdeal(std::move(base), n.min, n.frobenius,
                       std::move(n.window));
}

RelativeIdeal RelativeIdeal::from_predicate(
    NumericalSemigroup base, Int lo, Int hi,
    std::function<bool(Int)> const& member) {
  RelativeIdeal e = unchecked(std::move(base), lo, hi, member);
  // E + S within E reduces to E + (minimal generators) within E, and only
  // sums at or below f(E) can miss.
  for (Int x = e.min_; x <= e.frobenius_; ++x) {
    if (!e.contains(x)) continue;
    for (Int a : e.base_.min_generators()) {
      if (!e.contains(x + a)) {
        throw Error(ErrorCode::NotAnIdeal,
                    std::to_string(x) + " is in E but " +
                        std::to_string(x) + " + " + std::to_string(a) +
                        " is not");
      }
    }
  }
  return e;
}

Int RelativeIdeal::genus() const noexcept {
  return static_cast<Int>(std::count(window_.begin(), window_.end(), 0));
}

std::vector<Int> RelativeIdeal::small_elements() const {
  std::vector<Int> out;
  for (Int x = min_; x <= frobenius_ + 1; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

RelativeIdeal ideal_generated_by(NumericalSemigroup const& s,
                                 std::span<Int const> elems) {
  if (elems.empty()) {
    throw Error(ErrorCode::EmptyGenerators, "ideal needs at least one element");
  }
  auto const [lo, hi] = std::minmax_element(elems.begin(), elems.end());
  return RelativeIdeal::from_predicate(
      s, *lo, *hi + s.conductor() - 1, [&](Int x) {
        return std::any_of(elems.begin(), elems.end(),
                           [&](Int t) { return s.contains(x - t); });
      });
}

RelativeIdeal as_ideal(NumericalSemigroup const& s) {
  return RelativeIdeal::from_predicate(
      s, 0, s.frobenius(), [&](Int x) { return s.contains(x); });
}

RelativeIdeal maximal_ideal(NumericalSemigroup const& s) {
  if (s.is_naturals()) {
    throw Error(ErrorCode::NaturalsUnsupported,
                "maximal ideal is not used for S = N");
  }
  return RelativeIdeal::from_predicate(
      s, 1, s.frobenius(), [&](Int x) { return s.contains(x); });
}

RelativeIdeal conductor_ideal(NumericalSemigroup const& s) {
  return RelativeIdeal::from_predicate(s, s.conductor(), s.frobenius(),
                                       [](Int) { return true; });
}

RelativeIdeal canonical_ideal(NumericalSemigroup const& s) {
  Int const f = s.frobenius();
  return RelativeIdeal::from_predicate(
      s, 0, f, [&](Int x) { return !s.contains(f - x); });
}

RelativeIdeal sum(RelativeIdeal const& e, RelativeIdeal const& f) {
  require_same_base(e, f);
  Int const lo = e.min() + f.min();
  Int const hi = std::min(e.frobenius() + f.min(), f.frobenius() + e.min());
  return RelativeIdeal::from_predicate(e.base(), lo, hi, [&](Int x) {
    for (Int t = e.min(); t <= x - f.min(); ++t) {
      if (e.contains(t) && f.contains(x - t)) return true;
    }
    return false;
  });
}

RelativeIdeal n_fold(RelativeIdeal const& e, Int n) {
  if (n < 0) {
    throw Error(ErrorCode::InvalidArgument, "n_fold needs n >= 0");
  }
  RelativeIdeal out = as_ideal(e.base());
  for (Int i = 0; i < n; ++i) out = sum(out, e);
  return out;
}

RelativeIdeal difference(RelativeIdeal const& e, RelativeIdeal const& f) {
  require_same_base(e, f);
  // Below the window z + m(F) < m(E); above it every z + u exceeds f(E).
  Int const lo = e.min() - f.min();
  Int const hi = e.frobenius() - f.min();
  return RelativeIdeal::from_predicate(e.base(), lo, hi, [&](Int z) {
    for (Int u = f.min(); z + u <= e.frobenius(); ++u) {
      if (f.contains(u) && !e.contains(z + u)) return false;
    }
    return true;
  });
}

RelativeIdeal intersect(RelativeIdeal const& e, RelativeIdeal const& f) {
  require_same_base(e, f);
  return RelativeIdeal::from_predicate(
      e.base(), std::max(e.min(), f.min()),
      std::max(e.frobenius(), f.frobenius()),
      [&](Int x) { return e.contains(x) && f.contains(x); });
}

RelativeIdeal unite(RelativeIdeal const& e, RelativeIdeal const& f) {
  require_same_base(e, f);
  return RelativeIdeal::from_predicate(
      e.base(), std::min(e.min(), f.min()),
      std::min(e.frobenius(), f.frobenius()),
      [&](Int x) { return e.contains(x) || f.contains(x); });
}

RelativeIdeal translate(RelativeIdeal const& e, Int x) {
  return RelativeIdeal::from_predicate(
      e.base(), e.min() + x, e.frobenius() + x,
      [&](Int y) { return e.contains(y - x); });
}

RelativeIdeal normalize(RelativeIdeal const& e) {
  return translate(e, e.base().frobenius() - e.frobenius());
}

RelativeIdeal dual(RelativeIdeal const& e, DualCheck check) {
  Int const f = e.base().frobenius();
  RelativeIdeal reflected = RelativeIdeal::from_predicate(
      e.base(), f - e.frobenius(), f - e.min(),
      [&](Int x) { return !e.contains(f - x); });
  if (check == DualCheck::CrossCheck &&
      !(difference(canonical_ideal(e.base()), e) == reflected)) {
    throw Error(ErrorCode::InternalMismatch,
                "K - E by reflection differs from the raw difference");
  }
  return reflected;
}

bool is_canonical(RelativeIdeal const& e) {
  return normalize(e) == canonical_ideal(e.base());
}

std::optional<std::pair<Int, Int>> closure_witness(RelativeIdeal const& e) {
  if (e.min() != 0) return std::nullopt;
  // Sums above f(E) are always members.
  for (Int a = 1; 2 * a <= e.frobenius(); ++a) {
    if (!e.contains(a)) continue;
    for (Int b = a; a + b <= e.frobenius(); ++b) {
      if (e.contains(b) && !e.contains(a + b)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

bool is_semigroup_set(RelativeIdeal const& e) {
  return e.min() == 0 && !closure_witness(e).has_value();
}

NumericalSemigroup to_semigroup(RelativeIdeal const& e) {
  if (e.min() != 0) {
    throw Error(ErrorCode::NotClosed, "set does not have minimum 0");
  }
  std::vector<std::uint8_t> table;
  for (Int x = 0; x <= e.frobenius(); ++x) {
    table.push_back(e.contains(x) ? 1 : 0);
  }
  return NumericalSemigroup::from_membership(std::move(table));
}

bool is_subset(RelativeIdeal const& e, RelativeIdeal const& f) {
  Int const top = std::max(e.frobenius(), f.frobenius());
  for (Int x = e.min(); x <= top; ++x) {
    if (e.contains(x) && !f.contains(x)) return false;
  }
  return true;
}

std::vector<Int> set_difference(RelativeIdeal const& e,
                                RelativeIdeal const& f) {
  std::vector<Int> out;
  for (Int x = e.min(); x <= f.frobenius(); ++x) {
    if (e.contains(x) && !f.contains(x)) out.push_back(x);
  }
  return out;
}

Int count_difference(RelativeIdeal const& e, RelativeIdeal const& f) {
  return static_cast<Int>(set_difference(e, f).size());
}

Int count_outside_base(RelativeIdeal const& e) {
  NumericalSemigroup const& s = e.base();
  Int n = 0;
  for (Int x = e.min(); x <= s.frobenius(); ++x) {
    if (e.contains(x) && !s.contains(x)) ++n;
  }
  return n;
}

std::vector<Int> minimal_generators(RelativeIdeal const& e) {
  NumericalSemigroup const& s = e.base();
  std::vector<Int> out;
  // Past f(E) + multiplicity, x - multiplicity is already in E.
  for (Int x = e.min(); x <= e.frobenius() + s.multiplicity(); ++x) {
    if (!e.contains(x)) continue;
    bool decomposable = false;
    for (Int m = s.multiplicity(); x - m >= e.min() && !decomposable; ++m) {
      decomposable = s.contains(m) && e.contains(x - m);
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

}  // namespace numdup

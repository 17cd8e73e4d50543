#include "numdup/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace numdup {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NaturalsUnsupported: return "NaturalsUnsupported";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::BNotOddMember: return "BNotOddMember";
    case ErrorCode::IdealNotInS: return "IdealNotInS";
    case ErrorCode::RelaxedConditionFails: return "RelaxedConditionFails";
    case ErrorCode::NotAlmostSymmetric: return "NotAlmostSymmetric";
    case ErrorCode::TypeOutOfRange: return "TypeOutOfRange";
    case ErrorCode::TypeEven: return "TypeEven";
    case ErrorCode::GcdCondition: return "GcdCondition";
    case ErrorCode::BNotMember: return "BNotMember";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

namespace {

// Largest membership table the constructors are willing to allocate.
constexpr Int kMaxTable = Int{1} << 26;

void require_not_naturals(NumericalSemigroup const& s, char const* what) {
  if (s.is_naturals()) {
    throw Error(ErrorCode::NaturalsUnsupported,
                std::string(what) + " is not defined for S = N");
  }
}

}  // namespace

NumericalSemigroup::NumericalSemigroup()
    : NumericalSemigroup(normalized(std::vector<std::uint8_t>{1})) {}

NumericalSemigroup NumericalSemigroup::normalized(
    std::vector<std::uint8_t> table) {
  auto d = std::make_shared<Data>();
  Int last_gap = -1;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x] == 0) {
      last_gap = static_cast<Int>(x);
      ++d->genus;
    }
  }
  d->conductor = last_gap + 1;
  table.resize(static_cast<std::size_t>(d->conductor) + 1, 1);
  table[static_cast<std::size_t>(d->conductor)] = 1;
  d->table = std::move(table);

  auto member = [&](Int x) {
    return x >= d->conductor || d->table[static_cast<std::size_t>(x)] != 0;
  };
  Int mult = 1;
  while (!member(mult)) ++mult;
  // Past the multiplicity itself, every minimal generator is below c + m.
  for (Int m = mult; m == mult || m < d->conductor + mult; ++m) {
    if (!member(m)) continue;
    bool decomposable = false;
    for (Int a = mult; 2 * a <= m && !decomposable; ++a) {
      decomposable = member(a) && member(m - a);
    }
    if (!decomposable) d->min_generators.push_back(m);
  }
  return NumericalSemigroup(std::move(d));
}

NumericalSemigroup NumericalSemigroup::from_membership(
    std::vector<std::uint8_t> table) {
  if (!table.empty() && table[0] == 0) {
    throw Error(ErrorCode::NotClosed, "0 must be an element");
  }
  auto const n = static_cast<Int>(table.size());
  for (Int a = 1; a < n; ++a) {
    if (!table[static_cast<std::size_t>(a)]) continue;
    for (Int b = a; a + b < n; ++b) {
      if (table[static_cast<std::size_t>(b)] &&
          !table[static_cast<std::size_t>(a + b)]) {
        throw Error(ErrorCode::NotClosed,
                    std::to_string(a) + " + " + std::to_string(b) + " = " +
                        std::to_string(a + b) + " is missing");
      }
    }
  }
  return normalized(std::move(table));
}

NumericalSemigroup NumericalSemigroup::from_generators(
    std::span<Int const> gens) {
  if (gens.empty()) {
    throw Error(ErrorCode::InvalidArgument, "generator list is empty");
  }
  Int g = 0;
  for (Int x : gens) {
    if (x <= 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "generators must be positive, got " + std::to_string(x));
    }
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw Error(ErrorCode::GcdNotOne, "gcd of generators is " +
                                          std::to_string(g) +
                                          ", complement is infinite");
  }
  auto const [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  Int const smallest = *lo;
  Int const largest = *hi;
  // f(S) <= (a_1 - 1)(a_n - 1) - 1; the extra slack leaves room for a full
  // run of `smallest` consecutive members past the Frobenius number.
  Int limit = (smallest - 1) * (largest - 1) + smallest + largest;
  if (limit > kMaxTable) {
    throw Error(ErrorCode::CapacityExceeded,
                "generators too large for a membership table");
  }
  for (;;) {
    std::vector<std::uint8_t> table(static_cast<std::size_t>(limit) + 1, 0);
    table[0] = 1;
    for (Int x = 1; x <= limit; ++x) {
      for (Int a : gens) {
        if (a <= x && table[static_cast<std::size_t>(x - a)]) {
          table[static_cast<std::size_t>(x)] = 1;
          break;
        }
      }
    }
    // Once `smallest` consecutive members appear, everything after follows.
    Int run = 0;
    for (Int x = 0; x <= limit; ++x) {
      run = table[static_cast<std::size_t>(x)] ? run + 1 : 0;
      if (run == smallest) {
        table.resize(static_cast<std::size_t>(x + 1));
        return normalized(std::move(table));
      }
    }
    limit *= 2;
    if (limit > kMaxTable) {
      throw Error(ErrorCode::CapacityExceeded,
                  "generators too large for a membership table");
    }
  }
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<Int const> gaps) {
  Int top = 0;
  for (Int x : gaps) {
    if (x <= 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "gaps must be positive, got " + std::to_string(x));
    }
    top = std::max(top, x);
  }
  if (top > kMaxTable) {
    throw Error(ErrorCode::CapacityExceeded, "gap too large");
  }
  std::vector<std::uint8_t> table(static_cast<std::size_t>(top) + 1, 1);
  for (Int x : gaps) table[static_cast<std::size_t>(x)] = 0;
  return from_membership(std::move(table));
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(genus()));
  for (Int x = 1; x < conductor(); ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::small_elements() const {
  std::vector<Int> out;
  for (Int x = 0; x <= conductor(); ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> pseudo_frobenius(NumericalSemigroup const& s) {
  require_not_naturals(s, "pseudo-Frobenius set");
  Int const c = s.conductor();
  std::vector<Int> out;
  for (Int x = 1; x < c; ++x) {
    if (s.contains(x)) continue;
    bool pf = true;
    // s >= c gives x + s > c automatically.
    for (Int m = s.multiplicity(); m < c && pf; ++m) {
      pf = !s.contains(m) || s.contains(x + m);
    }
    if (pf) out.push_back(x);
  }
  return out;
}

Int type(NumericalSemigroup const& s) {
  return static_cast<Int>(pseudo_frobenius(s).size());
}

std::vector<Int> gaps_second_type(NumericalSemigroup const& s) {
  require_not_naturals(s, "gaps of the second type");
  Int const f = s.frobenius();
  std::vector<Int> out;
  for (Int y = 1; y <= f; ++y) {
    if (!s.contains(y) && !s.contains(f - y)) out.push_back(y);
  }
  return out;
}

bool is_symmetric(NumericalSemigroup const& s) {
  Int const f = s.frobenius();
  bool const by_count = f + 1 == 2 * s.genus();
  bool by_reflection = true;
  for (Int z = 0; z <= f && by_reflection; ++z) {
    by_reflection = s.contains(z) != s.contains(f - z);
  }
  if (by_count != by_reflection) {
    throw Error(ErrorCode::InternalMismatch, "symmetry criteria disagree");
  }
  return by_count;
}

bool is_almost_symmetric(NumericalSemigroup const& s) {
  require_not_naturals(s, "almost symmetry");
  Int const f = s.frobenius();
  Int const c = s.conductor();

  std::vector<Int> l_and_f = gaps_second_type(s);
  l_and_f.push_back(f);
  bool const by_gaps = l_and_f == pseudo_frobenius(s);

  // K(S) + M(S) within M(S); only k <= f and s < c can fail.
  bool by_canonical = true;
  for (Int k = 0; k <= f && by_canonical; ++k) {
    if (s.contains(f - k)) continue;
    for (Int m = s.multiplicity(); m < c && by_canonical; ++m) {
      by_canonical = !s.contains(m) || s.contains(k + m);
    }
  }
  if (by_gaps != by_canonical) {
    throw Error(ErrorCode::InternalMismatch,
                "almost symmetry criteria disagree");
  }
  return by_gaps;
}

bool is_pseudo_symmetric(NumericalSemigroup const& s) {
  return is_almost_symmetric(s) && type(s) == 2;
}

AperyData apery_set(NumericalSemigroup const& s, Int n) {
  if (n <= 0 || !s.contains(n)) {
    throw Error(ErrorCode::NotMember,
                std::to_string(n) + " is not a nonzero element");
  }
  AperyData ap;
  ap.modulus = n;
  ap.elements.assign(static_cast<std::size_t>(n), -1);
  Int filled = 0;
  for (Int x = 0; filled < n; ++x) {
    auto& w = ap.elements[static_cast<std::size_t>(x % n)];
    if (w < 0 && s.contains(x)) {
      w = x;
      ++filled;
    }
  }
  ap.maximal.assign(static_cast<std::size_t>(n), true);
  for (std::size_t i = 0; i < ap.elements.size(); ++i) {
    for (std::size_t j = 0; j < ap.elements.size(); ++j) {
      if (i != j && s.contains(ap.elements[j] - ap.elements[i])) {
        ap.maximal[i] = false;
        break;
      }
    }
  }
  return ap;
}

bool apery_pairwise_condition(NumericalSemigroup const& s, Int n) {
  AperyData const ap = apery_set(s, n);
  std::vector<Int> maximal;
  for (std::size_t i = 0; i < ap.elements.size(); ++i) {
    if (ap.maximal[i]) maximal.push_back(ap.elements[i]);
  }
  for (Int wi : maximal) {
    for (Int wj : maximal) {
      for (Int wk : maximal) {
        if (wi + wj == wk + n) return false;
      }
    }
  }
  return true;
}

NumericalSemigroup quotient(NumericalSemigroup const& s, Int n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "quotient needs n >= 1, got " + std::to_string(n));
  }
  Int const top = (s.conductor() + n - 1) / n;
  std::vector<std::uint8_t> table(static_cast<std::size_t>(top) + 1);
  for (Int x = 0; x <= top; ++x) {
    table[static_cast<std::size_t>(x)] = s.contains(n * x) ? 1 : 0;
  }
  return NumericalSemigroup::from_membership(std::move(table));
}

}  // namespace numdup

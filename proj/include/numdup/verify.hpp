#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numdup/ideal.hpp"
#include "numdup/semigroup.hpp"

namespace numdup {

// Invariants recomputed from raw membership with no closed forms; every scan
// runs over [-f - 2, 2 f + 2].
struct OracleInvariants {
  Int frobenius = -1;
  Int genus = 0;
  Int type = 0;
  std::vector<Int> pseudo_frobenius;
  bool symmetric = true;
  bool almost_symmetric = true;
};

OracleInvariants oracle_invariants(NumericalSemigroup const& t);

// First (k, s) in K(T) x M(T), scanning k then s upward, with k + s outside
// M(T). Present exactly when T is not almost symmetric.
std::optional<std::array<Int, 2>> oracle_almost_symmetry_witness(
    NumericalSemigroup const& t);

// f(T) - z not in T.
bool oracle_canonical_member(NumericalSemigroup const& t, Int z);

struct SemigroupEnumeration {
  // Every semigroup of genus <= max_genus once, ordered by gap set.
  std::vector<NumericalSemigroup> semigroups;
  // counts[g] = number of semigroups of genus g.
  std::vector<Int> counts;
};

// Genus-tree walk: the children of S are S \ {m} for minimal generators
// m > f(S). CapacityExceeded when max_genus > genus_cap.
SemigroupEnumeration enumerate_semigroups(Int max_genus, Int genus_cap = 12);

struct IdealEnumerationOptions {
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
  // Translate each E~ by its least shift into S.
  bool shift_into_base = false;
  // Off only for harness self-tests: yields sets that are not S-stable.
  bool check_stability = true;
};

// All E~ with C(S) within E~ within K(S), i.e. one representative of every
// class of relative ideals. NaturalsUnsupported for N, CapacityExceeded when
// 2^|K \ C| exceeds max_subsets.
std::vector<RelativeIdeal> enumerate_ideals(
    NumericalSemigroup const& s, IdealEnumerationOptions const& opts = {});

struct Check {
  std::string name;
  Int predicted = 0;
  Int oracle = 0;
  bool pass = false;
};

struct InstanceIdeal {
  Int min = 0;
  Int frobenius = -1;
  std::vector<std::uint8_t> window;
};

struct Instance {
  std::vector<Int> generators;
  std::optional<InstanceIdeal> ideal;
  // 0 when the report covers the semigroup alone.
  Int b = 0;
  Int n = 0;
};

struct VerificationReport {
  Instance instance;
  std::vector<Check> checks;
  std::optional<std::string> counterexample;

  bool passed() const;
};

enum class Mutation {
  None,
  // Ideal enumeration keeps sets that are not closed under adding S.
  DropStabilityFilter,
};

struct VerifyOptions {
  Int max_genus = 6;
  std::uint64_t ideal_cap = 4096;
  Int b_count = 2;
  // 0 picks the hardware concurrency.
  unsigned workers = 0;
  Mutation mutation = Mutation::None;
};

// Runs every formula and characterization check over all S with 0 < g(S) <= max_genus,
// every enumerated E~ (moved into S by its least shift) and the b_count
// smallest odd b in S. Failures are report entries, never exceptions, except
// CapacityExceeded from the enumerations. Output order is canonical.
std::vector<VerificationReport> verify_all(VerifyOptions const& opts);

// Reports for a single semigroup; verify_all is this mapped over the
// enumeration.
std::vector<VerificationReport> verify_semigroup(NumericalSemigroup const& s,
                                                 VerifyOptions const& opts);

struct CheckTally {
  Int passed = 0;
  Int failed = 0;
};

std::map<std::string, CheckTally> summarize(
    std::vector<VerificationReport> const& reports);

Int count_failures(std::vector<VerificationReport> const& reports);

}  // namespace numdup

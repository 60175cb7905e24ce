#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semirings/op_table.hpp"
#include "semirings/semigroup_census.hpp"

namespace semirings {

struct CensusFilter {
  bool with_zero = false;        // additive identity that multiplication absorbs
  bool with_one = false;         // multiplicative identity
  bool ai = false;               // additively idempotent: x + x = x
  bool commutative_mul = false;  // x*y = y*x

  friend bool operator==(const CensusFilter&, const CensusFilter&) = default;
};

struct CensusQuery {
  int n = 1;
  EquivMode equiv = EquivMode::iso;
  CensusFilter filter;

  friend bool operator==(const CensusQuery&, const CensusQuery&) = default;
};

/// A validated (addition, multiplication) pair: addition is a commutative
/// semigroup, multiplication is a semigroup, and multiplication distributes
/// over addition on both sides. Construction throws if any axiom fails, so a
/// SemiringPair only exists post-validation.
class SemiringPair {
 public:
  SemiringPair(OpTable add, OpTable mul);

  int order() const { return add_.order(); }
  const OpTable& add() const { return add_; }
  const OpTable& mul() const { return mul_; }

  friend bool operator==(const SemiringPair&, const SemiringPair&) = default;
  friend auto operator<=>(const SemiringPair&, const SemiringPair&) = default;

 private:
  OpTable add_;
  OpTable mul_;
};

struct CensusProvenance {
  uint64_t additive_classes = 0;
  uint64_t multiplicative_classes = 0;
  uint64_t cosets_tested = 0;
  uint64_t distributive_hits = 0;
};

struct CensusOptions {
  int threads = 1;
  bool collect = false;  // store the emitted pairs in CensusResult::semirings
  std::optional<std::filesystem::path> cache_dir;
  /// Called once per counted semiring, in deterministic census order.
  std::function<void(const SemiringPair&)> sink;
};

struct CensusResult {
  CensusQuery query;
  uint64_t count = 0;
  CensusProvenance provenance;
  std::vector<SemiringPair> semirings;
};

/// The double-coset sweep: for each additive class A (commutative
/// semigroups up to isomorphism) and multiplicative class M (semigroups up
/// to the query's equivalence), twist M by one representative per double
/// coset of Aut(M)\Sym(n)/Aut(A) (Aut*(M) on the left in iso_or_anti mode)
/// and count the twists that distribute over A and pass the filters. Each
/// hit is a distinct equivalence class of semirings, and every class is hit
/// exactly once.
CensusResult enumerate_semirings(const CensusQuery& q,
                                 const CensusOptions& options = {});

/// Conjunction of the filter predicates on a concrete pair.
bool filter_predicates(const OpTable& add, const OpTable& mul,
                       const CensusFilter& f);

struct LawCheck {
  std::string law;
  bool ok = true;
  std::array<int, 3> witness{-1, -1, -1};  // first failing triple (or pair)
};

struct SemiringReport {
  std::array<LawCheck, 5> laws;
  bool all_ok() const;
  const LawCheck* first_failure() const;
};

/// Checks the five defining axioms one by one: + associativity,
/// + commutativity, * associativity, left and right distributivity.
SemiringReport verify_semiring(const OpTable& add, const OpTable& mul);

/// Validates the invariance the sweep relies on: distributivity of M^s over
/// A depends only on the double coset of s. Exhaustive for n <= 2, sampled
/// otherwise. Returns true iff every sample agrees.
bool census_self_check(const CensusQuery& q, int samples = 1000,
                       uint64_t seed = 0);

}  // namespace semirings

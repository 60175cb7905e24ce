#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semirings/op_table.hpp"
#include "semirings/perm_group.hpp"

namespace semirings {

/// Raised when a query needs a census outside the supported range. Callers
/// get a loud failure instead of a silently partial count.
class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tri-state structural constraints on the generated semigroups.
struct SemigroupConstraint {
  std::optional<bool> commutative;
  std::optional<bool> idempotent;
  std::optional<bool> with_identity;

  bool satisfied_by(const OpTable& t) const;

  /// Three-character encoding ('-' unset, '0' false, '1' true), used in
  /// cache file names and headers.
  std::string code() const;
};

struct SemigroupFlags {
  bool commutative = false;
  bool idempotent = false;
  bool has_identity = false;
};

/// One isomorphism class (or iso-or-anti-isomorphism class) of semigroups:
/// the canonical table together with its stabilizer groups.
struct SemigroupClass {
  OpTable table;
  PermGroup aut;
  PermGroup aut_star;
  SemigroupFlags flags;
};

/// Largest order the census supports for the given constraints: 6 in
/// general, 7 when commutativity or idempotency prunes the search space.
int max_census_order(const SemigroupConstraint& c);

/// Emits exactly one SemigroupClass per equivalence class of semigroups of
/// order n satisfying the constraints, in ascending order of canonical
/// table. Classes are produced by a depth-first row-major fill with
/// incremental associativity rejection and a canonicality bound.
void enumerate_semigroups(int n, const SemigroupConstraint& c, EquivMode mode,
                          const std::function<void(SemigroupClass&&)>& emit);

std::vector<SemigroupClass> semigroup_classes(int n,
                                              const SemigroupConstraint& c,
                                              EquivMode mode);

/// Cache-aware variant: reuses (and validates) a cache file under cache_dir
/// when present, regenerating and rewriting it otherwise. Cached results are
/// byte-identical to regeneration.
std::vector<SemigroupClass> semigroup_classes(
    int n, const SemigroupConstraint& c, EquivMode mode,
    const std::optional<std::filesystem::path>& cache_dir);

uint64_t count_semigroups(int n, const SemigroupConstraint& c,
                          EquivMode mode);

/// Path of the cache file used for the given census parameters.
std::filesystem::path semigroup_cache_path(
    const std::filesystem::path& cache_dir, int n,
    const SemigroupConstraint& c, EquivMode mode);

}  // namespace semirings

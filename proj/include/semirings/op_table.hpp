#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semirings/perm.hpp"

namespace semirings {

enum class EquivMode { iso, iso_or_anti };

/// Cayley table of a total binary operation on {0, ..., n-1}.
///
/// Entries are stored row-major; at(x, y) is the product x*y. Tables compare
/// lexicographically on (order, flattened entries), which is the total order
/// used for canonical forms throughout.
class OpTable {
 public:
  static constexpr int kMaxOrder = 8;

  explicit OpTable(int n);
  OpTable(int n, std::span<const int> cells);
  OpTable(int n, std::initializer_list<int> cells);
  static OpTable from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }
  int at(int x, int y) const {
    return cells_[static_cast<size_t>(n_) * static_cast<size_t>(x) +
                  static_cast<size_t>(y)];
  }
  void set(int x, int y, int value);

  std::span<const uint8_t> cells() const {
    return {cells_.data(), static_cast<size_t>(n_) * n_};
  }

  /// Row-major digit string, e.g. "0011" for the order-2 left-zero table.
  std::string to_string() const;
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const OpTable&, const OpTable&) = default;
  friend auto operator<=>(const OpTable&, const OpTable&) = default;

 private:
  uint8_t n_ = 1;
  std::array<uint8_t, kMaxOrder * kMaxOrder> cells_{};
};

bool is_associative(const OpTable& t);
bool is_commutative(const OpTable& t);
bool is_idempotent(const OpTable& t);

/// Both distributive laws of mul over add, short-circuiting on the first
/// failure. Throws if the tables have different orders.
bool distributes(const OpTable& mul, const OpTable& add);

struct DistributivityReport {
  bool left_ok = true;
  bool right_ok = true;
  std::array<int, 3> left_witness{-1, -1, -1};   // (x, y, z) if left fails
  std::array<int, 3> right_witness{-1, -1, -1};  // (x, y, z) if right fails
  bool ok() const { return left_ok && right_ok; }
};
DistributivityReport distributes_report(const OpTable& mul,
                                        const OpTable& add);

/// The relabeled table t^s with (t^s)(s(x), s(y)) = s(t(x, y)).
OpTable apply_perm(const OpTable& t, const Perm& s);

OpTable transpose(const OpTable& t);

/// The unique two-sided identity, if any.
std::optional<int> identity_element(const OpTable& t);

/// The element that is an additive identity for `add` and multiplicatively
/// absorbing for `mul`, if any.
std::optional<int> zero_element(const OpTable& add, const OpTable& mul);

struct CanonicalForm {
  OpTable table;
  Perm perm;        // a permutation achieving the minimum
  bool transposed;  // whether the minimum came from the transposed table
};

/// Lexicographic minimum of {t^s : s in Sym(n)} (iso mode), additionally
/// ranging over transpose(t)^s in iso_or_anti mode. Two tables are equivalent
/// under the mode iff their canonical forms are equal.
CanonicalForm canonical_form(const OpTable& t, EquivMode mode);

}  // namespace semirings

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace semirings {

/// A bijection on {0, ..., n-1}, stored by images: x maps to images[x].
///
/// Comparison is lexicographic on the image sequence, so the identity is the
/// least element of Sym(n) and ranks agree with generation order.
class Perm {
 public:
  static constexpr int kMaxDegree = 8;

  static Perm identity(int n);
  Perm(std::initializer_list<int> images);
  explicit Perm(std::span<const int> images);

  int degree() const { return n_; }
  int operator[](int x) const { return img_[static_cast<size_t>(x)]; }

  Perm inverse() const;

  /// Position of this permutation in the lexicographic ordering of Sym(n).
  uint64_t rank() const;

  std::string to_string() const;

  friend Perm compose(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  struct Unchecked {};
  Perm(Unchecked, int n) : n_(static_cast<uint8_t>(n)) {}
  void check_bijection() const;

  uint8_t n_ = 1;
  std::array<uint8_t, kMaxDegree> img_{};
};

/// Composition in application order: x -> b(a(x)), i.e. apply a first.
Perm compose(const Perm& a, const Perm& b);

uint64_t factorial(int n);

/// All of Sym(n) in lexicographic order. Throws unless 1 <= n <= 8.
std::vector<Perm> all_perms(int n);

/// Memoized all_perms(n); the returned list is immutable and safe to share
/// across threads.
const std::vector<Perm>& sym_perms(int n);

}  // namespace semirings

#pragma once

#include <vector>

#include "semirings/op_table.hpp"
#include "semirings/perm.hpp"

namespace semirings {

/// A subgroup of Sym(n) stored as the explicit, sorted list of its elements.
///
/// Construction verifies the group axioms: identity present, closed under
/// composition and inverse, and |G| divides n!. Scale is bounded by n <= 8,
/// so no generator-based machinery is used anywhere.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> elements);

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);

  int degree() const { return n_; }
  size_t order() const { return elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  bool contains(const Perm& p) const;

  friend bool operator==(const PermGroup&, const PermGroup&) = default;

 private:
  int n_;
  std::vector<Perm> elems_;  // sorted, duplicate-free
};

/// The stabilizer { s in Sym(n) : t^s = t }, i.e. the automorphism group of
/// the operation.
PermGroup automorphism_group(const OpTable& t);

/// All automorphisms and anti-automorphisms: { s : t^s = t or t^s =
/// transpose(t) }. Group structure is verified on construction.
PermGroup aut_star_group(const OpTable& t);

/// One representative per double coset of H\Sym(n)/K, each the minimal
/// element of its coset in lexicographic order, found by an in-order marking
/// sweep over Sym(n).
std::vector<Perm> double_coset_reps(const PermGroup& H, const PermGroup& K);

/// Smallest subgroup of Sym(degree) containing the generators.
PermGroup group_closure(int degree, const std::vector<Perm>& generators);

}  // namespace semirings

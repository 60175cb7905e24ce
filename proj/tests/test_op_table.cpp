#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "semirings/op_table.hpp"

using namespace semirings;

namespace {

OpTable left_zero(int n) {
  OpTable t(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t.set(x, y, x);
  }
  return t;
}

OpTable right_zero(int n) {
  OpTable t(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t.set(x, y, y);
  }
  return t;
}

OpTable constant(int n, int v) {
  OpTable t(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t.set(x, y, v);
  }
  return t;
}

const OpTable kMax2 = OpTable(2, {0, 1, 1, 1});
const OpTable kMin2 = OpTable(2, {0, 0, 0, 1});
const OpTable kXor2 = OpTable(2, {0, 1, 1, 0});

OpTable from_oracle(const oracle::Table& t, int n) {
  return OpTable(n, std::span<const int>(t));
}

OpTable random_table(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, n - 1);
  OpTable t(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t.set(x, y, d(rng));
  }
  return t;
}

Perm random_perm(int n, std::mt19937& rng) {
  const auto& perms = sym_perms(n);
  std::uniform_int_distribution<size_t> d(0, perms.size() - 1);
  return perms[d(rng)];
}

}  // namespace

TEST_CASE("OpTable construction validates entries") {
  CHECK_THROWS_AS(OpTable(0), std::invalid_argument);
  CHECK_THROWS_AS(OpTable(9), std::invalid_argument);
  CHECK_THROWS_AS(OpTable(2, {0, 1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(OpTable(2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(OpTable::from_rows({{0, 1}, {0}}), std::invalid_argument);
  const OpTable t = OpTable::from_rows({{0, 1}, {1, 0}});
  CHECK(t == kXor2);
  CHECK(t.to_string() == "0110");
}

TEST_CASE("associativity") {
  CHECK(is_associative(left_zero(2)));
  CHECK_FALSE(is_associative(OpTable(2, {1, 0, 0, 0})));
  CHECK(is_associative(OpTable(1, {0})));
}

TEST_CASE("commutativity and idempotency") {
  CHECK(is_commutative(constant(2, 0)));
  CHECK_FALSE(is_commutative(left_zero(2)));
  CHECK(is_idempotent(left_zero(3)));
  CHECK_FALSE(is_idempotent(constant(2, 0)));
}

TEST_CASE("predicate counts over all order-2 tables") {
  int assoc = 0, comm_assoc = 0, idem_comm_assoc = 0;
  for (const auto& ot : oracle::all_tables(2)) {
    const OpTable t = from_oracle(ot, 2);
    if (!is_associative(t)) continue;
    ++assoc;
    if (!is_commutative(t)) continue;
    ++comm_assoc;
    if (is_idempotent(t)) ++idem_comm_assoc;
  }
  CHECK(assoc == 8);
  CHECK(comm_assoc == 6);
  CHECK(idem_comm_assoc == 2);
}

TEST_CASE("predicates agree with the naive oracle on every order-2 table") {
  for (const auto& ot : oracle::all_tables(2)) {
    const OpTable t = from_oracle(ot, 2);
    CHECK(is_associative(t) == oracle::assoc(ot, 2));
    CHECK(is_commutative(t) == oracle::comm(ot, 2));
    CHECK(is_idempotent(t) == oracle::idem(ot, 2));
    CHECK(identity_element(t).has_value() ==
          oracle::identity_of(ot, 2).has_value());
  }
}

TEST_CASE("distributes: known cases and full order-2 oracle sweep") {
  CHECK(distributes(kMin2, kMax2));  // Boolean pair: min over max
  CHECK(distributes(constant(2, 1), kMax2));
  CHECK_FALSE(distributes(kXor2, kMax2));
  CHECK(distributes(OpTable(1, {0}), OpTable(1, {0})));
  CHECK_THROWS_AS(distributes(OpTable(2), OpTable(3)), std::invalid_argument);

  const auto tables = oracle::all_tables(2);
  for (const auto& om : tables) {
    for (const auto& oa : tables) {
      CHECK(distributes(from_oracle(om, 2), from_oracle(oa, 2)) ==
            oracle::distrib(om, oa, 2));
    }
  }
}

TEST_CASE("distributes_report pinpoints the failing law") {
  const DistributivityReport rep = distributes_report(kXor2, kMax2);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.left_ok);
  const auto [x, y, z] = rep.left_witness;
  // re-check the witness by hand
  CHECK(kXor2.at(x, kMax2.at(y, z)) !=
        kMax2.at(kXor2.at(x, y), kXor2.at(x, z)));

  const DistributivityReport ok = distributes_report(kMin2, kMax2);
  CHECK(ok.ok());
  CHECK(ok.left_witness == std::array<int, 3>{-1, -1, -1});
}

TEST_CASE("apply_perm: identity, fixed tables, right action law") {
  std::mt19937 rng(42);
  const Perm swap2({1, 0});
  CHECK(apply_perm(left_zero(2), swap2) == left_zero(2));
  CHECK(apply_perm(kMax2, swap2) == kMin2);
  CHECK_THROWS_AS(apply_perm(OpTable(3), swap2), std::invalid_argument);

  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const OpTable t = random_table(n, rng);
      CHECK(apply_perm(t, Perm::identity(n)) == t);
      const Perm s = random_perm(n, rng);
      const Perm u = random_perm(n, rng);
      CHECK(apply_perm(apply_perm(t, s), u) == apply_perm(t, compose(s, u)));
    }
  }
}

TEST_CASE("axioms are invariant under relabeling and transpose") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      const OpTable t = random_table(n, rng);
      const Perm s = random_perm(n, rng);
      const OpTable ts = apply_perm(t, s);
      CHECK(is_associative(t) == is_associative(ts));
      CHECK(is_commutative(t) == is_commutative(ts));
      CHECK(is_idempotent(t) == is_idempotent(ts));
      CHECK(identity_element(t).has_value() ==
            identity_element(ts).has_value());
      CHECK(is_associative(t) == is_associative(transpose(t)));
    }
  }
}

TEST_CASE("distributivity is invariant under simultaneous relabeling") {
  std::mt19937 rng(11);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 80; ++trial) {
      const OpTable mul = random_table(n, rng);
      const OpTable add = random_table(n, rng);
      const Perm s = random_perm(n, rng);
      CHECK(distributes(mul, add) ==
            distributes(apply_perm(mul, s), apply_perm(add, s)));
    }
  }
}

TEST_CASE("transpose") {
  CHECK(transpose(left_zero(2)) == right_zero(2));
  CHECK(transpose(kMax2) == kMax2);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const OpTable t = random_table(4, rng);
    CHECK(transpose(transpose(t)) == t);
  }
}

TEST_CASE("identity_element") {
  CHECK(identity_element(kMax2) == 0);
  CHECK_FALSE(identity_element(left_zero(2)).has_value());
  CHECK(identity_element(OpTable(1, {0})) == 0);
}

TEST_CASE("zero_element") {
  CHECK(zero_element(kMax2, kMin2) == 0);
  CHECK_FALSE(zero_element(kMax2, kMax2).has_value());
  CHECK(zero_element(OpTable(1, {0}), OpTable(1, {0})) == 0);
}

TEST_CASE("canonical_form: fixed points and transposes") {
  const CanonicalForm lz = canonical_form(left_zero(2), EquivMode::iso);
  CHECK(lz.table == left_zero(2));

  const CanonicalForm a =
      canonical_form(right_zero(2), EquivMode::iso_or_anti);
  const CanonicalForm b = canonical_form(left_zero(2), EquivMode::iso_or_anti);
  CHECK(a.table == b.table);
}

TEST_CASE("canonical_form: 8 associative order-2 tables fall in 5 classes") {
  std::set<OpTable> canon;
  for (const auto& ot : oracle::all_tables(2)) {
    const OpTable t = from_oracle(ot, 2);
    if (is_associative(t)) {
      canon.insert(canonical_form(t, EquivMode::iso).table);
    }
  }
  CHECK(canon.size() == 5);
}

TEST_CASE("canonical_form is a class function and the perm achieves it") {
  std::mt19937 rng(13);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const OpTable t = random_table(n, rng);
      for (const EquivMode mode : {EquivMode::iso, EquivMode::iso_or_anti}) {
        const CanonicalForm cf = canonical_form(t, mode);
        CHECK(cf.table <= t);
        const OpTable base = cf.transposed ? transpose(t) : t;
        CHECK(apply_perm(base, cf.perm) == cf.table);
        for (int rel = 0; rel < 100; ++rel) {
          const Perm s = random_perm(n, rng);
          CHECK(canonical_form(apply_perm(t, s), mode).table == cf.table);
        }
      }
    }
  }
}

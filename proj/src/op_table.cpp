#include "semirings/op_table.hpp"

#include <cassert>
#include <stdexcept>

namespace semirings {

namespace {

void check_order(int n) {
  if (n < 1 || n > OpTable::kMaxOrder) {
    throw std::invalid_argument("OpTable order must be in [1, 8], got " +
                                std::to_string(n));
  }
}

}  // namespace

OpTable::OpTable(int n) {
  check_order(n);
  n_ = static_cast<uint8_t>(n);
}

OpTable::OpTable(int n, std::span<const int> cells) {
  check_order(n);
  n_ = static_cast<uint8_t>(n);
  if (cells.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw std::invalid_argument("OpTable needs exactly n*n entries");
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] < 0 || cells[i] >= n) {
      throw std::invalid_argument("OpTable entry out of range [0, n)");
    }
    cells_[i] = static_cast<uint8_t>(cells[i]);
  }
}

OpTable::OpTable(int n, std::initializer_list<int> cells)
    : OpTable(n, std::span<const int>(cells.begin(), cells.size())) {}

OpTable OpTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("OpTable rows must all have length n");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return OpTable(n, std::span<const int>(flat));
}

void OpTable::set(int x, int y, int value) {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) {
    throw std::invalid_argument("OpTable::set index out of range");
  }
  if (value < 0 || value >= n_) {
    throw std::invalid_argument("OpTable::set entry out of range [0, n)");
  }
  cells_[static_cast<size_t>(n_) * x + y] = static_cast<uint8_t>(value);
}

std::string OpTable::to_string() const {
  std::string s;
  s.reserve(static_cast<size_t>(n_) * n_);
  for (uint8_t c : cells()) s += static_cast<char>('0' + c);
  return s;
}

std::vector<std::vector<int>> OpTable::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) out[x][y] = at(x, y);
  }
  return out;
}

bool is_associative(const OpTable& t) {
  const int n = t.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = t.at(x, y);
      for (int z = 0; z < n; ++z) {
        if (t.at(xy, z) != t.at(x, t.at(y, z))) return false;
      }
    }
  }
  return true;
}

bool is_commutative(const OpTable& t) {
  const int n = t.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (t.at(x, y) != t.at(y, x)) return false;
    }
  }
  return true;
}

bool is_idempotent(const OpTable& t) {
  for (int x = 0; x < t.order(); ++x) {
    if (t.at(x, x) != x) return false;
  }
  return true;
}

bool distributes(const OpTable& mul, const OpTable& add) {
  const int n = mul.order();
  if (n != add.order()) {
    throw std::invalid_argument("distributes: table orders differ");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const int s = add.at(y, z);
        if (mul.at(x, s) != add.at(mul.at(x, y), mul.at(x, z))) return false;
        if (mul.at(s, x) != add.at(mul.at(y, x), mul.at(z, x))) return false;
      }
    }
  }
  return true;
}

DistributivityReport distributes_report(const OpTable& mul,
                                        const OpTable& add) {
  const int n = mul.order();
  if (n != add.order()) {
    throw std::invalid_argument("distributes_report: table orders differ");
  }
  DistributivityReport rep;
  for (int x = 0; x < n && rep.left_ok; ++x) {
    for (int y = 0; y < n && rep.left_ok; ++y) {
      for (int z = 0; z < n && rep.left_ok; ++z) {
        const int s = add.at(y, z);
        if (mul.at(x, s) != add.at(mul.at(x, y), mul.at(x, z))) {
          rep.left_ok = false;
          rep.left_witness = {x, y, z};
        }
      }
    }
  }
  for (int x = 0; x < n && rep.right_ok; ++x) {
    for (int y = 0; y < n && rep.right_ok; ++y) {
      for (int z = 0; z < n && rep.right_ok; ++z) {
        const int s = add.at(y, z);
        if (mul.at(s, x) != add.at(mul.at(y, x), mul.at(z, x))) {
          rep.right_ok = false;
          rep.right_witness = {x, y, z};
        }
      }
    }
  }
  return rep;
}

OpTable apply_perm(const OpTable& t, const Perm& s) {
  const int n = t.order();
  if (n != s.degree()) {
    throw std::invalid_argument("apply_perm: degree mismatch");
  }
  OpTable out(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      out.set(s[x], s[y], s[t.at(x, y)]);
    }
  }
  return out;
}

OpTable transpose(const OpTable& t) {
  const int n = t.order();
  OpTable out(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) out.set(x, y, t.at(y, x));
  }
  return out;
}

std::optional<int> identity_element(const OpTable& t) {
  const int n = t.order();
  std::optional<int> found;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = t.at(e, x) == x && t.at(x, e) == x;
    }
    if (ok) {
      // two-sided identities are automatically unique
      assert(!found.has_value());
      found = e;
#ifdef NDEBUG
      break;
#endif
    }
  }
  return found;
}

std::optional<int> zero_element(const OpTable& add, const OpTable& mul) {
  const int n = add.order();
  if (n != mul.order()) {
    throw std::invalid_argument("zero_element: table orders differ");
  }
  const std::optional<int> z = identity_element(add);
  if (!z) return std::nullopt;
  for (int x = 0; x < n; ++x) {
    if (mul.at(x, *z) != *z || mul.at(*z, x) != *z) return std::nullopt;
  }
  return z;
}

namespace {

// Compares the relabeling of t under s (optionally of its transpose) with
// `best`, position by position. Returns <0 if strictly smaller, 0 if equal,
// >0 if strictly larger.
int compare_relabeled(const OpTable& t, const Perm& s, const Perm& s_inv,
                      bool transposed, const uint8_t* best) {
  const int n = t.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int sx = s_inv[x];
      const int sy = s_inv[y];
      const int val = s[transposed ? t.at(sy, sx) : t.at(sx, sy)];
      const int b = best[x * n + y];
      if (val != b) return val - b;
    }
  }
  return 0;
}

}  // namespace

CanonicalForm canonical_form(const OpTable& t, EquivMode mode) {
  const int n = t.order();
  const auto& perms = sym_perms(n);
  OpTable best = t;
  Perm best_perm = Perm::identity(n);
  bool best_transposed = false;
  const int routes = mode == EquivMode::iso ? 1 : 2;
  for (const Perm& s : perms) {
    const Perm s_inv = s.inverse();
    for (int route = 0; route < routes; ++route) {
      if (compare_relabeled(t, s, s_inv, route == 1, best.cells().data()) <
          0) {
        best = route == 1 ? apply_perm(transpose(t), s) : apply_perm(t, s);
        best_perm = s;
        best_transposed = route == 1;
      }
    }
  }
  return CanonicalForm{best, best_perm, best_transposed};
}

}  // namespace semirings

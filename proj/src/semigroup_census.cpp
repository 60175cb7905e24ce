#include "semirings/semigroup_census.hpp"

#include <array>
#include <cassert>
#include <fstream>
#include <sstream>

#include "semirings/version.hpp"

namespace semirings {

bool SemigroupConstraint::satisfied_by(const OpTable& t) const {
  if (commutative && *commutative != is_commutative(t)) return false;
  if (idempotent && *idempotent != is_idempotent(t)) return false;
  if (with_identity && *with_identity != identity_element(t).has_value()) {
    return false;
  }
  return true;
}

std::string SemigroupConstraint::code() const {
  auto ch = [](const std::optional<bool>& f) {
    return !f ? '-' : (*f ? '1' : '0');
  };
  return {ch(commutative), ch(idempotent), ch(with_identity)};
}

int max_census_order(const SemigroupConstraint& c) {
  const bool pruned =
      c.commutative.value_or(false) || c.idempotent.value_or(false);
  return pruned ? 7 : 6;
}

namespace {

constexpr uint8_t kUnset = 0xFF;

// Depth-first fill of the n x n table in row-major order. Commutativity and
// idempotency are enforced structurally (mirrored cells, fixed diagonal);
// associativity is rejected incrementally on every placement; the
// canonicality bound prunes partial tables that some relabeling already
// beats, and rejects non-canonical completions exactly at the leaves.
class Generator {
 public:
  Generator(int n, const SemigroupConstraint& c, EquivMode mode,
            const std::function<void(SemigroupClass&&)>& emit)
      : n_(n),
        constraint_(c),
        mode_(mode),
        emit_(emit),
        perms_(sym_perms(n)) {
    cells_.fill(kUnset);
    force_comm_ = c.commutative.value_or(false);
    force_idem_ = c.idempotent.value_or(false);
    inverses_.reserve(perms_.size());
    for (const Perm& p : perms_) inverses_.push_back(p.inverse());
  }

  void run() { fill(0); }

 private:
  uint8_t get(int x, int y) const {
    return cells_[static_cast<size_t>(x) * n_ + y];
  }

  void fill(int pos) {
    if (pos == n_ * n_) {
      leaf();
      return;
    }
    const int r = pos / n_;
    const int c = pos % n_;
    int lo = 0;
    int hi = n_ - 1;
    if (force_idem_ && r == c) {
      lo = hi = r;
    } else if (force_comm_ && r > c) {
      lo = hi = get(c, r);
    }
    for (int v = lo; v <= hi; ++v) {
      cells_[pos] = static_cast<uint8_t>(v);
      if (associativity_ok(r, c) &&
          (c != n_ - 1 || prefix_canonical(pos + 1))) {
        fill(pos + 1);
      }
    }
    cells_[pos] = kUnset;
  }

  // Checks every associativity triple whose full evaluation first becomes
  // possible now that cell (a, b) is set. A triple (x, y, z) needs the four
  // products t(x,y), t(t(x,y),z), t(y,z), t(x,t(y,z)); the new cell can play
  // any of the four roles.
  bool associativity_ok(int a, int b) const {
    const uint8_t v = get(a, b);
    // (a, b, z): t(v, z) vs t(a, t(b, z))
    for (int z = 0; z < n_; ++z) {
      const uint8_t bz = get(b, z);
      const uint8_t vz = get(v, z);
      if (bz != kUnset && vz != kUnset) {
        const uint8_t a_bz = get(a, bz);
        if (a_bz != kUnset && a_bz != vz) return false;
      }
    }
    // (x, a, b): t(t(x, a), b) vs t(x, v)
    for (int x = 0; x < n_; ++x) {
      const uint8_t xa = get(x, a);
      const uint8_t xv = get(x, v);
      if (xa != kUnset && xv != kUnset) {
        const uint8_t xa_b = get(xa, b);
        if (xa_b != kUnset && xa_b != xv) return false;
      }
    }
    // (x, y, b) with t(x, y) = a: lhs is v itself
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        if (get(x, y) != a) continue;
        const uint8_t yb = get(y, b);
        if (yb == kUnset) continue;
        const uint8_t x_yb = get(x, yb);
        if (x_yb != kUnset && x_yb != v) return false;
      }
    }
    // (a, y, z) with t(y, z) = b: rhs is v itself
    for (int y = 0; y < n_; ++y) {
      for (int z = 0; z < n_; ++z) {
        if (get(y, z) != b) continue;
        const uint8_t ay = get(a, y);
        if (ay == kUnset) continue;
        const uint8_t ay_z = get(ay, z);
        if (ay_z != kUnset && ay_z != v) return false;
      }
    }
    return true;
  }

  // With the first `filled` cells set, decides whether some relabeling (or,
  // in iso_or_anti mode, some relabeling of the transpose) is already
  // lexicographically smaller on a fully-determined prefix. Such a partial
  // table cannot extend to a canonical one. At filled == n*n this is the
  // exact canonicality test.
  bool prefix_canonical(int filled) const {
    const int routes = mode_ == EquivMode::iso ? 1 : 2;
    for (size_t pi = 0; pi < perms_.size(); ++pi) {
      const Perm& p = perms_[pi];
      const Perm& q = inverses_[pi];
      for (int route = 0; route < routes; ++route) {
        if (pi == 0 && route == 0) continue;  // the table itself
        for (int pos = 0; pos < filled; ++pos) {
          const int x = q[pos / n_];
          const int y = q[pos % n_];
          const uint8_t src = route ? get(y, x) : get(x, y);
          if (src == kUnset) break;  // undecidable on this prefix
          const uint8_t val = static_cast<uint8_t>(p[src]);
          if (val < cells_[pos]) return false;
          if (val > cells_[pos]) break;  // this variant can never be smaller
        }
      }
    }
    return true;
  }

  void leaf() {
    // the bound at the final row boundary ran at full length, so the table
    // is already known to be canonical
    assert(prefix_canonical(n_ * n_));
    std::array<int, 64> flat{};
    for (int i = 0; i < n_ * n_; ++i) flat[i] = cells_[i];
    OpTable t(n_, std::span<const int>(flat.data(),
                                       static_cast<size_t>(n_) * n_));
    assert(is_associative(t));
    if (!constraint_.satisfied_by(t)) return;
    SemigroupFlags flags{is_commutative(t), is_idempotent(t),
                         identity_element(t).has_value()};
    emit_(SemigroupClass{t, automorphism_group(t), aut_star_group(t), flags});
  }

  int n_;
  SemigroupConstraint constraint_;
  EquivMode mode_;
  const std::function<void(SemigroupClass&&)>& emit_;
  const std::vector<Perm>& perms_;
  std::vector<Perm> inverses_;
  std::array<uint8_t, 64> cells_;
  bool force_comm_ = false;
  bool force_idem_ = false;
};

SemigroupClass class_for_table(const OpTable& t) {
  return SemigroupClass{t, automorphism_group(t), aut_star_group(t),
                        SemigroupFlags{is_commutative(t), is_idempotent(t),
                                       identity_element(t).has_value()}};
}

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string mode_name(EquivMode mode) {
  return mode == EquivMode::iso ? "iso" : "iso_or_anti";
}

std::string checksum_hex(const std::vector<std::string>& tables) {
  std::string joined;
  for (const auto& t : tables) {
    joined += t;
    joined += '\n';
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(joined)));
  return buf;
}

std::optional<std::vector<OpTable>> load_cache(
    const std::filesystem::path& path, int n, const SemigroupConstraint& c,
    EquivMode mode) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) ||
      line != std::string("semirings-semigroup-cache ") + kEngineVersion) {
    return std::nullopt;
  }
  if (!std::getline(in, line)) return std::nullopt;
  std::istringstream header(line);
  std::string n_field, c_field, m_field, count_field, sum_field;
  header >> n_field >> c_field >> m_field >> count_field >> sum_field;
  if (n_field != "n=" + std::to_string(n) ||
      c_field != "constraint=" + c.code() ||
      m_field != "mode=" + mode_name(mode)) {
    return std::nullopt;
  }
  if (count_field.rfind("count=", 0) != 0 ||
      sum_field.rfind("checksum=", 0) != 0) {
    return std::nullopt;
  }
  uint64_t expected_count = 0;
  for (char ch : count_field.substr(6)) {
    if (ch < '0' || ch > '9') return std::nullopt;
    expected_count = expected_count * 10 + static_cast<uint64_t>(ch - '0');
  }
  const std::string expected_sum = sum_field.substr(9);
  std::vector<std::string> table_lines;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    table_lines.push_back(line);
  }
  if (table_lines.size() != expected_count ||
      checksum_hex(table_lines) != expected_sum) {
    return std::nullopt;
  }
  std::vector<OpTable> tables;
  tables.reserve(table_lines.size());
  for (const auto& s : table_lines) {
    if (static_cast<int>(s.size()) != n * n) return std::nullopt;
    std::vector<int> flat(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] >= '0' + n) return std::nullopt;
      flat[i] = s[i] - '0';
    }
    tables.emplace_back(n, std::span<const int>(flat));
  }
  return tables;
}

void store_cache(const std::filesystem::path& path, int n,
                 const SemigroupConstraint& c, EquivMode mode,
                 const std::vector<std::string>& table_lines) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) return;  // caching is best-effort
  out << "semirings-semigroup-cache " << kEngineVersion << '\n';
  out << "n=" << n << " constraint=" << c.code() << " mode="
      << mode_name(mode) << " count=" << table_lines.size()
      << " checksum=" << checksum_hex(table_lines) << '\n';
  for (const auto& t : table_lines) out << t << '\n';
}

}  // namespace

void enumerate_semigroups(int n, const SemigroupConstraint& c, EquivMode mode,
                          const std::function<void(SemigroupClass&&)>& emit) {
  if (n < 1) {
    throw std::invalid_argument("semigroup census: order must be >= 1");
  }
  if (n > max_census_order(c)) {
    throw capability_error(
        "semigroup census (constraint " + c.code() + ", " + mode_name(mode) +
        ") is not supported at order " + std::to_string(n) +
        "; the limit is " + std::to_string(max_census_order(c)));
  }
  Generator gen(n, c, mode, emit);
  gen.run();
}

std::vector<SemigroupClass> semigroup_classes(int n,
                                              const SemigroupConstraint& c,
                                              EquivMode mode) {
  std::vector<SemigroupClass> out;
  enumerate_semigroups(n, c, mode,
                       [&](SemigroupClass&& cls) { out.push_back(std::move(cls)); });
  return out;
}

std::vector<SemigroupClass> semigroup_classes(
    int n, const SemigroupConstraint& c, EquivMode mode,
    const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return semigroup_classes(n, c, mode);
  const auto path = semigroup_cache_path(*cache_dir, n, c, mode);
  if (auto tables = load_cache(path, n, c, mode)) {
    std::vector<SemigroupClass> out;
    out.reserve(tables->size());
    for (const OpTable& t : *tables) out.push_back(class_for_table(t));
    return out;
  }
  auto out = semigroup_classes(n, c, mode);
  std::error_code ec;
  std::filesystem::create_directories(*cache_dir, ec);
  std::vector<std::string> lines;
  lines.reserve(out.size());
  for (const auto& cls : out) lines.push_back(cls.table.to_string());
  store_cache(path, n, c, mode, lines);
  return out;
}

uint64_t count_semigroups(int n, const SemigroupConstraint& c,
                          EquivMode mode) {
  uint64_t count = 0;
  enumerate_semigroups(n, c, mode, [&](SemigroupClass&&) { ++count; });
  return count;
}

std::filesystem::path semigroup_cache_path(
    const std::filesystem::path& cache_dir, int n,
    const SemigroupConstraint& c, EquivMode mode) {
  return cache_dir / ("sg-n" + std::to_string(n) + "-" + c.code() + "-" +
                      (mode == EquivMode::iso ? "iso" : "ia") + ".cache");
}

}  // namespace semirings

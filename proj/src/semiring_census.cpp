#include "semirings/semiring_census.hpp"

#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

namespace semirings {

SemiringPair::SemiringPair(OpTable add, OpTable mul)
    : add_(std::move(add)), mul_(std::move(mul)) {
  if (add_.order() != mul_.order()) {
    throw std::invalid_argument("SemiringPair: table orders differ");
  }
  const SemiringReport report = verify_semiring(add_, mul_);
  if (!report.all_ok()) {
    throw std::invalid_argument("SemiringPair: axiom failed: " +
                                report.first_failure()->law);
  }
}

bool filter_predicates(const OpTable& add, const OpTable& mul,
                       const CensusFilter& f) {
  if (add.order() != mul.order()) {
    throw std::invalid_argument("filter_predicates: table orders differ");
  }
  if (f.with_zero && !zero_element(add, mul)) return false;
  if (f.with_one && !identity_element(mul)) return false;
  if (f.ai && !is_idempotent(add)) return false;
  if (f.commutative_mul && !is_commutative(mul)) return false;
  return true;
}

bool SemiringReport::all_ok() const {
  for (const LawCheck& l : laws) {
    if (!l.ok) return false;
  }
  return true;
}

const LawCheck* SemiringReport::first_failure() const {
  for (const LawCheck& l : laws) {
    if (!l.ok) return &l;
  }
  return nullptr;
}

namespace {

std::optional<std::array<int, 3>> first_assoc_violation(const OpTable& t) {
  const int n = t.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) {
          return std::array<int, 3>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> first_comm_violation(const OpTable& t) {
  const int n = t.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (t.at(x, y) != t.at(y, x)) return std::array<int, 3>{x, y, -1};
    }
  }
  return std::nullopt;
}

}  // namespace

SemiringReport verify_semiring(const OpTable& add, const OpTable& mul) {
  if (add.order() != mul.order()) {
    throw std::invalid_argument("verify_semiring: table orders differ");
  }
  SemiringReport rep;
  rep.laws[0].law = "+ associativity";
  if (auto w = first_assoc_violation(add)) {
    rep.laws[0].ok = false;
    rep.laws[0].witness = *w;
  }
  rep.laws[1].law = "+ commutativity";
  if (auto w = first_comm_violation(add)) {
    rep.laws[1].ok = false;
    rep.laws[1].witness = *w;
  }
  rep.laws[2].law = "* associativity";
  if (auto w = first_assoc_violation(mul)) {
    rep.laws[2].ok = false;
    rep.laws[2].witness = *w;
  }
  const DistributivityReport d = distributes_report(mul, add);
  rep.laws[3].law = "left distributivity";
  rep.laws[3].ok = d.left_ok;
  if (!d.left_ok) rep.laws[3].witness = d.left_witness;
  rep.laws[4].law = "right distributivity";
  rep.laws[4].ok = d.right_ok;
  if (!d.right_ok) rep.laws[4].witness = d.right_witness;
  return rep;
}

namespace {

struct SweepInputs {
  std::vector<SemigroupClass> additive;
  std::vector<SemigroupClass> multiplicative;
};

SweepInputs census_inputs(const CensusQuery& q,
                          const std::optional<std::filesystem::path>& cache) {
  SemigroupConstraint add_c;
  add_c.commutative = true;
  if (q.filter.ai) add_c.idempotent = true;
  if (q.filter.with_zero) add_c.with_identity = true;

  SemigroupConstraint mul_c;
  if (q.filter.commutative_mul) mul_c.commutative = true;
  if (q.filter.with_one) mul_c.with_identity = true;

  // Validate both induced censuses before generating either, so an
  // unsupported query fails fast instead of after minutes of work.
  for (const auto* c : {&mul_c, &add_c}) {
    if (q.n > max_census_order(*c)) {
      throw capability_error(
          "query needs a semigroup census (constraint " + c->code() +
          ") at order " + std::to_string(q.n) + ", which exceeds its limit " +
          std::to_string(max_census_order(*c)));
    }
  }

  SweepInputs in;
  in.additive = semigroup_classes(q.n, add_c, EquivMode::iso, cache);
  in.multiplicative = semigroup_classes(q.n, mul_c, q.equiv, cache);
  return in;
}

struct ChunkResult {
  uint64_t count = 0;
  uint64_t cosets_tested = 0;
  uint64_t distributive_hits = 0;
  std::vector<SemiringPair> emitted;
};

// Runs the inner sweep for pair indices [lo, hi) of the flattened
// (additive, multiplicative) grid, additive index outermost.
ChunkResult sweep_range(const CensusQuery& q, const SweepInputs& in,
                        uint64_t lo, uint64_t hi, bool keep_pairs,
                        const std::function<void(const SemiringPair&)>& sink) {
  ChunkResult out;
  const uint64_t m_count = in.multiplicative.size();
  for (uint64_t idx = lo; idx < hi; ++idx) {
    const SemigroupClass& A = in.additive[idx / m_count];
    const SemigroupClass& M = in.multiplicative[idx % m_count];
    const PermGroup& H = q.equiv == EquivMode::iso ? M.aut : M.aut_star;
    const std::vector<Perm> reps = double_coset_reps(H, A.aut);
    out.cosets_tested += reps.size();
    for (const Perm& s : reps) {
      const OpTable twisted = apply_perm(M.table, s);
      if (!distributes(twisted, A.table)) continue;
      ++out.distributive_hits;
      if (!filter_predicates(A.table, twisted, q.filter)) continue;
      ++out.count;
      if (keep_pairs) {
        out.emitted.emplace_back(A.table, twisted);
      } else if (sink) {
        sink(SemiringPair(A.table, twisted));
      }
    }
  }
  return out;
}

}  // namespace

CensusResult enumerate_semirings(const CensusQuery& q,
                                 const CensusOptions& options) {
  if (q.n < 1) {
    throw std::invalid_argument("census order must be >= 1");
  }
  const SweepInputs in = census_inputs(q, options.cache_dir);

  CensusResult result;
  result.query = q;
  result.provenance.additive_classes = in.additive.size();
  result.provenance.multiplicative_classes = in.multiplicative.size();

  const uint64_t pairs =
      static_cast<uint64_t>(in.additive.size()) * in.multiplicative.size();
  const int threads = std::max(1, options.threads);
  const bool buffer_pairs = options.collect || (options.sink && threads > 1);

  auto absorb = [&](ChunkResult&& chunk) {
    result.count += chunk.count;
    result.provenance.cosets_tested += chunk.cosets_tested;
    result.provenance.distributive_hits += chunk.distributive_hits;
    for (SemiringPair& p : chunk.emitted) {
      if (options.sink) options.sink(p);
      if (options.collect) result.semirings.push_back(std::move(p));
    }
  };

  if (threads == 1 || pairs < 2) {
    absorb(sweep_range(q, in, 0, pairs, buffer_pairs, options.sink));
    return result;
  }

  const uint64_t n_chunks =
      std::min<uint64_t>(pairs, static_cast<uint64_t>(threads) * 8);
  std::vector<ChunkResult> chunks(n_chunks);
  std::atomic<uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const uint64_t ci = next.fetch_add(1);
      if (ci >= n_chunks) return;
      const uint64_t lo = pairs * ci / n_chunks;
      const uint64_t hi = pairs * (ci + 1) / n_chunks;
      chunks[ci] = sweep_range(q, in, lo, hi, buffer_pairs, nullptr);
    }
  };
  std::vector<std::thread> pool;
  const int n_workers = static_cast<int>(
      std::min<uint64_t>(static_cast<uint64_t>(threads), n_chunks));
  pool.reserve(static_cast<size_t>(n_workers));
  for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  for (ChunkResult& chunk : chunks) absorb(std::move(chunk));
  return result;
}

bool census_self_check(const CensusQuery& q, int samples, uint64_t seed) {
  const SweepInputs in = census_inputs(q, std::nullopt);
  const auto& perms = sym_perms(q.n);

  auto agrees = [&](const SemigroupClass& A, const SemigroupClass& M,
                    const Perm& s, const Perm& h, const Perm& k) {
    const bool base = distributes(apply_perm(M.table, s), A.table);
    const Perm moved = compose(compose(h, s), k);
    return distributes(apply_perm(M.table, moved), A.table) == base;
  };

  if (q.n <= 2) {
    for (const auto& A : in.additive) {
      for (const auto& M : in.multiplicative) {
        const PermGroup& H = q.equiv == EquivMode::iso ? M.aut : M.aut_star;
        for (const Perm& s : perms) {
          for (const Perm& h : H.elements()) {
            for (const Perm& k : A.aut.elements()) {
              if (!agrees(A, M, s, h, k)) return false;
            }
          }
        }
      }
    }
    return true;
  }

  std::mt19937_64 rng(seed);
  auto pick = [&rng](size_t size) {
    return std::uniform_int_distribution<size_t>(0, size - 1)(rng);
  };
  for (int i = 0; i < samples; ++i) {
    const SemigroupClass& A = in.additive[pick(in.additive.size())];
    const SemigroupClass& M =
        in.multiplicative[pick(in.multiplicative.size())];
    const PermGroup& H = q.equiv == EquivMode::iso ? M.aut : M.aut_star;
    const Perm& s = perms[pick(perms.size())];
    const Perm& h = H.elements()[pick(H.order())];
    const Perm& k = A.aut.elements()[pick(A.aut.order())];
    if (!agrees(A, M, s, h, k)) return false;
  }
  return true;
}

}  // namespace semirings

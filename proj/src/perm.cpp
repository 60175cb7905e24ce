#include "semirings/perm.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace semirings {

Perm Perm::identity(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("Perm degree must be in [1, 8], got " +
                                std::to_string(n));
  }
  Perm p(Unchecked{}, n);
  std::iota(p.img_.begin(), p.img_.begin() + n, uint8_t{0});
  return p;
}

Perm::Perm(std::initializer_list<int> images)
    : Perm(std::span<const int>(images.begin(), images.size())) {}

Perm::Perm(std::span<const int> images) {
  if (images.empty() || images.size() > kMaxDegree) {
    throw std::invalid_argument("Perm degree must be in [1, 8], got " +
                                std::to_string(images.size()));
  }
  n_ = static_cast<uint8_t>(images.size());
  for (size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 0 || images[i] >= n_) {
      throw std::invalid_argument("Perm image out of range");
    }
    img_[i] = static_cast<uint8_t>(images[i]);
  }
  check_bijection();
}

void Perm::check_bijection() const {
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[img_[i]]) throw std::invalid_argument("Perm images not distinct");
    seen[img_[i]] = true;
  }
}

Perm Perm::inverse() const {
  Perm out(Unchecked{}, n_);
  for (int i = 0; i < n_; ++i) out.img_[img_[i]] = static_cast<uint8_t>(i);
  return out;
}

uint64_t Perm::rank() const {
  uint64_t r = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j) smaller += img_[j] < img_[i];
    r = r * static_cast<uint64_t>(n_ - i) + static_cast<uint64_t>(smaller);
  }
  return r;
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += std::to_string(img_[i]);
  }
  s += ']';
  return s;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  Perm out(Perm::Unchecked{}, a.degree());
  for (int x = 0; x < a.degree(); ++x) {
    out.img_[x] = static_cast<uint8_t>(b[a[x]]);
  }
  return out;
}

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

std::vector<Perm> all_perms(int n) {
  if (n < 1 || n > Perm::kMaxDegree) {
    throw std::invalid_argument("all_perms: order must be in [1, 8], got " +
                                std::to_string(n));
  }
  std::array<int, Perm::kMaxDegree> img{};
  std::iota(img.begin(), img.begin() + n, 0);
  std::vector<Perm> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(std::span<const int>(img.data(), static_cast<size_t>(n)));
  } while (std::next_permutation(img.begin(), img.begin() + n));
  return out;
}

const std::vector<Perm>& sym_perms(int n) {
  if (n < 1 || n > Perm::kMaxDegree) {
    throw std::invalid_argument("sym_perms: order must be in [1, 8]");
  }
  static std::array<std::once_flag, Perm::kMaxDegree + 1> flags;
  static std::array<std::vector<Perm>, Perm::kMaxDegree + 1> cache;
  std::call_once(flags[static_cast<size_t>(n)],
                 [n] { cache[static_cast<size_t>(n)] = all_perms(n); });
  return cache[static_cast<size_t>(n)];
}

}  // namespace semirings

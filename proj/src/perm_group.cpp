#include "semirings/perm_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace semirings {

PermGroup::PermGroup(int degree, std::vector<Perm> elements)
    : n_(degree), elems_(std::move(elements)) {
  if (degree < 1 || degree > Perm::kMaxDegree) {
    throw std::invalid_argument("PermGroup degree must be in [1, 8]");
  }
  for (const Perm& p : elems_) {
    if (p.degree() != n_) {
      throw std::invalid_argument("PermGroup element has wrong degree");
    }
  }
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty() || elems_.front() != Perm::identity(n_)) {
    throw std::invalid_argument("PermGroup must contain the identity");
  }
  const uint64_t full = factorial(n_);
  if (full % elems_.size() != 0) {
    throw std::invalid_argument("PermGroup order does not divide n!");
  }
  if (elems_.size() == full) return;  // all of Sym(n), closed by pigeonhole
  for (const Perm& a : elems_) {
    if (!contains(a.inverse())) {
      throw std::invalid_argument("PermGroup not closed under inverse");
    }
    for (const Perm& b : elems_) {
      if (!contains(compose(a, b))) {
        throw std::invalid_argument("PermGroup not closed under composition");
      }
    }
  }
}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup(degree, {Perm::identity(degree)});
}

PermGroup PermGroup::symmetric(int degree) {
  return PermGroup(degree, all_perms(degree));
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

namespace {

bool is_endomorphism(const OpTable& t, const Perm& s) {
  const int n = t.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s[t.at(x, y)] != t.at(s[x], s[y])) return false;
    }
  }
  return true;
}

bool is_anti_endomorphism(const OpTable& t, const Perm& s) {
  const int n = t.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s[t.at(x, y)] != t.at(s[y], s[x])) return false;
    }
  }
  return true;
}

}  // namespace

PermGroup automorphism_group(const OpTable& t) {
  std::vector<Perm> elems;
  for (const Perm& s : sym_perms(t.order())) {
    if (is_endomorphism(t, s)) elems.push_back(s);
  }
  return PermGroup(t.order(), std::move(elems));
}

PermGroup aut_star_group(const OpTable& t) {
  std::vector<Perm> elems;
  for (const Perm& s : sym_perms(t.order())) {
    if (is_endomorphism(t, s) || is_anti_endomorphism(t, s)) {
      elems.push_back(s);
    }
  }
  return PermGroup(t.order(), std::move(elems));
}

std::vector<Perm> double_coset_reps(const PermGroup& H, const PermGroup& K) {
  if (H.degree() != K.degree()) {
    throw std::invalid_argument("double_coset_reps: degree mismatch");
  }
  const int n = H.degree();
  const std::vector<Perm>& G = sym_perms(n);
  if (H.order() == G.size() || K.order() == G.size()) {
    return {G.front()};  // HgK = G for every g
  }
  std::vector<bool> marked(G.size(), false);
  std::vector<Perm> reps;
  for (size_t gi = 0; gi < G.size(); ++gi) {
    if (marked[gi]) continue;
    const Perm& g = G[gi];
    reps.push_back(g);
    for (const Perm& h : H.elements()) {
      const Perm hg = compose(h, g);
      for (const Perm& k : K.elements()) {
        marked[compose(hg, k).rank()] = true;
      }
    }
  }
  return reps;
}

PermGroup group_closure(int degree, const std::vector<Perm>& generators) {
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("group_closure: degree mismatch");
    }
  }
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    const Perm cur = frontier.back();
    frontier.pop_back();
    for (const Perm& g : generators) {
      for (const Perm& prod : {compose(cur, g), compose(g, cur)}) {
        if (seen.insert(prod).second) frontier.push_back(prod);
      }
    }
  }
  return PermGroup(degree, std::vector<Perm>(seen.begin(), seen.end()));
}

}  // namespace semirings

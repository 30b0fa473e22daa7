#pragma once

// Small brute-force helpers shared by the unit tests. None of them use the
// library's own enumeration code.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "fuzdeg/group.hpp"

namespace fuzdeg::testing {

inline bool is_closed_subgroup(const Group& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  for (Element x : s.members()) {
    if (!s.contains(g.inv(x))) return false;
    for (Element y : s.members())
      if (!s.contains(g.mul(x, y))) return false;
  }
  return true;
}

// Every subset containing the identity, tested for closure. Only usable for
// small orders.
inline std::set<ElementSet> subgroups_by_subsets(const Group& g) {
  const std::size_t n = g.order();
  std::set<ElementSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
    ElementSet s = ElementSet::singleton(0);
    for (std::size_t i = 1; i < n; ++i)
      if (bits >> (i - 1) & 1) s.insert(static_cast<Element>(i));
    if (is_closed_subgroup(g, s)) out.insert(s);
  }
  return out;
}

// Closure of every subgroup under joining with a single element, starting
// from the trivial group. Works past the subset limit.
inline std::set<ElementSet> subgroups_by_joins(const Group& g) {
  auto close = [&](ElementSet s) {
    for (bool grew = true; grew;) {
      grew = false;
      for (Element x : s.members())
        for (Element y : s.members())
          if (!s.contains(g.mul(x, y))) {
            s.insert(g.mul(x, y));
            grew = true;
          }
    }
    return s;
  };
  std::set<ElementSet> out{ElementSet::singleton(0)};
  std::vector<ElementSet> frontier(out.begin(), out.end());
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& s : frontier)
      for (Element x = 0; x < g.order(); ++x) {
        if (s.contains(x)) continue;
        ElementSet t = s;
        t.insert(x);
        t = close(t);
        if (out.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return out;
}

inline bool is_isomorphism(const Group& a, const Group& b, const std::vector<Element>& phi) {
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < a.order(); ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
  return true;
}

// Tries every bijection fixing the identity.
inline bool isomorphic_by_search(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  std::vector<Element> phi(a.order());
  std::iota(phi.begin(), phi.end(), Element{0});
  do {
    if (is_isomorphism(a, b, phi)) return true;
  } while (std::next_permutation(phi.begin() + 1, phi.end()));
  return false;
}

// The same group with its non-identity elements shuffled.
inline Group shuffled(const Group& g, std::uint64_t seed) {
  const std::size_t n = g.order();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) rows[perm[x]][perm[y]] = perm[g.mul(x, y)];
  return from_cayley_table(rows, g.label() + " shuffled");
}

inline ElementSet set_of(std::initializer_list<Element> xs) {
  ElementSet s;
  for (Element x : xs) s.insert(x);
  return s;
}

}  // namespace fuzdeg::testing

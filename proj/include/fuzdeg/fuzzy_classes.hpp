#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fuzdeg/fuzzy_subgroup.hpp"
#include "fuzdeg/subgroup_lattice.hpp"

namespace fuzdeg {

inline constexpr std::uint64_t kDefaultClassCap = 10'000'000;

/// An equivalence class of fuzzy subgroups, identified by its strictly
/// increasing chain of positive level subgroups. The top is the support.
struct FuzzyClass {
  std::vector<SubgroupId> chain;
  SubgroupId support_id = 0;
  bool full_support = false;

  friend bool operator==(const FuzzyClass& a, const FuzzyClass& b) { return a.chain == b.chain; }
  friend auto operator<=>(const FuzzyClass& a, const FuzzyClass& b) { return a.chain <=> b.chain; }
};

/// Builds a class from a chain, checking strict inclusion between neighbours.
FuzzyClass make_class(const SubgroupLattice& lat, std::vector<SubgroupId> chain);

struct ClassCensus {
  std::vector<std::uint64_t> per_top;  // per_top[h] = number of classes with support h
  std::uint64_t total = 0;
  std::size_t longest_chain = 0;
};

/// Every nonempty chain exactly once, in lexicographic order of id sequences.
std::vector<FuzzyClass> enumerate_classes(const SubgroupLattice& lat, std::uint64_t cap = kDefaultClassCap);

/// Counts chains by top with c(H) = 1 + sum of c(K) over K strictly inside H.
ClassCensus count_classes(const SubgroupLattice& lat);

/// Number of classes whose support is exactly `h`.
std::uint64_t s_star(const SubgroupLattice& lat, SubgroupId h);

/// The chain of level subgroups mu_t for the positive values t of mu, from
/// the largest value down.
FuzzyClass classify(const SubgroupLattice& lat, const FuzzySubgroup& mu);

/// A representative fuzzy subgroup of `cls`: level i of the chain gets 1/(i+1).
FuzzySubgroup representative(const SubgroupLattice& lat, const FuzzyClass& cls);

}  // namespace fuzdeg

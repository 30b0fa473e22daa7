#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzdeg/fuzzy_classes.hpp"
#include "fuzdeg/fuzzy_subgroup.hpp"
#include "fuzdeg/subgroup_lattice.hpp"

namespace fuzdeg {

inline constexpr std::uint64_t kDefaultPairCap = 100'000'000;

/// Every positive level of c1 permutes with every positive level of c2.
/// The zero level is the whole group, which permutes with everything, so it is left out.
bool class_permutes(const SubgroupLattice& lat, const FuzzyClass& c1, const FuzzyClass& c2);

/// Every level of c1 is mutually permutable with every level of c2. A class
/// with proper support also has the whole group as its zero level, and that
/// level is included here: mutual permutability with the whole group is
/// quasinormality, so it does change the answer.
bool class_mutually_permutes(const SubgroupLattice& lat, const FuzzyClass& c1, const FuzzyClass& c2);

struct DegreeOptions {
  unsigned threads = 1;
  std::uint64_t pair_cap = kDefaultPairCap;
};

struct DegreeReport {
  std::string group;
  std::uint64_t s = 0;
  std::uint64_t permutable_pairs = 0;
  Rational sd;
  std::uint64_t n_count = 0;
  std::uint64_t qn_count = 0;
  std::vector<std::uint64_t> per_class_commuting;  // aligned with the class list
};

/// Ordered pairs (diagonal included) of permutable classes over s^2.
DegreeReport compute_sd(const SubgroupLattice& lat, std::span<const FuzzyClass> classes, const DegreeOptions& opts = {});

/// Number of classes in `classes` that permute with `c`.
std::uint64_t commuting_set(const SubgroupLattice& lat, std::span<const FuzzyClass> classes, const FuzzyClass& c);

/// (classes whose levels are all normal, classes whose levels are all quasinormal).
std::pair<std::uint64_t, std::uint64_t> normal_and_quasinormal_counts(const SubgroupLattice& lat,
                                                                       std::span<const FuzzyClass> classes);

}  // namespace fuzdeg

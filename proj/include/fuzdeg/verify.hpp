#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuzdeg/fuzzy_subgroup.hpp"
#include "fuzdeg/oracle.hpp"
#include "fuzdeg/subgroup_lattice.hpp"

namespace fuzdeg {

struct VerifyOptions {
  std::optional<std::size_t> oracle_depth;  // defaults to the longest subgroup chain
  std::size_t max_order = 8;
  std::size_t exhaustive_max_order = 6;     // above this, pair suites are sampled
  std::size_t sample_pairs = 10'000;
  std::uint64_t seed = 1;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct SuiteResult {
  std::string name;
  std::string statement;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string counterexample;
};

struct VerificationReport {
  std::string group;
  std::size_t order = 0;
  std::size_t depth = 0;
  std::uint64_t fuzzy_subgroups = 0;
  std::uint64_t oracle_classes = 0;  // buckets under the literal equivalence
  std::uint64_t chain_classes = 0;   // s from the chain count
  bool exhaustive_pairs = false;
  std::uint64_t pairs_examined = 0;  // pairs fed to every pair suite
  Rational sd_chain;
  Rational sd_oracle;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
};

/// Groups `subgroups` into classes of the literal equivalence. Each inner
/// vector lists indices into `subgroups`; its first entry is the representative.
std::vector<std::vector<std::size_t>> bucket_by_equivalence(const std::vector<FuzzySubgroup>& subgroups);

/// sd from the definitional permutability test on one representative per bucket.
Rational oracle_sd(const std::vector<FuzzySubgroup>& subgroups, const std::vector<std::vector<std::size_t>>& buckets);

/// Runs every oracle cross-check against the chain-level results for `lat`.
/// Throws CapacityError above opts.max_order or the enumeration cap.
VerificationReport run_verification(const SubgroupLattice& lat, const VerifyOptions& opts = {});

}  // namespace fuzdeg

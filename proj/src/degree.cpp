#include "fuzdeg/degree.hpp"

#include <algorithm>
#include <thread>

#include "fuzdeg/errors.hpp"

namespace fuzdeg {

bool class_permutes(const SubgroupLattice& lat, const FuzzyClass& c1, const FuzzyClass& c2) {
  for (SubgroupId h : c1.chain)
    for (SubgroupId k : c2.chain)
      if (!lat.permutes(h, k)) return false;
  return true;
}

namespace {

std::vector<SubgroupId> all_levels(const SubgroupLattice& lat, const FuzzyClass& c) {
  std::vector<SubgroupId> levels = c.chain;
  if (!c.full_support) levels.push_back(lat.whole());
  return levels;
}

}  // namespace

bool class_mutually_permutes(const SubgroupLattice& lat, const FuzzyClass& c1, const FuzzyClass& c2) {
  const auto l1 = all_levels(lat, c1);
  const auto l2 = all_levels(lat, c2);
  for (SubgroupId h : l1)
    for (SubgroupId k : l2)
      if (!lat.mutually_permutes(h, k)) return false;
  return true;
}

std::uint64_t commuting_set(const SubgroupLattice& lat, std::span<const FuzzyClass> classes, const FuzzyClass& c) {
  return static_cast<std::uint64_t>(
      std::count_if(classes.begin(), classes.end(), [&](const FuzzyClass& d) { return class_permutes(lat, c, d); }));
}

std::pair<std::uint64_t, std::uint64_t> normal_and_quasinormal_counts(const SubgroupLattice& lat,
                                                                       std::span<const FuzzyClass> classes) {
  std::uint64_t n = 0, qn = 0;
  for (const FuzzyClass& c : classes) {
    if (std::all_of(c.chain.begin(), c.chain.end(), [&](SubgroupId h) { return lat.normal(h); })) ++n;
    if (std::all_of(c.chain.begin(), c.chain.end(), [&](SubgroupId h) { return lat.quasinormal(h); })) ++qn;
  }
  return {n, qn};
}

DegreeReport compute_sd(const SubgroupLattice& lat, std::span<const FuzzyClass> classes, const DegreeOptions& opts) {
  const std::uint64_t s = classes.size();
  if (s == 0) throw InvalidInputError("class list is empty");
  if (s > opts.pair_cap / s) throw CapacityError("class pair count exceeds the pair cap " + std::to_string(opts.pair_cap));

  DegreeReport report;
  report.group = lat.group().label();
  report.s = s;
  report.per_class_commuting.assign(s, 0);

  const unsigned threads = std::max(1U, opts.threads);
  auto rows = [&](unsigned offset) {
    for (std::size_t i = offset; i < s; i += threads)
      report.per_class_commuting[i] = commuting_set(lat, classes, classes[i]);
  };
  if (threads == 1) {
    rows(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(rows, t);
  }

  for (auto c : report.per_class_commuting) report.permutable_pairs += c;
  report.sd = Rational(static_cast<std::int64_t>(report.permutable_pairs), static_cast<std::int64_t>(s * s));
  std::tie(report.n_count, report.qn_count) = normal_and_quasinormal_counts(lat, classes);
  return report;
}

}  // namespace fuzdeg

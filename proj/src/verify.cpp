#include "fuzdeg/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "fuzdeg/degree.hpp"
#include "fuzdeg/errors.hpp"
#include "fuzdeg/fuzzy_classes.hpp"

namespace fuzdeg {

bool VerificationReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::vector<std::vector<std::size_t>> bucket_by_equivalence(const std::vector<FuzzySubgroup>& subgroups) {
  std::vector<std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    auto it = std::find_if(buckets.begin(), buckets.end(),
                           [&](const auto& b) { return equivalent(subgroups[b.front()], subgroups[i]); });
    if (it == buckets.end()) {
      buckets.push_back({i});
    } else {
      it->push_back(i);
    }
  }
  return buckets;
}

Rational oracle_sd(const std::vector<FuzzySubgroup>& subgroups, const std::vector<std::vector<std::size_t>>& buckets) {
  std::int64_t good = 0;
  for (const auto& b1 : buckets)
    for (const auto& b2 : buckets)
      if (are_permutable(subgroups[b1.front()], subgroups[b2.front()])) ++good;
  const auto s = static_cast<std::int64_t>(buckets.size());
  return Rational(good, s * s);
}

namespace {

std::string show(std::span<const Rational> values) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << ", ";
    os << values[i].numerator();
    if (values[i].denominator() != 1) os << "/" << values[i].denominator();
  }
  os << "]";
  return os.str();
}

std::string show_chain(const SubgroupLattice& lat, const FuzzyClass& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.chain.size(); ++i) {
    if (i > 0) out += " < ";
    out += lat.name(c.chain[i]);
  }
  return out + "]";
}

class SuiteRunner {
 public:
  SuiteRunner(std::string name, std::string statement) {
    result_.name = std::move(name);
    result_.statement = std::move(statement);
  }

  // Records one case; keeps the first failure as the witness.
  void check(bool ok, const std::function<std::string()>& witness) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = witness();
    }
  }

  SuiteResult finish() && { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::vector<std::pair<std::size_t, std::size_t>> choose_pairs(std::size_t n, bool exhaustive, std::size_t samples,
                                                              std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (exhaustive) {
    pairs.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  pairs.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t i = pick(rng);
    pairs.emplace_back(i, pick(rng));
  }
  return pairs;
}

}  // namespace

VerificationReport run_verification(const SubgroupLattice& lat, const VerifyOptions& opts) {
  const Group& g = lat.group();
  if (g.order() > opts.max_order)
    throw CapacityError("oracle verification is limited to order " + std::to_string(opts.max_order) + ", got " +
                        std::to_string(g.order()));

  VerificationReport report;
  report.group = g.label();
  report.order = g.order();
  report.depth = opts.oracle_depth.value_or(lat.longest_chain());

  const MembershipGrid grid = MembershipGrid::harmonic(report.depth);
  const auto fuzzy = enumerate_fuzzy_subgroups(lat, grid, opts.enumeration_cap);
  const auto buckets = bucket_by_equivalence(fuzzy);
  const auto classes = enumerate_classes(lat);
  const ClassCensus census = count_classes(lat);
  report.fuzzy_subgroups = fuzzy.size();
  report.oracle_classes = buckets.size();
  report.chain_classes = census.total;

  std::vector<FuzzyClass> class_of;
  class_of.reserve(fuzzy.size());
  for (const auto& mu : fuzzy) class_of.push_back(classify(lat, mu));

  {
    SuiteRunner suite("class-buckets",
                      "classes of the literal equivalence correspond one-to-one with nonempty subgroup chains");
    suite.check(buckets.size() == census.total && classes.size() == census.total, [&] {
      return "buckets=" + std::to_string(buckets.size()) + " chains=" + std::to_string(census.total) +
             " enumerated=" + std::to_string(classes.size());
    });
    std::vector<FuzzyClass> images;
    for (const auto& b : buckets) {
      images.push_back(class_of[b.front()]);
      for (std::size_t i : b)
        suite.check(class_of[i] == class_of[b.front()], [&] { return "bucket splits under classify: " + show(fuzzy[i].values()); });
    }
    std::sort(images.begin(), images.end());
    suite.check(images == classes, [] { return std::string("classify image differs from the enumerated chains"); });
    for (std::size_t i = 0; i < fuzzy.size(); ++i)
      for (std::size_t j = i + 1; j < fuzzy.size(); ++j)
        suite.check(equivalent(fuzzy[i], fuzzy[j]) == (class_of[i] == class_of[j]),
                    [&] { return show(fuzzy[i].values()) + " vs " + show(fuzzy[j].values()); });
    report.suites.push_back(std::move(suite).finish());
  }

  {
    SuiteRunner suite("support-counts",
                      "classes with support exactly H number (s(H)+1)/2; proper supports account for (s(G)-1)/2");
    std::map<SubgroupId, std::uint64_t> by_support;
    for (const auto& b : buckets) ++by_support[class_of[b.front()].support_id];
    const std::uint64_t s = buckets.size();
    suite.check(s % 2 == 1, [&] { return "s=" + std::to_string(s) + " is even"; });
    suite.check(2 * by_support[lat.whole()] == s + 1,
                [&] { return "full-support classes " + std::to_string(by_support[lat.whole()]) + " for s=" + std::to_string(s); });
    std::uint64_t proper = 0;
    for (const auto& [id, n] : by_support)
      if (id != lat.whole()) proper += n;
    suite.check(2 * proper == s - 1, [&] { return "proper-support classes " + std::to_string(proper); });

    for (const Subgroup& h : lat.subgroups()) {
      std::uint64_t s_h = s;
      if (h.id != lat.whole()) {
        const SubgroupLattice sub(g.subgroup_as_group(h.members));
        const auto sub_fuzzy = enumerate_fuzzy_subgroups(sub, grid, opts.enumeration_cap);
        s_h = bucket_by_equivalence(sub_fuzzy).size();
      }
      suite.check(2 * by_support[h.id] == s_h + 1 && census.per_top[h.id] == by_support[h.id], [&] {
        return "support " + lat.name(h.id) + ": " + std::to_string(by_support[h.id]) + " classes, s(H)=" +
               std::to_string(s_h) + ", chain count " + std::to_string(census.per_top[h.id]);
      });
    }
    report.suites.push_back(std::move(suite).finish());
  }

  const bool exhaustive = g.order() <= opts.exhaustive_max_order;
  const auto pairs = choose_pairs(fuzzy.size(), exhaustive, opts.sample_pairs, opts.seed);
  report.exhaustive_pairs = exhaustive;
  report.pairs_examined = pairs.size();
  auto pair_witness = [&](std::size_t i, std::size_t j) {
    return "mu=" + show(fuzzy[i].values()) + " nu=" + show(fuzzy[j].values()) + " chains " +
           show_chain(lat, class_of[i]) + " / " + show_chain(lat, class_of[j]);
  };

  {
    SuiteRunner suite("level-permutability",
                      "mu and nu are permutable iff every pair of their level subgroups permutes");
    for (auto [i, j] : pairs)
      suite.check(are_permutable(fuzzy[i], fuzzy[j]) == class_permutes(lat, class_of[i], class_of[j]),
                  [&] { return pair_witness(i, j); });
    report.suites.push_back(std::move(suite).finish());
  }

  {
    SuiteRunner suite("level-mutual-permutability",
                      "mu and nu are mutually permutable iff every pair of their level subgroups is mutually permutable");
    for (auto [i, j] : pairs) {
      const bool mutual = are_mutually_permutable(fuzzy[i], fuzzy[j], lat);
      suite.check(mutual == class_mutually_permutes(lat, class_of[i], class_of[j]), [&] { return pair_witness(i, j); });
      suite.check(!mutual || are_permutable(fuzzy[i], fuzzy[j]),
                  [&] { return "mutually permutable but not permutable: " + pair_witness(i, j); });
    }
    report.suites.push_back(std::move(suite).finish());
  }

  {
    SuiteRunner suite("product-subgroup-iff-commuting", "mu o nu is a fuzzy subgroup iff mu o nu = nu o mu");
    for (auto [i, j] : pairs) {
      const auto ab = fuzzy_product(g, fuzzy[i].values(), fuzzy[j].values());
      const auto ba = fuzzy_product(g, fuzzy[j].values(), fuzzy[i].values());
      suite.check(is_fuzzy_subgroup(g, ab) == (ab == ba), [&] { return pair_witness(i, j) + " product " + show(ab); });
    }
    report.suites.push_back(std::move(suite).finish());
  }

  {
    SuiteRunner suite("permutable-product-is-subgroup", "if mu and nu are permutable then mu o nu is a fuzzy subgroup");
    for (auto [i, j] : pairs) {
      if (!are_permutable(fuzzy[i], fuzzy[j])) continue;
      suite.check(is_fuzzy_subgroup(g, fuzzy_product(g, fuzzy[i].values(), fuzzy[j].values())),
                  [&] { return pair_witness(i, j); });
    }
    report.suites.push_back(std::move(suite).finish());
  }

  {
    SuiteRunner suite("permutable-level-bound",
                      "for permutable mu, nu and t in Im mu, s in Im nu: t <= s gives some a with nu(a) >= t, "
                      "and s <= t gives some b with mu(b) >= s");
    for (auto [i, j] : pairs) {
      const auto& mu = fuzzy[i];
      const auto& nu = fuzzy[j];
      if (!are_permutable(mu, nu)) continue;
      for (const Rational& t : mu.image()) {
        for (const Rational& s : nu.image()) {
          const auto& nv = nu.values();
          const auto& mv = mu.values();
          if (t <= s)
            suite.check(std::any_of(nv.begin(), nv.end(), [&](const Rational& v) { return v >= t; }),
                        [&] { return pair_witness(i, j); });
          if (s <= t)
            suite.check(std::any_of(mv.begin(), mv.end(), [&](const Rational& v) { return v >= s; }),
                        [&] { return pair_witness(i, j); });
        }
      }
    }
    report.suites.push_back(std::move(suite).finish());
  }

  std::vector<char> quasinormal(fuzzy.size(), 0);
  {
    SuiteRunner suite("quasinormal-characterizations",
                      "the quantifier condition over all subgroups L holds iff every level subgroup is quasinormal; "
                      "fuzzy normal implies fuzzy quasinormal");
    for (std::size_t i = 0; i < fuzzy.size(); ++i) {
      bool agree = true;
      try {
        quasinormal[i] = is_fuzzy_quasinormal(fuzzy[i], lat) ? 1 : 0;
      } catch (const InternalError&) {
        agree = false;
      }
      suite.check(agree, [&] { return "characterizations disagree on " + show(fuzzy[i].values()); });
      suite.check(!is_fuzzy_normal(fuzzy[i]) || quasinormal[i],
                  [&] { return "fuzzy normal but not quasinormal: " + show(fuzzy[i].values()); });
    }
    report.suites.push_back(std::move(suite).finish());
  }

  {
    SuiteRunner suite("quasinormal-iff-commutes-with-all",
                      "mu is fuzzy quasinormal iff mu o nu = nu o mu for every enumerated nu");
    for (std::size_t i = 0; i < fuzzy.size(); ++i) {
      bool commutes = true;
      for (std::size_t j = 0; j < fuzzy.size() && commutes; ++j)
        commutes = fuzzy_product(g, fuzzy[i].values(), fuzzy[j].values()) ==
                   fuzzy_product(g, fuzzy[j].values(), fuzzy[i].values());
      suite.check(commutes == (quasinormal[i] != 0), [&] { return show(fuzzy[i].values()); });
    }
    report.suites.push_back(std::move(suite).finish());
  }

  {
    SuiteRunner suite("degree-agreement",
                      "sd from chain-level permutability equals sd from the definitional pair test");
    report.sd_chain = compute_sd(lat, classes).sd;
    report.sd_oracle = oracle_sd(fuzzy, buckets);
    suite.check(report.sd_chain == report.sd_oracle, [&] {
      std::ostringstream os;
      os << "chain " << report.sd_chain << " oracle " << report.sd_oracle;
      return os.str();
    });
    report.suites.push_back(std::move(suite).finish());
  }

  return report;
}

}  // namespace fuzdeg

#include "fuzdeg/fuzzy_classes.hpp"

#include <algorithm>

#include "fuzdeg/errors.hpp"

namespace fuzdeg {

FuzzyClass make_class(const SubgroupLattice& lat, std::vector<SubgroupId> chain) {
  if (chain.empty()) throw InvalidInputError("a class chain must be nonempty");
  for (SubgroupId id : chain)
    if (id >= lat.size()) throw InvalidInputError("subgroup id out of range: " + std::to_string(id));
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!lat.strictly_below(chain[i - 1], chain[i])) throw InvalidInputError("chain is not strictly increasing");
  FuzzyClass cls;
  cls.support_id = chain.back();
  cls.full_support = cls.support_id == lat.whole();
  cls.chain = std::move(chain);
  return cls;
}

namespace {

class ChainWalker {
 public:
  ChainWalker(const SubgroupLattice& lat, std::uint64_t cap, std::vector<FuzzyClass>& out)
      : lat_(lat), cap_(cap), out_(out) {
    // Ids are sorted by size, so every strict superset has a larger id.
    above_.resize(lat.size());
    for (SubgroupId i = 0; i < lat.size(); ++i)
      for (SubgroupId j = i + 1; j < lat.size(); ++j)
        if (lat.strictly_below(i, j)) above_[i].push_back(j);
  }

  void run() {
    for (SubgroupId start = 0; start < lat_.size(); ++start) {
      chain_.assign(1, start);
      visit();
    }
  }

 private:
  void visit() {
    if (out_.size() >= cap_) throw CapacityError("chain count exceeds the class cap " + std::to_string(cap_));
    FuzzyClass cls;
    cls.chain = chain_;
    cls.support_id = chain_.back();
    cls.full_support = cls.support_id == lat_.whole();
    out_.push_back(std::move(cls));
    for (SubgroupId next : above_[chain_.back()]) {
      chain_.push_back(next);
      visit();
      chain_.pop_back();
    }
  }

  const SubgroupLattice& lat_;
  std::uint64_t cap_;
  std::vector<FuzzyClass>& out_;
  std::vector<std::vector<SubgroupId>> above_;
  std::vector<SubgroupId> chain_;
};

}  // namespace

std::vector<FuzzyClass> enumerate_classes(const SubgroupLattice& lat, std::uint64_t cap) {
  std::vector<FuzzyClass> out;
  ChainWalker(lat, cap, out).run();
  return out;
}

ClassCensus count_classes(const SubgroupLattice& lat) {
  const std::size_t m = lat.size();
  ClassCensus census;
  census.per_top.assign(m, 0);
  for (SubgroupId h = 0; h < m; ++h) {
    std::uint64_t c = 1;
    for (SubgroupId k = 0; k < h; ++k) {
      if (lat.strictly_below(k, h) && __builtin_add_overflow(c, census.per_top[k], &c))
        throw CapacityError("class count overflows 64 bits");
    }
    census.per_top[h] = c;
    if (__builtin_add_overflow(census.total, c, &census.total)) throw CapacityError("class count overflows 64 bits");
  }
  census.longest_chain = lat.longest_chain();
  return census;
}

std::uint64_t s_star(const SubgroupLattice& lat, SubgroupId h) { return count_classes(lat).per_top.at(h); }

FuzzyClass classify(const SubgroupLattice& lat, const FuzzySubgroup& mu) {
  if (&mu.group() != &lat.group() && !(mu.group() == lat.group()))
    throw InvalidInputError("fuzzy subgroup belongs to a different group");
  std::vector<SubgroupId> chain;
  for (const Rational& t : mu.image()) {
    if (t == kZero) continue;
    const auto id = lat.find(mu.level(t));
    if (!id) throw InternalError("level set of a fuzzy subgroup is missing from the lattice");
    chain.push_back(*id);
  }
  return make_class(lat, std::move(chain));
}

FuzzySubgroup representative(const SubgroupLattice& lat, const FuzzyClass& cls) {
  const Group& g = lat.group();
  MembershipMap values(g.order(), Rational(0));
  for (std::size_t i = cls.chain.size(); i-- > 0;) {
    for (Element x : lat[cls.chain[i]].members.members())
      values[x] = Rational(1, static_cast<std::int64_t>(i + 1));
  }
  return FuzzySubgroup(g, std::move(values));
}

}  // namespace fuzdeg

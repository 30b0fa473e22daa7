#include "fuzdeg/oracle.hpp"

#include <algorithm>

#include "fuzdeg/errors.hpp"

namespace fuzdeg {

MembershipGrid::MembershipGrid(std::vector<Rational> levels) : levels_(std::move(levels)) {
  if (levels_.empty() || levels_.front() != kOne) throw InvalidInputError("membership grid must start at 1");
  for (std::size_t i = 1; i < levels_.size(); ++i)
    if (!(levels_[i] < levels_[i - 1])) throw InvalidInputError("membership grid must be strictly decreasing");
  if (!(levels_.back() > kZero)) throw InvalidInputError("membership grid values must be positive");
}

MembershipGrid MembershipGrid::harmonic(std::size_t depth) {
  std::vector<Rational> levels;
  for (std::size_t k = 0; k < depth; ++k) levels.emplace_back(1, static_cast<std::int64_t>(k + 1));
  return MembershipGrid(std::move(levels));
}

namespace {

bool is_subgroup(const Group& g, const ElementSet& s) {
  if (!s.contains(Group::identity())) return false;
  const auto elems = s.members();
  for (Element x : elems) {
    if (!s.contains(g.inv(x))) return false;
    for (Element y : elems)
      if (!s.contains(g.mul(x, y))) return false;
  }
  return true;
}

bool pointwise_laws(const Group& g, std::span<const Rational> mu) {
  const std::size_t n = g.order();
  for (Element x = 0; x < n; ++x) {
    if (mu[g.inv(x)] < mu[x]) return false;
    for (Element y = 0; y < n; ++y)
      if (mu[g.mul(x, y)] < std::min(mu[x], mu[y])) return false;
  }
  return true;
}

bool level_laws(const Group& g, std::span<const Rational> mu) {
  for (const Rational& t : image_of(mu))
    if (!is_subgroup(g, level_set(mu, t))) return false;
  return true;
}

}  // namespace

bool is_fuzzy_subgroup(const Group& g, std::span<const Rational> values) {
  if (values.size() != g.order()) return false;
  const bool direct = pointwise_laws(g, values);
  const bool by_levels = level_laws(g, values);
  if (direct != by_levels) throw InternalError("pointwise and level-set fuzzy subgroup tests disagree");
  return direct;
}

std::vector<FuzzySubgroup> enumerate_fuzzy_subgroups(const SubgroupLattice& lat, const MembershipGrid& grid,
                                                     std::uint64_t cap) {
  const Group& g = lat.group();
  const std::size_t n = g.order();
  if (grid.depth() < lat.longest_chain())
    throw DepthError("grid depth " + std::to_string(grid.depth()) + " is below the longest subgroup chain " +
                     std::to_string(lat.longest_chain()));

  std::vector<Rational> alphabet = grid.levels();
  alphabet.emplace_back(0);
  const std::uint64_t base = alphabet.size();
  std::uint64_t space = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (space > cap / base) throw CapacityError("oracle search space exceeds the enumeration cap " + std::to_string(cap));
    space *= base;
  }

  std::vector<FuzzySubgroup> out;
  std::vector<std::size_t> digits(n, 0);
  MembershipMap values(n, Rational(1));
  for (;;) {
    if (is_fuzzy_subgroup(g, values)) out.emplace_back(g, values);
    std::size_t pos = 1;
    while (pos < n && digits[pos] + 1 == base) {
      digits[pos] = 0;
      values[pos] = alphabet[0];
      ++pos;
    }
    if (pos >= n) break;
    ++digits[pos];
    values[pos] = alphabet[digits[pos]];
  }
  return out;
}

bool equivalent(const FuzzySubgroup& mu, const FuzzySubgroup& nu) {
  const std::size_t n = mu.values().size();
  if (nu.values().size() != n) return false;
  for (std::size_t x = 0; x < n; ++x) {
    if ((mu(static_cast<Element>(x)) == kZero) != (nu(static_cast<Element>(x)) == kZero)) return false;
    for (std::size_t y = 0; y < n; ++y) {
      const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
      if ((mu(ex) > mu(ey)) != (nu(ex) > nu(ey))) return false;
    }
  }
  return true;
}

MembershipMap fuzzy_product(const Group& g, std::span<const Rational> a, std::span<const Rational> b) {
  const std::size_t n = g.order();
  MembershipMap out(n, Rational(0));
  for (Element y = 0; y < n; ++y)
    for (Element z = 0; z < n; ++z) {
      const Element x = g.mul(y, z);
      out[x] = std::max(out[x], std::min(a[y], b[z]));
    }
  return out;
}

bool is_permuted_by(const FuzzySubgroup& mu, const FuzzySubgroup& nu) {
  const Group& g = mu.group();
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      bool found = false;
      for (Element x = 0; x < n && !found; ++x)
        found = mu(g.mul(g.inv(x), ab)) >= mu(a) && nu(x) >= nu(b);
      if (!found) return false;
    }
  }
  return true;
}

namespace {

// For all a in G and l in L: some l1 in L with mu(l1^-1 a l) >= mu(a), and
// some l2 in L with mu(l a l2^-1) >= mu(a).
bool conjugation_condition(const FuzzySubgroup& mu, const ElementSet& subgroup) {
  const Group& g = mu.group();
  const auto ls = subgroup.members();
  for (Element a = 0; a < g.order(); ++a) {
    for (Element l : ls) {
      const Element al = g.mul(a, l);
      const Element la = g.mul(l, a);
      bool left = false, right = false;
      for (Element l1 : ls) {
        left = left || mu(g.mul(g.inv(l1), al)) >= mu(a);
        right = right || mu(g.mul(la, g.inv(l1))) >= mu(a);
        if (left && right) break;
      }
      if (!left || !right) return false;
    }
  }
  return true;
}

}  // namespace

bool is_mutually_permuted_by(const FuzzySubgroup& mu, const FuzzySubgroup& nu, const SubgroupLattice& lat) {
  std::vector<char> checked(lat.size(), 0);
  for (const Rational& b : nu.image()) {
    const ElementSet level = nu.level(b);
    for (const Subgroup& l : lat.subgroups()) {
      if (checked[l.id] || !l.members.is_subset_of(level)) continue;
      checked[l.id] = 1;
      if (!conjugation_condition(mu, l.members)) return false;
    }
  }
  return true;
}

bool is_fuzzy_normal(const FuzzySubgroup& mu) {
  const Group& g = mu.group();
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (mu(g.mul(x, y)) != mu(g.mul(y, x))) return false;
  return true;
}

bool is_fuzzy_quasinormal(const FuzzySubgroup& mu, const SubgroupLattice& lat) {
  bool q1 = true;
  for (const Subgroup& l : lat.subgroups()) {
    if (!conjugation_condition(mu, l.members)) {
      q1 = false;
      break;
    }
  }

  bool q2 = true;
  for (const Rational& t : mu.image()) {
    if (t == kZero) continue;
    const auto id = lat.find(mu.level(t));
    if (!id) throw InternalError("level set of a fuzzy subgroup is missing from the lattice");
    if (!lat.quasinormal(*id)) {
      q2 = false;
      break;
    }
  }
  if (q1 != q2) throw InternalError("quantifier and level-subgroup quasinormality tests disagree");
  return q1;
}

}  // namespace fuzdeg

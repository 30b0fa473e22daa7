#include "fuzdeg/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

#include "fuzdeg/errors.hpp"

namespace fuzdeg {

std::size_t max_order_from_env() {
  const char* raw = std::getenv("FUZDEG_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxOrder;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw InvalidSpecError("FUZDEG_MAX_ORDER is not a positive integer: " + std::string(raw));
  return static_cast<std::size_t>(v);
}

namespace {

void check_capacity(std::size_t order, std::size_t max_order, const std::string& what) {
  if (order > max_order) {
    throw CapacityError(what + " has order " + std::to_string(order) + ", above the configured maximum " +
                        std::to_string(max_order));
  }
  if (order > ElementSet::kMaxElements) {
    throw CapacityError(what + " has order " + std::to_string(order) + ", above the supported maximum " +
                        std::to_string(ElementSet::kMaxElements));
  }
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

class GroupBuilder {
 public:
  // Validates every group axiom on a table whose identity is already at 0.
  static Group build(std::size_t n, std::vector<Element> table, std::vector<std::string> names, std::string label) {
    if (n == 0) throw ValidationError("table is empty");
    auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

    for (std::size_t j = 0; j < n; ++j) {
      if (at(0, j) != j) throw ValidationError("identity law fails at " + triple(0, j, at(0, j)));
      if (at(j, 0) != j) throw ValidationError("identity law fails at " + triple(j, 0, at(j, 0)));
    }
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (seen[at(i, j)]) throw ValidationError("row " + std::to_string(i) + " is not a permutation: value " +
                                                  std::to_string(at(i, j)) + " repeats at " + triple(i, j, at(i, j)));
        seen[at(i, j)] = 1;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (seen[at(i, j)]) throw ValidationError("column " + std::to_string(j) + " is not a permutation: value " +
                                                  std::to_string(at(i, j)) + " repeats at " + triple(i, j, at(i, j)));
        seen[at(i, j)] = 1;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (at(at(i, j), k) != at(i, at(j, k))) throw ValidationError("associativity fails at " + triple(i, j, k));

    std::vector<Element> inverse(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (at(i, j) == 0) {
          inverse[i] = static_cast<Element>(j);
          break;
        }
      }
      if (at(inverse[i], i) != 0) throw ValidationError("no two-sided inverse for element " + std::to_string(i));
    }

    if (names.size() != n) {
      names.resize(n);
      for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    }

    Group g;
    g.order_ = n;
    g.table_ = std::move(table);
    g.inverse_ = std::move(inverse);
    g.names_ = std::move(names);
    g.label_ = std::move(label);
    return g;
  }
};

bool Group::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<Element>> Group::rows() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t i = 0; i < order_; ++i)
    out[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                  table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  return out;
}

Group Group::subgroup_as_group(const ElementSet& members) const {
  const auto elems = members.members();
  if (elems.empty() || elems.front() != 0) throw InvalidInputError("subgroup does not contain the identity");
  std::vector<Element> index(order_, static_cast<Element>(order_));
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);

  const std::size_t k = elems.size();
  std::vector<Element> table(k * k);
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = names_[elems[i]];
    for (std::size_t j = 0; j < k; ++j) {
      const Element p = index[mul(elems[i], elems[j])];
      if (p == order_) throw InvalidInputError("member set is not closed under the group product");
      table[i * k + j] = p;
    }
  }
  return GroupBuilder::build(k, std::move(table), std::move(names), label_ + "[" + std::to_string(k) + "]");
}

Group make_cyclic(std::size_t n, std::size_t max_order) {
  if (n == 0) throw InvalidSpecError("cyclic group order must be positive");
  check_capacity(n, max_order, "Z_" + std::to_string(n));
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return GroupBuilder::build(n, std::move(table), std::move(names), "Z_" + std::to_string(n));
}

Group make_dihedral(std::size_t two_n, std::size_t max_order) {
  if (two_n % 2 != 0) throw InvalidSpecError("dihedral argument must be even, got " + std::to_string(two_n));
  if (two_n < 4) throw InvalidSpecError("dihedral argument must be at least 4, got " + std::to_string(two_n));
  const std::size_t n = two_n / 2;
  check_capacity(two_n, max_order, "D_" + std::to_string(two_n));

  // Index i < n is a^i; index n + i is a^i b.
  auto compose = [n](std::size_t x, std::size_t y) -> std::size_t {
    const bool xr = x >= n, yr = y >= n;
    const std::size_t i = x % n, j = y % n;
    if (!xr && !yr) return (i + j) % n;
    if (!xr && yr) return n + (i + j) % n;
    if (xr && !yr) return n + (i + n - j) % n;
    return (i + n - j) % n;
  };
  auto power = [](std::size_t i) -> std::string {
    if (i == 0) return "";
    if (i == 1) return "a";
    return "a^" + std::to_string(i);
  };

  std::vector<Element> table(two_n * two_n);
  std::vector<std::string> names(two_n);
  for (std::size_t x = 0; x < two_n; ++x) {
    if (x == 0) {
      names[x] = "e";
    } else if (x < n) {
      names[x] = power(x);
    } else {
      names[x] = power(x - n) + "b";
    }
    for (std::size_t y = 0; y < two_n; ++y) table[x * two_n + y] = static_cast<Element>(compose(x, y));
  }
  return GroupBuilder::build(two_n, std::move(table), std::move(names), "D_" + std::to_string(two_n));
}

namespace {

std::string cycle_name(const std::vector<int>& p) {
  std::vector<char> done(p.size());
  std::string out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == static_cast<int>(s)) continue;
    out += "(";
    std::size_t c = s;
    bool first = true;
    while (!done[c]) {
      done[c] = 1;
      if (!first) out += " ";
      out += std::to_string(c + 1);
      first = false;
      c = static_cast<std::size_t>(p[c]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

Group make_symmetric(std::size_t n, std::size_t max_order) {
  if (n == 0) throw InvalidSpecError("symmetric degree must be positive");
  if (n > 5) throw CapacityError("S_" + std::to_string(n) + " is above the supported degree 5");
  std::size_t order = 1;
  for (std::size_t k = 2; k <= n; ++k) order *= k;
  check_capacity(order, max_order, "S_" + std::to_string(n));

  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };

  std::vector<Element> table(order * order);
  std::vector<std::string> names(order);
  std::vector<int> q(n);
  for (std::size_t i = 0; i < order; ++i) {
    names[i] = cycle_name(perms[i]);
    for (std::size_t j = 0; j < order; ++j) {
      for (std::size_t k = 0; k < n; ++k) q[k] = perms[i][static_cast<std::size_t>(perms[j][k])];
      table[i * order + j] = index_of(q);
    }
  }
  return GroupBuilder::build(order, std::move(table), std::move(names), "S_" + std::to_string(n));
}

Group make_klein() {
  Group g = direct_product(make_cyclic(2), make_cyclic(2));
  return from_cayley_table(g.rows(), "Klein");
}

Group direct_product(const Group& g, const Group& h, std::size_t max_order) {
  const std::size_t order = g.order() * h.order();
  const std::string label = g.label() + " x " + h.label();
  check_capacity(order, max_order, label);
  const std::size_t m = h.order();
  std::vector<Element> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const auto x1 = static_cast<Element>(x / m), x2 = static_cast<Element>(x % m);
    names[x] = "(" + g.element_name(x1) + "," + h.element_name(x2) + ")";
    for (std::size_t y = 0; y < order; ++y) {
      const auto y1 = static_cast<Element>(y / m), y2 = static_cast<Element>(y % m);
      table[x * order + y] = static_cast<Element>(g.mul(x1, y1) * m + h.mul(x2, y2));
    }
  }
  return GroupBuilder::build(order, std::move(table), std::move(names), label);
}

Group from_cayley_table(const std::vector<std::vector<Element>>& raw, std::string label, std::size_t max_order) {
  const std::size_t n = raw.size();
  if (n == 0) throw ValidationError("table is empty");
  check_capacity(n, max_order, label.empty() ? "table" : label);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) throw ValidationError("row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                                                  " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      if (raw[i][j] >= n) throw ValidationError("entry out of range at " + triple(i, j, raw[i][j]));
  }

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = raw[c][j] == j && raw[j][c] == j;
    if (ok) e = c;
  }
  if (e == n) throw ValidationError("table has no identity element");

  // Swap e and 0 so the identity sits at index 0.
  auto relabel = [&](std::size_t x) -> std::size_t { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[relabel(i) * n + relabel(j)] = static_cast<Element>(relabel(raw[i][j]));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[relabel(i)] = std::to_string(i);
  return GroupBuilder::build(n, std::move(table), std::move(names), std::move(label));
}

Group read_cayley_file(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw InvalidSpecError("cannot open Cayley table file: " + path);

  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line.substr(first));
  }
  if (lines.empty()) throw InvalidSpecError(path + ": empty file");

  std::istringstream header(lines[0]);
  std::string key;
  long long order = 0;
  if (!(header >> key >> order) || key != "order" || order <= 0)
    throw InvalidSpecError(path + ": first line must be 'order <n>'");
  const auto n = static_cast<std::size_t>(order);
  check_capacity(n, max_order, path);

  std::size_t cursor = 1;
  std::string label = path;
  if (cursor < lines.size() && lines[cursor].rfind("label", 0) == 0) {
    label = lines[cursor].substr(5);
    const auto s = label.find_first_not_of(" \t");
    label = s == std::string::npos ? std::string{} : label.substr(s);
    while (!label.empty() && (label.back() == '\r' || label.back() == ' ')) label.pop_back();
    ++cursor;
  }
  if (lines.size() - cursor != n)
    throw InvalidSpecError(path + ": expected " + std::to_string(n) + " table rows, found " +
                           std::to_string(lines.size() - cursor));

  std::vector<std::vector<Element>> raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::istringstream row(lines[cursor + i]);
    long long v = 0;
    while (row >> v) {
      if (v < 0) throw ValidationError(path + ": negative entry in row " + std::to_string(i));
      raw[i].push_back(static_cast<Element>(v));
    }
    if (!row.eof()) throw InvalidSpecError(path + ": non-integer token in row " + std::to_string(i));
  }
  return from_cayley_table(raw, label, max_order);
}

}  // namespace fuzdeg

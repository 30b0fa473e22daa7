#include "fuzdeg/published.hpp"

#include <cstdint>

namespace fuzdeg {

namespace {

constexpr const char* kCyclicCount = "prime-power cyclic count: 2^(n+1)-1 classes for Z_{p^n}";
constexpr const char* kKleinExample = "counting example for the dihedral group of order 4";
constexpr const char* kD8Example = "counting example for the dihedral group of order 8";
constexpr const char* kS3Example = "counting example for S_3 via the Hasse diagram";
constexpr const char* kDihedralFormula = "counting formula for D_2p, p an odd prime: s = 4p+7";
constexpr const char* kS3Degree = "worked S_3 degree example: sd(S_3) = 50/361";
constexpr const char* kD8Degree = "worked D_8 degree example: sd(D_8) = 3897/3969";
constexpr const char* kDihedralDegree = "degree proposition for D_2p, p an odd prime: sd = 1";
constexpr const char* kAbelian = "elementary: every subgroup of an abelian group is normal";

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Returns (p, n) when m = p^n with p prime and n >= 1.
bool prime_power(std::size_t m, std::size_t& p, std::size_t& n) {
  if (m < 2) return false;
  p = 2;
  while (m % p != 0) ++p;
  n = 0;
  while (m % p == 0) {
    m /= p;
    ++n;
  }
  return m == 1;
}

PublishedClaim count_claim(std::string claim, std::string spec, std::int64_t value, const char* where) {
  return {std::move(claim), "s", std::move(spec), Rational(value), where, true, {}};
}

PublishedClaim degree_claim(std::string claim, std::string spec, Rational value, const char* where,
                            bool literature = true) {
  return {std::move(claim), "sd", std::move(spec), value, where, literature, {}};
}

// 3897/3969 is stated unreduced.
PublishedClaim d8_degree_claim(std::string spec) {
  PublishedClaim c = degree_claim("sd(D_8)", std::move(spec), Rational(3897, 3969), kD8Degree);
  c.printed = "3897/3969";
  return c;
}

void dihedral_2p_claims(std::size_t p, const std::string& spec, std::vector<PublishedClaim>& out) {
  const std::string name = "D_" + std::to_string(2 * p);
  out.push_back(count_claim("s(" + name + ")", spec, static_cast<std::int64_t>(4 * p + 7), kDihedralFormula));
  out.push_back(degree_claim("sd(" + name + ")", spec, Rational(1), kDihedralDegree));
}

void s3_claims(const std::string& spec, std::vector<PublishedClaim>& out) {
  out.push_back(count_claim("s(S_3)", spec, 19, kS3Example));
  out.push_back(degree_claim("sd(S_3)", spec, Rational(50, 361), kS3Degree));
}

}  // namespace

std::string stated_value(const PublishedClaim& claim) {
  if (!claim.printed.empty()) return claim.printed;
  if (claim.value.denominator() == 1) return std::to_string(claim.value.numerator());
  return std::to_string(claim.value.numerator()) + "/" + std::to_string(claim.value.denominator());
}

std::vector<PublishedClaim> published_claims_for(const GroupSpec& spec) {
  std::vector<PublishedClaim> out;
  const std::string text = spec.to_string();
  switch (spec.family) {
    case Family::kCyclic: {
      std::size_t p = 0, n = 0;
      if (prime_power(spec.parameter, p, n))
        out.push_back(count_claim("s(Z_" + std::to_string(spec.parameter) + ")", text,
                                  (std::int64_t{1} << (n + 1)) - 1, kCyclicCount));
      break;
    }
    case Family::kKlein:
      out.push_back(count_claim("s(D_4)", text, 15, kKleinExample));
      break;
    case Family::kDihedral: {
      const std::size_t half = spec.parameter / 2;
      if (spec.parameter == 4) out.push_back(count_claim("s(D_4)", text, 15, kKleinExample));
      if (spec.parameter == 8) {
        out.push_back(count_claim("s(D_8)", text, 63, kD8Example));
        out.push_back(d8_degree_claim(text));
      }
      if (spec.parameter == 6) s3_claims(text, out);
      if (half >= 3 && is_prime(half)) dihedral_2p_claims(half, text, out);
      break;
    }
    case Family::kSymmetric:
      if (spec.parameter == 3) {
        s3_claims(text, out);
        dihedral_2p_claims(3, text, out);
      }
      break;
    case Family::kProduct:
    case Family::kFile:
      break;
  }
  return out;
}

std::vector<PublishedClaim> published_table_claims() {
  std::vector<PublishedClaim> out;
  const std::pair<std::size_t, std::size_t> powers[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}};
  for (auto [p, n] : powers) {
    std::size_t m = 1;
    for (std::size_t k = 0; k < n; ++k) m *= p;
    out.push_back(count_claim("s(Z_" + std::to_string(m) + ")", "cyclic:" + std::to_string(m),
                              (std::int64_t{1} << (n + 1)) - 1, kCyclicCount));
  }
  out.push_back(count_claim("s(D_4)", "dihedral:4", 15, kKleinExample));
  out.push_back(count_claim("s(D_8)", "dihedral:8", 63, kD8Example));
  out.push_back(count_claim("s(S_3)", "symmetric:3", 19, kS3Example));
  for (std::size_t p : {3, 5, 7, 11})
    out.push_back(count_claim("s(D_" + std::to_string(2 * p) + ")", "dihedral:" + std::to_string(2 * p),
                              static_cast<std::int64_t>(4 * p + 7), kDihedralFormula));
  out.push_back(degree_claim("sd(D_4)", "dihedral:4", Rational(1), kAbelian, false));
  out.push_back(degree_claim("sd(S_3)", "symmetric:3", Rational(50, 361), kS3Degree));
  out.push_back(d8_degree_claim("dihedral:8"));
  for (std::size_t p : {3, 5, 7})
    out.push_back(degree_claim("sd(D_" + std::to_string(2 * p) + ")", "dihedral:" + std::to_string(2 * p), Rational(1),
                               kDihedralDegree));
  return out;
}

}  // namespace fuzdeg

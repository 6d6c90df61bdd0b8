#include "ggp/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ggp {

Integer pow_int(std::uint64_t base, unsigned exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

constexpr int kPrecomputedLevels = 64;

std::uint64_t prime_of_power(std::uint64_t q) {
  if (q < 2) return 0;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return q;
  std::uint64_t rest = q;
  while (rest % p == 0) rest /= p;
  return rest == 1 ? p : 0;
}

}  // namespace

FieldParam::FieldParam(std::uint64_t q) : q_(q), p_(prime_of_power(q)) {
  if (q < 3 || p_ == 0 || p_ == 2) {
    throw std::invalid_argument("q must be a power of an odd prime, got " + std::to_string(q));
  }
  static std::mutex registry_mutex;
  static std::map<std::uint64_t, std::shared_ptr<const std::vector<Integer>>> registry;
  const std::lock_guard lock(registry_mutex);
  auto& slot = registry[q_];
  if (!slot) {
    auto table = std::make_shared<std::vector<Integer>>();
    table->reserve(kPrecomputedLevels + 1);
    table->emplace_back(0);
    for (int k = 1; k <= kPrecomputedLevels; ++k) {
      table->push_back(pow_int(q_, static_cast<unsigned>(k)) - 1);
    }
    slot = std::move(table);
  }
  moduli_ = slot;
}

Integer FieldParam::modulus(int level) const {
  if (level < 1) throw std::invalid_argument("field level must be positive");
  if (level <= kPrecomputedLevels) return (*moduli_)[static_cast<std::size_t>(level)];
  return pow_int(q_, static_cast<unsigned>(level)) - 1;
}

std::vector<int> divisors(int k) {
  std::vector<int> result;
  for (int d = 1; d <= k; ++d) {
    if (k % d == 0) result.push_back(d);
  }
  return result;
}

namespace {

Integer reduce(const Integer& value, const Integer& modulus) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace

Eigenvalue normalize(const FieldParam& field, int level, Integer exponent) {
  if (level < 1) throw std::invalid_argument("eigenvalue level must be positive");
  const Integer top = field.modulus(level);
  exponent = reduce(exponent, top);
  for (int d : divisors(level)) {
    const Integer ratio = top / field.modulus(d);
    if (mpz_divisible_p(exponent.get_mpz_t(), ratio.get_mpz_t()) != 0) {
      return Eigenvalue{d, Integer(exponent / ratio)};
    }
  }
  return Eigenvalue{level, exponent};
}

Integer exponent_at(const FieldParam& field, const Eigenvalue& a, int level) {
  if (level % a.level != 0) {
    throw std::invalid_argument("eigenvalue of level " + std::to_string(a.level) +
                                " does not embed at level " + std::to_string(level));
  }
  return a.exponent * (field.modulus(level) / field.modulus(a.level));
}

Eigenvalue power(const FieldParam& field, const Eigenvalue& a, const Integer& multiplier) {
  return normalize(field, a.level, a.exponent * multiplier);
}

Eigenvalue inverse(const FieldParam& field, const Eigenvalue& a) {
  return normalize(field, a.level, -a.exponent);
}

Eigenvalue frobenius(const FieldParam& field, Twist twist, const Eigenvalue& a) {
  const Integer q = static_cast<unsigned long>(field.q());
  return power(field, a, twist == Twist::standard ? q : Integer(-q));
}

Eigenvalue one() { return Eigenvalue{1, 0}; }

Eigenvalue minus_one(const FieldParam& field) {
  return Eigenvalue{1, Integer(static_cast<unsigned long>((field.q() - 1) / 2))};
}

bool is_one(const Eigenvalue& a) { return a.level == 1 && a.exponent == 0; }

bool is_minus_one(const FieldParam& field, const Eigenvalue& a) { return a == minus_one(field); }

Eigenvalue subgroup_element(const FieldParam& field, int level, const Integer& order,
                            const Integer& index) {
  const Integer top = field.modulus(level);
  if (order <= 0 || !mpz_divisible_p(top.get_mpz_t(), order.get_mpz_t())) {
    throw std::invalid_argument("subgroup order must divide q^level - 1");
  }
  return normalize(field, level, index * (top / order));
}

Integer multiplicative_order(const FieldParam& field, const Eigenvalue& a) {
  const Integer top = field.modulus(a.level);
  Integer g;
  mpz_gcd(g.get_mpz_t(), top.get_mpz_t(), a.exponent.get_mpz_t());
  return top / g;
}

FrobeniusOrbit frobenius_orbit(const FieldParam& field, Twist twist, const Eigenvalue& a) {
  FrobeniusOrbit orbit;
  orbit.twist = twist;
  Eigenvalue current = normalize(field, a.level, a.exponent);
  const Eigenvalue start = current;
  do {
    orbit.members.push_back(current);
    current = frobenius(field, twist, current);
  } while (!(current == start));
  std::sort(orbit.members.begin(), orbit.members.end());
  orbit.size = static_cast<int>(orbit.members.size());
  const Eigenvalue inv = inverse(field, start);
  orbit.self_inverse = std::binary_search(orbit.members.begin(), orbit.members.end(), inv);
  orbit.contains_one = is_one(start);
  orbit.contains_minus_one = is_minus_one(field, start);
  return orbit;
}

OrbitKey orbit_key(const FrobeniusOrbit& orbit) { return orbit.members.front(); }

std::string describe(const Eigenvalue& a) {
  return "(" + std::to_string(a.level) + "," + a.exponent.get_str() + ")";
}

}  // namespace ggp

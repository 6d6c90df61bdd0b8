#pragma once

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <cstdint>
#include <string>
#include <vector>

namespace ggp {

using Integer = mpz_class;
using Rational = mpq_class;

Integer pow_int(std::uint64_t base, unsigned exponent);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

class FieldParam {
 public:
  explicit FieldParam(std::uint64_t q);

  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  Integer modulus(int level) const;

  bool operator==(const FieldParam& other) const noexcept { return q_ == other.q_; }

 private:
  std::uint64_t q_;
  std::uint64_t p_;
  std::shared_ptr<const std::vector<Integer>> moduli_;
};

enum class Twist { standard, unitary };

struct Eigenvalue {
  int level = 1;
  Integer exponent = 0;

  friend bool operator==(const Eigenvalue& a, const Eigenvalue& b) {
    return a.level == b.level && a.exponent == b.exponent;
  }
  friend std::strong_ordering operator<=>(const Eigenvalue& a, const Eigenvalue& b) {
    if (auto c = a.level <=> b.level; c != 0) return c;
    const int c = cmp(a.exponent, b.exponent);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

std::vector<int> divisors(int k);

Eigenvalue normalize(const FieldParam& field, int level, Integer exponent);
Integer exponent_at(const FieldParam& field, const Eigenvalue& a, int level);
Eigenvalue power(const FieldParam& field, const Eigenvalue& a, const Integer& multiplier);
Eigenvalue inverse(const FieldParam& field, const Eigenvalue& a);
Eigenvalue frobenius(const FieldParam& field, Twist twist, const Eigenvalue& a);
Eigenvalue one();
Eigenvalue minus_one(const FieldParam& field);
bool is_one(const Eigenvalue& a);
bool is_minus_one(const FieldParam& field, const Eigenvalue& a);
Eigenvalue subgroup_element(const FieldParam& field, int level, const Integer& order,
                            const Integer& index);
Integer multiplicative_order(const FieldParam& field, const Eigenvalue& a);

struct FrobeniusOrbit {
  Twist twist = Twist::standard;
  std::vector<Eigenvalue> members;
  int size = 1;
  bool self_inverse = false;
  bool contains_one = false;
  bool contains_minus_one = false;
};

FrobeniusOrbit frobenius_orbit(const FieldParam& field, Twist twist, const Eigenvalue& a);

using OrbitKey = Eigenvalue;
OrbitKey orbit_key(const FrobeniusOrbit& orbit);

std::string describe(const Eigenvalue& a);

}  // namespace ggp

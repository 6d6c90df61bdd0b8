#pragma once

#include "ggp/field.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ggp {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int count_even_parts() const noexcept;
  int count_odd_parts() const noexcept;
  std::map<int, int> multiplicities() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Bipartition {
  Partition first;
  Partition second;

  int size() const noexcept { return first.size() + second.size(); }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

bool contains(const Partition& whole, const Partition& part);
Partition multiset_union(const std::vector<Partition>& pieces);
Partition multiset_union(const Partition& a, const Partition& b);
Partition multiset_difference(const Partition& whole, const Partition& part);
Partition scale_div(const Partition& mu, int divisor);
Partition scale_mul(const Partition& mu, int factor);
Integer c_coeff(const Partition& whole, const Partition& part);
Integer c_coeff_checked(const Partition& whole, const Partition& part);
Integer count_sub_multisets(const Partition& whole, const Partition& part);

Integer centralizer_order_a(const Partition& mu);
Integer centralizer_order_b(const Bipartition& label);

std::vector<Partition> partitions_of(int n);
std::vector<Bipartition> bipartitions_of(int n);
std::vector<Partition> sub_partitions(const Partition& mu);
std::vector<Partition> common_sub_partitions(const Partition& a, const Partition& b);

std::string to_string(const Partition& mu);
std::string to_string(const Bipartition& label);

}  // namespace ggp

#include "ggp/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ggp {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::count_even_parts() const noexcept {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; }));
}

int Partition::count_odd_parts() const noexcept { return length() - count_even_parts(); }

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> result;
  for (int part : parts_) ++result[part];
  return result;
}

bool contains(const Partition& whole, const Partition& part) {
  const auto have = whole.multiplicities();
  for (const auto& [value, count] : part.multiplicities()) {
    const auto it = have.find(value);
    if (it == have.end() || it->second < count) return false;
  }
  return true;
}

Partition multiset_union(const std::vector<Partition>& pieces) {
  std::vector<int> parts;
  for (const auto& piece : pieces) parts.insert(parts.end(), piece.parts().begin(), piece.parts().end());
  return Partition(std::move(parts));
}

Partition multiset_union(const Partition& a, const Partition& b) { return multiset_union({a, b}); }

Partition multiset_difference(const Partition& whole, const Partition& part) {
  if (!contains(whole, part)) throw std::invalid_argument("difference of non-contained partitions");
  auto counts = whole.multiplicities();
  for (const auto& [value, count] : part.multiplicities()) counts[value] -= count;
  std::vector<int> parts;
  for (const auto& [value, count] : counts) parts.insert(parts.end(), static_cast<std::size_t>(count), value);
  return Partition(std::move(parts));
}

Partition scale_div(const Partition& mu, int divisor) {
  if (divisor <= 0) throw std::invalid_argument("scale divisor must be positive");
  std::vector<int> parts;
  for (int part : mu.parts()) {
    if (part % divisor != 0) {
      throw std::invalid_argument("part " + std::to_string(part) + " is not divisible by " +
                                  std::to_string(divisor));
    }
    parts.push_back(part / divisor);
  }
  return Partition(std::move(parts));
}

Partition scale_mul(const Partition& mu, int factor) {
  std::vector<int> parts;
  for (int part : mu.parts()) parts.push_back(part * factor);
  return Partition(std::move(parts));
}

Integer c_coeff(const Partition& whole, const Partition& part) {
  const auto have = whole.multiplicities();
  Integer result = 1;
  for (const auto& [value, count] : part.multiplicities()) {
    const auto it = have.find(value);
    if (it == have.end() || it->second < count) return 0;
    result *= binomial(static_cast<unsigned>(it->second), static_cast<unsigned>(count));
  }
  return result;
}

Integer c_coeff_checked(const Partition& whole, const Partition& part) {
  if (!contains(whole, part)) throw std::invalid_argument("c_coeff requires containment");
  return c_coeff(whole, part);
}

Integer count_sub_multisets(const Partition& whole, const Partition& part) {
  const auto& parts = whole.parts();
  const std::size_t n = parts.size();
  if (n > 24) throw std::invalid_argument("sub-multiset enumeration bound exceeded");
  Integer count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) chosen.push_back(parts[i]);
    }
    if (Partition(std::move(chosen)) == part) ++count;
  }
  return count;
}

Integer centralizer_order_a(const Partition& mu) {
  Integer result = 1;
  for (const auto& [value, count] : mu.multiplicities()) {
    result *= pow_int(static_cast<std::uint64_t>(value), static_cast<unsigned>(count));
    result *= factorial(static_cast<unsigned>(count));
  }
  return result;
}

Integer centralizer_order_b(const Bipartition& label) {
  Integer result = 1;
  for (const Partition* piece : {&label.first, &label.second}) {
    for (const auto& [value, count] : piece->multiplicities()) {
      result *= pow_int(static_cast<std::uint64_t>(2 * value), static_cast<unsigned>(count));
      result *= factorial(static_cast<unsigned>(count));
    }
  }
  return result;
}

namespace {

void generate_partitions(int remaining, int max_part, std::vector<int>& current,
                         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    generate_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> current;
  generate_partitions(n, n, current, out);
  return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k) {
    for (const auto& mu : partitions_of(k)) {
      for (const auto& lambda : partitions_of(n - k)) out.push_back(Bipartition{mu, lambda});
    }
  }
  return out;
}

std::vector<Partition> sub_partitions(const Partition& mu) {
  const auto counts = mu.multiplicities();
  std::vector<std::pair<int, int>> entries(counts.rbegin(), counts.rend());
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(std::size_t)> recurse = [&](std::size_t index) {
    if (index == entries.size()) {
      out.emplace_back(current);
      return;
    }
    const auto [value, count] = entries[index];
    for (int take = 0; take <= count; ++take) {
      current.insert(current.end(), static_cast<std::size_t>(take), value);
      recurse(index + 1);
      current.resize(current.size() - static_cast<std::size_t>(take));
    }
  };
  recurse(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> common_sub_partitions(const Partition& a, const Partition& b) {
  std::vector<Partition> out;
  for (const auto& candidate : sub_partitions(a)) {
    if (contains(b, candidate)) out.push_back(candidate);
  }
  return out;
}

std::string to_string(const Partition& mu) {
  std::string out = "(";
  for (std::size_t i = 0; i < mu.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(mu.parts()[i]);
  }
  return out + ")";
}

std::string to_string(const Bipartition& label) {
  return "(" + to_string(label.first) + "," + to_string(label.second) + ")";
}

}  // namespace ggp

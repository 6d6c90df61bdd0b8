#include "ggp/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace ggp {

GroupKind make_group(Family family, int rank, std::uint64_t q) {
  if (rank < 0) throw std::invalid_argument("group rank must be non-negative");
  if (is_orthogonal_even(family) && rank < 1) {
    throw std::invalid_argument("even orthogonal groups require rank at least 1");
  }
  return GroupKind{family, rank, FieldParam(q)};
}

WeylType weyl_type(Family family) {
  switch (family) {
    case Family::GL:
    case Family::U:
      return WeylType::A;
    case Family::Sp:
    case Family::SOodd:
      return WeylType::B;
    case Family::SOplus:
    case Family::SOminus:
      return WeylType::D;
  }
  return WeylType::A;
}

Twist eigenvalue_twist(Family family) { return family == Family::U ? Twist::unitary : Twist::standard; }

bool is_orthogonal_even(Family family) { return family == Family::SOplus || family == Family::SOminus; }

int group_rank(const GroupKind& kind) {
  switch (kind.family) {
    case Family::GL:
    case Family::Sp:
    case Family::SOodd:
    case Family::SOplus:
      return kind.rank;
    case Family::U:
      return kind.rank / 2;
    case Family::SOminus:
      return kind.rank - 1;
  }
  return kind.rank;
}

Integer weyl_order(const GroupKind& kind) {
  const auto n = static_cast<unsigned>(kind.rank);
  switch (weyl_type(kind.family)) {
    case WeylType::A:
      return factorial(n);
    case WeylType::B:
      return pow_int(2, n) * factorial(n);
    case WeylType::D:
      return pow_int(2, n - 1) * factorial(n);
  }
  return 1;
}

Integer p_prime_order(const GroupKind& kind) {
  const std::uint64_t q = kind.field.q();
  const int n = kind.rank;
  Integer result = 1;
  switch (kind.family) {
    case Family::GL:
      for (int i = 1; i <= n; ++i) result *= pow_int(q, static_cast<unsigned>(i)) - 1;
      break;
    case Family::U:
      for (int i = 1; i <= n; ++i) {
        result *= pow_int(q, static_cast<unsigned>(i)) - (i % 2 == 0 ? 1 : -1);
      }
      break;
    case Family::Sp:
    case Family::SOodd:
      for (int i = 1; i <= n; ++i) result *= pow_int(q, static_cast<unsigned>(2 * i)) - 1;
      break;
    case Family::SOplus:
    case Family::SOminus:
      for (int i = 1; i < n; ++i) result *= pow_int(q, static_cast<unsigned>(2 * i)) - 1;
      result *= pow_int(q, static_cast<unsigned>(n)) + (kind.family == Family::SOplus ? -1 : 1);
      break;
  }
  return result;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::GL:
      return "GL";
    case Family::U:
      return "U";
    case Family::Sp:
      return "Sp";
    case Family::SOodd:
      return "SOodd";
    case Family::SOplus:
      return "SOplus";
    case Family::SOminus:
      return "SOminus";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::GL, Family::U, Family::Sp, Family::SOodd, Family::SOplus, Family::SOminus}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string to_string(const GroupKind& kind) {
  return family_name(kind.family) + "_" + std::to_string(kind.rank) + "(q=" + std::to_string(kind.field.q()) +
         ")";
}

bool is_split_d_label(const Bipartition& data) {
  if (!data.second.empty()) return false;
  return std::all_of(data.first.parts().begin(), data.first.parts().end(), [](int p) { return p % 2 == 0; });
}

void validate_label(const FClassLabel& label) {
  const auto& kind = label.kind;
  const WeylType type = weyl_type(kind.family);
  if (label.data.size() != kind.rank) {
    throw std::invalid_argument("torus label " + to_string(label.data) + " does not have size " +
                                std::to_string(kind.rank));
  }
  if (type == WeylType::A && !label.lambda().empty()) {
    throw std::invalid_argument("type A torus labels carry a single partition");
  }
  if (type == WeylType::D) {
    const bool odd_lambda = label.lambda().length() % 2 == 1;
    if (odd_lambda != (kind.family == Family::SOminus)) {
      throw std::invalid_argument("torus label " + to_string(label.data) + " does not belong to " +
                                  family_name(kind.family));
    }
    const bool needs_sign = kind.family == Family::SOplus && is_split_d_label(label.data);
    if (needs_sign != (label.split != SplitSign::none)) {
      throw std::invalid_argument("split sign must be present exactly for split type D labels");
    }
  } else if (label.split != SplitSign::none) {
    throw std::invalid_argument("split sign is only meaningful for even orthogonal groups");
  }
}

FClassLabel make_label(const GroupKind& kind, const Partition& mu, const Partition& lambda, SplitSign split) {
  FClassLabel label{kind, Bipartition{mu, lambda}, split};
  validate_label(label);
  return label;
}

std::string to_string(const FClassLabel& label) {
  std::string out = family_name(label.kind.family) + std::to_string(label.kind.rank) + ":";
  if (weyl_type(label.kind.family) == WeylType::A) {
    out += to_string(label.mu());
  } else {
    out += to_string(label.data);
  }
  if (label.split == SplitSign::plus) out += "+";
  if (label.split == SplitSign::minus) out += "-";
  return out;
}

std::vector<Block> canonical_blocks(const Bipartition& data) {
  std::vector<Block> blocks;
  for (int part : data.first.parts()) blocks.push_back(Block{BlockKind::split, part});
  for (int part : data.second.parts()) blocks.push_back(Block{BlockKind::anisotropic, part});
  return blocks;
}

SignedPerm::SignedPerm(int n) : image_(static_cast<std::size_t>(n)), sign_(static_cast<std::size_t>(n), 1) {
  std::iota(image_.begin(), image_.end(), 0);
}

SignedPerm::SignedPerm(std::vector<int> image, std::vector<int> sign)
    : image_(std::move(image)), sign_(std::move(sign)) {
  if (image_.size() != sign_.size()) throw std::invalid_argument("signed permutation arity mismatch");
  std::vector<int> sorted = image_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("not a permutation");
  }
  for (int s : sign_) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
}

int SignedPerm::sign_product() const noexcept {
  int product = 1;
  for (int s : sign_) product *= s;
  return product;
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> image(image_.size());
  std::vector<int> sign(sign_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    image[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    sign[static_cast<std::size_t>(image_[i])] = sign_[i];
  }
  return SignedPerm(std::move(image), std::move(sign));
}

SignedPerm operator*(const SignedPerm& outer, const SignedPerm& inner) {
  const std::size_t n = inner.image_.size();
  std::vector<int> image(n);
  std::vector<int> sign(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto mid = static_cast<std::size_t>(inner.image_[i]);
    image[i] = outer.image_[mid];
    sign[i] = inner.sign_[i] * outer.sign_[mid];
  }
  return SignedPerm(std::move(image), std::move(sign));
}

SignedPerm block_representative(const std::vector<Block>& blocks) {
  std::vector<int> image;
  std::vector<int> sign;
  int start = 0;
  for (const Block& block : blocks) {
    for (int i = 0; i < block.length; ++i) {
      const bool last = i == block.length - 1;
      image.push_back(last ? start : start + i + 1);
      sign.push_back(last && block.kind == BlockKind::anisotropic ? -1 : 1);
    }
    start += block.length;
  }
  return SignedPerm(std::move(image), std::move(sign));
}

SignedPerm longest_element(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = n - 1 - i;
  return SignedPerm(std::move(image), std::vector<int>(static_cast<std::size_t>(n), 1));
}

SignedPerm last_sign_flip(int n) {
  SignedPerm identity(n);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<int> sign(static_cast<std::size_t>(n), 1);
  if (n > 0) sign.back() = -1;
  return SignedPerm(std::move(image), std::move(sign));
}

SignedPerm frobenius_on_weyl(Family family, const SignedPerm& x) {
  switch (family) {
    case Family::U: {
      const SignedPerm w0 = longest_element(x.degree());
      return w0 * x * w0;
    }
    case Family::SOminus: {
      const SignedPerm flip = last_sign_flip(x.degree());
      return flip * x * flip;
    }
    default:
      return x;
  }
}

SignedPerm literal_class_element(const FClassLabel& label, const std::vector<Block>& blocks) {
  const SignedPerm v = block_representative(blocks);
  switch (label.kind.family) {
    case Family::U:
      return v * longest_element(v.degree());
    case Family::SOminus:
      return v * last_sign_flip(v.degree());
    default:
      return v;
  }
}

std::vector<SignedPerm> weyl_group_elements(Family family, int n) {
  const WeylType type = weyl_type(family);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SignedPerm> out;
  do {
    if (type == WeylType::A) {
      out.emplace_back(perm, std::vector<int>(static_cast<std::size_t>(n), 1));
      continue;
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> sign(static_cast<std::size_t>(n));
      int product = 1;
      for (int i = 0; i < n; ++i) {
        sign[static_cast<std::size_t>(i)] = ((mask >> i) & 1u) ? -1 : 1;
        product *= sign[static_cast<std::size_t>(i)];
      }
      if (type == WeylType::D && product != 1) continue;
      out.emplace_back(perm, std::move(sign));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<FClassLabel> f_classes(const GroupKind& kind) {
  std::vector<FClassLabel> out;
  const WeylType type = weyl_type(kind.family);
  if (type == WeylType::A) {
    for (const auto& mu : partitions_of(kind.rank)) out.push_back(FClassLabel{kind, Bipartition{mu, {}}});
    return out;
  }
  for (const auto& data : bipartitions_of(kind.rank)) {
    if (type == WeylType::B) {
      out.push_back(FClassLabel{kind, data});
      continue;
    }
    const bool odd_lambda = data.second.length() % 2 == 1;
    if (odd_lambda != (kind.family == Family::SOminus)) continue;
    if (kind.family == Family::SOplus && is_split_d_label(data)) {
      out.push_back(FClassLabel{kind, data, SplitSign::plus});
      out.push_back(FClassLabel{kind, data, SplitSign::minus});
    } else {
      out.push_back(FClassLabel{kind, data});
    }
  }
  return out;
}

Integer f_centralizer_order(const FClassLabel& label) {
  validate_label(label);
  switch (weyl_type(label.kind.family)) {
    case WeylType::A:
      return centralizer_order_a(label.mu());
    case WeylType::B:
      return centralizer_order_b(label.data);
    case WeylType::D: {
      const Integer full = centralizer_order_b(label.data);
      return is_split_d_label(label.data) ? full : Integer(full / 2);
    }
  }
  return 1;
}

EnumerationBounds& enumeration_bounds() {
  static EnumerationBounds bounds;
  return bounds;
}

namespace {

struct CentralizerCache {
  std::shared_mutex mutex;
  std::map<std::string, std::vector<SignedPerm>> entries;
};

CentralizerCache& centralizer_cache() {
  static CentralizerCache cache;
  return cache;
}

std::string cache_key(const FClassLabel& label, const std::vector<Block>& blocks) {
  std::string key = family_name(label.kind.family) + std::to_string(label.kind.rank) + "|";
  for (const Block& b : blocks) {
    key += (b.kind == BlockKind::split ? "s" : "a") + std::to_string(b.length) + ",";
  }
  return key;
}

}  // namespace

std::vector<SignedPerm> enumerate_f_centralizer(const FClassLabel& label, const std::vector<Block>& blocks) {
  validate_label(label);
  const int n = label.kind.rank;
  const WeylType type = weyl_type(label.kind.family);
  const int bound = type == WeylType::A ? enumeration_bounds().type_a : enumeration_bounds().type_bd;
  if (n > bound) {
    throw std::out_of_range("rank " + std::to_string(n) + " exceeds the enumeration bound " +
                            std::to_string(bound));
  }
  std::vector<Block> sorted_blocks = blocks;
  std::vector<Block> canonical = canonical_blocks(label.data);
  std::sort(sorted_blocks.begin(), sorted_blocks.end());
  std::sort(canonical.begin(), canonical.end());
  if (sorted_blocks != canonical) throw std::invalid_argument("block arrangement does not match the label");

  auto& cache = centralizer_cache();
  const std::string key = cache_key(label, blocks);
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
  }
  const SignedPerm w = literal_class_element(label, blocks);
  std::vector<SignedPerm> result;
  for (const SignedPerm& x : weyl_group_elements(label.kind.family, n)) {
    if (w * frobenius_on_weyl(label.kind.family, x) == x * w) result.push_back(x);
  }
  std::unique_lock lock(cache.mutex);
  cache.entries.emplace(key, result);
  return result;
}

std::vector<SignedPerm> enumerate_f_centralizer(const FClassLabel& label) {
  return enumerate_f_centralizer(label, canonical_blocks(label.data));
}

}  // namespace ggp

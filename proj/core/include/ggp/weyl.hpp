#pragma once

#include "ggp/field.hpp"
#include "ggp/partition.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace ggp {

enum class Family { GL, U, Sp, SOodd, SOplus, SOminus };
enum class WeylType { A, B, D };

struct GroupKind {
  Family family = Family::GL;
  int rank = 0;
  FieldParam field{3};

  friend bool operator==(const GroupKind& a, const GroupKind& b) {
    return a.family == b.family && a.rank == b.rank && a.field == b.field;
  }
};

GroupKind make_group(Family family, int rank, std::uint64_t q);
WeylType weyl_type(Family family);
Twist eigenvalue_twist(Family family);
bool is_orthogonal_even(Family family);
int group_rank(const GroupKind& kind);
Integer weyl_order(const GroupKind& kind);
Integer p_prime_order(const GroupKind& kind);
std::string family_name(Family family);
std::optional<Family> parse_family(const std::string& name);
std::string to_string(const GroupKind& kind);

enum class SplitSign { none, plus, minus };

struct FClassLabel {
  GroupKind kind;
  Bipartition data;
  SplitSign split = SplitSign::none;

  const Partition& mu() const noexcept { return data.first; }
  const Partition& lambda() const noexcept { return data.second; }
  friend bool operator==(const FClassLabel& a, const FClassLabel& b) {
    return a.kind == b.kind && a.data == b.data && a.split == b.split;
  }
};

FClassLabel make_label(const GroupKind& kind, const Partition& mu, const Partition& lambda = {},
                       SplitSign split = SplitSign::none);
bool is_split_d_label(const Bipartition& data);
void validate_label(const FClassLabel& label);
std::string to_string(const FClassLabel& label);

enum class BlockKind { split, anisotropic };

struct Block {
  BlockKind kind = BlockKind::split;
  int length = 1;
  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

std::vector<Block> canonical_blocks(const Bipartition& data);

class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(int n);
  SignedPerm(std::vector<int> image, std::vector<int> sign);

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  int image(int i) const { return image_[static_cast<std::size_t>(i)]; }
  int sign(int i) const { return sign_[static_cast<std::size_t>(i)]; }
  int sign_product() const noexcept;
  SignedPerm inverse() const;

  friend SignedPerm operator*(const SignedPerm& outer, const SignedPerm& inner);
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> image_;
  std::vector<int> sign_;
};

using WeylElement = SignedPerm;

SignedPerm block_representative(const std::vector<Block>& blocks);
SignedPerm longest_element(int n);
SignedPerm last_sign_flip(int n);
SignedPerm frobenius_on_weyl(Family family, const SignedPerm& x);
SignedPerm literal_class_element(const FClassLabel& label, const std::vector<Block>& blocks);
std::vector<SignedPerm> weyl_group_elements(Family family, int n);

std::vector<FClassLabel> f_classes(const GroupKind& kind);
Integer f_centralizer_order(const FClassLabel& label);
std::vector<SignedPerm> enumerate_f_centralizer(const FClassLabel& label,
                                                const std::vector<Block>& blocks);
std::vector<SignedPerm> enumerate_f_centralizer(const FClassLabel& label);

struct EnumerationBounds {
  int type_a = 8;
  int type_bd = 6;
};
EnumerationBounds& enumeration_bounds();

}  // namespace ggp

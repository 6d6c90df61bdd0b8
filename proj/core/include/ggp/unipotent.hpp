#pragma once

#include "ggp/lusztig.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ggp {

Integer mn_character(const Partition& shape, const Partition& cycle_type);

struct DLBasisKey {
  Bipartition data;
  SplitSign split = SplitSign::none;
  SemisimpleElement element;

  friend bool operator==(const DLBasisKey&, const DLBasisKey&) = default;
  friend auto operator<=>(const DLBasisKey& a, const DLBasisKey& b) {
    if (auto c = a.data <=> b.data; c != 0) return c;
    if (auto c = a.split <=> b.split; c != 0) return c;
    return a.element <=> b.element;
  }
};

class VirtualCharacter {
 public:
  explicit VirtualCharacter(GroupKind group) : group_(std::move(group)) {}

  const GroupKind& group() const noexcept { return group_; }
  const std::map<DLBasisKey, Rational>& terms() const noexcept { return terms_; }

  // Adds coefficient * R(T, t) after moving t to its canonical representative.
  void add(const Bipartition& data, SplitSign split, const SemisimpleElement& element, const Rational& coefficient);
  DualTorusPair basis_pair(const DLBasisKey& key) const;
  std::vector<OrbitKey> eigenvalue_orbits() const;

 private:
  GroupKind group_;
  std::map<DLBasisKey, Rational> terms_;
};

Rational inner_product(const VirtualCharacter& first, const VirtualCharacter& second);
Rational degree(const VirtualCharacter& character);
Integer torus_degree(const TorusDatum& torus);

VirtualCharacter unipotent_expansion(const GroupKind& group, const Partition& shape);

struct SeriesOrbit {
  Eigenvalue seed;
  Partition shape;
};

struct SeriesDatum {
  GroupKind group;
  std::vector<SeriesOrbit> orbits;
  SplitSign split = SplitSign::plus;
};

struct SeriesFactor {
  OrbitKey key;
  FrobeniusOrbit orbit;
  GroupKind group;
  Partition shape;
};

std::vector<SeriesFactor> series_factors(const SeriesDatum& series);
VirtualCharacter series_member(const SeriesDatum& series);

// Sum of c_i d_j <R_i, R_j> over the terms of a big-group and a small-group character.
Integer pair_characters(const VirtualCharacter& big, const VirtualCharacter& small, Route route = Route::closed_form,
                        const EngineOptions& engine = {});

struct FreshBlock {
  Block block;
  Eigenvalue coordinate;
};

// A coordinate for one block whose orbit is regular for the block, avoids the
// given orbits, and for `require_non_self_inverse` is not inverse-closed.
FreshBlock fresh_block(const GroupKind& group, const Block& block, const std::vector<OrbitKey>& avoid,
                       unsigned long seed, bool require_non_self_inverse);

// Product of a character with a regular Deligne-Lusztig character on one extra
// block, on the group enlarged by the block.
VirtualCharacter extend_by_block(const VirtualCharacter& character, const GroupKind& enlarged, const FreshBlock& extra,
                                 int extra_sign);

Integer gl_multiplicity(const VirtualCharacter& first, const VirtualCharacter& second, unsigned long tau_seed = 1,
                        const EngineOptions& engine = {});

struct BasicReduction {
  VirtualCharacter big;
  VirtualCharacter small;
  int corank = 1;
  std::vector<std::string> trace;
};

BasicReduction reduce_to_basic(const VirtualCharacter& pi, const VirtualCharacter& sigma, unsigned long tau_seed = 1);

struct MultiplicityFactor {
  OrbitKey key;
  GroupKind big_group;
  GroupKind small_group;
  Partition big_shape;
  Partition small_shape;
  Integer value;
};

struct MultiplicityOptions {
  unsigned long tau_seed = 1;
  EngineOptions engine;
};

struct MultiplicityReport {
  Integer lhs;
  Integer rhs;
  bool equal = false;
  bool nonnegative = false;
  std::vector<MultiplicityFactor> factors;
  std::vector<std::string> trace;
};

// Multiplicity between factor-group unipotent characters: the general linear
// definition for GL factors, and for unitary factors the basic case reached by
// a U_1 twist (even rank gap) and parabolic lifting (gap above one).
Integer factor_multiplicity(const VirtualCharacter& first, const VirtualCharacter& second,
                            const MultiplicityOptions& options = {});

MultiplicityReport ggp_multiplicity(const SeriesDatum& pi, const SeriesDatum& sigma,
                                    const MultiplicityOptions& options = {});

}  // namespace ggp

#pragma once

#include "ggp/field.hpp"
#include "ggp/partition.hpp"
#include "ggp/weyl.hpp"

#include <map>
#include <vector>

namespace ggp {

struct TorusDatum {
  FClassLabel label;

  const GroupKind& ambient() const noexcept { return label.kind; }
  const FieldParam& field() const noexcept { return label.kind.field; }
  Family family() const noexcept { return label.kind.family; }
  std::vector<Block> blocks() const { return canonical_blocks(label.data); }
};

struct SemisimpleElement {
  std::vector<Eigenvalue> coords;

  friend bool operator==(const SemisimpleElement&, const SemisimpleElement&) = default;
  friend auto operator<=>(const SemisimpleElement& a, const SemisimpleElement& b) {
    return a.coords <=> b.coords;
  }
};

struct LocalElement {
  int shift = 0;
  int reflect = 1;
};

int local_group_order(Family family, const Block& block);
std::vector<LocalElement> local_group(Family family, const Block& block);
int local_sign(Family family, const Block& block, const LocalElement& element);
Eigenvalue apply_local(const FieldParam& field, Family family, const Block& block, const LocalElement& element,
                       const Eigenvalue& a);
std::vector<Eigenvalue> local_orbit(const FieldParam& field, Family family, const Block& block,
                                    const Eigenvalue& a);
OrbitKey local_orbit_key(const FieldParam& field, Family family, const Block& block, const Eigenvalue& a);

Integer coordinate_group_order(const FieldParam& field, Family family, const Block& block);
int storage_level(Family family, const Block& block);
bool valid_coordinate(const FieldParam& field, Family family, const Block& block, const Eigenvalue& a);
Eigenvalue coordinate_from_index(const FieldParam& field, Family family, const Block& block,
                                 const Integer& index);
std::vector<Eigenvalue> block_eigenvalues(const FieldParam& field, Family family, const Block& block,
                                          const Eigenvalue& a);

std::vector<Integer> torus_factor_orders(const TorusDatum& torus);
void validate_element(const TorusDatum& torus, const SemisimpleElement& element);
std::vector<Eigenvalue> all_eigenvalues(const TorusDatum& torus, const SemisimpleElement& element);
bool has_eigenvalue_pm_one(const TorusDatum& torus, const SemisimpleElement& element);

// Split rank: parts for GL, even parts for U, split blocks for the orthogonal and
// symplectic families.
int torus_rank(const TorusDatum& torus);

struct OrbitEntry {
  Partition mu;
  Partition lambda;
  int nu = 0;
  int orbit_size = 1;
  bool self_inverse = false;
};

using OrbitDecomposition = std::map<OrbitKey, OrbitEntry>;

OrbitKey eigenvalue_orbit_key(const FieldParam& field, Family family, const Eigenvalue& a);
OrbitDecomposition decompose_by_orbit(const TorusDatum& torus, const SemisimpleElement& element);

std::vector<Eigenvalue> literal_coordinates(const FieldParam& field, Family family,
                                            const std::vector<Block>& blocks,
                                            const std::vector<Eigenvalue>& block_coords);
std::vector<Eigenvalue> apply_signed_perm(const FieldParam& field, const SignedPerm& w,
                                          const std::vector<Eigenvalue>& coordinates);
SemisimpleElement weyl_action(const TorusDatum& torus, const WeylElement& w, const SemisimpleElement& element);

struct BlockGroupElement {
  std::vector<int> destination;
  std::vector<LocalElement> local;
  int sign = 1;
};

std::vector<BlockGroupElement> block_weyl_group(const TorusDatum& torus);
SemisimpleElement apply_block_element(const TorusDatum& torus, const BlockGroupElement& w,
                                      const SemisimpleElement& element);
std::vector<SemisimpleElement> block_orbit(const TorusDatum& torus, const SemisimpleElement& element);
SemisimpleElement canonical_element(const TorusDatum& torus, const SemisimpleElement& element);

Family target_family(Family family);
TorusDatum target_torus(const TorusDatum& torus, const Bipartition& target);

struct RestrictionClass {
  SemisimpleElement representative;
  std::vector<std::pair<Block, OrbitKey>> assignment;
};

std::vector<RestrictionClass> restriction_classes(const TorusDatum& torus, const SemisimpleElement& element,
                                                  const Bipartition& target);

enum class CountCharacter { trivial, sign };

Integer weighted_restriction_count(const TorusDatum& torus, const SemisimpleElement& element,
                                   const Bipartition& target, const SemisimpleElement& restricted,
                                   CountCharacter character);
Integer m_count(const TorusDatum& torus, const SemisimpleElement& element, const Bipartition& target,
                const SemisimpleElement& restricted);

Integer literal_m_count(const TorusDatum& torus, const SemisimpleElement& element, const Bipartition& target,
                        const SemisimpleElement& restricted);
std::size_t literal_restriction_class_count(const TorusDatum& torus, const SemisimpleElement& element,
                                            const Bipartition& target);

std::vector<SemisimpleElement> enumerate_elements(const TorusDatum& torus, const std::vector<Integer>& indices);

}  // namespace ggp

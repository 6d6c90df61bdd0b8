#include "ggp/tori.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ggp {

namespace {

bool is_type_a(Family family) { return weyl_type(family) == WeylType::A; }

Integer signed_base(const FieldParam& field, Family family) {
  const Integer q = static_cast<unsigned long>(field.q());
  return family == Family::U ? Integer(-q) : q;
}

Integer base_power(const FieldParam& field, Family family, int shift) {
  const Integer base = signed_base(field, family);
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(shift));
  return result;
}

}  // namespace

int local_group_order(Family family, const Block& block) {
  return is_type_a(family) ? block.length : 2 * block.length;
}

std::vector<LocalElement> local_group(Family family, const Block& block) {
  std::vector<LocalElement> out;
  if (is_type_a(family)) {
    for (int j = 0; j < block.length; ++j) out.push_back(LocalElement{j, 1});
  } else if (block.kind == BlockKind::split) {
    for (int reflect : {1, -1}) {
      for (int j = 0; j < block.length; ++j) out.push_back(LocalElement{j, reflect});
    }
  } else {
    for (int j = 0; j < 2 * block.length; ++j) out.push_back(LocalElement{j, 1});
  }
  return out;
}

int local_sign(Family family, const Block& block, const LocalElement& element) {
  if (is_type_a(family)) return 1;
  if (block.kind == BlockKind::split) {
    return element.reflect == -1 && block.length % 2 == 1 ? -1 : 1;
  }
  return element.shift % 2 == 0 ? 1 : -1;
}

Eigenvalue apply_local(const FieldParam& field, Family family, const Block&, const LocalElement& element,
                       const Eigenvalue& a) {
  return power(field, a, base_power(field, family, element.shift) * element.reflect);
}

std::vector<Eigenvalue> local_orbit(const FieldParam& field, Family family, const Block& block,
                                    const Eigenvalue& a) {
  std::set<Eigenvalue> members;
  for (const auto& element : local_group(family, block)) members.insert(apply_local(field, family, block, element, a));
  return {members.begin(), members.end()};
}

OrbitKey local_orbit_key(const FieldParam& field, Family family, const Block& block, const Eigenvalue& a) {
  return local_orbit(field, family, block, a).front();
}

int storage_level(Family family, const Block& block) {
  if (family == Family::U) return block.length % 2 == 0 ? block.length : 2 * block.length;
  if (!is_type_a(family) && block.kind == BlockKind::anisotropic) return 2 * block.length;
  return block.length;
}

Integer coordinate_group_order(const FieldParam& field, Family family, const Block& block) {
  const Integer top = pow_int(field.q(), static_cast<unsigned>(block.length));
  if (family == Family::U) return block.length % 2 == 0 ? Integer(top - 1) : Integer(top + 1);
  if (!is_type_a(family) && block.kind == BlockKind::anisotropic) return top + 1;
  return top - 1;
}

bool valid_coordinate(const FieldParam& field, Family family, const Block& block, const Eigenvalue& a) {
  if (is_type_a(family) && block.kind != BlockKind::split) return false;
  const Eigenvalue image = power(field, a, base_power(field, family, block.length));
  if (!is_type_a(family) && block.kind == BlockKind::anisotropic) return image == inverse(field, a);
  return image == a;
}

Eigenvalue coordinate_from_index(const FieldParam& field, Family family, const Block& block,
                                 const Integer& index) {
  return subgroup_element(field, storage_level(family, block), coordinate_group_order(field, family, block), index);
}

std::vector<Eigenvalue> block_eigenvalues(const FieldParam& field, Family family, const Block& block,
                                          const Eigenvalue& a) {
  std::vector<Eigenvalue> out;
  if (is_type_a(family)) {
    for (int j = 0; j < block.length; ++j) out.push_back(power(field, a, base_power(field, family, j)));
  } else if (block.kind == BlockKind::split) {
    for (int j = 0; j < block.length; ++j) {
      const Integer m = base_power(field, family, j);
      out.push_back(power(field, a, m));
      out.push_back(power(field, a, -m));
    }
  } else {
    for (int j = 0; j < 2 * block.length; ++j) out.push_back(power(field, a, base_power(field, family, j)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> torus_factor_orders(const TorusDatum& torus) {
  std::vector<Integer> out;
  for (const Block& block : torus.blocks()) out.push_back(coordinate_group_order(torus.field(), torus.family(), block));
  return out;
}

void validate_element(const TorusDatum& torus, const SemisimpleElement& element) {
  const auto blocks = torus.blocks();
  if (blocks.size() != element.coords.size()) {
    throw std::invalid_argument("element arity " + std::to_string(element.coords.size()) +
                                " does not match torus " + to_string(torus.label));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!valid_coordinate(torus.field(), torus.family(), blocks[i], element.coords[i])) {
      throw std::invalid_argument("coordinate " + describe(element.coords[i]) + " is not a point of factor " +
                                  std::to_string(i) + " of torus " + to_string(torus.label));
    }
  }
}

std::vector<Eigenvalue> all_eigenvalues(const TorusDatum& torus, const SemisimpleElement& element) {
  const auto blocks = torus.blocks();
  std::vector<Eigenvalue> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto part = block_eigenvalues(torus.field(), torus.family(), blocks[i], element.coords[i]);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_eigenvalue_pm_one(const TorusDatum& torus, const SemisimpleElement& element) {
  for (const auto& a : element.coords) {
    if (is_one(a) || is_minus_one(torus.field(), a)) return true;
  }
  return false;
}

int torus_rank(const TorusDatum& torus) {
  return torus.family() == Family::U ? torus.label.mu().count_even_parts() : torus.label.mu().length();
}

OrbitKey eigenvalue_orbit_key(const FieldParam& field, Family family, const Eigenvalue& a) {
  const Twist twist = eigenvalue_twist(family);
  const OrbitKey direct = orbit_key(frobenius_orbit(field, twist, a));
  if (is_type_a(family)) return direct;
  return std::min(direct, orbit_key(frobenius_orbit(field, twist, inverse(field, a))));
}

OrbitDecomposition decompose_by_orbit(const TorusDatum& torus, const SemisimpleElement& element) {
  validate_element(torus, element);
  const auto blocks = torus.blocks();
  std::map<OrbitKey, std::pair<std::vector<int>, std::vector<int>>> parts;
  OrbitDecomposition out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const OrbitKey key = eigenvalue_orbit_key(torus.field(), torus.family(), element.coords[i]);
    auto& slot = parts[key];
    (blocks[i].kind == BlockKind::split ? slot.first : slot.second).push_back(blocks[i].length);
    const auto eigen = block_eigenvalues(torus.field(), torus.family(), blocks[i], element.coords[i]);
    out[key].nu += static_cast<int>(std::count(eigen.begin(), eigen.end(), key));
  }
  for (auto& [key, entry] : out) {
    entry.mu = Partition(parts[key].first);
    entry.lambda = Partition(parts[key].second);
    const FrobeniusOrbit orbit = frobenius_orbit(torus.field(), eigenvalue_twist(torus.family()), key);
    entry.orbit_size = orbit.size;
    entry.self_inverse = orbit.self_inverse;
  }
  return out;
}

std::vector<Eigenvalue> literal_coordinates(const FieldParam& field, Family family, const std::vector<Block>& blocks,
                                            const std::vector<Eigenvalue>& block_coords) {
  std::vector<Eigenvalue> out;
  const Twist twist = eigenvalue_twist(family);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    Eigenvalue current = block_coords[b];
    for (int i = 0; i < blocks[b].length; ++i) {
      out.push_back(current);
      current = frobenius(field, twist, current);
    }
  }
  return out;
}

std::vector<Eigenvalue> apply_signed_perm(const FieldParam& field, const SignedPerm& w,
                                          const std::vector<Eigenvalue>& coordinates) {
  std::vector<Eigenvalue> out(coordinates.size());
  for (int i = 0; i < w.degree(); ++i) {
    const auto& x = coordinates[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(w.image(i))] = w.sign(i) == 1 ? x : inverse(field, x);
  }
  return out;
}

namespace {

std::vector<Eigenvalue> compress(const std::vector<Block>& blocks, const std::vector<Eigenvalue>& coordinates) {
  std::vector<Eigenvalue> out;
  std::size_t offset = 0;
  for (const Block& block : blocks) {
    out.push_back(coordinates[offset]);
    offset += static_cast<std::size_t>(block.length);
  }
  return out;
}

}  // namespace

SemisimpleElement weyl_action(const TorusDatum& torus, const WeylElement& w, const SemisimpleElement& element) {
  validate_element(torus, element);
  const auto blocks = torus.blocks();
  const SignedPerm v = literal_class_element(torus.label, blocks);
  if (w.degree() != torus.ambient().rank || !(v * frobenius_on_weyl(torus.family(), w) == w * v) ||
      (weyl_type(torus.family()) == WeylType::D && w.sign_product() != 1) ||
      (is_type_a(torus.family()) && w.sign_product() != 1)) {
    throw std::invalid_argument("Weyl element does not normalize torus " + to_string(torus.label));
  }
  const auto literal = literal_coordinates(torus.field(), torus.family(), blocks, element.coords);
  return SemisimpleElement{compress(blocks, apply_signed_perm(torus.field(), w, literal))};
}

std::vector<BlockGroupElement> block_weyl_group(const TorusDatum& torus) {
  const auto blocks = torus.blocks();
  const Family family = torus.family();
  std::vector<std::vector<int>> classes;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i == 0 || !(blocks[i] == blocks[i - 1])) classes.emplace_back();
    classes.back().push_back(static_cast<int>(i));
  }
  std::vector<BlockGroupElement> out{BlockGroupElement{std::vector<int>(blocks.size()),
                                                       std::vector<LocalElement>(blocks.size()), 1}};
  for (const auto& members : classes) {
    const auto locals = local_group(family, blocks[static_cast<std::size_t>(members.front())]);
    const Block& block = blocks[static_cast<std::size_t>(members.front())];
    std::vector<BlockGroupElement> next;
    std::vector<int> perm = members;
    do {
      std::size_t total = 1;
      for (std::size_t k = 0; k < members.size(); ++k) total *= locals.size();
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (const auto& partial : out) {
          BlockGroupElement element = partial;
          rest = code;
          for (std::size_t k = 0; k < members.size(); ++k) {
            const auto& local = locals[rest % locals.size()];
            rest /= locals.size();
            const auto source = static_cast<std::size_t>(members[k]);
            element.destination[source] = perm[k];
            element.local[source] = local;
            element.sign *= local_sign(family, block, local);
          }
          next.push_back(std::move(element));
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out = std::move(next);
  }
  return out;
}

SemisimpleElement apply_block_element(const TorusDatum& torus, const BlockGroupElement& w,
                                      const SemisimpleElement& element) {
  const auto blocks = torus.blocks();
  SemisimpleElement out{std::vector<Eigenvalue>(element.coords.size())};
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    out.coords[static_cast<std::size_t>(w.destination[j])] =
        apply_local(torus.field(), torus.family(), blocks[j], w.local[j], element.coords[j]);
  }
  return out;
}

std::vector<SemisimpleElement> block_orbit(const TorusDatum& torus, const SemisimpleElement& element) {
  const auto blocks = torus.blocks();
  std::vector<std::vector<Eigenvalue>> options(blocks.size());
  std::set<SemisimpleElement> seen;
  std::vector<std::vector<Eigenvalue>> orbit_members(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    orbit_members[j] = local_orbit(torus.field(), torus.family(), blocks[j], element.coords[j]);
  }
  std::vector<int> destination(blocks.size(), -1);
  std::vector<bool> used(blocks.size(), false);
  SemisimpleElement current{std::vector<Eigenvalue>(blocks.size())};
  std::function<void(std::size_t)> place = [&](std::size_t slot) {
    if (slot == blocks.size()) {
      seen.insert(current);
      return;
    }
    std::set<std::pair<Block, OrbitKey>> tried;
    for (std::size_t source = 0; source < blocks.size(); ++source) {
      if (used[source] || !(blocks[source] == blocks[slot])) continue;
      if (!tried.insert({blocks[source], orbit_members[source].front()}).second) continue;
      used[source] = true;
      for (const auto& value : orbit_members[source]) {
        current.coords[slot] = value;
        place(slot + 1);
      }
      used[source] = false;
    }
  };
  place(0);
  return {seen.begin(), seen.end()};
}

SemisimpleElement canonical_element(const TorusDatum& torus, const SemisimpleElement& element) {
  validate_element(torus, element);
  if (weyl_type(torus.family()) != WeylType::D) return block_orbit(torus, element).front();
  std::optional<SemisimpleElement> best;
  for (const auto& w : block_weyl_group(torus)) {
    if (w.sign != 1) continue;
    auto image = apply_block_element(torus, w, element);
    if (!best || image < *best) best = std::move(image);
  }
  return *best;
}

Family target_family(Family family) {
  return weyl_type(family) == WeylType::D ? Family::Sp : family;
}

TorusDatum target_torus(const TorusDatum& torus, const Bipartition& target) {
  const GroupKind kind{target_family(torus.family()), target.size(), torus.field()};
  return TorusDatum{make_label(kind, target.first, target.second)};
}

namespace {

struct ClassData {
  std::vector<Eigenvalue> source;
  std::vector<Eigenvalue> target;
};

std::map<Block, ClassData> group_by_class(const std::vector<Block>& source_blocks,
                                          const std::vector<Eigenvalue>& source_coords,
                                          const std::vector<Block>& target_blocks,
                                          const std::vector<Eigenvalue>& target_coords) {
  std::map<Block, ClassData> classes;
  for (std::size_t i = 0; i < source_blocks.size(); ++i) classes[source_blocks[i]].source.push_back(source_coords[i]);
  for (std::size_t i = 0; i < target_blocks.size(); ++i) classes[target_blocks[i]].target.push_back(target_coords[i]);
  return classes;
}

Integer elementary_symmetric(const std::vector<int>& values, int degree) {
  std::vector<Integer> poly(static_cast<std::size_t>(degree) + 1, 0);
  poly[0] = 1;
  for (int v : values) {
    for (int k = degree; k >= 1; --k) poly[static_cast<std::size_t>(k)] += poly[static_cast<std::size_t>(k - 1)] * v;
  }
  return poly[static_cast<std::size_t>(degree)];
}

int transporter_sign(const FieldParam& field, Family family, const Block& block, const Eigenvalue& from,
                     const Eigenvalue& to) {
  for (const auto& element : local_group(family, block)) {
    if (apply_local(field, family, block, element, from) == to) return local_sign(family, block, element);
  }
  throw std::logic_error("coordinates are not in the same local orbit");
}

}  // namespace

std::vector<RestrictionClass> restriction_classes(const TorusDatum& torus, const SemisimpleElement& element,
                                                  const Bipartition& target) {
  validate_element(torus, element);
  if (!contains(torus.label.mu(), target.first) || !contains(torus.label.lambda(), target.second)) {
    throw std::invalid_argument("target " + to_string(target) + " is not contained in " + to_string(torus.label));
  }
  const auto blocks = torus.blocks();
  const auto target_blocks = canonical_blocks(target);
  std::map<Block, std::map<OrbitKey, int>> available;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    ++available[blocks[i]][local_orbit_key(torus.field(), torus.family(), blocks[i], element.coords[i])];
  }
  std::vector<std::pair<Block, int>> slots;
  for (const Block& block : target_blocks) {
    if (slots.empty() || !(slots.back().first == block)) slots.emplace_back(block, 0);
    ++slots.back().second;
  }
  std::vector<RestrictionClass> out;
  RestrictionClass current;
  std::function<void(std::size_t)> per_class = [&](std::size_t index) {
    if (index == slots.size()) {
      out.push_back(current);
      return;
    }
    const auto& [block, needed] = slots[index];
    std::vector<std::pair<OrbitKey, int>> pool(available[block].begin(), available[block].end());
    std::vector<int> take(pool.size(), 0);
    std::function<void(std::size_t, int)> choose = [&](std::size_t k, int remaining) {
      if (k == pool.size()) {
        if (remaining != 0) return;
        const std::size_t before = current.representative.coords.size();
        for (std::size_t j = 0; j < pool.size(); ++j) {
          for (int r = 0; r < take[j]; ++r) {
            current.representative.coords.push_back(pool[j].first);
            current.assignment.emplace_back(block, pool[j].first);
          }
        }
        per_class(index + 1);
        current.representative.coords.resize(before);
        current.assignment.resize(before);
        return;
      }
      for (int t = std::min(remaining, pool[k].second); t >= 0; --t) {
        take[k] = t;
        choose(k + 1, remaining - t);
      }
      take[k] = 0;
    };
    choose(0, needed);
  };
  per_class(0);
  return out;
}

Integer weighted_restriction_count(const TorusDatum& torus, const SemisimpleElement& element,
                                   const Bipartition& target, const SemisimpleElement& restricted,
                                   CountCharacter character) {
  const auto blocks = torus.blocks();
  const auto target_blocks = canonical_blocks(target);
  if (restricted.coords.size() != target_blocks.size() || element.coords.size() != blocks.size()) {
    throw std::invalid_argument("restriction arity mismatch");
  }
  const FieldParam& field = torus.field();
  const Family family = torus.family();
  Integer result = 1;
  for (const auto& [block, data] : group_by_class(blocks, element.coords, target_blocks, restricted.coords)) {
    const auto k = data.source.size();
    const auto k_target = data.target.size();
    if (k_target > k) return 0;
    const auto locals = local_group(family, block);
    Integer local_sum = 0;
    for (const auto& local : locals) {
      local_sum += character == CountCharacter::trivial ? 1 : local_sign(family, block, local);
    }
    const auto complement = static_cast<unsigned>(k - k_target);
    Integer local_power;
    mpz_pow_ui(local_power.get_mpz_t(), local_sum.get_mpz_t(), complement);
    result *= factorial(complement) * local_power;

    std::map<OrbitKey, std::vector<Eigenvalue>> sources;
    std::map<OrbitKey, std::vector<Eigenvalue>> targets;
    for (const auto& a : data.source) sources[local_orbit_key(field, family, block, a)].push_back(a);
    for (const auto& a : data.target) targets[local_orbit_key(field, family, block, a)].push_back(a);
    for (const auto& [key, slot_values] : targets) {
      const auto it = sources.find(key);
      const auto available = it == sources.end() ? 0u : it->second.size();
      const auto needed = slot_values.size();
      if (needed > available) return 0;
      const auto orbit_size = local_orbit(field, family, block, key).size();
      const auto stabilizer = static_cast<unsigned long>(locals.size() / orbit_size);
      if (character == CountCharacter::trivial) {
        result *= binomial(static_cast<unsigned>(available), static_cast<unsigned>(needed)) *
                  factorial(static_cast<unsigned>(needed)) *
                  pow_int(stabilizer, static_cast<unsigned>(needed));
        continue;
      }
      Integer stabilizer_sum = 0;
      for (const auto& local : locals) {
        if (apply_local(field, family, block, local, key) == key) stabilizer_sum += local_sign(family, block, local);
      }
      if (stabilizer_sum == 0) return 0;
      int slot_sign = 1;
      for (const auto& value : slot_values) slot_sign *= transporter_sign(field, family, block, key, value);
      std::vector<int> source_signs;
      for (const auto& value : it->second) source_signs.push_back(transporter_sign(field, family, block, key, value));
      Integer stab_power;
      mpz_pow_ui(stab_power.get_mpz_t(), stabilizer_sum.get_mpz_t(), static_cast<unsigned long>(needed));
      result *= stab_power * factorial(static_cast<unsigned>(needed)) * slot_sign *
                elementary_symmetric(source_signs, static_cast<int>(needed));
    }
  }
  return result;
}

Integer m_count(const TorusDatum& torus, const SemisimpleElement& element, const Bipartition& target,
                const SemisimpleElement& restricted) {
  validate_element(torus, element);
  validate_element(target_torus(torus, target), restricted);
  const Integer full = weighted_restriction_count(torus, element, target, restricted, CountCharacter::trivial);
  if (weyl_type(torus.family()) != WeylType::D) return full;
  const Integer signed_part = weighted_restriction_count(torus, element, target, restricted, CountCharacter::sign);
  const Integer total = full + signed_part;
  if (!mpz_even_p(total.get_mpz_t())) throw std::logic_error("type D restriction count is not integral");
  return total / 2;
}

namespace {

struct Arrangement {
  std::vector<Block> blocks;
  std::vector<Eigenvalue> coords;
};

Arrangement arrange_for_target(const TorusDatum& torus, const SemisimpleElement& element, const Bipartition& target) {
  const auto blocks = torus.blocks();
  Arrangement out;
  out.blocks = canonical_blocks(target);
  const auto rest = canonical_blocks(Bipartition{multiset_difference(torus.label.mu(), target.first),
                                                 multiset_difference(torus.label.lambda(), target.second)});
  out.blocks.insert(out.blocks.end(), rest.begin(), rest.end());
  std::vector<bool> used(blocks.size(), false);
  for (const Block& block : out.blocks) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (!used[i] && blocks[i] == block) {
        used[i] = true;
        out.coords.push_back(element.coords[i]);
        break;
      }
    }
  }
  return out;
}

int total_length(const std::vector<Block>& blocks) {
  int n = 0;
  for (const Block& b : blocks) n += b.length;
  return n;
}

}  // namespace

Integer literal_m_count(const TorusDatum& torus, const SemisimpleElement& element, const Bipartition& target,
                        const SemisimpleElement& restricted) {
  validate_element(torus, element);
  const Arrangement arrangement = arrange_for_target(torus, element, target);
  const auto& field = torus.field();
  const Family family = torus.family();
  const auto literal = literal_coordinates(field, family, arrangement.blocks, arrangement.coords);
  const auto wanted = literal_coordinates(field, family, canonical_blocks(target), restricted.coords);
  Integer count = 0;
  for (const auto& w : enumerate_f_centralizer(torus.label, arrangement.blocks)) {
    const auto image = apply_signed_perm(field, w, literal);
    if (std::equal(wanted.begin(), wanted.end(), image.begin())) ++count;
  }
  return count;
}

std::size_t literal_restriction_class_count(const TorusDatum& torus, const SemisimpleElement& element,
                                            const Bipartition& target) {
  validate_element(torus, element);
  const Arrangement arrangement = arrange_for_target(torus, element, target);
  const auto& field = torus.field();
  const Family family = torus.family();
  const auto literal = literal_coordinates(field, family, arrangement.blocks, arrangement.coords);
  const auto prefix_length = static_cast<std::size_t>(target.size());
  std::set<std::vector<Eigenvalue>> restrictions;
  for (const auto& w : enumerate_f_centralizer(torus.label, arrangement.blocks)) {
    const auto image = apply_signed_perm(field, w, literal);
    restrictions.emplace(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(prefix_length));
  }
  const TorusDatum small = target_torus(torus, target);
  const auto group = enumerate_f_centralizer(small.label, canonical_blocks(target));
  std::size_t classes = 0;
  std::set<std::vector<Eigenvalue>> visited;
  for (const auto& point : restrictions) {
    if (visited.count(point)) continue;
    ++classes;
    for (const auto& w : group) visited.insert(apply_signed_perm(field, w, point));
  }
  (void)total_length;
  return classes;
}

std::vector<SemisimpleElement> enumerate_elements(const TorusDatum& torus, const std::vector<Integer>& indices) {
  const auto blocks = torus.blocks();
  std::vector<std::vector<Eigenvalue>> choices(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Integer order = coordinate_group_order(torus.field(), torus.family(), blocks[i]);
    std::set<Eigenvalue> distinct;
    for (const auto& index : indices) {
      distinct.insert(coordinate_from_index(torus.field(), torus.family(), blocks[i], Integer(index % order)));
    }
    choices[i].assign(distinct.begin(), distinct.end());
  }
  std::vector<SemisimpleElement> out{SemisimpleElement{}};
  for (const auto& options : choices) {
    std::vector<SemisimpleElement> next;
    for (const auto& partial : out) {
      for (const auto& value : options) {
        auto extended = partial;
        extended.coords.push_back(value);
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace ggp

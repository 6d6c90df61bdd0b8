#include "ggp/unipotent.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ggp {

namespace {

int parity_sign(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

Integer characters_from_beads(std::vector<int>& beads, const std::vector<int>& cycles, std::size_t index) {
  if (index == cycles.size()) return 1;
  const int hook = cycles[index];
  Integer total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int from = beads[i];
    const int to = from - hook;
    if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
    const auto crossed = std::count_if(beads.begin(), beads.end(), [&](int b) { return b > to && b < from; });
    beads[i] = to;
    const Integer rest = characters_from_beads(beads, cycles, index + 1);
    beads[i] = from;
    total += crossed % 2 == 0 ? rest : Integer(-rest);
  }
  return total;
}

Integer require_integer(const Rational& total, const std::string& what) {
  Rational value = total;
  value.canonicalize();
  if (value.get_den() != 1) throw std::logic_error(what + " is not integral: " + value.get_str());
  return value.get_num();
}

bool canonical_block_order(const Block& a, const Block& b) {
  if (a.kind != b.kind) return a.kind == BlockKind::split;
  return a.length > b.length;
}

std::pair<Bipartition, SemisimpleElement> arrange(std::vector<std::pair<Block, Eigenvalue>> blocks) {
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const auto& a, const auto& b) { return canonical_block_order(a.first, b.first); });
  std::vector<int> mu;
  std::vector<int> lambda;
  SemisimpleElement element;
  for (const auto& [block, coordinate] : blocks) {
    (block.kind == BlockKind::split ? mu : lambda).push_back(block.length);
    element.coords.push_back(coordinate);
  }
  return {Bipartition{Partition(mu), Partition(lambda)}, element};
}

std::vector<std::pair<Block, Eigenvalue>> blocks_of(const DualTorusPair& pair) {
  std::vector<std::pair<Block, Eigenvalue>> out;
  const auto blocks = pair.torus.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) out.emplace_back(blocks[i], pair.element.coords[i]);
  return out;
}

}  // namespace

Integer mn_character(const Partition& shape, const Partition& cycle_type) {
  if (shape.size() != cycle_type.size()) {
    throw std::invalid_argument("character shape " + to_string(shape) + " and cycle type " + to_string(cycle_type) +
                                " have different sizes");
  }
  std::vector<int> beads;
  const int length = shape.length();
  for (int i = 0; i < length; ++i) beads.push_back(shape.parts()[static_cast<std::size_t>(i)] + (length - 1 - i));
  return characters_from_beads(beads, cycle_type.parts(), 0);
}

void VirtualCharacter::add(const Bipartition& data, SplitSign split, const SemisimpleElement& element,
                           const Rational& coefficient) {
  if (coefficient == 0) return;
  const TorusDatum torus{make_label(group_, data.first, data.second, split)};
  DLBasisKey key{data, torus.label.split, canonical_element(torus, element)};
  auto& slot = terms_[key];
  slot += coefficient;
  slot.canonicalize();
  if (slot == 0) terms_.erase(key);
}

DualTorusPair VirtualCharacter::basis_pair(const DLBasisKey& key) const {
  return DualTorusPair{TorusDatum{make_label(group_, key.data.first, key.data.second, key.split)}, key.element};
}

std::vector<OrbitKey> VirtualCharacter::eigenvalue_orbits() const {
  std::set<OrbitKey> keys;
  for (const auto& [key, coefficient] : terms_) {
    for (const auto& a : key.element.coords) keys.insert(eigenvalue_orbit_key(group_.field, group_.family, a));
  }
  return {keys.begin(), keys.end()};
}

Rational inner_product(const VirtualCharacter& first, const VirtualCharacter& second) {
  if (!(first.group() == second.group())) throw std::invalid_argument("inner product across different groups");
  Rational total = 0;
  for (const auto& [a, ca] : first.terms()) {
    for (const auto& [b, cb] : second.terms()) {
      const Integer count = dl_inner_product_same_group(first.basis_pair(a), second.basis_pair(b));
      if (count != 0) total += ca * cb * count;
    }
  }
  total.canonicalize();
  return total;
}

Integer torus_degree(const TorusDatum& torus) {
  Integer order = 1;
  for (const auto& factor : torus_factor_orders(torus)) order *= factor;
  const Integer full = p_prime_order(torus.ambient());
  if (!mpz_divisible_p(full.get_mpz_t(), order.get_mpz_t())) {
    throw std::logic_error("torus order does not divide the group order");
  }
  return Integer(full / order) * parity_sign(group_rank(torus.ambient()) + torus_rank(torus));
}

Rational degree(const VirtualCharacter& character) {
  Rational total = 0;
  for (const auto& [key, coefficient] : character.terms()) {
    total += coefficient * torus_degree(character.basis_pair(key).torus);
  }
  total.canonicalize();
  return total;
}

VirtualCharacter unipotent_expansion(const GroupKind& group, const Partition& shape) {
  if (weyl_type(group.family) != WeylType::A) {
    throw std::invalid_argument("unipotent expansions are provided for GL and U only");
  }
  if (shape.size() != group.rank) {
    throw std::invalid_argument("unipotent label " + to_string(shape) + " does not match " + to_string(group));
  }
  VirtualCharacter out(group);
  for (const auto& cycle_type : partitions_of(group.rank)) {
    const Rational coefficient(mn_character(shape, cycle_type), centralizer_order_a(cycle_type));
    SemisimpleElement identity{std::vector<Eigenvalue>(static_cast<std::size_t>(cycle_type.length()), one())};
    out.add(Bipartition{cycle_type, {}}, SplitSign::none, identity, coefficient);
  }
  if (degree(out) < 0) {
    VirtualCharacter negated(group);
    for (const auto& [key, coefficient] : out.terms()) negated.add(key.data, key.split, key.element, -coefficient);
    return negated;
  }
  return out;
}

std::vector<SeriesFactor> series_factors(const SeriesDatum& series) {
  const GroupKind& group = series.group;
  const Family family = group.family;
  std::vector<SeriesFactor> out;
  std::set<OrbitKey> seen;
  int occupied = 0;
  for (const auto& entry : series.orbits) {
    const OrbitKey key = eigenvalue_orbit_key(group.field, family, normalize(group.field, entry.seed.level, entry.seed.exponent));
    if (!seen.insert(key).second) throw std::invalid_argument("orbit " + describe(key) + " listed twice");
    const FrobeniusOrbit orbit = frobenius_orbit(group.field, eigenvalue_twist(family), key);
    const GroupKind factor = centralizer_factor_group(group.field, family, orbit, entry.shape.size());
    const bool unitary_in_orthogonal = weyl_type(family) != WeylType::A && factor.family == Family::U;
    occupied += entry.shape.size() * (unitary_in_orthogonal ? orbit.size / 2 : orbit.size);
    out.push_back(SeriesFactor{key, orbit, factor, entry.shape});
  }
  if (occupied != group.rank) {
    throw std::invalid_argument("series orbits fill rank " + std::to_string(occupied) + " but " + to_string(group) +
                                " has rank " + std::to_string(group.rank));
  }
  return out;
}

VirtualCharacter series_member(const SeriesDatum& series) {
  const auto factors = series_factors(series);
  const GroupKind& group = series.group;
  const bool orthogonal = weyl_type(group.family) != WeylType::A;
  int sign = parity_sign(group_rank(group));
  std::vector<VirtualCharacter> pieces;
  for (const auto& factor : factors) {
    sign *= parity_sign(group_rank(factor.group));
    pieces.push_back(unipotent_expansion(factor.group, factor.shape));
  }

  VirtualCharacter out(group);
  std::vector<std::pair<Block, Eigenvalue>> blocks;
  std::function<void(std::size_t, Rational)> glue = [&](std::size_t index, Rational coefficient) {
    if (index == factors.size()) {
      auto [data, element] = arrange(blocks);
      const SplitSign split = weyl_type(group.family) == WeylType::D && is_split_d_label(data) ? series.split
                                                                                               : SplitSign::none;
      out.add(data, split, element, coefficient * sign);
      return;
    }
    const SeriesFactor& factor = factors[index];
    const int h = factor.orbit.size;
    const bool unitary_factor = factor.group.family == Family::U;
    for (const auto& [key, c] : pieces[index].terms()) {
      const std::size_t before = blocks.size();
      for (int part : key.data.first.parts()) {
        Block block{BlockKind::split, part * h};
        if (orthogonal && unitary_factor) {
          block = Block{part % 2 == 0 ? BlockKind::split : BlockKind::anisotropic, part * h / 2};
        }
        blocks.emplace_back(block, factor.key);
      }
      glue(index + 1, coefficient * c);
      blocks.resize(before);
    }
  };
  glue(0, Rational(1));
  return out;
}

Integer pair_characters(const VirtualCharacter& big, const VirtualCharacter& small, Route route,
                        const EngineOptions& engine) {
  Rational total = 0;
  for (const auto& [a, ca] : big.terms()) {
    for (const auto& [b, cb] : small.terms()) {
      const DualTorusPair big_pair = big.basis_pair(a);
      const DualTorusPair small_pair = small.basis_pair(b);
      Integer value;
      switch (route) {
        case Route::direct:
          value = reeder_direct(big_pair, small_pair, engine).value;
          break;
        case Route::closed_form:
          value = reeder_closed_form(big_pair, small_pair, engine).value;
          break;
        case Route::factorized:
          value = factorized_pairing(big_pair, small_pair, {}, engine).report.value;
          break;
      }
      total += ca * cb * value;
    }
  }
  return require_integer(total, "character pairing");
}

FreshBlock fresh_block(const GroupKind& group, const Block& block, const std::vector<OrbitKey>& avoid,
                       unsigned long seed, bool require_non_self_inverse) {
  const FieldParam& field = group.field;
  const Family family = group.family;
  const Integer order = coordinate_group_order(field, family, block);
  const auto regular_size = static_cast<std::size_t>(local_group_order(family, block));
  for (Integer step = 0; step < order; ++step) {
    const Integer index = (Integer(seed) + step) % order;
    const Eigenvalue candidate = coordinate_from_index(field, family, block, index);
    if (is_one(candidate)) continue;
    if (local_orbit(field, family, block, candidate).size() != regular_size) continue;
    if (require_non_self_inverse && frobenius_orbit(field, eigenvalue_twist(family), candidate).self_inverse) continue;
    const OrbitKey key = eigenvalue_orbit_key(field, family, candidate);
    if (std::find(avoid.begin(), avoid.end(), key) != avoid.end()) continue;
    return FreshBlock{block, candidate};
  }
  throw std::invalid_argument("no fresh regular eigenvalue for a block of length " + std::to_string(block.length) +
                              " over q=" + std::to_string(field.q()));
}

VirtualCharacter extend_by_block(const VirtualCharacter& character, const GroupKind& enlarged, const FreshBlock& extra,
                                 int extra_sign) {
  VirtualCharacter out(enlarged);
  for (const auto& [key, coefficient] : character.terms()) {
    auto blocks = blocks_of(character.basis_pair(key));
    blocks.emplace_back(extra.block, extra.coordinate);
    auto [data, element] = arrange(std::move(blocks));
    out.add(data, SplitSign::none, element, coefficient * extra_sign);
  }
  return out;
}

namespace {

std::vector<OrbitKey> merged_orbits(const VirtualCharacter& a, const VirtualCharacter& b) {
  auto keys = a.eigenvalue_orbits();
  const auto more = b.eigenvalue_orbits();
  keys.insert(keys.end(), more.begin(), more.end());
  return keys;
}

int regular_block_sign(const GroupKind& group, const Block& block) {
  const TorusDatum single{make_label(make_group(group.family, block.length, group.field.q()),
                                     block.kind == BlockKind::split ? Partition{block.length} : Partition{},
                                     block.kind == BlockKind::split ? Partition{} : Partition{block.length})};
  return parity_sign(group_rank(single.ambient()) + torus_rank(single));
}

}  // namespace

Integer gl_multiplicity(const VirtualCharacter& first, const VirtualCharacter& second, unsigned long tau_seed,
                        const EngineOptions& engine) {
  if (first.group().family != Family::GL || second.group().family != Family::GL ||
      !(first.group().field == second.group().field)) {
    throw std::invalid_argument("general linear multiplicity needs two GL characters over one field");
  }
  const bool first_larger = first.group().rank >= second.group().rank;
  const VirtualCharacter& larger = first_larger ? first : second;
  const VirtualCharacter& smaller = first_larger ? second : first;
  const int padding = larger.group().rank + 1 - smaller.group().rank;
  const GroupKind enlarged = make_group(Family::GL, larger.group().rank + 1, larger.group().field.q());
  const Block block{BlockKind::split, padding};
  const FreshBlock tau = fresh_block(enlarged, block, merged_orbits(first, second), tau_seed, false);
  const VirtualCharacter lifted = extend_by_block(smaller, enlarged, tau, regular_block_sign(enlarged, block));
  return pair_characters(lifted, larger, Route::closed_form, engine);
}

BasicReduction reduce_to_basic(const VirtualCharacter& pi, const VirtualCharacter& sigma, unsigned long tau_seed) {
  const GroupKind& g = pi.group();
  const GroupKind& h = sigma.group();
  if (!(g.field == h.field)) throw std::invalid_argument("pair groups are defined over different fields");
  BasicReduction out{pi, sigma, 1, {}};
  if (g.family == Family::U && h.family == Family::U) {
    out.corank = g.rank - h.rank;
    if (out.corank <= 0) throw std::invalid_argument("the first group must be the larger one");
    if (out.corank % 2 == 0) {
      throw std::invalid_argument("even corank " + std::to_string(out.corank) + " is a Fourier-Jacobi case, out of scope");
    }
    if (out.corank == 1) return out;
    const int l = (out.corank + 1) / 2;
    const GroupKind enlarged = make_group(Family::U, g.rank + 1, g.field.q());
    const Block block{BlockKind::split, 2 * l};
    const FreshBlock tau = fresh_block(enlarged, block, merged_orbits(pi, sigma), tau_seed, true);
    out.big = extend_by_block(sigma, enlarged, tau, parity_sign(l + 1));
    out.small = pi;
    out.trace.push_back("lifted " + to_string(h) + " to " + to_string(enlarged) + " through GL_" + std::to_string(l) +
                        " block with eigenvalue " + describe(tau.coordinate));
    return out;
  }
  if (g.family == Family::SOodd && is_orthogonal_even(h.family)) {
    out.corank = 2 * g.rank + 1 - 2 * h.rank;
    if (out.corank != 1) {
      throw std::invalid_argument("orthogonal reduction from an odd big group is not supported for corank " +
                                  std::to_string(out.corank));
    }
    return out;
  }
  if (is_orthogonal_even(g.family) && h.family == Family::SOodd) {
    out.corank = 2 * g.rank - 2 * h.rank - 1;
    const int l = g.rank - h.rank;
    if (l < 2) throw std::invalid_argument("orthogonal pair with an even big group of corank 1 is not supported");
    const GroupKind enlarged = make_group(Family::SOodd, g.rank, g.field.q());
    const Block block{BlockKind::split, l};
    const FreshBlock tau = fresh_block(enlarged, block, merged_orbits(pi, sigma), tau_seed, true);
    out.big = extend_by_block(sigma, enlarged, tau, parity_sign(l + 1));
    out.small = pi;
    out.trace.push_back("lifted " + to_string(h) + " to " + to_string(enlarged) + " through GL_" + std::to_string(l) +
                        " block with eigenvalue " + describe(tau.coordinate));
    return out;
  }
  throw std::invalid_argument("unsupported pair " + to_string(g) + " over " + to_string(h));
}

Integer factor_multiplicity(const VirtualCharacter& first, const VirtualCharacter& second,
                            const MultiplicityOptions& options) {
  const GroupKind& a = first.group();
  const GroupKind& b = second.group();
  if (a.family != b.family || !(a.field == b.field)) {
    throw std::invalid_argument("factor multiplicity needs groups of one family over one field");
  }
  if (a.family == Family::GL) return gl_multiplicity(first, second, options.tau_seed, options.engine);
  if (a.family != Family::U) throw std::invalid_argument("factor groups are general linear or unitary");

  VirtualCharacter larger = a.rank >= b.rank ? first : second;
  VirtualCharacter smaller = a.rank >= b.rank ? second : first;
  if ((larger.group().rank - smaller.group().rank) % 2 == 0) {
    const GroupKind enlarged = make_group(Family::U, smaller.group().rank + 1, a.field.q());
    const Block block{BlockKind::split, 1};
    const FreshBlock twist = fresh_block(enlarged, block, merged_orbits(first, second), options.tau_seed, false);
    smaller = extend_by_block(smaller, enlarged, twist, regular_block_sign(enlarged, block));
    if (smaller.group().rank > larger.group().rank) std::swap(smaller, larger);
  }
  const BasicReduction basic = reduce_to_basic(larger, smaller, options.tau_seed);
  const Integer raw = pair_characters(basic.big, basic.small, Route::closed_form, options.engine);
  return abs(raw);
}

MultiplicityReport ggp_multiplicity(const SeriesDatum& pi, const SeriesDatum& sigma,
                                    const MultiplicityOptions& options) {
  const VirtualCharacter big = series_member(pi);
  const VirtualCharacter small = series_member(sigma);
  MultiplicityReport report;
  if (pi.group.family == Family::GL) {
    report.lhs = gl_multiplicity(big, small, options.tau_seed, options.engine);
  } else {
    const BasicReduction basic = reduce_to_basic(big, small, options.tau_seed);
    report.trace = basic.trace;
    report.lhs = pair_characters(basic.big, basic.small, Route::closed_form, options.engine);
  }

  const auto pi_factors = series_factors(pi);
  const auto sigma_factors = series_factors(sigma);
  std::map<OrbitKey, std::pair<const SeriesFactor*, const SeriesFactor*>> by_orbit;
  for (const auto& factor : pi_factors) by_orbit[factor.key].first = &factor;
  for (const auto& factor : sigma_factors) by_orbit[factor.key].second = &factor;

  report.rhs = 1;
  for (const auto& [key, sides] : by_orbit) {
    const SeriesFactor& any = sides.first ? *sides.first : *sides.second;
    const GroupKind empty_group = make_group(any.group.family, 0, any.group.field.q());
    MultiplicityFactor factor;
    factor.key = key;
    factor.big_group = sides.first ? sides.first->group : empty_group;
    factor.small_group = sides.second ? sides.second->group : empty_group;
    factor.big_shape = sides.first ? sides.first->shape : Partition{};
    factor.small_shape = sides.second ? sides.second->shape : Partition{};
    factor.value = factor_multiplicity(unipotent_expansion(factor.big_group, factor.big_shape),
                                       unipotent_expansion(factor.small_group, factor.small_shape), options);
    report.rhs *= factor.value;
    report.factors.push_back(std::move(factor));
  }
  report.equal = report.lhs == report.rhs;
  report.nonnegative = report.lhs >= 0;
  return report;
}

}  // namespace ggp

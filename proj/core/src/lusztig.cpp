#include "ggp/lusztig.hpp"

#include <algorithm>
#include <set>

namespace ggp {

namespace {

int parity_sign(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

bool ambient_is_orthogonal(Family family) { return weyl_type(family) != WeylType::A; }

std::uint64_t field_power(const FieldParam& field, int exponent) {
  const Integer value = pow_int(field.q(), static_cast<unsigned>(exponent));
  if (!value.fits_ulong_p()) throw std::overflow_error("factor field size exceeds 64 bits");
  return value.get_ui();
}

struct FactorShape {
  Family family;
  int field_exponent;
};

FactorShape factor_shape(Family ambient, const FrobeniusOrbit& orbit) {
  const int h = orbit.size;
  switch (ambient) {
    case Family::GL:
      return {Family::GL, h};
    case Family::U:
      return {h % 2 == 1 ? Family::U : Family::GL, h};
    default:
      if (orbit.contains_one || orbit.contains_minus_one) {
        throw HypothesisError("eigenvalue orbit [" + std::string(orbit.contains_one ? "1" : "-1") +
                              "] has an orthogonal or symplectic centralizer factor, excluded here");
      }
      if (orbit.self_inverse) return {Family::U, h / 2};
      return {Family::GL, h};
  }
}

int factor_torus_rank(Family family, const Partition& parts) {
  return family == Family::U ? parts.count_even_parts() : parts.length();
}

OrbitEntry entry_or_empty(const OrbitDecomposition& decomposition, const OrbitKey& key, const OrbitEntry& like) {
  const auto it = decomposition.find(key);
  if (it != decomposition.end()) return it->second;
  OrbitEntry empty;
  empty.orbit_size = like.orbit_size;
  empty.self_inverse = like.self_inverse;
  return empty;
}

}  // namespace

GroupKind centralizer_factor_group(const FieldParam& field, Family ambient, const FrobeniusOrbit& orbit, int nu) {
  const FactorShape shape = factor_shape(ambient, orbit);
  return make_group(shape.family, nu, field_power(field, shape.field_exponent));
}

Partition scaled_factor_partition(Family ambient, const OrbitEntry& entry) {
  const int h = entry.orbit_size;
  if (!ambient_is_orthogonal(ambient)) return scale_div(entry.mu, h);
  if (!entry.self_inverse) {
    if (!entry.lambda.empty()) throw std::logic_error("anisotropic block carries a non-self-inverse orbit");
    return scale_div(entry.mu, h);
  }
  return multiset_union(scale_div(entry.mu, h / 2), scale_div(entry.lambda, h / 2));
}

std::vector<CentralizerFactor> centralizer_decomposition(const DualTorusPair& pair) {
  const FieldParam& field = pair.torus.field();
  const Family ambient = pair.torus.family();
  std::vector<CentralizerFactor> out;
  for (const auto& [key, entry] : decompose_by_orbit(pair.torus, pair.element)) {
    const FrobeniusOrbit orbit = frobenius_orbit(field, eigenvalue_twist(ambient), key);
    const int nu = scaled_factor_partition(ambient, entry).size();
    if (nu != entry.nu) throw std::logic_error("eigenvalue multiplicity disagrees with the block decomposition");
    out.push_back(CentralizerFactor{key, orbit, centralizer_factor_group(field, ambient, orbit, nu), nu});
  }
  return out;
}

std::vector<OrbitKey> orbit_union(const DualTorusPair& big, const DualTorusPair& small) {
  std::set<OrbitKey> keys;
  for (const auto& [key, entry] : decompose_by_orbit(big.torus, big.element)) keys.insert(key);
  for (const auto& [key, entry] : decompose_by_orbit(small.torus, small.element)) keys.insert(key);
  return {keys.begin(), keys.end()};
}

std::vector<OrbitKey> shared_orbits(const DualTorusPair& big, const DualTorusPair& small) {
  const auto small_orbits = decompose_by_orbit(small.torus, small.element);
  std::vector<OrbitKey> out;
  for (const auto& [key, entry] : decompose_by_orbit(big.torus, big.element)) {
    if (small_orbits.count(key)) out.push_back(key);
  }
  return out;
}

std::vector<Partition> padding_candidates(Family factor_family, int size, int preferred_parity) {
  std::vector<Partition> all = partitions_of(size);
  std::stable_sort(all.begin(), all.end(), [](const Partition& a, const Partition& b) {
    return a.length() < b.length();
  });
  std::stable_partition(all.begin(), all.end(), [&](const Partition& candidate) {
    return factor_torus_rank(factor_family, candidate) % 2 == preferred_parity;
  });
  return all;
}

PrimedDatum build_primed_data(const DualTorusPair& big, const DualTorusPair& small, const OrbitKey& key,
                              const PrimedOptions& options) {
  const auto big_orbits = decompose_by_orbit(big.torus, big.element);
  const auto small_orbits = decompose_by_orbit(small.torus, small.element);
  const auto big_it = big_orbits.find(key);
  const auto small_it = small_orbits.find(key);
  if (big_it == big_orbits.end() && small_it == small_orbits.end()) {
    throw std::invalid_argument("orbit " + describe(key) + " occurs in neither element");
  }
  const OrbitEntry& like = big_it != big_orbits.end() ? big_it->second : small_it->second;
  const OrbitEntry big_entry = entry_or_empty(big_orbits, key, like);
  const OrbitEntry small_entry = entry_or_empty(small_orbits, key, like);

  const Family ambient = big.torus.family();
  const FieldParam& field = big.torus.field();
  const FrobeniusOrbit orbit = frobenius_orbit(field, eigenvalue_twist(ambient), key);
  const FactorShape shape = factor_shape(ambient, orbit);
  const std::uint64_t factor_q = field_power(field, shape.field_exponent);

  const Partition big_parts = scaled_factor_partition(ambient, big_entry);
  const Partition small_parts = scaled_factor_partition(ambient, small_entry);

  PrimedDatum datum;
  datum.key = key;
  datum.orbit_size = orbit.size;
  datum.nu_big = big_parts.size();
  datum.nu_small = small_parts.size();
  datum.big_side_larger = datum.nu_big >= datum.nu_small;
  const Partition& larger = datum.big_side_larger ? big_parts : small_parts;
  const Partition& smaller = datum.big_side_larger ? small_parts : big_parts;
  const int rank = larger.size();
  datum.small_group = make_group(shape.family, rank, factor_q);
  datum.big_group = make_group(shape.family, rank + 1, factor_q);

  const int padding_size = rank + 1 - smaller.size();
  const int preferred_parity = (orbit.size + 1) % 2;
  const auto candidates = padding_candidates(shape.family, padding_size, preferred_parity);
  std::vector<Partition> matched;
  for (const auto& candidate : candidates) {
    if (factor_torus_rank(shape.family, candidate) % 2 == preferred_parity) matched.push_back(candidate);
  }
  const auto variant = static_cast<std::size_t>(std::max(options.padding_variant, 0));
  datum.padding_parity_matched = !matched.empty();
  datum.padding = matched.empty() ? candidates[variant % candidates.size()] : matched[variant % matched.size()];
  datum.eps_a = parity_sign(factor_torus_rank(shape.family, datum.padding));

  const FClassLabel big_label = make_label(datum.big_group, multiset_union(smaller, datum.padding));
  const FieldParam& factor_field = datum.big_group.field;
  std::map<int, int> from_smaller = smaller.multiplicities();
  SemisimpleElement big_element;
  unsigned long padding_index = 0;
  for (const Block& block : canonical_blocks(big_label.data)) {
    auto& remaining = from_smaller[block.length];
    if (remaining > 0) {
      --remaining;
      big_element.coords.push_back(one());
      continue;
    }
    const Integer order = coordinate_group_order(factor_field, shape.family, block);
    const Integer index = 1 + Integer(options.theta_seed + padding_index++ - 1) % Integer(order - 1);
    big_element.coords.push_back(coordinate_from_index(factor_field, shape.family, block, index));
  }
  datum.big = DualTorusPair{TorusDatum{big_label}, big_element};

  const FClassLabel small_label = make_label(datum.small_group, larger);
  datum.small = DualTorusPair{TorusDatum{small_label},
                              SemisimpleElement{std::vector<Eigenvalue>(canonical_blocks(small_label.data).size(), one())}};
  return datum;
}

SignLedger signs(const DualTorusPair& big, const DualTorusPair& small, const PrimedOptions& options) {
  const PairKind kind = classify_pair(big, small);
  const Family ambient = big.torus.family();
  const FieldParam& field = big.torus.field();
  const auto big_orbits = decompose_by_orbit(big.torus, big.element);
  const auto small_orbits = decompose_by_orbit(small.torus, small.element);

  SignLedger ledger;
  long linear_factors = 0;
  long unitary_rank_sum = 0;
  for (const auto& key : orbit_union(big, small)) {
    const PrimedDatum datum = build_primed_data(big, small, key, options);
    ledger.eps_a[key] = datum.eps_a;
    const FrobeniusOrbit orbit = frobenius_orbit(field, eigenvalue_twist(ambient), key);
    if (factor_shape(ambient, orbit).family == Family::GL) {
      ++linear_factors;
    } else {
      unitary_rank_sum += std::max(datum.nu_big, datum.nu_small);
    }
  }
  for (const auto& key : shared_orbits(big, small)) {
    const int h = frobenius_orbit(field, eigenvalue_twist(ambient), key).size;
    if (h % 2 == 0) ++ledger.shared_even_orbits;
    const int nu_t = big_orbits.at(key).nu;
    const int nu_s = small_orbits.at(key).nu;
    if (nu_t >= nu_s && (nu_t - nu_s) % 2 == 1) ++ledger.shared_parity_shifts;
  }
  const int rank_sum = group_rank(big.torus.ambient()) + group_rank(small.torus.ambient());
  switch (kind) {
    case PairKind::GL:
      ledger.eps_ts = parity_sign(1 + linear_factors);
      ledger.eps_ts_shared_reading = parity_sign(ledger.shared_even_orbits + ledger.shared_parity_shifts);
      break;
    case PairKind::U:
      ledger.eps_ts = parity_sign(small.torus.ambient().rank + linear_factors + unitary_rank_sum);
      ledger.eps_ts_shared_reading = parity_sign(ledger.shared_even_orbits + ledger.shared_parity_shifts);
      break;
    case PairKind::SO:
      ledger.eps_ts = parity_sign(rank_sum + linear_factors + unitary_rank_sum);
      ledger.eps_ts_shared_reading = parity_sign(ledger.shared_even_orbits + rank_sum);
      break;
  }
  return ledger;
}

FactorizedReport factorized_pairing(const DualTorusPair& big, const DualTorusPair& small,
                                    const PrimedOptions& options, const EngineOptions& engine) {
  classify_pair(big, small);
  FactorizedReport out;
  out.ledger = signs(big, small, options);
  const auto shared = shared_orbits(big, small);
  Integer value = out.ledger.eps_ts;
  Integer shared_value = out.ledger.eps_ts_shared_reading;
  for (const auto& key : orbit_union(big, small)) {
    OrbitFactor factor{build_primed_data(big, small, key, options), 0};
    factor.base_pairing = reeder_direct(factor.datum.big, factor.datum.small, engine).value;
    value *= factor.datum.eps_a * factor.base_pairing;
    if (std::find(shared.begin(), shared.end(), key) != shared.end()) {
      shared_value *= parity_sign(factor.datum.orbit_size + 1) * factor.base_pairing;
    }
    out.report.terms.push_back(PairingTerm{"orbit " + describe(key), Rational(factor.datum.eps_a * factor.base_pairing)});
    out.factors.push_back(std::move(factor));
  }
  out.report.route = Route::factorized;
  out.report.global_sign = out.ledger.eps_ts;
  out.report.value = value;
  out.shared_reading_value = shared_value;
  return out;
}

}  // namespace ggp

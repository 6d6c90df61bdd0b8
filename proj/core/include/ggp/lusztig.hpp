#pragma once

#include "ggp/reeder.hpp"

#include <map>
#include <vector>

namespace ggp {

struct CentralizerFactor {
  OrbitKey key;
  FrobeniusOrbit orbit;
  GroupKind group;
  int nu = 0;
};

// The factor group attached to an eigenvalue orbit with multiplicity nu inside
// an ambient group of the given family.
GroupKind centralizer_factor_group(const FieldParam& field, Family ambient, const FrobeniusOrbit& orbit, int nu);
std::vector<CentralizerFactor> centralizer_decomposition(const DualTorusPair& pair);

// The torus partition of a centralizer factor: orbit blocks rescaled to the
// factor's field.
Partition scaled_factor_partition(Family ambient, const OrbitEntry& entry);

struct PrimedOptions {
  int padding_variant = 0;
  unsigned long theta_seed = 1;
};

struct PrimedDatum {
  OrbitKey key;
  int orbit_size = 1;
  bool big_side_larger = true;
  int nu_big = 0;
  int nu_small = 0;
  GroupKind big_group;
  GroupKind small_group;
  DualTorusPair big;
  DualTorusPair small;
  Partition padding;
  int eps_a = 1;
  bool padding_parity_matched = true;
};

std::vector<OrbitKey> orbit_union(const DualTorusPair& big, const DualTorusPair& small);
std::vector<OrbitKey> shared_orbits(const DualTorusPair& big, const DualTorusPair& small);

PrimedDatum build_primed_data(const DualTorusPair& big, const DualTorusPair& small, const OrbitKey& key,
                              const PrimedOptions& options = {});

// Candidate padding partitions of a given size for a linear or unitary factor,
// those of the preferred rank parity first.
std::vector<Partition> padding_candidates(Family factor_family, int size, int preferred_parity);

struct SignLedger {
  int eps_ts = 1;
  int eps_ts_shared_reading = 1;
  std::map<OrbitKey, int> eps_a;
  int shared_even_orbits = 0;
  int shared_parity_shifts = 0;
};

SignLedger signs(const DualTorusPair& big, const DualTorusPair& small, const PrimedOptions& options = {});

struct OrbitFactor {
  PrimedDatum datum;
  Integer base_pairing;
};

struct FactorizedReport {
  PairingReport report;
  SignLedger ledger;
  std::vector<OrbitFactor> factors;
  // The product over shared orbits only, signed by the shared-orbit count.
  Integer shared_reading_value;
};

FactorizedReport factorized_pairing(const DualTorusPair& big, const DualTorusPair& small,
                                    const PrimedOptions& options = {}, const EngineOptions& engine = {});

}  // namespace ggp

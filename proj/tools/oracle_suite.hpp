#pragma once

#include "ggp/unipotent.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ggp::oracle {

struct CheckTally {
  std::string family;
  long passed = 0;
  long failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& context);
  bool ok() const noexcept { return failed == 0 && passed > 0; }
};

struct Bounds {
  int max_rank = 3;
  std::vector<std::uint64_t> fields{3};
};

CheckTally centralizer_orders(Family family, int max_rank, std::uint64_t q = 3);
CheckTally class_equation(Family family, int max_rank, std::uint64_t q = 3);
CheckTally restriction_counts(Family family, int max_rank, std::uint64_t q = 3);
CheckTally restriction_class_bijection(Family family, int max_rank, std::uint64_t q = 3);
CheckTally count_factorization(Family family, int max_rank, std::uint64_t q = 3);
CheckTally unipotent_orthonormality(Family family, int max_rank, std::uint64_t q);
CheckTally route_agreement(Family big_family, Family small_family, int small_rank, std::uint64_t q,
                           int samples_per_torus_pair, std::uint64_t seed);

std::vector<CheckTally> run_all(const Bounds& bounds);

// Torus pairs and element sampling shared by the acceptance suite.
struct PairFamily {
  Family big;
  Family small;
  int big_rank;
  int small_rank;
};

std::vector<PairFamily> pair_families(PairKind kind, int small_rank);

class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed) : engine_(seed) {}
  // Half of the coordinates come from a small shared pool of low indices so
  // that eigenvalue orbits collide between the two sides.
  SemisimpleElement sample(const TorusDatum& torus, bool avoid_central);

 private:
  std::mt19937_64 engine_;
};

std::vector<DualTorusPair> regular_elements(const TorusDatum& torus, int limit);
bool is_regular(const DualTorusPair& pair);

std::vector<SeriesDatum> enumerate_series(const GroupKind& group, int max_level, int max_exponents);

}  // namespace ggp::oracle

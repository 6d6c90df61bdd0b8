#pragma once

#include "ggp/tori.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ggp {

struct DualTorusPair {
  TorusDatum torus;
  SemisimpleElement element;
};

enum class PairKind { GL, U, SO };
enum class Route { direct, closed_form, factorized };

// How the anisotropic part of a restricted torus enters the orthogonal sign.
enum class AnisotropicSignRule { part_count, part_sum };

class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EngineOptions {
  int jobs = 1;
  AnisotropicSignRule anisotropic_sign = AnisotropicSignRule::part_count;
};

struct PairingTerm {
  std::string label;
  Rational value;
};

struct PairingReport {
  Integer value;
  Route route = Route::direct;
  int global_sign = 1;
  std::vector<PairingTerm> terms;
};

std::string route_name(Route route);
std::string pair_kind_name(PairKind kind);

// Checks the group shapes (big rank one more than small for GL and U, SO_{2n+1}
// over SO_{2n}) and, for orthogonal pairs, that neither element has eigenvalue 1 or -1.
PairKind classify_pair(const DualTorusPair& big, const DualTorusPair& small);

Integer dl_inner_product_same_group(const DualTorusPair& first, const DualTorusPair& second);

PairingReport reeder_direct(const DualTorusPair& big, const DualTorusPair& small, const EngineOptions& options = {});
PairingReport reeder_closed_form(const DualTorusPair& big, const DualTorusPair& small,
                                 const EngineOptions& options = {});

// Rank parities entering the direct and closed routes, exposed for the
// factorized route and for tests.
int pair_global_sign(const DualTorusPair& big, const DualTorusPair& small);

}  // namespace ggp

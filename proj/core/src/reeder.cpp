#include "ggp/reeder.hpp"

#include "ggp/parallel.hpp"

#include <functional>
#include <set>

namespace ggp {

std::string route_name(Route route) {
  switch (route) {
    case Route::direct:
      return "direct";
    case Route::closed_form:
      return "closed_form";
    case Route::factorized:
      return "factorized";
  }
  return "unknown";
}

std::string pair_kind_name(PairKind kind) {
  switch (kind) {
    case PairKind::GL:
      return "GL";
    case PairKind::U:
      return "U";
    case PairKind::SO:
      return "SO";
  }
  return "unknown";
}

namespace {

void reject_central_eigenvalues(const DualTorusPair& side, const std::string& role) {
  const FieldParam& field = side.torus.field();
  for (const auto& a : side.element.coords) {
    if (is_one(a) || is_minus_one(field, a)) {
      throw HypothesisError(role + " element has eigenvalue orbit [" + std::string(is_one(a) ? "1" : "-1") +
                            "], excluded for orthogonal pairs");
    }
  }
}

int parity_sign(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

int anisotropic_exponent(const Partition& lambda, AnisotropicSignRule rule) {
  return rule == AnisotropicSignRule::part_count ? lambda.length() : lambda.size();
}

Integer require_integer(const Rational& total, const std::string& what) {
  Rational value = total;
  value.canonicalize();
  if (value.get_den() != 1) throw std::logic_error(what + " is not integral: " + value.get_str());
  return value.get_num();
}

// Sum over t'' of M_T(t'') * M_S(t'') for one restriction shape.
Integer restriction_overlap(const DualTorusPair& big, const DualTorusPair& small, const Bipartition& target) {
  const TorusDatum middle = target_torus(big.torus, target);
  std::set<SemisimpleElement> visited;
  Integer total = 0;
  for (const auto& restriction : restriction_classes(big.torus, big.element, target)) {
    for (const auto& point : block_orbit(middle, restriction.representative)) {
      if (!visited.insert(point).second) continue;
      const Integer small_count = m_count(small.torus, small.element, target, point);
      if (small_count == 0) continue;
      total += m_count(big.torus, big.element, target, point) * small_count;
    }
  }
  return total;
}

}  // namespace

PairKind classify_pair(const DualTorusPair& big, const DualTorusPair& small) {
  validate_element(big.torus, big.element);
  validate_element(small.torus, small.element);
  const GroupKind& g = big.torus.ambient();
  const GroupKind& h = small.torus.ambient();
  if (!(g.field == h.field)) throw std::invalid_argument("pair groups are defined over different fields");
  if (g.family == Family::GL && h.family == Family::GL && g.rank == h.rank + 1) return PairKind::GL;
  if (g.family == Family::U && h.family == Family::U && g.rank == h.rank + 1) return PairKind::U;
  if (g.family == Family::SOodd && is_orthogonal_even(h.family) && g.rank == h.rank) {
    reject_central_eigenvalues(big, "big");
    reject_central_eigenvalues(small, "small");
    return PairKind::SO;
  }
  throw std::invalid_argument("unsupported pair " + to_string(g) + " over " + to_string(h));
}

Integer dl_inner_product_same_group(const DualTorusPair& first, const DualTorusPair& second) {
  validate_element(first.torus, first.element);
  validate_element(second.torus, second.element);
  if (!(first.torus.label == second.torus.label)) return 0;
  return m_count(first.torus, first.element, first.torus.label.data, second.element);
}

int pair_global_sign(const DualTorusPair& big, const DualTorusPair& small) {
  const PairKind kind = classify_pair(big, small);
  const int rank_t = torus_rank(big.torus);
  const int rank_s = torus_rank(small.torus);
  switch (kind) {
    case PairKind::GL:
      return parity_sign(1 + rank_t + rank_s);
    case PairKind::U:
      return parity_sign(small.torus.ambient().rank + rank_t + rank_s);
    case PairKind::SO:
      return parity_sign(rank_t + rank_s + group_rank(big.torus.ambient()) + group_rank(small.torus.ambient()));
  }
  return 1;
}

PairingReport reeder_direct(const DualTorusPair& big, const DualTorusPair& small, const EngineOptions& options) {
  const PairKind kind = classify_pair(big, small);
  const int global = pair_global_sign(big, small);
  const FClassLabel& t_label = big.torus.label;
  const FClassLabel& s_label = small.torus.label;

  std::vector<Bipartition> shapes;
  for (const auto& mu : common_sub_partitions(t_label.mu(), s_label.mu())) {
    for (const auto& lambda : common_sub_partitions(t_label.lambda(), s_label.lambda())) {
      shapes.push_back(Bipartition{mu, lambda});
    }
  }
  const Integer small_centralizer = f_centralizer_order(s_label);

  const auto terms = parallel_map<Rational>(shapes.size(), options.jobs, [&](std::size_t index) {
    const Bipartition& shape = shapes[index];
    const Bipartition complement{multiset_difference(t_label.mu(), shape.first),
                                 multiset_difference(t_label.lambda(), shape.second)};
    Integer weight = c_coeff(s_label.mu(), shape.first) * c_coeff(s_label.lambda(), shape.second);
    int sign = global;
    Integer complement_order;
    if (kind == PairKind::SO) {
      sign *= parity_sign(anisotropic_exponent(shape.second, options.anisotropic_sign));
      complement_order = centralizer_order_b(complement);
    } else {
      if (kind == PairKind::U) sign *= parity_sign(shape.first.size());
      complement_order = centralizer_order_a(complement.first);
    }
    const Integer overlap = restriction_overlap(big, small, shape);
    Rational term(weight * overlap * sign, complement_order * small_centralizer);
    term.canonicalize();
    return term;
  });

  PairingReport report;
  report.route = Route::direct;
  report.global_sign = global;
  Rational total = 0;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    total += terms[i];
    report.terms.push_back(PairingTerm{"iota " + to_string(shapes[i]), terms[i]});
  }
  report.value = require_integer(total, "direct pairing");
  return report;
}

namespace {

Integer scaled_stabilizer_product(const Partition& parts, const std::function<Integer(int)>& stabilizer) {
  Integer result = 1;
  for (const auto& [part, multiplicity] : parts.multiplicities()) {
    Integer base = stabilizer(part);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(multiplicity));
    result *= factorial(static_cast<unsigned>(multiplicity)) * power;
  }
  return result;
}

Integer linear_orbit_factor(const OrbitEntry& t_side, const OrbitEntry& s_side, bool alternating) {
  Integer total = 0;
  const int h = t_side.orbit_size;
  for (const auto& shape : common_sub_partitions(t_side.mu, s_side.mu)) {
    const Integer term = c_coeff(t_side.mu, shape) * c_coeff(s_side.mu, shape) *
                         centralizer_order_a(scale_div(shape, h));
    total += alternating && shape.size() % 2 == 1 ? Integer(-term) : term;
  }
  return total;
}

Integer orthogonal_orbit_factor(const OrbitEntry& t_side, const OrbitEntry& s_side, AnisotropicSignRule rule) {
  const int h = t_side.orbit_size;
  const bool self_inverse = t_side.self_inverse;
  auto split_stabilizer = [&](int part) {
    const int numerator = self_inverse ? 2 * part : part;
    if (numerator % h != 0) throw std::logic_error("orbit size does not divide a split block");
    return Integer(numerator / h);
  };
  auto anisotropic_stabilizer = [&](int part) {
    if ((2 * part) % h != 0) throw std::logic_error("orbit size does not divide an anisotropic block");
    return Integer(2 * part / h);
  };
  Integer total = 0;
  for (const auto& mu : common_sub_partitions(t_side.mu, s_side.mu)) {
    const Integer mu_weight = c_coeff(t_side.mu, mu) * c_coeff(s_side.mu, mu) *
                              scaled_stabilizer_product(mu, split_stabilizer);
    for (const auto& lambda : common_sub_partitions(t_side.lambda, s_side.lambda)) {
      const Integer term = mu_weight * c_coeff(t_side.lambda, lambda) * c_coeff(s_side.lambda, lambda) *
                           scaled_stabilizer_product(lambda, anisotropic_stabilizer);
      total += parity_sign(anisotropic_exponent(lambda, rule)) == 1 ? term : Integer(-term);
    }
  }
  return total;
}

}  // namespace

PairingReport reeder_closed_form(const DualTorusPair& big, const DualTorusPair& small,
                                 const EngineOptions& options) {
  const PairKind kind = classify_pair(big, small);
  PairingReport report;
  report.route = Route::closed_form;
  report.global_sign = pair_global_sign(big, small);
  const auto t_orbits = decompose_by_orbit(big.torus, big.element);
  const auto s_orbits = decompose_by_orbit(small.torus, small.element);

  Integer value = report.global_sign;
  for (const auto& [key, t_entry] : t_orbits) {
    const auto it = s_orbits.find(key);
    if (it == s_orbits.end()) continue;
    const Integer factor = kind == PairKind::SO
                               ? orthogonal_orbit_factor(t_entry, it->second, options.anisotropic_sign)
                               : linear_orbit_factor(t_entry, it->second, kind == PairKind::U);
    report.terms.push_back(PairingTerm{"orbit " + describe(key), Rational(factor)});
    value *= factor;
  }
  report.value = value;
  return report;
}

}  // namespace ggp

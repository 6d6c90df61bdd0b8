#include "oracle_suite.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace ggp::oracle {

void CheckTally::record(bool ok, const std::string& context) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (first_failure.empty()) first_failure = context;
}

namespace {

std::vector<Bipartition> sub_bipartitions(const Bipartition& data) {
  std::vector<Bipartition> out;
  for (const auto& mu : sub_partitions(data.first)) {
    for (const auto& lambda : sub_partitions(data.second)) out.push_back(Bipartition{mu, lambda});
  }
  return out;
}

const std::vector<Integer>& small_alphabet() {
  static const std::vector<Integer> alphabet{0, 1, 2, 5};
  return alphabet;
}

}  // namespace

CheckTally centralizer_orders(Family family, int max_rank, std::uint64_t q) {
  CheckTally tally{"centralizer orders " + family_name(family), 0, 0, {}};
  for (int n = 1; n <= max_rank; ++n) {
    for (const auto& label : f_classes(make_group(family, n, q))) {
      const auto formula = f_centralizer_order(label);
      const auto enumerated = enumerate_f_centralizer(label).size();
      tally.record(formula == Integer(static_cast<unsigned long>(enumerated)),
                   to_string(label) + ": formula " + to_string(formula) + ", enumeration " +
                       std::to_string(enumerated));
    }
  }
  return tally;
}

CheckTally class_equation(Family family, int max_rank, std::uint64_t q) {
  CheckTally tally{"class equation " + family_name(family), 0, 0, {}};
  for (int n = 1; n <= max_rank; ++n) {
    const GroupKind kind = make_group(family, n, q);
    const Integer order = weyl_order(kind);
    Integer total = 0;
    for (const auto& label : f_classes(kind)) total += order / f_centralizer_order(label);
    tally.record(total == order, to_string(kind) + ": class sizes sum to " + to_string(total));
  }
  return tally;
}

CheckTally restriction_counts(Family family, int max_rank, std::uint64_t q) {
  CheckTally tally{"restriction counts " + family_name(family), 0, 0, {}};
  for (int n = 1; n <= max_rank; ++n) {
    for (const auto& label : f_classes(make_group(family, n, q))) {
      const TorusDatum torus{label};
      for (const auto& element : enumerate_elements(torus, small_alphabet())) {
        for (const auto& target : sub_bipartitions(label.data)) {
          const TorusDatum middle = target_torus(torus, target);
          for (const auto& restriction : restriction_classes(torus, element, target)) {
            for (const auto& point : block_orbit(middle, restriction.representative)) {
              const Integer formula = m_count(torus, element, target, point);
              const Integer literal = literal_m_count(torus, element, target, point);
              tally.record(formula == literal, to_string(label) + " onto " + to_string(target) + ": formula " +
                                                   to_string(formula) + ", enumeration " + to_string(literal));
            }
          }
        }
      }
    }
  }
  return tally;
}

CheckTally restriction_class_bijection(Family family, int max_rank, std::uint64_t q) {
  CheckTally tally{"restriction class bijection " + family_name(family), 0, 0, {}};
  for (int n = 1; n <= max_rank; ++n) {
    for (const auto& label : f_classes(make_group(family, n, q))) {
      const TorusDatum torus{label};
      for (const auto& element : enumerate_elements(torus, small_alphabet())) {
        for (const auto& target : sub_bipartitions(label.data)) {
          const auto constructed = restriction_classes(torus, element, target).size();
          const auto enumerated = literal_restriction_class_count(torus, element, target);
          tally.record(constructed == enumerated, to_string(label) + " onto " + to_string(target) + ": " +
                                                      std::to_string(constructed) + " labels, " +
                                                      std::to_string(enumerated) + " classes");
        }
      }
    }
  }
  return tally;
}

CheckTally count_factorization(Family family, int max_rank, std::uint64_t q) {
  CheckTally tally{"centralizer factorization " + family_name(family), 0, 0, {}};
  const bool type_a = weyl_type(family) == WeylType::A;
  for (int n = 1; n <= max_rank; ++n) {
    for (const auto& label : f_classes(make_group(family, n, q))) {
      for (const auto& target : sub_bipartitions(label.data)) {
        const Bipartition rest{multiset_difference(label.mu(), target.first),
                               multiset_difference(label.lambda(), target.second)};
        const Integer whole = type_a ? centralizer_order_a(label.mu()) : centralizer_order_b(label.data);
        const Integer split = type_a ? Integer(c_coeff(label.mu(), target.first) * centralizer_order_a(target.first) *
                                                   centralizer_order_a(rest.first))
                                     : Integer(c_coeff(label.mu(), target.first) * c_coeff(label.lambda(), target.second) *
                                           centralizer_order_b(target) * centralizer_order_b(rest));
        tally.record(whole == split, to_string(label) + " split along " + to_string(target));
      }
    }
  }
  return tally;
}

CheckTally unipotent_orthonormality(Family family, int max_rank, std::uint64_t q) {
  CheckTally tally{"unipotent orthonormality " + family_name(family) + " q=" + std::to_string(q), 0, 0, {}};
  for (int n = 1; n <= max_rank; ++n) {
    const GroupKind group = make_group(family, n, q);
    const auto shapes = partitions_of(n);
    std::vector<VirtualCharacter> characters;
    for (const auto& shape : shapes) characters.push_back(unipotent_expansion(group, shape));
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const Rational d = degree(characters[i]);
      tally.record(d > 0 && d.get_den() == 1, to_string(group) + " " + to_string(shapes[i]) + " degree " + d.get_str());
      for (std::size_t j = 0; j < shapes.size(); ++j) {
        const Rational product = inner_product(characters[i], characters[j]);
        tally.record(product == (i == j ? 1 : 0), to_string(group) + " <" + to_string(shapes[i]) + "," +
                                                      to_string(shapes[j]) + "> = " + product.get_str());
      }
    }
  }
  return tally;
}

std::vector<PairFamily> pair_families(PairKind kind, int small_rank) {
  switch (kind) {
    case PairKind::GL:
      return {{Family::GL, Family::GL, small_rank + 1, small_rank}};
    case PairKind::U:
      return {{Family::U, Family::U, small_rank + 1, small_rank}};
    case PairKind::SO:
      return {{Family::SOodd, Family::SOplus, small_rank, small_rank},
              {Family::SOodd, Family::SOminus, small_rank, small_rank}};
  }
  return {};
}

SemisimpleElement ElementSampler::sample(const TorusDatum& torus, bool avoid_central) {
  SemisimpleElement out;
  for (const Block& block : torus.blocks()) {
    const Integer order = coordinate_group_order(torus.field(), torus.family(), block);
    std::optional<Eigenvalue> chosen;
    for (int attempt = 0; attempt < 64 && !chosen; ++attempt) {
      Integer index;
      if (engine_() % 2 == 0) {
        index = Integer(static_cast<unsigned long>(engine_() % 4)) % order;
      } else {
        const Integer raw(static_cast<unsigned long>(engine_()));
        index = raw % order;
      }
      const Eigenvalue candidate = coordinate_from_index(torus.field(), torus.family(), block, index);
      if (avoid_central && (is_one(candidate) || is_minus_one(torus.field(), candidate))) continue;
      chosen = candidate;
    }
    if (!chosen) throw std::invalid_argument("no admissible coordinate for a block of " + to_string(torus.label));
    out.coords.push_back(*chosen);
  }
  return out;
}

bool admits_noncentral(const TorusDatum& torus) {
  for (const Block& block : torus.blocks()) {
    if (coordinate_group_order(torus.field(), torus.family(), block) <= 2) return false;
  }
  return true;
}

CheckTally route_agreement(Family big_family, Family small_family, int small_rank, std::uint64_t q,
                           int samples_per_torus_pair, std::uint64_t seed) {
  const GroupKind big_group = make_group(big_family, big_family == Family::SOodd ? small_rank : small_rank + 1, q);
  const GroupKind small_group = make_group(small_family, small_rank, q);
  CheckTally tally{"route agreement " + to_string(big_group) + " over " + to_string(small_group), 0, 0, {}};
  const bool orthogonal = big_family == Family::SOodd;
  ElementSampler sampler(seed);
  for (const auto& big_label : f_classes(big_group)) {
    const TorusDatum big_torus{big_label};
    if (orthogonal && !admits_noncentral(big_torus)) continue;
    for (const auto& small_label : f_classes(small_group)) {
      const TorusDatum small_torus{small_label};
      if (orthogonal && !admits_noncentral(small_torus)) continue;
      for (int k = 0; k < samples_per_torus_pair; ++k) {
        const DualTorusPair big{big_torus, sampler.sample(big_torus, orthogonal)};
        const DualTorusPair small{small_torus, sampler.sample(small_torus, orthogonal)};
        const Integer direct = reeder_direct(big, small).value;
        const Integer closed = reeder_closed_form(big, small).value;
        const Integer factorized = factorized_pairing(big, small).report.value;
        tally.record(direct == closed && closed == factorized,
                     to_string(big_label) + " / " + to_string(small_label) + ": direct " + to_string(direct) +
                         ", closed " + to_string(closed) + ", factorized " + to_string(factorized));
      }
    }
  }
  return tally;
}

std::vector<CheckTally> run_all(const Bounds& bounds) {
  if (bounds.max_rank < 1 || bounds.max_rank > 4) {
    throw std::invalid_argument("oracle bound must lie in [1, 4], got " + std::to_string(bounds.max_rank));
  }
  const int n = bounds.max_rank;
  const int restricted = std::min(n, 3);
  std::vector<CheckTally> out;
  const std::vector<Family> families{Family::GL, Family::U, Family::Sp, Family::SOplus, Family::SOminus};
  for (Family family : families) out.push_back(centralizer_orders(family, n));
  for (Family family : families) out.push_back(class_equation(family, n));
  for (Family family : families) out.push_back(count_factorization(family, n));
  for (Family family : families) out.push_back(restriction_counts(family, restricted));
  for (Family family : families) out.push_back(restriction_class_bijection(family, restricted));
  for (std::uint64_t q : bounds.fields) {
    out.push_back(unipotent_orthonormality(Family::GL, n, q));
    out.push_back(unipotent_orthonormality(Family::U, n, q));
    out.push_back(route_agreement(Family::GL, Family::GL, std::min(n, 2), q, 2, 11));
    out.push_back(route_agreement(Family::U, Family::U, std::min(n, 2), q, 2, 12));
    if (n >= 2) {
      out.push_back(route_agreement(Family::SOodd, Family::SOplus, 2, q, 2, 13));
      out.push_back(route_agreement(Family::SOodd, Family::SOminus, 2, q, 2, 14));
    }
  }
  return out;
}

bool is_regular(const DualTorusPair& pair) {
  return m_count(pair.torus, pair.element, pair.torus.label.data, pair.element) == 1;
}

std::vector<DualTorusPair> regular_elements(const TorusDatum& torus, int limit) {
  std::vector<Integer> indices;
  for (int i = 0; i < 12; ++i) indices.push_back(i);
  std::vector<DualTorusPair> out;
  for (const auto& element : enumerate_elements(torus, indices)) {
    if (static_cast<int>(out.size()) >= limit) break;
    const DualTorusPair pair{torus, element};
    if (is_regular(pair)) out.push_back(pair);
  }
  return out;
}

std::vector<SeriesDatum> enumerate_series(const GroupKind& group, int max_level, int max_exponents) {
  const FieldParam& field = group.field;
  const Family family = group.family;
  const bool orthogonal = weyl_type(family) != WeylType::A;
  std::set<OrbitKey> keys;
  for (int level = 1; level <= max_level; ++level) {
    const Integer modulus = field.modulus(level);
    for (long e = 0; e < max_exponents && Integer(e) < modulus; ++e) {
      const Eigenvalue a = normalize(field, level, e);
      const FrobeniusOrbit orbit = frobenius_orbit(field, eigenvalue_twist(family), a);
      if (orthogonal && (orbit.contains_one || orbit.contains_minus_one)) continue;
      keys.insert(eigenvalue_orbit_key(field, family, a));
    }
  }
  std::vector<std::pair<OrbitKey, int>> candidates;
  for (const auto& key : keys) {
    const FrobeniusOrbit orbit = frobenius_orbit(field, eigenvalue_twist(family), key);
    const GroupKind factor = centralizer_factor_group(field, family, orbit, 1);
    const int weight = orthogonal && factor.family == Family::U ? orbit.size / 2 : orbit.size;
    if (weight <= group.rank) candidates.emplace_back(key, weight);
  }
  std::vector<SeriesDatum> out;
  std::vector<SeriesOrbit> current;
  std::function<void(std::size_t, int)> choose = [&](std::size_t index, int remaining) {
    if (remaining == 0) {
      for (SplitSign split : {SplitSign::plus, SplitSign::minus}) {
        SeriesDatum datum{group, current, split};
        try {
          const VirtualCharacter member = series_member(datum);
          bool uses_split = false;
          for (const auto& [key, c] : member.terms()) uses_split = uses_split || key.split != SplitSign::none;
          out.push_back(datum);
          if (!uses_split) break;
        } catch (const std::invalid_argument&) {
        }
      }
      return;
    }
    if (index == candidates.size()) return;
    choose(index + 1, remaining);
    const auto& [key, weight] = candidates[index];
    for (int nu = 1; nu * weight <= remaining; ++nu) {
      for (const auto& shape : partitions_of(nu)) {
        current.push_back(SeriesOrbit{key, shape});
        choose(index + 1, remaining - nu * weight);
        current.pop_back();
      }
    }
  };
  choose(0, group.rank);
  return out;
}

}  // namespace ggp::oracle

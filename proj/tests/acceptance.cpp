#include "oracle_suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace ggp;
using Clock = std::chrono::steady_clock;

// Every comparison below is exact integer or rational equality.
constexpr long kExactTolerance = 0;
constexpr int kPairSamplesPerCell = 200;
constexpr int kSeriesPairsUnitary = 50;
constexpr int kSeriesPairsOrthogonal = 20;
constexpr int kMinimumMCountChecks = 500;
constexpr int kMinimumRegularPairs = 100;
constexpr double kBudgetUnitaryRoutes = 300.0;
constexpr double kBudgetOrthogonalRoutes = 600.0;
constexpr double kBudgetCentralizers = 60.0;
constexpr double kBudgetMultiplicities = 600.0;
const std::vector<std::uint64_t> kFields{3, 5};
const std::vector<Integer> kAlphabet{0, 1, 2, 3};

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Verdict within_budget(Verdict verdict, double elapsed, double budget) {
  if (elapsed > budget) {
    verdict.pass = false;
    verdict.detail += "; exceeded time budget of " + std::to_string(static_cast<int>(budget)) + "s";
  }
  return verdict;
}

std::vector<SemisimpleElement> systematic_elements(const TorusDatum& torus, bool avoid_central, std::size_t cap) {
  std::set<SemisimpleElement> seen;
  std::vector<SemisimpleElement> out;
  for (const auto& element : enumerate_elements(torus, kAlphabet)) {
    if (avoid_central && has_eigenvalue_pm_one(torus, element)) continue;
    if (!seen.insert(canonical_element(torus, element)).second) continue;
    out.push_back(element);
    if (out.size() == cap) break;
  }
  return out;
}

bool admits_noncentral(const TorusDatum& torus) {
  for (const Block& block : torus.blocks()) {
    if (coordinate_group_order(torus.field(), torus.family(), block) <= 2) return false;
  }
  return true;
}

// Runs the three routes on systematic elements over every pair of torus
// classes, then tops up with random elements until the cell holds enough pairs.
oracle::CheckTally route_cell(const oracle::PairFamily& families, std::uint64_t q, std::uint64_t seed) {
  const GroupKind big_group = make_group(families.big, families.big_rank, q);
  const GroupKind small_group = make_group(families.small, families.small_rank, q);
  const bool orthogonal = families.big == Family::SOodd;
  oracle::CheckTally tally{to_string(big_group) + " > " + to_string(small_group), 0, 0, {}};
  std::vector<std::pair<TorusDatum, TorusDatum>> torus_pairs;
  for (const auto& big_label : f_classes(big_group)) {
    for (const auto& small_label : f_classes(small_group)) {
      const TorusDatum big{big_label};
      const TorusDatum small{small_label};
      if (orthogonal && (!admits_noncentral(big) || !admits_noncentral(small))) continue;
      torus_pairs.emplace_back(big, small);
    }
  }
  const auto check = [&](const DualTorusPair& big, const DualTorusPair& small) {
    const Integer direct = reeder_direct(big, small).value;
    const Integer closed = reeder_closed_form(big, small).value;
    const Integer factorized = factorized_pairing(big, small).report.value;
    tally.record(abs(direct - closed) <= kExactTolerance && abs(closed - factorized) <= kExactTolerance,
                 to_string(big.torus.label) + " / " + to_string(small.torus.label) + ": " + to_string(direct) +
                     ", " + to_string(closed) + ", " + to_string(factorized));
  };
  for (const auto& [big_torus, small_torus] : torus_pairs) {
    const auto big_elements = systematic_elements(big_torus, orthogonal, 6);
    const auto small_elements = systematic_elements(small_torus, orthogonal, 6);
    for (const auto& big : big_elements) {
      for (const auto& small : small_elements) check({big_torus, big}, {small_torus, small});
    }
  }
  oracle::ElementSampler sampler(seed);
  for (std::size_t index = 0; tally.passed + tally.failed < kPairSamplesPerCell && !torus_pairs.empty(); ++index) {
    const auto& [big_torus, small_torus] = torus_pairs[index % torus_pairs.size()];
    check({big_torus, sampler.sample(big_torus, orthogonal)}, {small_torus, sampler.sample(small_torus, orthogonal)});
  }
  return tally;
}

Verdict route_criterion(PairKind kind, const std::vector<int>& small_ranks) {
  long total = 0;
  long failed = 0;
  std::string first;
  std::string cells;
  std::uint64_t seed = 1;
  for (std::uint64_t q : kFields) {
    for (int rank : small_ranks) {
      for (const auto& families : oracle::pair_families(kind, rank)) {
        const auto tally = route_cell(families, q, seed++);
        total += tally.passed + tally.failed;
        failed += tally.failed;
        if (first.empty()) first = tally.first_failure;
        const bool enough = tally.passed + tally.failed >= kPairSamplesPerCell;
        if (!enough) ++failed;
        cells += " [" + tally.family + " q=" + std::to_string(q) + ": " + std::to_string(tally.passed) + "]";
      }
    }
  }
  return {failed == 0, std::to_string(total) + " pairs, " + std::to_string(failed) + " failures;" + cells +
                           (first.empty() ? "" : "; first failure: " + first)};
}

Verdict tally_criterion(const std::vector<oracle::CheckTally>& tallies, long minimum) {
  long passed = 0;
  long failed = 0;
  std::string first;
  for (const auto& tally : tallies) {
    passed += tally.passed;
    failed += tally.failed;
    if (first.empty() && !tally.first_failure.empty()) first = tally.first_failure;
  }
  Verdict verdict{failed == 0 && passed >= minimum,
                  std::to_string(passed) + " checks passed, " + std::to_string(failed) + " failed"};
  if (passed < minimum) verdict.detail += "; fewer than " + std::to_string(minimum) + " checks";
  if (!first.empty()) verdict.detail += "; first failure: " + first;
  return verdict;
}

const std::vector<Family> kAllFamilies{Family::GL, Family::U, Family::Sp, Family::SOplus, Family::SOminus};

Verdict criterion_m_counts() {
  std::vector<oracle::CheckTally> tallies;
  for (Family family : kAllFamilies) tallies.push_back(oracle::restriction_counts(family, 3));
  return tally_criterion(tallies, kMinimumMCountChecks);
}

Verdict criterion_bijections() {
  std::vector<oracle::CheckTally> tallies;
  for (Family family : kAllFamilies) tallies.push_back(oracle::restriction_class_bijection(family, 3));
  return tally_criterion(tallies, kMinimumMCountChecks);
}

Verdict criterion_centralizers() {
  std::vector<oracle::CheckTally> tallies;
  tallies.push_back(oracle::centralizer_orders(Family::GL, 6));
  tallies.push_back(oracle::centralizer_orders(Family::U, 6));
  tallies.push_back(oracle::centralizer_orders(Family::Sp, 4));
  tallies.push_back(oracle::centralizer_orders(Family::SOplus, 4));
  tallies.push_back(oracle::centralizer_orders(Family::SOminus, 4));
  return tally_criterion(tallies, 1);
}

Verdict criterion_unipotent() {
  std::vector<oracle::CheckTally> tallies;
  for (std::uint64_t q : kFields) {
    tallies.push_back(oracle::unipotent_orthonormality(Family::GL, 4, q));
    tallies.push_back(oracle::unipotent_orthonormality(Family::U, 4, q));
    oracle::CheckTally steinberg{"Steinberg degree", 0, 0, {}};
    const Rational d = degree(unipotent_expansion(make_group(Family::GL, 2, q), Partition{1, 1}));
    steinberg.record(d == Rational(static_cast<unsigned long>(q)), "GL_2 Steinberg degree " + d.get_str());
    tallies.push_back(steinberg);
  }
  return tally_criterion(tallies, 1);
}

bool orbits_shared(const VirtualCharacter& first, const VirtualCharacter& second) {
  const auto a = first.eigenvalue_orbits();
  const auto b = second.eigenvalue_orbits();
  return std::any_of(a.begin(), a.end(), [&](const OrbitKey& key) { return std::find(b.begin(), b.end(), key) != b.end(); });
}

// Deterministic stride through the product of two series lists.
std::vector<std::pair<SeriesDatum, SeriesDatum>> series_pairs(const std::vector<SeriesDatum>& big,
                                                             const std::vector<SeriesDatum>& small, std::size_t cap) {
  std::vector<std::pair<SeriesDatum, SeriesDatum>> out;
  const std::size_t total = big.size() * small.size();
  const std::size_t stride = std::max<std::size_t>(1, total / cap);
  for (std::size_t index = 0; index < total && out.size() < cap; index += stride) {
    out.emplace_back(big[index / small.size()], small[index % small.size()]);
  }
  return out;
}

struct MultiplicityTally {
  long pairs = 0;
  long shared = 0;
  long disjoint = 0;
  long failed = 0;
  std::string first;
};

void multiplicity_cell(const GroupKind& big_group, const GroupKind& small_group, int max_level, std::size_t cap,
                       MultiplicityTally& tally) {
  const auto big = oracle::enumerate_series(big_group, max_level, 40);
  const auto small = oracle::enumerate_series(small_group, max_level, 40);
  for (const auto& [pi, sigma] : series_pairs(big, small, cap)) {
    const MultiplicityReport report = ggp_multiplicity(pi, sigma);
    ++tally.pairs;
    if (orbits_shared(series_member(pi), series_member(sigma))) {
      ++tally.shared;
    } else {
      ++tally.disjoint;
    }
    if (!report.equal || !report.nonnegative) {
      ++tally.failed;
      if (tally.first.empty()) {
        tally.first = to_string(big_group) + " > " + to_string(small_group) + ": lhs " + to_string(report.lhs) +
                      ", rhs " + to_string(report.rhs);
      }
    }
  }
}

Verdict criterion_multiplicities() {
  MultiplicityTally unitary;
  MultiplicityTally orthogonal;
  for (std::uint64_t q : kFields) {
    multiplicity_cell(make_group(Family::U, 2, q), make_group(Family::U, 1, q), 2, 60, unitary);
    multiplicity_cell(make_group(Family::U, 3, q), make_group(Family::U, 2, q), 2, 60, unitary);
    multiplicity_cell(make_group(Family::SOodd, 2, q), make_group(Family::SOplus, 2, q), 4, 30, orthogonal);
    multiplicity_cell(make_group(Family::SOodd, 2, q), make_group(Family::SOminus, 2, q), 4, 30, orthogonal);
  }
  const bool pass = unitary.failed == 0 && orthogonal.failed == 0 && unitary.pairs >= kSeriesPairsUnitary &&
                    orthogonal.pairs >= kSeriesPairsOrthogonal && unitary.shared > 0 && unitary.disjoint > 0 &&
                    orthogonal.shared > 0 && orthogonal.disjoint > 0;
  std::string detail = "unitary " + std::to_string(unitary.pairs) + " pairs (" + std::to_string(unitary.shared) +
                       " shared, " + std::to_string(unitary.disjoint) + " disjoint, " +
                       std::to_string(unitary.failed) + " failed); orthogonal " + std::to_string(orthogonal.pairs) +
                       " pairs (" + std::to_string(orthogonal.shared) + " shared, " +
                       std::to_string(orthogonal.disjoint) + " disjoint, " + std::to_string(orthogonal.failed) +
                       " failed)";
  const std::string first = unitary.first.empty() ? orthogonal.first : unitary.first;
  if (!first.empty()) detail += "; first failure: " + first;
  return {pass, detail};
}

Verdict criterion_independence() {
  oracle::CheckTally tau{"tau", 0, 0, {}};
  for (std::uint64_t q : kFields) {
    for (int rank : {1, 2}) {
      const auto big = oracle::enumerate_series(make_group(Family::GL, rank + 1, q), 2, 12);
      const auto small = oracle::enumerate_series(make_group(Family::GL, rank, q), 2, 12);
      for (const auto& [pi, sigma] : series_pairs(big, small, 40)) {
        const VirtualCharacter first = series_member(pi);
        const VirtualCharacter second = series_member(sigma);
        const Integer a = gl_multiplicity(first, second, 1);
        const Integer b = gl_multiplicity(first, second, 2);
        tau.record(a == b, to_string(pi.group) + ": tau seeds give " + to_string(a) + " and " + to_string(b));
      }
    }
    for (const auto& [big_group, small_group] :
         {std::pair{make_group(Family::U, 3, q), make_group(Family::U, 2, q)},
          std::pair{make_group(Family::SOodd, 2, q), make_group(Family::SOplus, 2, q)}}) {
      const auto big = oracle::enumerate_series(big_group, 2, 12);
      const auto small = oracle::enumerate_series(small_group, 2, 12);
      for (const auto& [pi, sigma] : series_pairs(big, small, 20)) {
        MultiplicityOptions first;
        MultiplicityOptions second;
        second.tau_seed = 2;
        const Integer a = ggp_multiplicity(pi, sigma, first).rhs;
        const Integer b = ggp_multiplicity(pi, sigma, second).rhs;
        tau.record(a == b, to_string(big_group) + ": per-orbit factors under two fresh blocks give " + to_string(a) +
                               " and " + to_string(b));
      }
    }
  }

  oracle::CheckTally padding{"padding", 0, 0, {}};
  long distinct_choices = 0;
  oracle::ElementSampler sampler(99);
  for (std::uint64_t q : kFields) {
    for (PairKind kind : {PairKind::GL, PairKind::U, PairKind::SO}) {
      for (const auto& families : oracle::pair_families(kind, 2)) {
        const GroupKind big_group = make_group(families.big, families.big_rank, q);
        const GroupKind small_group = make_group(families.small, families.small_rank, q);
        const bool orthogonal = kind == PairKind::SO;
        for (const auto& big_label : f_classes(big_group)) {
          for (const auto& small_label : f_classes(small_group)) {
            const TorusDatum big_torus{big_label};
            const TorusDatum small_torus{small_label};
            if (orthogonal && (!admits_noncentral(big_torus) || !admits_noncentral(small_torus))) continue;
            const DualTorusPair big{big_torus, sampler.sample(big_torus, orthogonal)};
            const DualTorusPair small{small_torus, sampler.sample(small_torus, orthogonal)};
            const FactorizedReport reference = factorized_pairing(big, small);
            for (const PrimedOptions variant : {PrimedOptions{1, 1}, PrimedOptions{0, 2}, PrimedOptions{1, 2}}) {
              const FactorizedReport other = factorized_pairing(big, small, variant);
              bool same = other.factors.size() == reference.factors.size();
              for (std::size_t i = 0; same && i < other.factors.size(); ++i) {
                same = other.factors[i].base_pairing ==
                       reference.factors[i].base_pairing;
              }
              for (std::size_t i = 0; i < std::min(other.factors.size(), reference.factors.size()); ++i) {
                if (other.factors[i].datum.big.torus.label.data != reference.factors[i].datum.big.torus.label.data ||
                    other.factors[i].datum.big.element != reference.factors[i].datum.big.element) {
                  ++distinct_choices;
                }
              }
              padding.record(same && other.report.value == reference.report.value,
                             to_string(big_label) + " / " + to_string(small_label) + " padding variant " +
                                 std::to_string(variant.padding_variant) + " theta seed " +
                                 std::to_string(variant.theta_seed));
            }
          }
        }
      }
    }
  }
  Verdict verdict = tally_criterion({tau, padding}, 1);
  verdict.detail += "; " + std::to_string(distinct_choices) + " orbit factors rebuilt with a different padding or theta";
  if (distinct_choices == 0) verdict.pass = false;
  return verdict;
}

bool supports_disjoint(const DualTorusPair& big, const DualTorusPair& small) {
  return shared_orbits(big, small).empty();
}

Verdict criterion_regular_disjoint() {
  oracle::CheckTally tally{"regular disjoint", 0, 0, {}};
  std::set<std::string> kinds;
  for (std::uint64_t q : kFields) {
    for (PairKind kind : {PairKind::GL, PairKind::U, PairKind::SO}) {
      for (int rank : {1, 2}) {
        const int small_rank = kind == PairKind::SO ? rank + 1 : rank;
        for (const auto& families : oracle::pair_families(kind, small_rank)) {
          const GroupKind big_group = make_group(families.big, families.big_rank, q);
          const GroupKind small_group = make_group(families.small, families.small_rank, q);
          for (const auto& big_label : f_classes(big_group)) {
            for (const auto& small_label : f_classes(small_group)) {
              const auto bigs = oracle::regular_elements(TorusDatum{big_label}, 3);
              const auto smalls = oracle::regular_elements(TorusDatum{small_label}, 3);
              for (const auto& big : bigs) {
                for (const auto& small : smalls) {
                  if (!supports_disjoint(big, small)) continue;
                  if (kind == PairKind::SO && (has_eigenvalue_pm_one(big.torus, big.element) ||
                                               has_eigenvalue_pm_one(small.torus, small.element))) {
                    continue;
                  }
                  const Integer value = reeder_closed_form(big, small).value;
                  const Integer direct = reeder_direct(big, small).value;
                  const int sign = pair_global_sign(big, small);
                  tally.record(value * sign == 1 && direct == value,
                               to_string(big_label) + " / " + to_string(small_label) + ": normalized " +
                                   to_string(Integer(value * sign)));
                  kinds.insert(pair_kind_name(kind));
                }
              }
            }
          }
        }
      }
    }
  }
  Verdict verdict = tally_criterion({tally}, kMinimumRegularPairs);
  if (kinds.size() != 3) {
    verdict.pass = false;
    verdict.detail += "; only " + std::to_string(kinds.size()) + " pair families covered";
  }
  return verdict;
}

struct Criterion {
  int number;
  std::string name;
  std::function<Verdict()> run;
  double budget;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "unitary route equivalence", [] { return route_criterion(PairKind::U, {1, 2, 3}); }, kBudgetUnitaryRoutes},
      {2, "orthogonal route equivalence", [] { return route_criterion(PairKind::SO, {2, 3}); },
       kBudgetOrthogonalRoutes},
      {3, "restriction counts against Weyl enumeration", criterion_m_counts, kBudgetCentralizers},
      {4, "restriction labels against orbit partitioning", criterion_bijections, kBudgetCentralizers},
      {5, "centralizer orders against enumeration", criterion_centralizers, kBudgetCentralizers},
      {6, "unipotent orthonormality and degrees", criterion_unipotent, kBudgetCentralizers},
      {7, "multiplicity product formula", criterion_multiplicities, kBudgetMultiplicities},
      {8, "independence of synthetic choices", criterion_independence, kBudgetMultiplicities},
      {9, "regular disjoint pairs have multiplicity one", criterion_regular_disjoint, kBudgetCentralizers},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = Clock::now();
    Verdict verdict;
    try {
      verdict = criterion.run();
    } catch (const std::exception& error) {
      verdict = {false, std::string("exception: ") + error.what()};
    }
    const double elapsed = seconds_since(start);
    verdict = within_budget(verdict, elapsed, criterion.budget);
    if (!verdict.pass) ++failures;
    std::printf("criterion %d: %s  %s  (%s; %.2fs)\n", criterion.number, verdict.pass ? "PASS" : "FAIL",
                criterion.name.c_str(), verdict.detail.c_str(), elapsed);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

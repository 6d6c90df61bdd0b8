#include "ggp/unipotent.hpp"
#include "oracle_suite.hpp"
#include "support/brute.hpp"

#include <gtest/gtest.h>

namespace ggp {
namespace {

TEST(MurnaghanNakayama, SymmetricGroupOfDegreeTwo) {
  EXPECT_EQ(mn_character(Partition{2}, Partition{1, 1}), 1);
  EXPECT_EQ(mn_character(Partition{1, 1}, Partition{2}), -1);
}

TEST(MurnaghanNakayama, TrivialCharacter) {
  for (const auto& cycle : partitions_of(5)) EXPECT_EQ(mn_character(Partition{5}, cycle), 1);
}

TEST(MurnaghanNakayama, MatchesFrobeniusFormulaProperty) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& shape : partitions_of(n)) {
      for (const auto& cycle : partitions_of(n)) {
        ASSERT_EQ(mn_character(shape, cycle), brute::frobenius_character(shape.parts(), cycle.parts()))
            << to_string(shape) << " at " << to_string(cycle);
      }
    }
  }
}

TEST(MurnaghanNakayama, ColumnOrthogonalityProperty) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& first : partitions_of(n)) {
      for (const auto& second : partitions_of(n)) {
        Integer sum = 0;
        for (const auto& shape : partitions_of(n)) sum += mn_character(shape, first) * mn_character(shape, second);
        EXPECT_EQ(sum, first == second ? centralizer_order_a(first) : Integer(0));
      }
    }
  }
}

TEST(UnipotentExpansion, GeneralLinearRankOne) {
  const auto character = unipotent_expansion(make_group(Family::GL, 1, 3), Partition{1});
  ASSERT_EQ(character.terms().size(), 1U);
  EXPECT_EQ(character.terms().begin()->second, 1);
}

TEST(UnipotentExpansion, TrivialAndSteinbergOfRankTwo) {
  for (std::uint64_t q : {3U, 5U}) {
    const GroupKind group = make_group(Family::GL, 2, q);
    const auto trivial = unipotent_expansion(group, Partition{2});
    const auto steinberg = unipotent_expansion(group, Partition{1, 1});
    std::map<Partition, Rational> trivial_terms;
    std::map<Partition, Rational> steinberg_terms;
    for (const auto& [key, c] : trivial.terms()) trivial_terms[key.data.first] = c;
    for (const auto& [key, c] : steinberg.terms()) steinberg_terms[key.data.first] = c;
    EXPECT_EQ(trivial_terms.at(Partition{1, 1}), Rational(1, 2));
    EXPECT_EQ(trivial_terms.at(Partition{2}), Rational(1, 2));
    EXPECT_EQ(steinberg_terms.at(Partition{1, 1}), Rational(1, 2));
    EXPECT_EQ(steinberg_terms.at(Partition{2}), Rational(-1, 2));
    EXPECT_EQ(degree(trivial), 1);
    EXPECT_EQ(degree(steinberg), Rational(static_cast<unsigned long>(q)));
    EXPECT_EQ(inner_product(trivial, trivial), 1);
    EXPECT_EQ(inner_product(trivial, steinberg), 0);
  }
}

TEST(UnipotentExpansion, UnitarySteinbergDegreeIsPositive) {
  const Rational d = degree(unipotent_expansion(make_group(Family::U, 2, 3), Partition{1, 1}));
  EXPECT_GT(d, 0);
  EXPECT_EQ(d.get_den(), 1);
  EXPECT_EQ(d, 3);
}

TEST(UnipotentExpansion, OrthonormalWithIntegralDegreesProperty) {
  for (std::uint64_t q : {3U, 5U}) {
    for (Family family : {Family::GL, Family::U}) {
      const auto tally = oracle::unipotent_orthonormality(family, 4, q);
      EXPECT_TRUE(tally.ok()) << tally.first_failure;
    }
  }
}

TEST(SeriesMember, IdentityOrbitReducesToUnipotent) {
  const GroupKind group = make_group(Family::U, 3, 3);
  const SeriesDatum series{group, {SeriesOrbit{one(), Partition{2, 1}}}};
  const auto member = series_member(series);
  const auto unipotent = unipotent_expansion(group, Partition{2, 1});
  EXPECT_EQ(member.terms(), unipotent.terms());
}

TEST(SeriesMember, RegularSeriesIsSingleSignedTorus) {
  const FieldParam field(3);
  const SeriesDatum series{make_group(Family::U, 2, 3), {SeriesOrbit{normalize(field, 2, 1), Partition{1}}}};
  const auto member = series_member(series);
  ASSERT_EQ(member.terms().size(), 1U);
  EXPECT_EQ(abs(member.terms().begin()->second), 1);
  EXPECT_EQ(inner_product(member, member), 1);
}

TEST(SeriesMember, DisjointOrbitsStayOrthonormal) {
  const FieldParam field(5);
  const SeriesDatum series{make_group(Family::U, 3, 5),
                           {SeriesOrbit{one(), Partition{1, 1}}, SeriesOrbit{normalize(field, 2, 4), Partition{1}}}};
  const auto member = series_member(series);
  EXPECT_EQ(inner_product(member, member), 1);
  EXPECT_GT(degree(member), 0);
}

TEST(SeriesMember, EveryEnumeratedMemberIsIrreducibleProperty) {
  for (const GroupKind& group : {make_group(Family::U, 3, 3), make_group(Family::GL, 3, 3),
                                 make_group(Family::SOodd, 2, 5), make_group(Family::SOminus, 2, 5)}) {
    for (const auto& series : oracle::enumerate_series(group, 2, 12)) {
      const auto member = series_member(series);
      EXPECT_EQ(inner_product(member, member), 1) << to_string(group);
    }
  }
}

TEST(SeriesMember, RejectsRankMismatch) {
  const SeriesDatum series{make_group(Family::U, 3, 3), {SeriesOrbit{one(), Partition{2}}}};
  EXPECT_THROW((void)series_member(series), std::invalid_argument);
}

TEST(Multiplicity, LinearTrivialGroups) {
  const auto empty = series_member(SeriesDatum{make_group(Family::GL, 0, 3), {}});
  EXPECT_EQ(gl_multiplicity(empty, empty), 1);
}

TEST(Multiplicity, LinearEqualRankSymmetryProperty) {
  for (int rank : {1, 2}) {
    const auto series = oracle::enumerate_series(make_group(Family::GL, rank, 7), 2, 8);
    for (std::size_t i = 0; i < series.size(); ++i) {
      for (std::size_t j = i; j < series.size(); ++j) {
        const auto first = series_member(series[i]);
        const auto second = series_member(series[j]);
        EXPECT_EQ(gl_multiplicity(first, second), gl_multiplicity(second, first));
      }
    }
  }
}

TEST(Multiplicity, CorankThreeLiftIsIrreducible) {
  const FieldParam field(3);
  const auto pi = series_member(SeriesDatum{make_group(Family::U, 4, 3), {SeriesOrbit{one(), Partition{3, 1}}}});
  const auto sigma =
      series_member(SeriesDatum{make_group(Family::U, 1, 3), {SeriesOrbit{normalize(field, 2, 2), Partition{1}}}});
  const BasicReduction reduction = reduce_to_basic(pi, sigma);
  EXPECT_EQ(reduction.big.group(), make_group(Family::U, 5, 3));
  EXPECT_EQ(reduction.small.group(), make_group(Family::U, 4, 3));
  EXPECT_EQ(inner_product(reduction.big, reduction.big), 1);
  EXPECT_EQ(reduction.corank, 3);
}

TEST(Multiplicity, UnitaryRankOneOverTrivial) {
  const SeriesDatum pi{make_group(Family::U, 1, 3), {SeriesOrbit{normalize(FieldParam(3), 2, 2), Partition{1}}}};
  const SeriesDatum sigma{make_group(Family::U, 0, 3), {}};
  const auto report = ggp_multiplicity(pi, sigma);
  EXPECT_EQ(report.lhs, 1);
  EXPECT_TRUE(report.equal);
}

TEST(Multiplicity, LinearTauIndependence) {
  const GroupKind big = make_group(Family::GL, 1, 3);
  const GroupKind small = make_group(Family::GL, 0, 3);
  const auto pi = unipotent_expansion(big, Partition{1});
  const auto sigma = series_member(SeriesDatum{small, {}});
  EXPECT_EQ(gl_multiplicity(pi, sigma, 1), gl_multiplicity(pi, sigma, 2));
  EXPECT_EQ(gl_multiplicity(pi, sigma, 1), 1);
}

TEST(Multiplicity, CorankThreeRecordsReduction) {
  const FieldParam field(3);
  const SeriesDatum pi{make_group(Family::U, 4, 3), {SeriesOrbit{one(), Partition{3, 1}}}};
  const SeriesDatum sigma{make_group(Family::U, 1, 3), {SeriesOrbit{normalize(field, 2, 2), Partition{1}}}};
  const auto report = ggp_multiplicity(pi, sigma);
  EXPECT_FALSE(report.trace.empty());
  EXPECT_TRUE(report.equal);
}

TEST(Multiplicity, EvenCorankIsRejected) {
  const SeriesDatum pi{make_group(Family::U, 3, 3), {SeriesOrbit{one(), Partition{3}}}};
  const SeriesDatum sigma{make_group(Family::U, 1, 3), {SeriesOrbit{one(), Partition{1}}}};
  EXPECT_THROW((void)ggp_multiplicity(pi, sigma), std::invalid_argument);
}

TEST(Multiplicity, ProductFormulaHoldsOnUnitaryRankTwoProperty) {
  for (std::uint64_t q : {3U, 5U}) {
    const auto big = oracle::enumerate_series(make_group(Family::U, 3, q), 2, 10);
    const auto small = oracle::enumerate_series(make_group(Family::U, 2, q), 2, 10);
    for (std::size_t i = 0; i < big.size(); i += 3) {
      for (std::size_t j = 0; j < small.size(); j += 2) {
        const auto report = ggp_multiplicity(big[i], small[j]);
        EXPECT_TRUE(report.equal) << report.lhs << " vs " << report.rhs;
        EXPECT_GE(report.lhs, 0);
      }
    }
  }
}

TEST(Multiplicity, LinearProductFormulaProperty) {
  const auto big = oracle::enumerate_series(make_group(Family::GL, 3, 3), 2, 8);
  const auto small = oracle::enumerate_series(make_group(Family::GL, 2, 3), 2, 8);
  for (std::size_t i = 0; i < big.size(); i += 2) {
    for (const auto& sigma : small) {
      const auto report = ggp_multiplicity(big[i], sigma);
      EXPECT_GE(report.lhs, 0);
      EXPECT_TRUE(report.equal);
    }
  }
}

TEST(Multiplicity, AnisotropicPartSumRuleBreaksProductFormula) {
  MultiplicityOptions alternative;
  alternative.engine.anisotropic_sign = AnisotropicSignRule::part_sum;
  long broken = 0;
  for (std::uint64_t q : {3U, 5U}) {
    const auto big = oracle::enumerate_series(make_group(Family::SOodd, 2, q), 4, 40);
    const auto small = oracle::enumerate_series(make_group(Family::SOminus, 2, q), 4, 40);
    for (const auto& pi : big) {
      for (const auto& sigma : small) {
        EXPECT_TRUE(ggp_multiplicity(pi, sigma).equal);
        if (!ggp_multiplicity(pi, sigma, alternative).equal) ++broken;
      }
    }
  }
  EXPECT_GT(broken, 0);
}

}  // namespace
}  // namespace ggp

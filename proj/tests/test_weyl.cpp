#include "ggp/weyl.hpp"
#include "support/brute.hpp"

#include <gtest/gtest.h>

namespace ggp {
namespace {

std::vector<long> library_centralizers(const GroupKind& kind) {
  std::vector<long> out;
  for (const auto& label : f_classes(kind)) out.push_back(f_centralizer_order(label).get_si());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(FClasses, LinearRankTwo) {
  const auto classes = f_classes(make_group(Family::GL, 2, 3));
  ASSERT_EQ(classes.size(), 2U);
  std::set<Partition> shapes;
  for (const auto& label : classes) shapes.insert(label.mu());
  EXPECT_EQ(shapes, (std::set<Partition>{Partition{2}, Partition{1, 1}}));
}

TEST(FClasses, SymplecticRankTwoAreBipartitions) {
  const auto classes = f_classes(make_group(Family::Sp, 2, 3));
  std::set<Bipartition> labels;
  for (const auto& label : classes) labels.insert(label.data);
  EXPECT_EQ(labels, (std::set<Bipartition>{{Partition{2}, {}},
                                           {Partition{1, 1}, {}},
                                           {Partition{1}, Partition{1}},
                                           {{}, Partition{2}},
                                           {{}, Partition{1, 1}}}));
}

TEST(FClasses, SplitEvenOrthogonalLabelsDouble) {
  int count = 0;
  for (const auto& label : f_classes(make_group(Family::SOplus, 2, 3))) {
    if (label.mu() == Partition{2} && label.lambda().empty()) {
      ++count;
      EXPECT_NE(label.split, SplitSign::none);
    }
  }
  EXPECT_EQ(count, 2);
  EXPECT_TRUE(is_split_d_label({Partition{2}, {}}));
  EXPECT_FALSE(is_split_d_label({Partition{2, 1}, {}}));
}

TEST(CentralizerOrder, Examples) {
  EXPECT_EQ(f_centralizer_order(make_label(make_group(Family::GL, 3, 3), Partition{2, 1})), 2);
  EXPECT_EQ(f_centralizer_order(make_label(make_group(Family::Sp, 2, 3), Partition{1}, Partition{1})), 4);
  EXPECT_EQ(f_centralizer_order(make_label(make_group(Family::U, 3, 3), Partition{3})), 3);
}

TEST(EnumerateCentralizer, Examples) {
  EXPECT_EQ(enumerate_f_centralizer(make_label(make_group(Family::GL, 2, 3), Partition{1, 1})).size(), 2U);
  EXPECT_EQ(enumerate_f_centralizer(make_label(make_group(Family::GL, 3, 3), Partition{3})).size(), 3U);
  EXPECT_EQ(enumerate_f_centralizer(make_label(make_group(Family::Sp, 1, 3), {}, Partition{1})).size(), 2U);
}

TEST(CentralizerOrder, SymmetricGroupClassesMatchBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(library_centralizers(make_group(Family::GL, n, 3)),
              brute::twisted_class_centralizers(brute::group_elements(n, false), nullptr))
        << "n=" << n;
  }
}

TEST(CentralizerOrder, TwistedSymmetricGroupClassesMatchBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    brute::Perm reversal{std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 1)};
    for (int i = 0; i < n; ++i) reversal.image[static_cast<std::size_t>(i)] = n - 1 - i;
    EXPECT_EQ(library_centralizers(make_group(Family::U, n, 3)),
              brute::twisted_class_centralizers(brute::group_elements(n, false), &reversal))
        << "n=" << n;
  }
}

TEST(CentralizerOrder, HyperoctahedralClassesMatchBruteForce) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(library_centralizers(make_group(Family::Sp, n, 3)),
              brute::twisted_class_centralizers(brute::group_elements(n, true), nullptr))
        << "n=" << n;
  }
}

TEST(CentralizerOrder, EvenSignClassesMatchBruteForce) {
  for (int n = 2; n <= 3; ++n) {
    const auto group = brute::even_sign_elements(n);
    brute::Perm flip{std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 1)};
    for (int i = 0; i < n; ++i) flip.image[static_cast<std::size_t>(i)] = i;
    flip.sign.back() = -1;
    EXPECT_EQ(library_centralizers(make_group(Family::SOplus, n, 3)), brute::twisted_class_centralizers(group, nullptr))
        << "n=" << n;
    EXPECT_EQ(library_centralizers(make_group(Family::SOminus, n, 3)), brute::twisted_class_centralizers(group, &flip))
        << "n=" << n;
  }
}

TEST(ClassEquation, SumsToGroupOrderProperty) {
  for (Family family : {Family::GL, Family::U, Family::Sp, Family::SOplus, Family::SOminus}) {
    for (int n = 1; n <= 4; ++n) {
      const GroupKind kind = make_group(family, n, 3);
      Integer total = 0;
      for (const auto& label : f_classes(kind)) total += weyl_order(kind) / f_centralizer_order(label);
      EXPECT_EQ(total, weyl_order(kind)) << to_string(kind);
    }
  }
}

TEST(EnumerateCentralizer, MatchesFormulaProperty) {
  for (Family family : {Family::GL, Family::U, Family::Sp, Family::SOplus, Family::SOminus}) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& label : f_classes(make_group(family, n, 3))) {
        EXPECT_EQ(Integer(static_cast<unsigned long>(enumerate_f_centralizer(label).size())), f_centralizer_order(label))
            << to_string(label);
      }
    }
  }
}

}  // namespace
}  // namespace ggp

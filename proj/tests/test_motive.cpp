#include <gtest/gtest.h>

#include <random>
#include <set>

#include "flagchow/errors.hpp"
#include "flagchow/motive.hpp"

using namespace flagchow;

namespace {

RootSystem rs_of(const char* t) { return RootSystem(DynkinType::parse(t)); }

std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    VertexSet s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i + 1);
    }
    out.push_back(s);
  }
  return out;
}

IntPoly reassemble(const std::vector<MotiveSummand>& parts) {
  IntPoly total;
  for (const auto& s : parts) {
    if (total.size() < s.twist + s.profile.size()) total.resize(s.twist + s.profile.size(), 0);
    for (size_t k = 0; k < s.profile.size(); ++k) total[s.twist + k] += s.profile[k];
  }
  return total;
}

Correspondence random_middle(const FlagVariety& x, std::mt19937& gen, int terms) {
  Correspondence q(x, 2);
  std::uniform_int_distribution<int> pick(0, x.size() - 1);
  for (int k = 0; k < terms; ++k) {
    const int a = pick(gen);
    const auto& same = x.basis(x.codim(a));
    const int c = same[std::uniform_int_distribution<size_t>(0, same.size() - 1)(gen)];
    q.add(a, x.cosets().dual(c), 1);
  }
  return q;
}

}  // namespace

TEST(Decompose, TrivialCircledSets) {
  CosetTable ct(rs_of("B3"), {2});
  auto one = decompose(ct, {});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].profile, poincare_polynomial(ct.root_system(), {2}));
  EXPECT_EQ(one[0].kernel_type.str(), "B3");
  auto split = decompose(ct, {1, 2, 3});
  EXPECT_EQ(static_cast<int>(split.size()), ct.size());
  for (const auto& s : split) EXPECT_TRUE(s.is_lefschetz());
  EXPECT_EQ(singleton_components(ct, {1, 2, 3}).size(), split.size());
  CosetTable p1(rs_of("A1"), {});
  EXPECT_TRUE(singleton_components(p1, {}).empty());
}

TEST(Decompose, ProfilesSumToPoincare) {
  for (const char* t : {"B2", "B3", "F4"}) {
    auto rs = rs_of(t);
    for (const auto& theta : all_subsets(rs.rank())) {
      CosetTable ct(rs, theta);
      const IntPoly g = poincare_polynomial(rs, theta);
      for (const auto& circled : all_subsets(rs.rank())) {
        auto parts = decompose(ct, circled);
        EXPECT_EQ(reassemble(parts), g) << t << " " << vertex_set_str(circled);
        int count = 0;
        for (const auto& s : parts) {
          EXPECT_LE(s.twist + static_cast<int>(s.profile.size()) - 1, ct.max_length());
          count += static_cast<int>(s.vertices.size());
        }
        EXPECT_EQ(count, ct.size());
      }
    }
  }
}

TEST(Decompose, MonotoneInCircledSet) {
  auto rs = rs_of("B3");
  CosetTable ct(rs, {});
  for (const auto& small : all_subsets(3)) {
    auto coarse = decompose(ct, small);
    std::vector<int> comp(ct.size());
    for (size_t k = 0; k < coarse.size(); ++k) {
      for (int v : coarse[k].vertices) comp[v] = static_cast<int>(k);
    }
    for (int extra = 1; extra <= 3; ++extra) {
      VertexSet big = small;
      if (contains(big, extra)) continue;
      big.push_back(extra);
      std::sort(big.begin(), big.end());
      for (const auto& s : decompose(ct, big)) {
        for (int v : s.vertices) EXPECT_EQ(comp[v], comp[s.vertices[0]]);
      }
    }
  }
}

TEST(Decompose, E7P7WithD4Kernel) {
  auto rs = rs_of("E7");
  CosetTable ct(rs, {1, 2, 3, 4, 5, 6});
  auto parts = decompose(ct, {1, 6, 7});
  std::vector<int> singles;
  int others = 0;
  for (const auto& s : parts) {
    EXPECT_EQ(s.kernel_type.str(), "D4");
    if (s.is_lefschetz()) {
      singles.push_back(s.twist);
    } else {
      ++others;
    }
  }
  EXPECT_EQ(singles, (std::vector<int>{0, 1, 9, 10, 17, 18, 26, 27}));
  EXPECT_EQ(others, 6);

  auto rost = refine_rost(parts, poincare_polynomial(rs, {1, 2, 3, 4, 5, 6}));
  std::vector<int> expect;
  for (int i = 2; i <= 22; ++i) expect.push_back(i);
  expect.insert(expect.end(), {11, 12, 13});
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(rost.rost, expect);
  EXPECT_EQ(rost.lefschetz.size() + 2 * rost.rost.size(), 56u);
}

TEST(Decompose, E7P7WithD6Kernel) {
  auto rs = rs_of("E7");
  CosetTable ct(rs, {1, 2, 3, 4, 5, 6});
  auto parts = decompose(ct, {1});
  ASSERT_EQ(parts.size(), 3u);
  auto d6 = rs_of("D6");
  const IntPoly quadric = poincare_polynomial(d6, {2, 3, 4, 5, 6});
  const IntPoly spinor = poincare_polynomial(d6, {1, 2, 3, 4, 5});
  EXPECT_EQ(quadric.size(), 11u);
  EXPECT_EQ(spinor.size(), 16u);
  EXPECT_EQ(parts[0].twist, 0);
  EXPECT_EQ(parts[0].profile, quadric);
  EXPECT_EQ(parts[1].twist, 6);
  EXPECT_EQ(parts[1].profile, spinor);
  EXPECT_EQ(parts[2].twist, 17);
  EXPECT_EQ(parts[2].profile, quadric);
  for (const auto& s : parts) EXPECT_EQ(s.kernel_type.str(), "D6");
}

TEST(Decompose, ClassSplitsAwayOnE7P1) {
  auto rs = rs_of("E7");
  CosetTable ct(rs, {2, 3, 4, 5, 6, 7});
  const int w = ct.index({7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1});
  const Word fw = ct.word(ct.dual(w));  // f = Z_w = [X_{dual(w)}]
  bool found = false;
  for (const auto& [word, codim] : singleton_components(ct, {1, 6, 7})) {
    if (word == fw) {
      found = true;
      EXPECT_EQ(codim, 17);
    }
  }
  EXPECT_TRUE(found);
}

TEST(RefineRost, Examples) {
  MotiveSummand s;
  s.vertices = {3, 4};
  s.twist = 5;
  s.profile = {1, 0, 0, 1};
  auto r = refine_rost({s}, {0, 0, 0, 0, 0, 1, 0, 0, 1});
  EXPECT_EQ(r.rost, (std::vector<int>{5}));
  EXPECT_TRUE(r.lefschetz.empty());
  CosetTable ct(rs_of("B2"), {});
  EXPECT_THROW(refine_rost(decompose(ct, {}), poincare_polynomial(ct.root_system(), {})),
               InputError);
}

TEST(Correspondence, DiagonalIsIdentity) {
  FlagVariety x(rs_of("B2"), {});
  const auto delta = Correspondence::diagonal(x, 2);
  std::mt19937 gen(1);
  for (int trial = 0; trial < 30; ++trial) {
    auto q = random_middle(x, gen, 4);
    EXPECT_EQ(compose(delta, q), q);
    EXPECT_EQ(compose(q, delta), q);
  }
  EXPECT_EQ(projector_rank(Correspondence::diagonal(x, 0)), 8);
  EXPECT_EQ(idempotent_power(delta).first, 1);
}

TEST(Correspondence, Examples) {
  FlagVariety x(rs_of("B2"), {});
  Correspondence one_pt(x, 2, {{x.fundamental(), x.point()}});
  EXPECT_EQ(one_pt.codim(), 4);
  EXPECT_EQ(compose(one_pt, one_pt), one_pt);
  EXPECT_EQ(projector_rank(one_pt), 1);
  EXPECT_EQ(projector_rank(Correspondence(x, 2)), 0);
  EXPECT_EQ(one_pt.transpose().terms().begin()->first,
            std::make_pair(0, x.size() - 1));
  Correspondence pt_pt(x, 2, {{x.point(), x.point()}});
  // nilpotent: q^2 = 0 is the idempotent reached
  auto [n, e] = idempotent_power(pt_pt);
  EXPECT_EQ(n, 2);
  EXPECT_TRUE(e.is_zero());
  EXPECT_TRUE(idempotent_power(Correspondence(x, 2, {{x.schubert(1), x.point()}})).second.is_zero());
  EXPECT_THROW(Correspondence(x, 2, {{x.point(), x.point()}, {x.fundamental(), x.point()}}),
               InputError);
  EXPECT_THROW(idempotent_power(Correspondence::diagonal(x, 0)), InputError);
}

TEST(Correspondence, Associative) {
  FlagVariety x(rs_of("B2"), {});
  std::mt19937 gen(2);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_middle(x, gen, 5), b = random_middle(x, gen, 5), c = random_middle(x, gen, 5);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(Correspondence, IdempotentPowers) {
  FlagVariety x(rs_of("B2"), {});
  std::mt19937 gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto q = random_middle(x, gen, 6);
    auto [n, e] = idempotent_power(q);
    EXPECT_EQ(compose(e, e), e);
    // n is least
    Correspondence p = q;
    for (int k = 1; k < n; ++k) {
      EXPECT_NE(compose(p, p), p);
      p = compose(q, p);
    }
  }
}

// On a two-dimensional graded piece, correspondences compose like 2x2
// matrices over F_2; those of order 3 reach an idempotent only at n = 3.
TEST(Correspondence, PeriodThreeOnB2) {
  FlagVariety x(rs_of("B2"), {});
  const auto& grade = x.basis(1);
  ASSERT_EQ(grade.size(), 2u);
  int found = 0;
  for (int mask = 0; mask < 16; ++mask) {
    Correspondence q(x, 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        if (mask >> (2 * r + c) & 1) q.add(grade[r], x.cosets().dual(grade[c]), 1);
      }
    }
    auto [n, e] = idempotent_power(q);
    if (n == 3) {
      ++found;
      EXPECT_EQ(projector_rank(e), 0);  // 2 mod 2
      EXPECT_EQ(e.terms().size(), 2u);
    }
  }
  EXPECT_EQ(found, 2);
}

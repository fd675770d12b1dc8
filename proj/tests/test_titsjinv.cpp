#include <gtest/gtest.h>

#include <set>

#include "flagchow/errors.hpp"
#include "flagchow/titsjinv.hpp"

using namespace flagchow;

namespace {

RootSystem rs_of(const char* t) { return RootSystem(DynkinType::parse(t)); }
DynkinType ty(const char* t) { return DynkinType::parse(t); }

struct EdgeView {
  std::string from, to;
  std::vector<int> labels;
  bool operator==(const EdgeView&) const = default;
};

std::vector<EdgeView> edges_of(const Automaton& a) {
  std::vector<EdgeView> out;
  for (const auto& e : a.edges) out.push_back({a.names[e.from], a.names[e.to], e.labels});
  return out;
}

// prod (1 - t^{d p^k}) / (1 - t^d), by multiplying truncated geometric series
IntPoly full_group_poincare(const KacEntry& e) {
  IntPoly out{1};
  for (int i = 0; i < e.rank(); ++i) {
    int top = e.d[i];
    for (int m = 0; m < e.k[i]; ++m) top *= e.p;
    IntPoly num(top + 1, 0), den(e.d[i] + 1, 0);
    num[0] = 1;
    num[top] = -1;
    den[0] = 1;
    den[e.d[i]] = -1;
    out = intpoly_mul(out, *intpoly_div(num, den));
  }
  return out;
}

}  // namespace

TEST(TitsIndex, AnisotropicKernel) {
  auto e7 = rs_of("E7");
  EXPECT_EQ(anisotropic_kernel(e7, {1, 6, 7}).str(), "D4");
  EXPECT_EQ(anisotropic_kernel(e7, {1}).str(), "D6");
  EXPECT_EQ(anisotropic_kernel(e7, {7}).str(), "E6");
  EXPECT_TRUE(anisotropic_kernel(e7, all_vertices(7)).empty());
  EXPECT_EQ(anisotropic_kernel(rs_of("E6"), {2, 4}).display(), "2A2");
  EXPECT_EQ(anisotropic_kernel(rs_of("F4"), {4}).str(), "B3");
}

TEST(Automaton, B2Example) {
  auto a = automaton(rs_of("B2"), {ty("B2"), {{}, {1}, {1, 2}}});
  EXPECT_EQ(a.names, (std::vector<std::string>{"B2", "B1", "1"}));
  EXPECT_EQ(edges_of(a), (std::vector<EdgeView>{
                             {"B2", "B1", {1}}, {"B2", "1", {2}}, {"B1", "1", {2}}}));
  EXPECT_EQ(height(a), 2);
}

TEST(Automaton, B3TrivialClifford) {
  auto a = automaton(rs_of("B3"), {ty("B3"), {{}, {1, 2, 3}}});
  EXPECT_EQ(edges_of(a), (std::vector<EdgeView>{{"B3", "1", {1, 2, 3}}}));
  EXPECT_EQ(height(a), 1);
}

TEST(Automaton, B3Full) {
  auto a = automaton(rs_of("B3"), {ty("B3"), {{1, 2, 3}, {1}, {}, {1, 2}}});
  EXPECT_EQ(a.names, (std::vector<std::string>{"B3", "B2", "B1", "1"}));
  EXPECT_EQ(edges_of(a), (std::vector<EdgeView>{{"B3", "B2", {1}},
                                                {"B3", "B1", {2}},
                                                {"B3", "1", {3}},
                                                {"B2", "B1", {2}},
                                                {"B2", "1", {3}},
                                                {"B1", "1", {3}}}));
  EXPECT_EQ(height(a), 3);
}

TEST(Automaton, SplitAndIllFormed) {
  auto b2 = rs_of("B2");
  auto split = automaton(b2, {ty("B2"), {{1, 2}}});
  EXPECT_EQ(height(split), 0);
  EXPECT_TRUE(split.edges.empty());
  EXPECT_THROW(automaton(b2, {ty("B2"), {}}), InputError);
  EXPECT_THROW(automaton(b2, {ty("B2"), {{1}, {2}, {1, 2}}}), InputError);
  auto b3 = rs_of("B3");
  EXPECT_THROW(automaton(b3, {ty("B3"), {{}, {1, 2}, {1, 3}, {1, 2, 3}}}), InputError);
  EXPECT_THROW(automaton(b3, {ty("B3"), {{}, {1}}}), InputError);
  EXPECT_THROW(automaton(b3, {ty("B2"), {{}}}), InputError);
}

TEST(HigherIndexTable, Rows) {
  auto f4 = higher_index_table(ty("F4"), {{0}, {}, true});
  EXPECT_EQ(f4.indices, (std::vector<VertexSet>{{}, {1, 2, 3, 4}}));
  auto f4b = higher_index_table(ty("F4"), {{1}, {}, true});
  EXPECT_EQ(f4b.indices, (std::vector<VertexSet>{{}, {4}, {1, 2, 3, 4}}));
  auto e6 = higher_index_table(ty("E6"), {{1}, {1, 0}, true});
  auto a = automaton(rs_of("E6"), e6);
  EXPECT_EQ(a.names, (std::vector<std::string>{"E6", "D4", "2A2", "1"}));
  auto e7 = higher_index_table(ty("E7"), {{0, 1, 1, 0}, {1}, false});
  auto b = automaton(rs_of("E7"), e7);
  std::set<std::string> names(b.names.begin(), b.names.end());
  EXPECT_EQ(names, (std::set<std::string>{"1", "D4", "D6", "E6", "E7"}));
  EXPECT_THROW(higher_index_table(ty("E6"), {{0}, {0, 0}, true}), InputError);
  EXPECT_THROW(higher_index_table(ty("E7"), {{1, 0, 0, 0}, {0}, true}), InputError);
  EXPECT_THROW(higher_index_table(ty("G2"), {}), InputError);
  EXPECT_THROW(higher_index_table(ty("F4"), {{2}, {}, true}), InputError);
}

// From the anisotropic state, reading vertex i reaches the split state
// exactly when the variety of maximal parabolics of type i is generically
// split.
TEST(HigherIndexTable, CoherentWithClassification) {
  std::vector<std::pair<const char*, TableInvariants>> rows;
  rows.push_back({"F4", {{0}, {}, true}});
  rows.push_back({"F4", {{1}, {}, true}});
  for (int j2 : {0, 1}) {
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; b <= 1; ++b) {
        if (j2 == 0 && a == 0 && b == 0) continue;
        rows.push_back({"E6", {{j2}, {a, b}, true}});
      }
    }
  }
  // admissible J_2 with trivial Tits algebras
  for (const std::vector<int>& j2 :
       {std::vector<int>{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 1}}) {
    for (int j3 : {0, 1}) {
      for (bool zc : {true, false}) {
        if (!zc && j2[1] == 0) continue;
        rows.push_back({"E7", {j2, {j3}, zc}});
      }
    }
  }
  for (const auto& [t, inv] : rows) {
    auto rs = rs_of(t);
    auto a = automaton(rs, higher_index_table(ty(t), inv));
    const int split = static_cast<int>(a.states.size()) - 1;
    ASSERT_TRUE(a.states[split] == all_vertices(rs.rank()));
    for (const auto& e : a.edges) {
      if (e.from != a.initial) continue;
      for (int i : e.labels) {
        EXPECT_EQ(e.to == split, is_generically_split(ty(t), i, inv)) << t << " i=" << i;
      }
    }
  }
}

TEST(GenericSplitting, Rows) {
  EXPECT_FALSE(is_generically_split(ty("F4"), 4, {{1}, {}, true}));
  EXPECT_TRUE(is_generically_split(ty("F4"), 1, {{1}, {1}, true}));
  EXPECT_FALSE(is_generically_split(ty("E6"), 6, {{1}, {}, true}));
  EXPECT_FALSE(is_generically_split(ty("E6"), 4, {{0}, {2, 0}, true}));
  EXPECT_TRUE(is_generically_split(ty("E6"), 3, {{1}, {2, 1}, true}));
  EXPECT_FALSE(is_generically_split(ty("E7"), 3, {{1, 0, 0, 0}, {}, true}));
  EXPECT_FALSE(is_generically_split(ty("E7"), 7, {{0, 1, 0, 0}, {}, true}));
  EXPECT_FALSE(is_generically_split(ty("E7"), 7, {{}, {1}, true}));
  EXPECT_TRUE(is_generically_split(ty("E7"), 2, {{0, 1, 1, 1}, {1}, true}));
  EXPECT_FALSE(is_generically_split(ty("E8"), 8, {{1, 0, 0, 0}, {}, true}));
  EXPECT_FALSE(is_generically_split(ty("E8"), 7, {{}, {1, 1}, true}));
  EXPECT_TRUE(is_generically_split(ty("E8"), 2, {{3, 2, 1, 1}, {1, 1}, true}));
  EXPECT_THROW(is_generically_split(ty("B3"), 1, {}), InputError);
}

TEST(KacTable, Entries) {
  auto f4 = kac_entry(ty("F4"), 2);
  EXPECT_EQ(f4.d, (std::vector<int>{3}));
  EXPECT_EQ(f4.k, (std::vector<int>{1}));
  auto e7 = kac_entry(ty("E7"), 2);
  EXPECT_EQ(e7.d, (std::vector<int>{1, 3, 5, 9}));
  EXPECT_EQ(e7.k, (std::vector<int>{1, 1, 1, 1}));
  auto e6 = kac_entry(ty("E6"), 3);
  EXPECT_EQ(e6.d, (std::vector<int>{1, 4}));
  auto d4 = kac_entry(ty("D4"), 2);
  EXPECT_EQ(d4.d, (std::vector<int>{1, 3}));
  EXPECT_EQ(d4.k, (std::vector<int>{2, 1}));
  EXPECT_EQ(kac_entry(ty("A2"), 3).k, (std::vector<int>{1}));
  EXPECT_EQ(kac_entry(ty("A3"), 2).k, (std::vector<int>{2}));
  EXPECT_EQ(kac_entry(ty("E8"), 5).d, (std::vector<int>{6}));
  EXPECT_EQ(kac_entry(ty("E8"), 7).rank(), 0);
  EXPECT_EQ(kac_entry(ty("G2"), 3).rank(), 0);
  EXPECT_THROW(kac_entry(ty("E8"), 4), InputError);
  EXPECT_THROW(kac_entry(ty("A2xA2"), 3), InputError);
}

TEST(KacTable, DegreesCoprimeAndSorted) {
  for (const char* t : {"A1", "A3", "A5", "A7", "B2", "B3", "B4", "B7", "C2", "C4", "C6",
                        "D4", "D5", "D6", "D8", "G2", "F4", "E6", "E7", "E8"}) {
    for (int p : {2, 3, 5, 7}) {
      auto e = kac_entry(ty(t), p);
      EXPECT_EQ(e.d.size(), e.k.size());
      EXPECT_TRUE(std::is_sorted(e.d.begin(), e.d.end()));
      for (size_t i = 0; i < e.d.size(); ++i) {
        EXPECT_NE(e.d[i] % p, 0) << t << " " << p;
        EXPECT_GE(e.k[i], 1);
      }
    }
  }
}

TEST(DegLex, Examples) {
  EXPECT_TRUE(deglex_leq({1, 2}, {1, 2}, {1, 3}));
  EXPECT_TRUE(deglex_leq({2, 0}, {0, 1}, {1, 2}));
  EXPECT_FALSE(deglex_leq({0, 1}, {2, 0}, {1, 2}));
  EXPECT_TRUE(deglex_leq({5, 0}, {0, 3}, {1, 3}));
  EXPECT_THROW(deglex_leq({1}, {1, 2}, {1, 2}), InputError);
}

TEST(DegLex, TotalOrder) {
  const std::vector<int> kDegrees{1, 3, 5};
  for (int r = 1; r <= 3; ++r) {
    std::vector<std::vector<int>> tuples;
    const int count = r == 1 ? 4 : (r == 2 ? 16 : 64);
    for (int code = 0; code < count; ++code) {
      std::vector<int> t;
      for (int i = 0, c = code; i < r; ++i, c /= 4) t.push_back(c % 4);
      tuples.push_back(t);
    }
    const std::vector<int> d(kDegrees.begin(), kDegrees.begin() + r);
    for (const auto& a : tuples) {
      for (const auto& b : tuples) {
        EXPECT_TRUE(deglex_leq(a, b, d) || deglex_leq(b, a, d));
        if (deglex_leq(a, b, d) && deglex_leq(b, a, d)) EXPECT_EQ(a, b);
        for (const auto& c : tuples) {
          if (deglex_leq(a, b, d) && deglex_leq(b, c, d)) EXPECT_TRUE(deglex_leq(a, c, d));
        }
      }
    }
  }
}

TEST(JInvariantPoincare, RightHandSide) {
  EXPECT_EQ(jinv_poincare_factor(make_profile(ty("F4"), 2, {0})), (IntPoly{1}));
  EXPECT_EQ(jinv_poincare_factor(make_profile(ty("F4"), 2, {1})), (IntPoly{1, 0, 0, 1}));
  IntPoly expect{1};
  for (int d : {1, 3, 5, 9}) {
    IntPoly f(d + 1, 0);
    f[0] = f[d] = 1;
    expect = intpoly_mul(expect, f);
  }
  EXPECT_EQ(jinv_poincare_factor(make_profile(ty("E7"), 2, {1, 1, 1, 1})), expect);
  EXPECT_THROW(make_profile(ty("E7"), 2, {1, 1}), InputError);
  EXPECT_THROW(make_profile(ty("E7"), 2, {2, 0, 0, 0}), InputError);
}

TEST(JInvariantPoincare, FullProfileIsGroupPoincare) {
  for (const char* t : {"F4", "E6", "E7", "E8", "G2", "D4", "D6", "B5", "A3", "C4"}) {
    for (int p : {2, 3, 5}) {
      auto e = kac_entry(ty(t), p);
      auto jp = make_profile(ty(t), p, e.k);
      EXPECT_EQ(jinv_poincare_factor(jp), full_group_poincare(e)) << t << " " << p;
      auto zero = make_profile(ty(t), p, std::vector<int>(e.rank(), 0));
      EXPECT_EQ(jinv_poincare_factor(zero), (IntPoly{1}));
    }
  }
}

TEST(JInvariantPoincare, PredictedRationalPoincare) {
  auto e6 = rs_of("E6");
  auto bad = predicted_rational_poincare(e6, {2, 3, 4, 5, 6}, make_profile(ty("E6"), 2, {1}));
  EXPECT_FALSE(bad.is_polynomial);
  // power-series oracle: quotient * (1 + t^3) agrees with g up to its degree
  const IntPoly g = poincare_polynomial(e6, {2, 3, 4, 5, 6});
  IntPoly back = intpoly_mul(bad.quotient, {1, 0, 0, 1});
  back.resize(g.size());
  EXPECT_EQ(back, g);

  auto zero = predicted_rational_poincare(e6, {2, 3, 4, 5, 6}, make_profile(ty("E6"), 2, {0}));
  EXPECT_TRUE(zero.is_polynomial);
  EXPECT_EQ(zero.quotient, g);

  auto e7 = rs_of("E7");
  auto triv = predicted_rational_poincare(e7, {1, 2, 3, 4, 5, 6},
                                          make_profile(ty("E7"), 2, {0, 0, 0, 0}));
  EXPECT_TRUE(triv.is_polynomial);
  // F4/P4 with J_2 = (1): 1 + t^3 divides g exactly
  auto f4 = predicted_rational_poincare(rs_of("F4"), {1, 2, 3}, make_profile(ty("F4"), 2, {1}));
  EXPECT_TRUE(f4.is_polynomial);
}

TEST(JInvariantPoincare, ForcedZeroIndices) {
  EXPECT_EQ(forced_zero_indices(ty("E7"), 2, ty("D4")), (std::vector<int>{3, 4}));
  EXPECT_EQ(forced_zero_indices(ty("E6"), 3, ty("2A2")), (std::vector<int>{2}));
  EXPECT_EQ(forced_zero_indices(ty("E7"), 2, DynkinType()), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(forced_zero_indices(ty("F4"), 2, ty("B3")), (std::vector<int>{}));
}

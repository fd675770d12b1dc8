#include "flagchow/titsjinv.hpp"

#include <algorithm>
#include <map>

#include "flagchow/errors.hpp"

namespace flagchow {

DynkinType anisotropic_kernel(const RootSystem& rs, const VertexSet& circled) {
  validate_vertex_set(circled, rs.rank());
  return identify_subdiagram(rs, complement(circled, rs.rank()));
}

namespace {

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool size_then_lex(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Automaton automaton(const RootSystem& rs, const HigherIndexSet& omega) {
  if (!(omega.type == rs.type())) throw InputError("index set and root system differ in type");
  if (omega.indices.empty()) throw InputError("empty set of higher indices");
  Automaton a;
  a.type = omega.type;
  a.states = omega.indices;
  for (auto& s : a.states) {
    std::sort(s.begin(), s.end());
    validate_vertex_set(s, rs.rank());
  }
  std::sort(a.states.begin(), a.states.end(), size_then_lex);
  a.states.erase(std::unique(a.states.begin(), a.states.end()), a.states.end());
  for (const auto& s : a.states) {
    if (!is_subset(a.states.front(), s)) {
      throw InputError("ill-formed index set: no unique minimal index");
    }
    a.names.push_back(kernel_display(rs, complement(s, rs.rank())));
  }
  a.initial = 0;
  const int n = static_cast<int>(a.states.size());
  for (int from = 0; from < n; ++from) {
    const VertexSet& c = a.states[from];
    std::map<int, std::vector<int>> by_target;
    for (int i : complement(c, rs.rank())) {
      VertexSet need = c;
      need.push_back(i);
      std::sort(need.begin(), need.end());
      std::vector<int> cands;
      for (int t = 0; t < n; ++t) {
        if (is_subset(need, a.states[t])) cands.push_back(t);
      }
      std::vector<int> minimal;
      for (int t : cands) {
        bool least = true;
        for (int u : cands) {
          if (u != t && is_subset(a.states[u], a.states[t])) least = false;
        }
        if (least) minimal.push_back(t);
      }
      if (minimal.size() != 1) {
        throw InputError("ill-formed index set: reading vertex " + std::to_string(i) +
                         " from " + vertex_set_str(c) + " has " +
                         std::to_string(minimal.size()) + " minimal targets");
      }
      by_target[minimal[0]].push_back(i);
    }
    for (auto& [to, labels] : by_target) a.edges.push_back({from, to, labels});
  }
  return a;
}

int height(const Automaton& a) {
  // edges go to strictly larger sets, and states are sorted by size
  std::vector<int> best(a.states.size(), 0);
  for (int s = static_cast<int>(a.states.size()) - 1; s >= 0; --s) {
    for (const auto& e : a.edges) {
      if (e.from == s) best[s] = std::max(best[s], best[e.to] + 1);
    }
  }
  return best.empty() ? 0 : best[a.initial];
}

// ------------------------------------------------------------------ tables

namespace {

SimpleType simple_of(const DynkinType& type) {
  if (type.components().size() != 1) throw InputError("expected a simple type, got " + type.str());
  return type.components()[0];
}

int entry_at(const std::vector<int>& j, size_t i) { return i < j.size() ? j[i] : 0; }

bool all_zero(const std::vector<int>& j) {
  return std::all_of(j.begin(), j.end(), [](int x) { return x == 0; });
}

}  // namespace

std::optional<VertexSet> kernel_realization(const DynkinType& type, const DynkinType& kernel) {
  const SimpleType s = simple_of(type);
  if (kernel.empty()) return all_vertices(s.rank);
  if (kernel == type) return VertexSet{};
  // realizations from the classification of Tits indices
  static const std::map<std::pair<std::string, std::string>, VertexSet> known{
      {{"F4", "B3"}, {4}},
      {{"E6", "D4"}, {1, 6}},
      {{"E6", "A2xA2"}, {2, 4}},
      {{"E7", "D4"}, {1, 6, 7}},
      {{"E7", "D6"}, {1}},
      {{"E7", "E6"}, {7}},
  };
  auto it = known.find({type.str(), kernel.str()});
  if (it == known.end()) return std::nullopt;
  return it->second;
}

HigherIndexSet higher_index_table(const DynkinType& type, const TableInvariants& inv) {
  const SimpleType s = simple_of(type);
  std::vector<std::string> kernels{"1", type.str()};
  if (s.family == 'F' && s.rank == 4) {
    make_profile(type, 2, inv.j2.empty() ? std::vector<int>{0} : inv.j2);
    if (entry_at(inv.j2, 0) == 1) kernels.push_back("B3");
  } else if (s.family == 'E' && s.rank == 6) {
    make_profile(type, 2, inv.j2.empty() ? std::vector<int>{0} : inv.j2);
    make_profile(type, 3, inv.j3.empty() ? std::vector<int>{0, 0} : inv.j3);
    const bool two = entry_at(inv.j2, 0) != 0;
    const bool three = entry_at(inv.j3, 0) != 0;
    if (!two && !three && entry_at(inv.j3, 1) == 0) {
      throw InputError("trivial J-invariant: the group is split");
    }
    if (two) kernels.push_back("D4");
    if (three) kernels.push_back("2A2");
  } else if (s.family == 'E' && s.rank == 7) {
    make_profile(type, 2, inv.j2.empty() ? std::vector<int>(4, 0) : inv.j2);
    make_profile(type, 3, inv.j3.empty() ? std::vector<int>{0} : inv.j3);
    if (entry_at(inv.j2, 0) != 0) {
      throw InputError("j_1 of J_2 is non-zero only for non-trivial Tits algebras");
    }
    if (!all_zero(inv.j2)) kernels.push_back("D4");
    if (!all_zero(inv.j3)) kernels.push_back("E6");
    if (!inv.zero_cycle_of_degree_one) kernels.push_back("D6");
  } else {
    throw InputError("no table of higher indices for type " + type.str());
  }
  HigherIndexSet out{type, {}};
  for (const auto& k : kernels) {
    auto c = kernel_realization(type, DynkinType::parse(k));
    FLAGCHOW_ASSERT(c.has_value(), "missing kernel realization");
    out.indices.push_back(*c);
  }
  std::sort(out.indices.begin(), out.indices.end(), size_then_lex);
  return out;
}

// ------------------------------------------------------------- J-invariant

namespace {

int valuation(int n, int p) {
  int v = 0;
  while (n > 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// largest k with d * 2^k <= bound
int floor_log2_ratio(int bound, int d) {
  int k = 0;
  while (static_cast<int64_t>(d) << (k + 1) <= bound) ++k;
  return k;
}

}  // namespace

KacEntry kac_entry(const DynkinType& type, int p) {
  const SimpleType s = simple_of(type);
  if (p < 2) throw InputError("p must be a prime");
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) throw InputError("p must be a prime");
  }
  KacEntry e{type, p, {}, {}};
  auto set = [&](std::vector<int> d, std::vector<int> k) {
    e.d = std::move(d);
    e.k = std::move(k);
  };
  const int n = s.rank;
  switch (s.family) {
    case 'A':
      if (valuation(n + 1, p) > 0) set({1}, {valuation(n + 1, p)});
      break;
    case 'B':
      if (p == 2) {
        for (int i = 1; i <= (n + 1) / 2; ++i) {
          e.d.push_back(2 * i - 1);
          e.k.push_back(floor_log2_ratio(2 * n, 2 * i - 1));
        }
      }
      break;
    case 'C':
      if (p == 2 && valuation(n, 2) > 0) set({1}, {valuation(n, 2)});
      break;
    case 'D':
      if (p == 2) {
        for (int i = 1; i <= n / 2; ++i) {
          e.d.push_back(2 * i - 1);
          e.k.push_back(floor_log2_ratio(2 * n - 1, 2 * i - 1));
        }
      }
      break;
    case 'G':
      if (p == 2) set({3}, {1});
      break;
    case 'F':
      if (p == 2) set({3}, {1});
      if (p == 3) set({4}, {1});
      break;
    case 'E':
      if (n == 6 && p == 2) set({3}, {1});
      if (n == 6 && p == 3) set({1, 4}, {2, 1});
      if (n == 7 && p == 2) set({1, 3, 5, 9}, {1, 1, 1, 1});
      if (n == 7 && p == 3) set({4}, {1});
      if (n == 8 && p == 2) set({3, 5, 9, 15}, {3, 2, 1, 1});
      if (n == 8 && p == 3) set({4, 10}, {1, 1});
      if (n == 8 && p == 5) set({6}, {1});
      break;
    default:
      break;
  }
  return e;
}

JProfile make_profile(const DynkinType& type, int p, std::vector<int> j) {
  JProfile jp{kac_entry(type, p), std::move(j)};
  if (static_cast<int>(jp.j.size()) != jp.entry.rank()) {
    throw InputError("J-invariant of " + type.str() + " at p=" + std::to_string(p) +
                     " has " + std::to_string(jp.entry.rank()) + " entries");
  }
  for (int i = 0; i < jp.entry.rank(); ++i) {
    if (jp.j[i] < 0 || jp.j[i] > jp.entry.k[i]) {
      throw InputError("j_" + std::to_string(i + 1) + " must lie in [0, " +
                       std::to_string(jp.entry.k[i]) + "]");
    }
  }
  return jp;
}

bool deglex_leq(const std::vector<int>& m, const std::vector<int>& n,
                const std::vector<int>& d) {
  if (m.size() != n.size() || m.size() != d.size()) throw InputError("tuple lengths differ");
  int64_t wm = 0, wn = 0;
  for (size_t i = 0; i < d.size(); ++i) {
    wm += static_cast<int64_t>(d[i]) * m[i];
    wn += static_cast<int64_t>(d[i]) * n[i];
  }
  if (wm != wn) return wm < wn;
  for (size_t i = m.size(); i-- > 0;) {
    if (m[i] != n[i]) return m[i] < n[i];
  }
  return true;
}

IntPoly jinv_poincare_factor(const JProfile& jp) {
  IntPoly out{1};
  for (int i = 0; i < jp.entry.rank(); ++i) {
    int64_t pj = 1;
    for (int m = 0; m < jp.j[i]; ++m) pj *= jp.entry.p;
    const int d = jp.entry.d[i];
    IntPoly f(static_cast<size_t>(d * (pj - 1) + 1), 0);
    for (int64_t m = 0; m < pj; ++m) f[m * d] = 1;
    out = intpoly_mul(out, f);
  }
  return out;
}

RationalPoincare predicted_rational_poincare(const RootSystem& rs, const VertexSet& theta,
                                             const JProfile& jp) {
  const IntPoly g = poincare_polynomial(rs, theta);
  const IntPoly r = jinv_poincare_factor(jp);
  RationalPoincare out;
  if (auto q = intpoly_div(g, r)) {
    out.quotient = *q;
    out.is_polynomial = std::all_of(q->begin(), q->end(), [](int64_t c) { return c >= 0; });
    return out;
  }
  // power series g / r, r(0) = 1
  out.quotient.assign(g.size(), 0);
  for (size_t k = 0; k < g.size(); ++k) {
    int64_t c = g[k];
    for (size_t m = 1; m <= k && m < r.size(); ++m) c -= r[m] * out.quotient[k - m];
    out.quotient[k] = c;
  }
  return out;
}

bool is_generically_split(const DynkinType& type, int i, const TableInvariants& inv) {
  const SimpleType s = simple_of(type);
  if (s.family != 'F' && s.family != 'E') {
    throw InputError("the classification covers F4, E6, E7 and E8 only");
  }
  if (s.family == 'F' && s.rank != 4) throw InputError("unknown type " + type.str());
  if (i < 1 || i > s.rank) throw InputError("vertex out of range");
  auto in = [i](std::initializer_list<int> l) { return std::find(l.begin(), l.end(), i) != l.end(); };
  const int a1 = entry_at(inv.j2, 0), a2 = entry_at(inv.j2, 1);
  const int b1 = entry_at(inv.j3, 0);
  bool not_split = false;
  if (s.family == 'F') {
    not_split = i == 4 && a1 == 1;
  } else if (s.rank == 6) {
    not_split = (in({1, 6}) && a1 == 1) || (in({2, 4}) && b1 != 0);
  } else if (s.rank == 7) {
    not_split = (in({1, 3, 4, 6}) && a1 != 0) || (in({1, 6, 7}) && a2 != 0) ||
                (i == 7 && b1 == 1);
  } else if (s.rank == 8) {
    not_split = (in({1, 6, 7, 8}) && a1 != 0) || (in({7, 8}) && b1 == 1);
  } else {
    throw InputError("unknown type " + type.str());
  }
  return !not_split;
}

std::vector<int> forced_zero_indices(const DynkinType& type, int p, const DynkinType& kernel) {
  const KacEntry e = kac_entry(type, p);
  std::vector<int> kernel_degrees;
  for (const auto& c : kernel.components()) {
    const KacEntry k = kac_entry(DynkinType({c}), p);
    kernel_degrees.insert(kernel_degrees.end(), k.d.begin(), k.d.end());
  }
  std::vector<int> out;
  for (int i = 0; i < e.rank(); ++i) {
    if (std::find(kernel_degrees.begin(), kernel_degrees.end(), e.d[i]) == kernel_degrees.end()) {
      out.push_back(i + 1);
    }
  }
  return out;
}

}  // namespace flagchow

#include "flagchow/motive.hpp"

#include <algorithm>
#include <numeric>

#include "flagchow/errors.hpp"

namespace flagchow {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<MotiveSummand> decompose(const CosetTable& ct, const VertexSet& circled) {
  const RootSystem& rs = ct.root_system();
  validate_vertex_set(circled, rs.rank());
  const DynkinType kernel = identify_subdiagram(rs, complement(circled, rs.rank()));
  UnionFind uf(ct.size());
  for (int v = 0; v < ct.size(); ++v) {
    for (int i = 1; i <= rs.rank(); ++i) {
      if (contains(circled, i)) continue;
      const int w = ct.up(v, i);
      if (w >= 0) uf.unite(v, w);
    }
  }
  std::map<int, MotiveSummand> by_root;
  for (int v = 0; v < ct.size(); ++v) by_root[uf.find(v)].vertices.push_back(v);

  const int dim = ct.max_length();
  std::vector<MotiveSummand> out;
  for (auto& [root, s] : by_root) {
    int lo = dim, hi = 0;
    for (int v : s.vertices) {
      lo = std::min(lo, dim - ct.length(v));
      hi = std::max(hi, dim - ct.length(v));
    }
    s.twist = lo;
    s.profile.assign(hi - lo + 1, 0);
    for (int v : s.vertices) s.profile[dim - ct.length(v) - lo]++;
    s.kernel_type = kernel;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const MotiveSummand& a, const MotiveSummand& b) {
    if (a.twist != b.twist) return a.twist < b.twist;
    if (a.profile != b.profile) return a.profile < b.profile;
    return a.vertices.front() < b.vertices.front();
  });
  return out;
}

RostDecomposition refine_rost(const std::vector<MotiveSummand>& summands,
                              const IntPoly& poincare) {
  const IntPoly rost_profile{1, 0, 0, 1};
  RostDecomposition out;
  IntPoly total(1, 0);
  auto accumulate = [&](int twist, const IntPoly& p) {
    if (total.size() < twist + p.size()) total.resize(twist + p.size(), 0);
    for (size_t k = 0; k < p.size(); ++k) total[twist + k] += p[k];
  };
  for (const auto& s : summands) {
    if (s.is_lefschetz()) {
      out.lefschetz.push_back(s.twist);
      accumulate(s.twist, {1});
      continue;
    }
    auto q = intpoly_div(s.profile, rost_profile);
    if (!q) {
      throw InputError("component at twist " + std::to_string(s.twist) +
                       " has profile " + intpoly_str(s.profile) +
                       ", not divisible by 1+t^3");
    }
    for (size_t k = 0; k < q->size(); ++k) {
      if ((*q)[k] < 0) throw InputError("negative Rost multiplicity");
      for (int64_t m = 0; m < (*q)[k]; ++m) out.rost.push_back(s.twist + static_cast<int>(k));
    }
    accumulate(s.twist, intpoly_mul(*q, rost_profile));
  }
  std::sort(out.lefschetz.begin(), out.lefschetz.end());
  std::sort(out.rost.begin(), out.rost.end());
  IntPoly expect = poincare;
  while (expect.size() < total.size()) expect.push_back(0);
  while (total.size() < expect.size()) total.push_back(0);
  FLAGCHOW_ASSERT(total == expect, "Rost refinement does not reassemble the Poincare polynomial");
  return out;
}

std::vector<std::pair<Word, int>> singleton_components(const CosetTable& ct,
                                                       const VertexSet& circled) {
  std::vector<std::pair<Word, int>> out;
  for (const auto& s : decompose(ct, circled)) {
    if (s.is_lefschetz()) out.emplace_back(ct.word(s.vertices[0]), s.twist);
  }
  return out;
}

// ------------------------------------------------------------ correspondences

Correspondence::Correspondence(const FlagVariety& x, int modulus)
    : x_(&x), modulus_(modulus) {
  if (modulus < 0) throw InputError("negative modulus");
}

Correspondence::Correspondence(const FlagVariety& x, int modulus,
                               const std::vector<std::pair<ChowClass, ChowClass>>& pairs)
    : Correspondence(x, modulus) {
  for (const auto& [a, b] : pairs) {
    if (a.theta != x.theta() || b.theta != x.theta()) {
      throw InputError("correspondence factor lives on a different variety");
    }
    for (const auto& [i, ci] : a.coeffs) {
      for (const auto& [j, cj] : b.coeffs) {
        const mpq_class c = ci * cj;
        if (c.get_den() != 1) throw InputError("correspondence coefficients must be integral");
        mpz_class v = c.get_num();
        if (modulus > 0) v %= modulus;
        if (!v.fits_slong_p()) throw ResourceError("correspondence coefficient too large");
        add(i, j, v.get_si());
      }
    }
  }
  int d = -1;
  for (const auto& [ab, c] : terms_) {
    const int e = x.codim(ab.first) + x.codim(ab.second);
    if (d >= 0 && e != d) throw InputError("correspondence is not homogeneous");
    d = e;
  }
}

Correspondence Correspondence::diagonal(const FlagVariety& x, int modulus) {
  Correspondence q(x, modulus);
  for (int w = 0; w < x.size(); ++w) q.add(w, x.cosets().dual(w), 1);
  return q;
}

int Correspondence::codim() const {
  if (terms_.empty()) return -1;
  const auto& ab = terms_.begin()->first;
  return x_->codim(ab.first) + x_->codim(ab.second);
}

void Correspondence::add(int a, int b, int64_t c) {
  int64_t& slot = terms_[{a, b}];
  slot += c;
  if (modulus_ > 0) {
    slot %= modulus_;
    if (slot < 0) slot += modulus_;
  }
  if (slot == 0) terms_.erase({a, b});
}

Correspondence Correspondence::transpose() const {
  Correspondence out(*x_, modulus_);
  for (const auto& [ab, c] : terms_) out.add(ab.second, ab.first, c);
  return out;
}

bool Correspondence::operator==(const Correspondence& o) const {
  return x_->theta() == o.x_->theta() && modulus_ == o.modulus_ && terms_ == o.terms_;
}

Correspondence compose(const Correspondence& q1, const Correspondence& q2) {
  if (q1.variety().theta() != q2.variety().theta() ||
      !(q1.variety().root_system().type() == q2.variety().root_system().type())) {
    throw InputError("composing correspondences on different varieties");
  }
  if (q1.modulus() != q2.modulus()) throw InputError("composing over different rings");
  const FlagVariety& x = q1.variety();
  // deg([X_b][X_c]) = 1 exactly when c = dual(b)
  std::map<int, std::vector<std::pair<int, int64_t>>> by_first;
  for (const auto& [cd, coef] : q1.terms()) by_first[cd.first].emplace_back(cd.second, coef);
  Correspondence out(x, q1.modulus());
  for (const auto& [ab, coef] : q2.terms()) {
    auto it = by_first.find(x.cosets().dual(ab.second));
    if (it == by_first.end()) continue;
    for (const auto& [d, c2] : it->second) out.add(ab.first, d, coef * c2);
  }
  return out;
}

std::pair<int, Correspondence> idempotent_power(const Correspondence& q, int max_steps) {
  if (q.modulus() <= 0) throw InputError("idempotent powers need a finite coefficient ring");
  std::vector<Correspondence> powers{q};  // powers[k] = q^{k+1}
  std::map<Correspondence::Terms, int> seen{{q.terms(), 1}};
  for (int k = 2; k <= max_steps; ++k) {
    Correspondence next = compose(q, powers.back());
    auto it = seen.find(next.terms());
    if (it != seen.end()) {
      const int start = it->second, period = k - start;
      const int n = ((start + period - 1) / period) * period;
      return {n, powers[n - 1]};
    }
    seen.emplace(next.terms(), k);
    powers.push_back(std::move(next));
  }
  throw ResourceError("no repetition among the first " + std::to_string(max_steps) +
                      " powers");
}

int64_t projector_rank(const Correspondence& q) {
  // q . q^t = sum (a d) x (b c) over pairs of terms (a, b), (c, d)
  const FlagVariety& x = q.variety();
  int64_t r = 0;
  for (const auto& [ab, c1] : q.terms()) {
    const auto it = q.terms().find({x.cosets().dual(ab.second), x.cosets().dual(ab.first)});
    if (it != q.terms().end()) r += c1 * it->second;
  }
  if (q.modulus() > 0) r %= q.modulus();
  return r;
}

}  // namespace flagchow

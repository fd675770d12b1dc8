// Invariant generators, preimages under the characteristic map, products
// and Chern classes on FlagVariety.

#include <algorithm>
#include <random>
#include <set>

#include "flagchow/errors.hpp"
#include "flagchow/schubert.hpp"
#include "linalg.hpp"

namespace flagchow {

using detail::EchelonBasis;
using detail::QVector;

namespace {

mpz_class linear_value(const Weight& mu, const std::vector<mpz_class>& vals) {
  mpz_class s = 0;
  for (size_t j = 0; j < mu.size(); ++j) {
    if (mu[j] != 0) s += mu[j] * vals[j];
  }
  return s;
}

mpz_class generator_value(const InvariantGenerator& g,
                          const std::vector<mpz_class>& vals) {
  mpz_class s = 0, t;
  for (const auto& mu : g.orbit) {
    mpz_pow_ui(t.get_mpz_t(), linear_value(mu, vals).get_mpz_t(), g.degree);
    s += t;
  }
  return s;
}

void enumerate_monomials(const std::vector<int>& deg, int d, size_t k,
                         std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (k == deg.size()) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (int e = d / deg[k]; e >= 0; --e) {
    cur[k] = e;
    enumerate_monomials(deg, d - e * deg[k], k + 1, cur, out);
  }
  cur[k] = 0;
}

std::vector<std::vector<int>> monomials(const std::vector<int>& deg, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(deg.size(), 0);
  if (d >= 0) enumerate_monomials(deg, d, 0, cur, out);
  return out;
}

mpz_class monomial_value(const std::vector<int>& e,
                         const std::vector<mpz_class>& gvals) {
  mpz_class v = 1, t;
  for (size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    mpz_pow_ui(t.get_mpz_t(), gvals[k].get_mpz_t(), e[k]);
    v *= t;
  }
  return v;
}

std::vector<Weight> orbit_of(const RootSystem& rs, const VertexSet& theta,
                             const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::vector<Weight> todo{lambda};
  while (!todo.empty()) {
    Weight mu = todo.back();
    todo.pop_back();
    for (int i : theta) {
      Weight nu = mu;
      rs.reflect_weight(i - 1, nu);
      if (seen.insert(nu).second) todo.push_back(nu);
    }
  }
  return {seen.begin(), seen.end()};
}

// Dominant candidate weights for orbit power sums, smallest orbits first.
std::vector<Weight> candidate_weights(const RootSystem& rs, const VertexSet& theta) {
  const int n = rs.rank();
  std::vector<Weight> cands;
  auto unit = [n](int j) {
    Weight w(n, 0);
    w[j] = 1;
    return w;
  };
  for (int j = 0; j < n; ++j) cands.push_back(unit(j));
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Weight w = unit(j);
      w[k] = 1;
      cands.push_back(w);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;
      Weight w = unit(j);
      w[j] = 2;
      w[k] = 1;
      cands.push_back(w);
    }
  }
  const uint64_t total = parabolic_order(rs, theta);
  std::vector<std::pair<uint64_t, Weight>> sized;
  for (auto& w : cands) {
    VertexSet stab;
    for (int i : theta) {
      if (w[i - 1] == 0) stab.push_back(i);
    }
    const uint64_t size = total / parabolic_order(rs, stab);
    if (size <= 200000) sized.emplace_back(size, std::move(w));
  }
  std::stable_sort(sized.begin(), sized.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Weight> out;
  for (auto& [s, w] : sized) out.push_back(std::move(w));
  return out;
}

}  // namespace

void FlagVariety::ensure_generators() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (gens_ready_) return;
  const RootSystem& rs = root_system();
  const int n = rs.rank();
  std::vector<InvariantGenerator> gens;
  for (int i = 1; i <= n; ++i) {
    if (contains(theta(), i)) continue;
    Weight w(n, 0);
    w[i - 1] = 1;
    gens.push_back({1, {w}});
  }
  std::vector<int> degrees = weyl_degrees(identify_subdiagram(rs, theta()));
  std::sort(degrees.begin(), degrees.end());
  const std::vector<Weight> cands = candidate_weights(rs, theta());
  std::mt19937_64 gen(0x5eed);
  std::uniform_int_distribution<int> dist(-40, 40);

  size_t pos = 0;
  while (pos < degrees.size()) {
    const int d = degrees[pos];
    size_t need = 0;
    while (pos < degrees.size() && degrees[pos] == d) {
      ++need;
      ++pos;
    }
    std::vector<int> gdeg;
    for (const auto& g : gens) gdeg.push_back(g.degree);
    const auto monos = monomials(gdeg, d);
    const size_t npts = monos.size() + need + 4;
    std::vector<std::vector<mpz_class>> pts(npts, std::vector<mpz_class>(n));
    std::vector<std::vector<mpz_class>> gvals(npts);
    for (size_t p = 0; p < npts; ++p) {
      for (int j = 0; j < n; ++j) pts[p][j] = dist(gen);
      for (const auto& g : gens) gvals[p].push_back(generator_value(g, pts[p]));
    }
    EchelonBasis span(npts);
    for (const auto& m : monos) {
      QVector v(npts);
      for (size_t p = 0; p < npts; ++p) v[p] = monomial_value(m, gvals[p]);
      span.insert(v);
    }
    size_t found = 0;
    for (const auto& lambda : cands) {
      if (found == need) break;
      InvariantGenerator cand{d, orbit_of(rs, theta(), lambda)};
      QVector v(npts);
      for (size_t p = 0; p < npts; ++p) v[p] = generator_value(cand, pts[p]);
      if (span.insert(v)) {
        gens.push_back(std::move(cand));
        ++found;
      }
    }
    FLAGCHOW_ASSERT(found == need,
                    "no invariant generator found in degree " + std::to_string(d));
  }

  gen_values_.assign(size(), {});
  for (int x = 0; x < size(); ++x) {
    for (const auto& g : gens) gen_values_[x].push_back(generator_value(g, fixed_[x]));
  }
  gens_ = std::move(gens);
  gens_ready_ = true;
}

const std::vector<InvariantGenerator>& FlagVariety::invariant_generators() const {
  ensure_generators();
  return gens_;
}

std::vector<mpz_class> FlagVariety::generator_values(int x) const {
  ensure_generators();
  return gen_values_[x];
}

Polynomial FlagVariety::generator_polynomial(int k) const {
  const auto& g = invariant_generators().at(k);
  const int n = root_system().rank();
  Polynomial out(n);
  for (const auto& mu : g.orbit) out += Polynomial::linear(mu).pow(g.degree);
  return out;
}

Polynomial FlagVariety::expand(const GeneratorPolynomial& g) const {
  const int n = root_system().rank();
  const size_t ngens = invariant_generators().size();
  std::vector<Polynomial> gp;
  for (size_t k = 0; k < ngens; ++k) gp.push_back(generator_polynomial(static_cast<int>(k)));
  Polynomial out(n);
  for (const auto& [e, c] : g) {
    Polynomial t = Polynomial::constant(n, c);
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k]) t = t * gp[k].pow(e[k]);
    }
    out += t;
  }
  return out;
}

ChowClass FlagVariety::char_map(const GeneratorPolynomial& g) const {
  const auto& gens = invariant_generators();
  int d = -1;
  for (const auto& [e, c] : g) {
    if (c == 0) continue;
    int deg = 0;
    for (size_t k = 0; k < e.size(); ++k) deg += e[k] * gens[k].degree;
    if (d >= 0 && deg != d) throw InputError("generator polynomial is not homogeneous");
    d = deg;
  }
  if (d < 0 || d > dim()) return zero();
  std::vector<mpq_class> f(size());
  for (int x = 0; x < size(); ++x) {
    if (cosets().length(x) > d) break;
    for (const auto& [e, c] : g) {
      if (c != 0) f[x] += c * mpq_class(monomial_value(e, gen_values_[x]));
    }
    if (d % 2) f[x] = -f[x];
  }
  return solve_localized(f, d);
}

struct FlagVariety::DegreeSolver {
  std::vector<int> basis;
  std::map<int, size_t> position;
  std::vector<std::vector<int>> chosen;
  EchelonBasis span{0};
};

std::shared_ptr<const FlagVariety::DegreeSolver> FlagVariety::degree_solver(int d) const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = solvers_.find(d);
    if (it != solvers_.end()) return it->second;
  }
  const auto& gens = invariant_generators();
  auto s = std::make_shared<DegreeSolver>();
  s->basis = basis(d);
  for (size_t k = 0; k < s->basis.size(); ++k) s->position[s->basis[k]] = k;
  s->span = EchelonBasis(s->basis.size());
  std::vector<int> gdeg;
  for (const auto& g : gens) gdeg.push_back(g.degree);
  for (const auto& m : monomials(gdeg, d)) {
    if (s->span.rank() == s->basis.size()) break;
    ChowClass c = char_map(GeneratorPolynomial{{m, 1}});
    QVector v(s->basis.size());
    for (const auto& [idx, coef] : c.coeffs) v[s->position.at(idx)] = coef;
    if (s->span.insert(v)) s->chosen.push_back(m);
  }
  FLAGCHOW_ASSERT(s->span.rank() == s->basis.size(),
                  "characteristic map is not onto in codimension " + std::to_string(d));
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto [it, inserted] = solvers_.emplace(d, std::move(s));
  return it->second;
}

GeneratorPolynomial FlagVariety::preimage(const ChowClass& cls) const {
  if (cls.theta != theta()) throw InputError("class lives on another variety");
  if (cls.is_zero()) return {};
  const int d = codim(cls);
  auto s = degree_solver(d);
  QVector v(s->basis.size());
  for (const auto& [idx, coef] : cls.coeffs) v[s->position.at(idx)] = coef;
  auto a = s->span.express(v);
  FLAGCHOW_ASSERT(a.has_value(), "inconsistent preimage system");
  GeneratorPolynomial out;
  for (size_t k = 0; k < a->size(); ++k) {
    if ((*a)[k] != 0) out[s->chosen[k]] = (*a)[k];
  }
  ChowClass check = char_map(out);
  ChowClass target = cls;
  target.modulus = 0;
  FLAGCHOW_ASSERT(check == target, "preimage does not map back to the class");
  return out;
}

const ChowClass& FlagVariety::basis_product(int a, int b) const {
  if (a > b) std::swap(a, b);
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = products_.find({a, b});
    if (it != products_.end()) return *it->second;
  }
  ChowClass result = zero();
  if (codim(a) + codim(b) <= dim()) {
    GeneratorPolynomial pa = preimage(schubert(a));
    GeneratorPolynomial pb = preimage(schubert(b));
    GeneratorPolynomial prod;
    for (const auto& [ea, ca] : pa) {
      for (const auto& [eb, cb] : pb) {
        std::vector<int> e(ea.size());
        for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        prod[e] += ca * cb;
      }
    }
    result = char_map(prod);
    FLAGCHOW_ASSERT(result.is_integral(), "product of integral classes is not integral");
  }
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto [it, inserted] =
      products_.emplace(std::make_pair(a, b), std::make_unique<ChowClass>(std::move(result)));
  return *it->second;
}

ChowClass FlagVariety::multiply(const ChowClass& a, const ChowClass& b) const {
  if (a.theta != theta() || b.theta != theta()) {
    throw InputError("classes live on another variety");
  }
  if (a.modulus != b.modulus) throw InputError("coefficient rings differ");
  ChowClass out = zero(a.modulus);
  for (const auto& [ia, ca] : a.coeffs) {
    for (const auto& [ib, cb] : b.coeffs) {
      const mpq_class f = ca * cb;
      for (const auto& [ic, cc] : basis_product(ia, ib).coeffs) out.add(ic, f * cc);
    }
  }
  return out;
}

ChowClass FlagVariety::multiply_localized(const ChowClass& a, const ChowClass& b) const {
  if (a.theta != theta() || b.theta != theta()) {
    throw InputError("classes live on another variety");
  }
  if (a.modulus != b.modulus) throw InputError("coefficient rings differ");
  std::set<int> da, db;
  for (const auto& [i, c] : a.coeffs) da.insert(codim(i));
  for (const auto& [i, c] : b.coeffs) db.insert(codim(i));
  ChowClass out = zero(a.modulus);
  for (int d1 : da) {
    const auto fa = localize(graded_part(a, d1));
    for (int d2 : db) {
      if (d1 + d2 > dim()) continue;
      const auto fb = localize(graded_part(b, d2));
      std::vector<mpq_class> f(size());
      for (int x = 0; x < size(); ++x) f[x] = fa[x] * fb[x];
      ChowClass part = solve_localized(f, d1 + d2);
      for (const auto& [i, c] : part.coeffs) out.add(i, c);
    }
  }
  return out;
}

std::vector<ChowClass> FlagVariety::chern_tangent() const {
  const RootSystem& rs = root_system();
  std::vector<Weight> u;
  for (const auto& beta : rs.positive_roots()) {
    bool inside = true;
    for (int j = 0; j < rs.rank(); ++j) {
      if (beta[j] != 0 && !contains(theta(), j + 1)) inside = false;
    }
    if (!inside) u.push_back(rs.root_to_weight(beta));
  }
  FLAGCHOW_ASSERT(static_cast<int>(u.size()) == dim(), "unipotent radical size");
  // W_Theta permutes U
  std::set<Weight> uset(u.begin(), u.end());
  for (int i : theta()) {
    for (const auto& g : u) {
      Weight h = g;
      rs.reflect_weight(i - 1, h);
      FLAGCHOW_ASSERT(uset.count(h) > 0, "radical roots not stable under W_Theta");
    }
  }
  const int m = dim();
  // e[x][k] = k-th elementary symmetric function of the values at x
  std::vector<std::vector<mpz_class>> e(size());
  for (int x = 0; x < size(); ++x) {
    std::vector<mpz_class> sym(m + 1);
    sym[0] = 1;
    int used = 0;
    for (const auto& g : u) {
      const mpz_class v = linear_value(g, fixed_point_values(x));
      ++used;
      for (int k = used; k >= 1; --k) sym[k] += sym[k - 1] * v;
    }
    e[x] = std::move(sym);
  }
  std::vector<ChowClass> out;
  for (int k = 0; k <= m; ++k) {
    std::vector<mpq_class> f(size());
    for (int x = 0; x < size(); ++x) {
      f[x] = e[x][k];
      if (k % 2) f[x] = -f[x];
    }
    ChowClass c = solve_localized(f, k, std::min(m, k + 1));
    FLAGCHOW_ASSERT(c.is_integral(), "non-integral Chern class");
    out.push_back(std::move(c));
  }
  return out;
}

ChowClass pullback_to_flags(const FlagVariety& x, const FlagVariety& flags,
                            const ChowClass& cls) {
  if (!flags.theta().empty()) throw InputError("target must be the full flag variety");
  if (!(flags.root_system().type() == x.root_system().type())) {
    throw InputError("pullback between different groups");
  }
  const RootSystem& rs = x.root_system();
  const WeylElement& wt = x.cosets().w_theta();
  ChowClass out = flags.zero(cls.modulus);
  for (const auto& [idx, c] : cls.coeffs) {
    WeylElement w = multiply(rs, x.cosets().element(idx), wt);
    FLAGCHOW_ASSERT(w.length() == x.cosets().length(idx) + wt.length(),
                    "representative times w_theta is not length additive");
    out.add(flags.cosets().coset_of(w), c);
  }
  return out;
}

}  // namespace flagchow

#include <algorithm>

#include "flagchow/errors.hpp"
#include "flagchow/schubert.hpp"
#include "linalg.hpp"

namespace flagchow {

using detail::EchelonBasis;
using detail::QVector;

namespace {

mpz_class evaluate_weight(const Weight& w, const std::vector<mpz_class>& z) {
  mpz_class s = 0;
  for (size_t j = 0; j < w.size(); ++j) {
    if (w[j] != 0) s += w[j] * z[j];
  }
  return s;
}

// Integral z with <alpha_i, z> = det for every simple root; no positive
// root vanishes there.
std::vector<mpz_class> regular_point(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<QVector> m(n, QVector(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) m[i][k] = rs.cartan(k, i);
  }
  QVector q = detail::solve_square(m, QVector(n, mpq_class(1)));
  mpz_class l = 1;
  for (const auto& x : q) l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> z(n);
  for (int j = 0; j < n; ++j) {
    mpq_class v = q[j] * l;
    z[j] = v.get_num();
  }
  return z;
}

}  // namespace

FlagVariety::FlagVariety(const RootSystem& rs, VertexSet theta, uint64_t cap)
    : ct_(rs, std::move(theta), cap) {
  z_ = regular_point(rs);
  const int n = rs.rank();
  fixed_.resize(ct_.size());
  for (int x = 0; x < ct_.size(); ++x) {
    for (int j = 0; j < n; ++j) {
      Weight w(n, 0);
      w[j] = 1;
      fixed_[x].push_back(evaluate_weight(act(rs, ct_.word(x), w), z_));
    }
  }
}

std::vector<int> FlagVariety::basis(int d) const {
  const int len = dim() - d;
  if (len < 0 || len > dim()) return {};
  return ct_.of_length(len);
}

ChowClass FlagVariety::zero(int modulus) const { return {theta(), modulus, {}}; }

ChowClass FlagVariety::schubert(int idx, int modulus) const {
  ChowClass c = zero(modulus);
  c.add(idx, 1);
  return c;
}

ChowClass FlagVariety::dual_class(int idx, int modulus) const {
  return schubert(ct_.dual(idx), modulus);
}

ChowClass FlagVariety::fundamental(int modulus) const {
  return schubert(size() - 1, modulus);
}

ChowClass FlagVariety::point(int modulus) const { return schubert(0, modulus); }

int FlagVariety::codim(const ChowClass& c) const {
  int d = -1;
  for (const auto& [idx, v] : c.coeffs) {
    if (d >= 0 && codim(idx) != d) throw InputError("class is not homogeneous");
    d = codim(idx);
  }
  return d;
}

ChowClass FlagVariety::graded_part(const ChowClass& c, int d) const {
  ChowClass out = zero(c.modulus);
  for (const auto& [idx, v] : c.coeffs) {
    if (codim(idx) == d) out.coeffs.emplace(idx, v);
  }
  return out;
}

int FlagVariety::duality_product(int a, int b) const {
  if (codim(a) + codim(b) != dim()) {
    throw InputError("duality product needs complementary codimensions");
  }
  return ct_.dual(a) == b ? 1 : 0;
}

ChowClass FlagVariety::pieri_multiply(int alpha, int w) const {
  if (!theta().empty()) {
    throw InputError("the Pieri rule is implemented on G/B only");
  }
  const RootSystem& rs = root_system();
  if (alpha < 1 || alpha > rs.rank()) throw InputError("bad divisor index");
  ChowClass out = zero();
  const WeylElement x = ct_.element(w);
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    WeylElement y = times_reflection(rs, x, k);
    if (y.length() != x.length() - 1) continue;
    const int c = rs.coroot(k)[alpha - 1];
    if (c != 0) out.add(ct_.coset_of(y), c);
  }
  return out;
}

// ------------------------------------------------------------ localization

void FlagVariety::ensure_xi() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (xi_ready_) return;
  const RootSystem& rs = root_system();
  const int n = size();
  if (n > 6000) {
    throw ResourceError("localization tables limited to 6000 fixed points");
  }
  xi_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    const Word& a = ct_.word(x);
    const int len = static_cast<int>(a.size());
    // r_j = s_{a_1} ... s_{a_{j-1}} (alpha_{a_j})
    std::vector<mpz_class> r(len);
    for (int j = 0; j < len; ++j) {
      Word prefix(a.begin(), a.begin() + j);
      r[j] = evaluate_weight(act(rs, prefix, rs.simple_root_weight(a[j] - 1)), z_);
    }
    std::vector<mpz_class> dp(n);
    dp[0] = 1;
    std::vector<int> live{0};
    for (int j = len - 1; j >= 0; --j) {
      std::vector<int> fresh;
      for (int y : live) {
        const int up = ct_.up(y, a[j]);
        if (up < 0) continue;
        if (dp[up] == 0) fresh.push_back(up);
        dp[up] += dp[y] * r[j];
      }
      // States only move up in length, so updating in place is safe as long
      // as new entries are not re-used within this step.
      live.insert(live.end(), fresh.begin(), fresh.end());
    }
    xi_[x] = std::move(dp);
  }
  xi_ready_ = true;
}

const mpz_class& FlagVariety::xi(int v, int x) const {
  ensure_xi();
  return xi_[x][v];
}

ChowClass FlagVariety::from_coefficients(const std::map<int, mpq_class>& psi,
                                         int modulus) const {
  ChowClass out = zero(modulus);
  for (const auto& [v, c] : psi) out.add(ct_.dual(v), c);
  return out;
}

ChowClass FlagVariety::solve_localized(const std::vector<mpq_class>& f, int d,
                                       int check_up_to) const {
  ensure_xi();
  const int top = std::min(dim(), std::max(d, check_up_to));
  std::vector<mpq_class> psi(size());
  std::vector<int> nonzero;
  std::map<int, mpq_class> result;
  for (int len = 0; len <= top; ++len) {
    for (int x : ct_.of_length(len)) {
      mpq_class s = f[x];
      for (int v : nonzero) {
        const mpz_class& c = xi_[x][v];
        if (c != 0) s -= psi[v] * c;
      }
      if (s == 0) continue;
      s /= xi_[x][x];
      if (len > d) {
        throw InternalError(
            "localized values are not those of a homogeneous invariant");
      }
      psi[x] = s;
      nonzero.push_back(x);
      if (len == d) result.emplace(x, s);
    }
  }
  return from_coefficients(result, 0);
}

std::vector<mpq_class> FlagVariety::localize(const ChowClass& c) const {
  ensure_xi();
  std::vector<mpq_class> f(size());
  for (int x = 0; x < size(); ++x) {
    for (const auto& [w, coef] : c.coeffs) {
      const mpz_class& v = xi_[x][ct_.dual(w)];
      if (v != 0) f[x] += coef * v;
    }
  }
  return f;
}

mpq_class FlagVariety::eval_at(const Polynomial& u, int x) const {
  std::vector<mpq_class> pt(fixed_[x].begin(), fixed_[x].end());
  return u.evaluate(pt);
}

namespace {

void check_char_map_input(const RootSystem& rs, const VertexSet& theta,
                          const Polynomial& u) {
  if (u.num_vars() > rs.rank()) throw InputError("too many variables");
  if (!u.is_homogeneous()) throw InputError("polynomial is not homogeneous");
  if (!is_invariant(rs, theta, u)) {
    throw InputError("polynomial is not invariant under W_Theta");
  }
}

}  // namespace

ChowClass FlagVariety::char_map(const Polynomial& u) const {
  const RootSystem& rs = root_system();
  check_char_map_input(rs, theta(), u);
  if (u.is_zero()) return zero();
  const int d = u.degree();
  ChowClass out = zero();
  if (d > dim()) return out;
  Polynomial v = u;
  if (v.num_vars() < rs.rank()) v += Polynomial(rs.rank());
  for (int w : ct_.of_length(d)) {
    Polynomial c = divided_difference(rs, ct_.word(w), v);
    FLAGCHOW_ASSERT(c.degree() <= 0, "divided difference left a positive degree");
    out.add(ct_.dual(w), c.coefficient(Exponent{}));
  }
  return out;
}

ChowClass FlagVariety::char_map_localized(const Polynomial& u) const {
  check_char_map_input(root_system(), theta(), u);
  if (u.is_zero()) return zero();
  const int d = u.degree();
  if (d > dim()) return zero();
  std::vector<mpq_class> f(size());
  for (int x = 0; x < size(); ++x) {
    if (ct_.length(x) > d) break;
    f[x] = eval_at(u, x);
    if (d % 2) f[x] = -f[x];
  }
  return solve_localized(f, d);
}

}  // namespace flagchow

#include "flagchow/schubert.hpp"

#include <algorithm>

#include "flagchow/errors.hpp"

namespace flagchow {

// ---------------------------------------------------------------- classes

bool ChowClass::is_integral() const {
  for (const auto& [i, c] : coeffs) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

std::string ChowClass::ring() const {
  if (modulus > 0) return "Z/" + std::to_string(modulus);
  return is_integral() ? "Z" : "Q";
}

mpq_class ChowClass::coefficient(int idx) const {
  auto it = coeffs.find(idx);
  return it == coeffs.end() ? mpq_class(0) : it->second;
}

void ChowClass::add(int idx, const mpq_class& c) {
  mpq_class& slot = coeffs[idx];
  slot += c;
  if (modulus > 0) {
    FLAGCHOW_ASSERT(slot.get_den() == 1, "fraction in a mod-p class");
    mpz_class r = slot.get_num() % modulus;
    if (r < 0) r += modulus;
    slot = r;
  }
  if (slot == 0) coeffs.erase(idx);
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  FLAGCHOW_ASSERT(theta == o.theta && modulus == o.modulus,
                  "adding classes of different varieties or rings");
  for (const auto& [i, c] : o.coeffs) add(i, c);
  return *this;
}

ChowClass ChowClass::scaled(const mpq_class& c) const {
  ChowClass out{theta, modulus, {}};
  for (const auto& [i, v] : coeffs) out.add(i, v * c);
  return out;
}

ChowClass ChowClass::reduced(int p) const {
  if (p == modulus) return *this;
  FLAGCHOW_ASSERT(modulus == 0 || modulus % p == 0, "incompatible reduction");
  if (!is_integral()) throw InputError("cannot reduce a rational class mod p");
  ChowClass out{theta, p, {}};
  for (const auto& [i, v] : coeffs) out.add(i, v);
  return out;
}

bool ChowClass::operator==(const ChowClass& o) const {
  return theta == o.theta && modulus == o.modulus && coeffs == o.coeffs;
}

// ------------------------------------------------------------ polynomials

std::string intpoly_str(const IntPoly& p, const std::string& var) {
  std::string out;
  for (size_t k = 0; k < p.size(); ++k) {
    int64_t c = p[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    int64_t m = c < 0 ? -c : c;
    if (k == 0) {
      out += std::to_string(m);
      continue;
    }
    if (m != 1) out += std::to_string(m);
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::optional<IntPoly> intpoly_div(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a, d = b;
  while (!d.empty() && d.back() == 0) d.pop_back();
  FLAGCHOW_ASSERT(!d.empty(), "division by the zero polynomial");
  while (!r.empty() && r.back() == 0) r.pop_back();
  if (r.size() < d.size()) {
    if (r.empty()) return IntPoly{0};
    return std::nullopt;
  }
  IntPoly q(r.size() - d.size() + 1, 0);
  for (size_t k = q.size(); k-- > 0;) {
    int64_t top = r[k + d.size() - 1];
    if (top % d.back() != 0) return std::nullopt;
    q[k] = top / d.back();
    for (size_t j = 0; j < d.size(); ++j) r[k + j] -= q[k] * d[j];
  }
  for (int64_t x : r) {
    if (x != 0) return std::nullopt;
  }
  return q;
}

namespace {

IntPoly r_product(const std::vector<int>& degrees) {
  IntPoly p{1};
  for (int d : degrees) p = intpoly_mul(p, IntPoly(d, 1));
  return p;
}

}  // namespace

IntPoly poincare_polynomial(const RootSystem& rs, const VertexSet& theta) {
  validate_vertex_set(theta, rs.rank());
  auto q = intpoly_div(r_product(weyl_degrees(rs.type())),
                       r_product(weyl_degrees(identify_subdiagram(rs, theta))));
  FLAGCHOW_ASSERT(q.has_value(), "Solomon quotient is not a polynomial");
  return *q;
}

Polynomial reflect_polynomial(const RootSystem& rs, int i, const Polynomial& u) {
  const int n = rs.rank();
  std::vector<Polynomial> images;
  for (int j = 0; j < n; ++j) images.push_back(Polynomial::variable(n, j));
  // s_i(omega_i) = omega_i - alpha_i
  images[i - 1] -= Polynomial::linear(rs.simple_root_weight(i - 1));
  return u.substitute(images);
}

Polynomial divided_difference(const RootSystem& rs, const Word& word,
                              const Polynomial& u) {
  Polynomial v = u;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    if (i < 1 || i > rs.rank()) throw InputError("bad reflection index");
    Polynomial diff = v - reflect_polynomial(rs, i, v);
    const Weight a = rs.simple_root_weight(i - 1);
    std::vector<mpq_class> form(a.begin(), a.end());
    v = diff.divide_linear(form, i - 1);
  }
  return v;
}

bool is_invariant(const RootSystem& rs, const VertexSet& theta,
                  const Polynomial& u) {
  for (int i : theta) {
    if (!(reflect_polynomial(rs, i, u) == u)) return false;
  }
  return true;
}

}  // namespace flagchow

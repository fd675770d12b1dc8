#include "flagchow/polynomial.hpp"

#include "flagchow/errors.hpp"

namespace flagchow {

namespace {

int total(const Exponent& e) {
  int s = 0;
  for (uint8_t x : e) s += x;
  return s;
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVariables) {
    throw InputError("polynomials support at most " +
                     std::to_string(kMaxVariables) + " variables");
  }
}

Polynomial Polynomial::constant(int nvars, const mpq_class& c) {
  Polynomial p(nvars);
  p.add_term(Exponent{}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  Exponent e{};
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::linear(const std::vector<mpq_class>& coeffs) {
  Polynomial p(static_cast<int>(coeffs.size()));
  for (size_t j = 0; j < coeffs.size(); ++j) {
    Exponent e{};
    e[j] = 1;
    p.add_term(e, coeffs[j]);
  }
  return p;
}

Polynomial Polynomial::linear(const std::vector<int>& coeffs) {
  std::vector<mpq_class> q(coeffs.begin(), coeffs.end());
  return linear(q);
}

Polynomial Polynomial::monomial(int nvars, const std::vector<int>& exps,
                                const mpq_class& c) {
  Polynomial p(nvars);
  Exponent e{};
  for (size_t j = 0; j < exps.size(); ++j) {
    FLAGCHOW_ASSERT(exps[j] >= 0 && exps[j] < 256, "exponent out of range");
    e[j] = static_cast<uint8_t>(exps[j]);
  }
  p.add_term(e, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    if (d >= 0 && total(e) != d) return false;
    d = total(e);
  }
  return true;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (total(e) == d) p.terms_.emplace(e, c);
  }
  return p;
}

mpq_class Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ < o.nvars_) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ < o.nvars_) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (int j = 0; j < kMaxVariables; ++j) {
        FLAGCHOW_ASSERT(ea[j] + eb[j] < 256, "exponent overflow");
        e[j] = static_cast<uint8_t>(ea[j] + eb[j]);
      }
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& point) const {
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (int j = 0; j < nvars_; ++j) {
      for (int k = 0; k < e[j]; ++k) t *= point[j];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  // powers[j][k] = images[j]^k, built on demand
  std::vector<std::vector<Polynomial>> powers(nvars_);
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(nvars_, c);
    for (int j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      auto& pw = powers[j];
      if (pw.empty()) pw.push_back(constant(nvars_, 1));
      while (static_cast<int>(pw.size()) <= e[j]) pw.push_back(pw.back() * images[j]);
      t = t * pw[e[j]];
    }
    out += t;
  }
  return out;
}

Polynomial Polynomial::divide_linear(const std::vector<mpq_class>& form,
                                     int pivot) const {
  const mpq_class lead = form[pivot];
  FLAGCHOW_ASSERT(lead != 0, "division by a form with zero pivot");
  Polynomial rest = *this;
  Polynomial quotient(nvars_);
  while (true) {
    // term of highest pivot degree
    auto best = rest.terms_.end();
    for (auto it = rest.terms_.begin(); it != rest.terms_.end(); ++it) {
      if (it->first[pivot] > 0 &&
          (best == rest.terms_.end() || it->first[pivot] > best->first[pivot])) {
        best = it;
      }
    }
    if (best == rest.terms_.end()) break;
    Exponent e = best->first;
    mpq_class q = best->second / lead;
    e[pivot] -= 1;
    quotient.add_term(e, q);
    for (size_t j = 0; j < form.size(); ++j) {
      if (form[j] == 0) continue;
      Exponent f = e;
      f[j] += 1;
      rest.add_term(f, -q * form[j]);
    }
  }
  FLAGCHOW_ASSERT(rest.is_zero(), "inexact division by a linear form");
  return quotient;
}

std::string Polynomial::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest degree first, then reverse exponent order for readability
  std::vector<std::pair<Exponent, mpq_class>> items(terms_.rbegin(), terms_.rend());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return total(a.first) > total(b.first);
  });
  for (const auto& [e, c] : items) {
    mpq_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int j = 0; j < nvars_; ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace flagchow

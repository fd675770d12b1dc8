#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace flagchow {

inline constexpr int kMaxVariables = 16;
using Exponent = std::array<uint8_t, kMaxVariables>;

class Polynomial {
 public:
  using Terms = std::map<Exponent, mpq_class>;

  Polynomial() = default;
  explicit Polynomial(int nvars);
  static Polynomial constant(int nvars, const mpq_class& c);
  static Polynomial variable(int nvars, int i);  // 0-based
  /// sum_j coeffs[j] x_j
  static Polynomial linear(const std::vector<mpq_class>& coeffs);
  static Polynomial linear(const std::vector<int>& coeffs);
  static Polynomial monomial(int nvars, const std::vector<int>& exps,
                             const mpq_class& c = 1);

  int num_vars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int d) const;
  mpq_class coefficient(const Exponent& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const mpq_class& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
  friend Polynomial operator*(const mpq_class& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  Polynomial pow(int e) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  void add_term(const Exponent& e, const mpq_class& c);

  mpq_class evaluate(const std::vector<mpq_class>& point) const;
  /// Replaces x_j by images[j].
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Exact quotient by a linear form whose coefficient at `pivot` is
  /// nonzero; throws InternalError if the division leaves a remainder.
  Polynomial divide_linear(const std::vector<mpq_class>& form, int pivot) const;

  /// "2*w1^2*w2 - w3" style with variables w1..wn, "0" when zero.
  std::string str(const std::string& var = "w") const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

}  // namespace flagchow

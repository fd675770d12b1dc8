#pragma once

// Chow rings of split flag varieties G/P_Theta in the Schubert basis.
//
// A class is stored as coefficients of [X_w], w in W^Theta, where X_w is the
// closure of the B-orbit of wP, of dimension l(w). Its codimension is
// dim X - l(w). The dual class Z_w = [X_{w0 w w_theta}] has codimension l(w).
//
// Products and the characteristic map are computed by localization at the
// torus fixed points: an equivariant lift of Z_v restricts to the point
// xP as Billey's polynomial xi^v(x), and everything is evaluated at one
// integral point of the dual torus where no root vanishes. The divided
// difference description of the characteristic map is also available
// for exact polynomial inputs.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "flagchow/polynomial.hpp"
#include "flagchow/weyl.hpp"

namespace flagchow {

/// Element of CH*(G/P_Theta) (modulus 0) or Ch*(G/P_Theta) = CH* / p.
struct ChowClass {
  VertexSet theta;
  int modulus = 0;
  std::map<int, mpq_class> coeffs;  // coset index -> coefficient of [X_w]

  bool is_zero() const { return coeffs.empty(); }
  bool is_integral() const;
  /// "Z", "Q", "Z/2", ...
  std::string ring() const;
  mpq_class coefficient(int idx) const;
  void add(int idx, const mpq_class& c);

  ChowClass& operator+=(const ChowClass& o);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  ChowClass scaled(const mpq_class& c) const;
  /// Reduction to Z/p; the class must be integral.
  ChowClass reduced(int p) const;
  bool operator==(const ChowClass& o) const;
};

/// Integer polynomial in t, coefficient of t^k at position k.
using IntPoly = std::vector<int64_t>;
std::string intpoly_str(const IntPoly& p, const std::string& var = "t");
IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b);
/// Exact division; nullopt when the remainder is nonzero.
std::optional<IntPoly> intpoly_div(const IntPoly& a, const IntPoly& b);

/// Solomon: r(Pi)/r(Theta), r = prod (t^{d_i} - 1)/(t - 1).
IntPoly poincare_polynomial(const RootSystem& rs, const VertexSet& theta);

/// Delta_{i1} o ... o Delta_{ik} applied to u (word need not be reduced).
Polynomial divided_difference(const RootSystem& rs, const Word& word,
                              const Polynomial& u);
/// s_i(u), i 1-based.
Polynomial reflect_polynomial(const RootSystem& rs, int i, const Polynomial& u);
bool is_invariant(const RootSystem& rs, const VertexSet& theta,
                  const Polynomial& u);

/// A W_Theta-invariant generator: sum over `orbit` of mu^power, where each
/// mu is regarded as a linear form in omega_1..omega_n.
struct InvariantGenerator {
  int degree = 0;
  std::vector<Weight> orbit;
};

/// A polynomial in the invariant generators: exponent vector -> coefficient.
using GeneratorPolynomial = std::map<std::vector<int>, mpq_class>;

class FlagVariety {
 public:
  FlagVariety(const RootSystem& rs, VertexSet theta,
              uint64_t cap = kDefaultCosetCap);

  const RootSystem& root_system() const { return ct_.root_system(); }
  const CosetTable& cosets() const { return ct_; }
  const VertexSet& theta() const { return ct_.theta(); }
  int dim() const { return ct_.max_length(); }
  int size() const { return ct_.size(); }
  int codim(int idx) const { return dim() - ct_.length(idx); }

  /// Indices w with codim [X_w] = d, in table order.
  std::vector<int> basis(int d) const;
  ChowClass zero(int modulus = 0) const;
  ChowClass schubert(int idx, int modulus = 0) const;
  /// Z_w = [X_{dual(w)}].
  ChowClass dual_class(int idx, int modulus = 0) const;
  ChowClass fundamental(int modulus = 0) const;
  ChowClass point(int modulus = 0) const;
  /// Codimension of a homogeneous class, -1 for zero; throws InputError
  /// when inhomogeneous.
  int codim(const ChowClass& c) const;
  /// Homogeneous component of codimension d.
  ChowClass graded_part(const ChowClass& c, int d) const;

  /// Coefficient of the point class in [X_a][X_b]; requires complementary
  /// codimensions.
  int duality_product(int a, int b) const;
  /// [X_{w0 s_alpha}] * [X_w] on G/B by the Chevalley-Pieri rule.
  ChowClass pieri_multiply(int alpha, int w) const;

  /// Characteristic map via divided differences (exact, small types).
  ChowClass char_map(const Polynomial& u) const;
  /// Characteristic map via localization (any size).
  ChowClass char_map_localized(const Polynomial& u) const;

  const std::vector<InvariantGenerator>& invariant_generators() const;
  Polynomial generator_polynomial(int k) const;
  Polynomial expand(const GeneratorPolynomial& g) const;
  ChowClass char_map(const GeneratorPolynomial& g) const;
  /// Invariant polynomial in the generators whose image is cls.
  GeneratorPolynomial preimage(const ChowClass& cls) const;

  /// Product through preimages and the characteristic map.
  ChowClass multiply(const ChowClass& a, const ChowClass& b) const;
  /// Product of the localized classes, solved back pointwise.
  ChowClass multiply_localized(const ChowClass& a, const ChowClass& b) const;
  /// Cached product of basis classes [X_a][X_b] (integral).
  const ChowClass& basis_product(int a, int b) const;

  /// c_0, ..., c_dim of the tangent bundle.
  std::vector<ChowClass> chern_tangent() const;

  /// Evaluation point: e(omega_j).
  const std::vector<mpz_class>& evaluation_point() const { return z_; }
  /// e(x omega_j) at the fixed point of coset x.
  const std::vector<mpz_class>& fixed_point_values(int x) const { return fixed_[x]; }
  /// Billey polynomial xi^v(x) evaluated at the evaluation point.
  const mpz_class& xi(int v, int x) const;

  /// Solves f = sum_v psi_v xi^v pointwise and returns the codimension-d
  /// coefficients as a class, checking that no coefficient of larger
  /// length appears among the cosets of length <= check_up_to.
  ChowClass solve_localized(const std::vector<mpq_class>& f, int d,
                            int check_up_to = -1) const;
  /// Values of a class at all fixed points (equivariant lift by xi).
  std::vector<mpq_class> localize(const ChowClass& c) const;

 private:
  mpq_class eval_at(const Polynomial& u, int x) const;
  std::vector<mpz_class> generator_values(int x) const;
  void ensure_xi() const;
  void ensure_generators() const;
  ChowClass from_coefficients(const std::map<int, mpq_class>& psi, int modulus) const;

  CosetTable ct_;
  std::vector<mpz_class> z_;
  std::vector<std::vector<mpz_class>> fixed_;

  mutable std::mutex mu_;
  mutable bool xi_ready_ = false;
  mutable std::vector<std::vector<mpz_class>> xi_;  // xi_[x][v]
  mutable bool gens_ready_ = false;
  mutable std::vector<InvariantGenerator> gens_;
  mutable std::vector<std::vector<mpz_class>> gen_values_;  // [x][k]
  mutable std::mutex cache_mu_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<ChowClass>> products_;
  struct DegreeSolver;
  std::shared_ptr<const DegreeSolver> degree_solver(int d) const;
  mutable std::map<int, std::shared_ptr<const DegreeSolver>> solvers_;
};

/// [X_w] on G/P maps to [X_{w w_theta}] on G/B.
ChowClass pullback_to_flags(const FlagVariety& x, const FlagVariety& flags,
                            const ChowClass& cls);

}  // namespace flagchow

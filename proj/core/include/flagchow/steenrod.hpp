#pragma once

// Mod-2 Steenrod operations S = S^0 + S^1 + ... on Ch*(G/P_Theta).
//
// A Schubert class [X_w] is the pushforward of the fundamental class of a
// Bott-Samelson resolution m: Z -> X_w built from a reduced word of w. On Z
// the operation is determined by S(D) = D + D^2 on divisors, and the
// Riemann-Roch type formula
//   S(m_* y) = m_*(S(y) c(T_Z)^{-1}) c(T_X)
// moves it down to X. The placement of the Chern twist is calibrated at
// run time against the closed form on divisor-generated rings.
//
// For large varieties the Bott-Samelson ring is never written out: its
// pushforward is computed one letter at a time on G/B as
//   P_k = g_{a_k} . d_{a_k}(P_{k-1}),
// where d_a is pull-push through G/B -> G/P_a and g_a is the total Chern
// factor of the relative tangent line bundle.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "flagchow/schubert.hpp"

namespace flagchow {

/// Chow ring of the Bott-Samelson variety of a reduced word a_1..a_l.
/// Basis: square-free monomials D_S, S a subset of positions (bit k-1 for
/// D_k); D_S is the class of the sub-resolution with positions S deleted.
class BottSamelsonRing {
 public:
  using Element = std::map<uint32_t, int64_t>;
  static constexpr int kMaxLength = 24;

  BottSamelsonRing(const RootSystem& rs, Word word, int modulus = 0);

  const RootSystem& root_system() const { return rs_; }
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  int modulus() const { return modulus_; }
  uint64_t dimension() const { return uint64_t{1} << word_.size(); }

  Element one() const;
  /// D_k, k 1-based.
  Element divisor(int k) const;
  /// First Chern class of the line bundle of weight lambda pulled back to Z.
  Element line_bundle(const Weight& lambda) const;
  /// First Chern class of the relative tangent bundle of level k.
  Element relative_tangent(int k) const;

  Element add(const Element& a, const Element& b) const;
  Element scaled(const Element& a, int64_t c) const;
  Element multiply(const Element& a, const Element& b) const;
  /// Total Chern class prod_k (1 + t_k), or its inverse.
  Element total_tangent_chern(bool inverse) const;

 private:
  void add_term(Element& e, uint32_t mask, int64_t c) const;
  Element times_divisor(const Element& a, int k) const;
  // coefficients of D_1..D_k in M_k(lambda) for lambda = omega_j
  std::vector<std::vector<std::vector<int64_t>>> fundamental_forms_;
  // relation_[k] = coefficients of M_{k-1}(alpha_{a_k}) over D_1..D_{k-1}
  std::vector<std::vector<int64_t>> relation_;
  RootSystem rs_;
  Word word_;
  int modulus_;
};

/// Multiplicative extension of D -> D + D^2.
BottSamelsonRing::Element steenrod_on_bs(const BottSamelsonRing& ring,
                                         const BottSamelsonRing::Element& e);

/// Pushforward to X: D_S maps to [X_v] when the complementary subword is
/// reduced with product v in W^Theta, and to 0 otherwise.
ChowClass bs_pushforward(const BottSamelsonRing& ring,
                         const BottSamelsonRing::Element& e,
                         const FlagVariety& x);

enum class WuConvention {
  kInverseTangentOnSource,  // S(m_* y) = m_*(S(y) c(T_Z)^{-1}) c(T_X)
  kTangentOnSource,         // S(m_* y) = m_*(S(y) c(T_Z)) c(T_X)^{-1}
};

const char* wu_convention_name(WuConvention c);

/// S^0..S^{dim - codim} of a basis class, through the explicit
/// Bott-Samelson ring of its canonical word.
std::vector<ChowClass> steenrod_via_bs(const FlagVariety& x, int idx,
                                       WuConvention convention);

/// S on a ring generated by the divisors omega_i (i not in Theta), from
/// S(omega) = omega + omega^2 and multiplicativity. nullopt when the class
/// is not a polynomial in divisors mod 2.
std::optional<std::vector<ChowClass>> steenrod_divisor_closed_form(
    const FlagVariety& x, int idx);

struct CalibrationReport {
  WuConvention convention;
  int inputs = 0;                  // basis classes compared
  int matches_inverse = 0;         // agreeing with kInverseTangentOnSource
  int matches_tangent = 0;         // agreeing with kTangentOnSource
};

/// Evaluates both conventions on the flag varieties of A2, B2 and A3
/// against the divisor closed form. Throws CalibrationError unless exactly
/// one convention agrees everywhere. The result is computed once.
const CalibrationReport& calibrate_wu_convention();

/// Total Chern class c(T_X) mod 2 and its inverse, as graded lists.
std::vector<ChowClass> total_chern_mod2(const FlagVariety& x, bool inverse);

/// Steenrod squares on one variety, by the letter-by-letter route.
class SteenrodSquares {
 public:
  explicit SteenrodSquares(const FlagVariety& x);

  const FlagVariety& variety() const { return x_; }
  WuConvention convention() const { return convention_; }

  /// S^0..S^top of [X_w] for any reduced word of w in W^Theta; top defaults
  /// to dim - codim. Components beyond top are not computed.
  std::vector<ChowClass> of_word(const Word& word, int top = -1) const;
  std::vector<ChowClass> of_basis(int idx, int top = -1) const;
  /// S^0..S^top of a mod-2 class (any grading); top defaults to dim.
  std::vector<ChowClass> total(const ChowClass& cls, int top = -1) const;
  /// S^i of a mod-2 class.
  ChowClass component(const ChowClass& cls, int i) const;

 private:
  const FlagVariety& x_;
  WuConvention convention_;
  std::vector<ChowClass> chern_;  // the factor applied on X, graded
  mutable std::map<std::pair<int, int>, std::vector<ChowClass>> cache_;
};

/// S^0..S^{dim} of a mod-2 class on X.
std::vector<ChowClass> steenrod_total(const FlagVariety& x, const ChowClass& cls);

}  // namespace flagchow

#pragma once

// Motivic decompositions of isotropic homogeneous varieties, read off the
// Hasse diagram of W^Theta by erasing the edges labelled by circled
// vertices, and the algebra of cellular correspondences on X x X.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "flagchow/schubert.hpp"

namespace flagchow {

struct MotiveSummand {
  std::vector<int> vertices;  // coset indices, increasing
  int twist = 0;              // least codimension in the component
  IntPoly profile;            // vertex counts by codimension - twist
  DynkinType kernel_type;     // type of the uncircled subdiagram

  bool is_lefschetz() const { return vertices.size() == 1; }
};

/// Connected components of the Hasse diagram after deleting every edge whose
/// label is circled, sorted by (twist, profile, first vertex).
std::vector<MotiveSummand> decompose(const CosetTable& ct, const VertexSet& circled);

struct RostDecomposition {
  std::vector<int> lefschetz;  // twists of the Z(i) summands
  std::vector<int> rost;       // twists of the Rost motives R(i)
};

/// Splits every non-singleton component into Rost motives with Poincare
/// polynomial 1 + t^3, and checks the reassembled polynomial against
/// `poincare`. Throws InputError when a profile is not divisible by 1 + t^3.
RostDecomposition refine_rost(const std::vector<MotiveSummand>& summands,
                              const IntPoly& poincare);

/// Singleton vertices of the cut diagram: (reduced word, codimension).
std::vector<std::pair<Word, int>> singleton_components(const CosetTable& ct,
                                                       const VertexSet& circled);

/// sum of coefficients [X_a] x [X_b] in Ch(X x X) = Ch(X) (x) Ch(X), mod p.
class Correspondence {
 public:
  using Terms = std::map<std::pair<int, int>, int64_t>;

  Correspondence(const FlagVariety& x, int modulus);
  /// sum a_k x b_k; throws InputError unless homogeneous.
  Correspondence(const FlagVariety& x, int modulus,
                 const std::vector<std::pair<ChowClass, ChowClass>>& pairs);

  static Correspondence diagonal(const FlagVariety& x, int modulus);

  const FlagVariety& variety() const { return *x_; }
  int modulus() const { return modulus_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total codimension in X x X, -1 for zero.
  int codim() const;

  void add(int a, int b, int64_t c);
  Correspondence transpose() const;
  bool operator==(const Correspondence& o) const;

 private:
  const FlagVariety* x_;
  int modulus_;
  Terms terms_;
};

/// (sum c x d) o (sum a x b) = sum deg(b c) a x d.
Correspondence compose(const Correspondence& q1, const Correspondence& q2);

/// Least n with q^{2n} = q^n, and q^n.
std::pair<int, Correspondence> idempotent_power(const Correspondence& q,
                                                int max_steps = 100000);

/// Coefficient of pt x pt in q . q^t.
int64_t projector_rank(const Correspondence& q);

}  // namespace flagchow

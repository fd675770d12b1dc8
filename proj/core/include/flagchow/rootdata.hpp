#pragma once

// Root systems and weight lattices of split semisimple groups.
//
// Vertex labels follow Bourbaki and are 1-based in every public
// interface; a reducible type numbers its components consecutively.
// Roots are stored in simple-root coordinates, weights in coordinates
// with respect to the fundamental weights.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace flagchow {

/// Sorted set of 1-based vertex labels.
using VertexSet = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;
/// Coordinates in the basis of simple roots.
using Root = std::vector<int>;
/// Coordinates in the basis of fundamental weights.
using Weight = std::vector<int>;

struct SimpleType {
  char family = 'A';
  int rank = 1;

  bool operator==(const SimpleType&) const = default;
  auto operator<=>(const SimpleType&) const = default;
};

class DynkinType {
 public:
  DynkinType() = default;
  explicit DynkinType(std::vector<SimpleType> components);

  /// Accepts "E7", "A2xA2", "2A2", "B3xA1"; "" and "1" are the empty type.
  static DynkinType parse(std::string_view text);

  const std::vector<SimpleType>& components() const { return components_; }
  int rank() const;
  bool empty() const { return components_.empty(); }

  /// Canonical spelling accepted back by parse(): "A2xA2", "1" when empty.
  std::string str() const;
  /// Spelling with multiplicities as used in tables: "2A2", "1" when empty.
  std::string display() const;

  bool operator==(const DynkinType&) const = default;

 private:
  std::vector<SimpleType> components_;
};

bool is_legal(const SimpleType& t);

class RootSystem {
 public:
  RootSystem() = default;
  explicit RootSystem(DynkinType type);

  const DynkinType& type() const { return type_; }
  int rank() const { return rank_; }

  /// A[i][j] = <alpha_j, alpha_i^vee>, 0-based.
  const IntMatrix& cartan() const { return cartan_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }

  /// Positive roots, ordered by height and then lexicographically
  /// descending, so that index i holds alpha_i.
  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }
  /// Coroot of the k-th positive root in simple-coroot coordinates.
  const Root& coroot(int k) const { return coroots_[k]; }
  /// Index of a positive root, or -1.
  int root_index(const Root& beta) const;
  int height(int k) const;

  /// Squared length of the i-th simple root (short roots of B/C/F/G have
  /// length 1, long roots 2 or 3).
  int simple_length_sq(int i) const { return lengths_[i]; }

  /// <lambda, beta^vee> for the k-th positive root.
  int pairing(const Weight& lambda, int k) const;
  /// <beta, alpha_i^vee>.
  int root_pairing(const Root& beta, int i) const;

  Weight root_to_weight(const Root& beta) const;
  Weight simple_root_weight(int i) const;
  /// Inverse of root_to_weight on the rational span.
  std::vector<mpq_class> weight_to_root(const Weight& lambda) const;

  /// s_i acting in place, 0-based i.
  void reflect_weight(int i, Weight& lambda) const;
  void reflect_root(int i, Root& beta) const;
  IntMatrix simple_reflection_on_weights(int i) const;

  /// rho = sum of fundamental weights.
  Weight rho() const { return Weight(rank_, 1); }

  /// Ambient labels of this system's simple roots (identity unless the
  /// system was produced by root_subsystem).
  const std::vector<int>& embedding() const { return embedding_; }
  void set_embedding(std::vector<int> labels) { embedding_ = std::move(labels); }

 private:
  DynkinType type_;
  int rank_ = 0;
  IntMatrix cartan_;
  std::vector<int> lengths_;
  std::vector<Root> positive_;
  std::vector<Root> coroots_;
  std::vector<int> embedding_;
};

RootSystem build_root_system(const DynkinType& type);

/// Degrees of the basic polynomial invariants, sorted per simple component
/// and concatenated.
std::vector<int> weyl_degrees(const DynkinType& type);

/// Identifies the Dynkin type of the subdiagram on theta. The returned
/// labels list, component by component, the ambient vertex carrying each
/// Bourbaki-numbered simple root of the subdiagram.
DynkinType identify_subdiagram(const RootSystem& rs, const VertexSet& theta,
                               std::vector<int>* embedding = nullptr);

/// Root subsystem generated by {alpha_i : i in theta}.
RootSystem root_subsystem(const RootSystem& rs, const VertexSet& theta);

/// Component names with the convention of Tits index pictures: a
/// subdiagram meeting the short end of a B_n (resp. long end of C_n) is
/// named B_k (resp. C_k) even in rank 1.
std::string kernel_display(const RootSystem& rs, const VertexSet& theta);

VertexSet parse_vertex_set(std::string_view text);
VertexSet all_vertices(int rank);
VertexSet complement(const VertexSet& s, int rank);
bool contains(const VertexSet& s, int v);
std::string vertex_set_str(const VertexSet& s);
void validate_vertex_set(const VertexSet& s, int rank);

}  // namespace flagchow

#pragma once

// Tits indices, sets of higher Tits indices and their automata, and the
// arithmetic of J-invariants: Kac degrees, the DegLex order, the Poincare
// polynomial identity for generically split varieties and the table of
// projective homogeneous varieties that are not generically split.

#include <optional>
#include <string>
#include <vector>

#include "flagchow/schubert.hpp"

namespace flagchow {

// ------------------------------------------------------------ Tits indices

/// Circled vertices are the ones outside the anisotropic kernel.
struct TitsIndex {
  DynkinType type;
  VertexSet circled;
};

DynkinType anisotropic_kernel(const RootSystem& rs, const VertexSet& circled);

struct HigherIndexSet {
  DynkinType type;
  std::vector<VertexSet> indices;  // circled subsets
};

struct AutomatonEdge {
  int from = 0;
  int to = 0;
  std::vector<int> labels;  // increasing
};

struct Automaton {
  DynkinType type;
  std::vector<VertexSet> states;  // sorted by size, then lexicographically
  std::vector<std::string> names; // kernel display of each state
  std::vector<AutomatonEdge> edges;  // sorted by (from, to)
  int initial = 0;
};

/// From state C, reading an anisotropic vertex i leads to the minimal
/// member containing C and i. Throws InputError for an empty set, a set
/// without unique minimum, or an ambiguous target.
Automaton automaton(const RootSystem& rs, const HigherIndexSet& omega);
/// Length of the longest path.
int height(const Automaton& a);

/// Invariants used to select a higher-index set from the known tables.
struct TableInvariants {
  std::vector<int> j2;  // J_2, zeros when empty
  std::vector<int> j3;  // J_3, zeros when empty
  /// E7 only: the variety of parabolics of type 7 has a zero-cycle of
  /// degree 1.
  bool zero_cycle_of_degree_one = true;
};

/// Higher Tits indices of anisotropic groups of type F4, 1E6 and E7 with
/// trivial Tits algebras.
HigherIndexSet higher_index_table(const DynkinType& type, const TableInvariants& inv);

/// Circled subset realizing an anisotropic kernel in the known tables, or
/// nullopt.
std::optional<VertexSet> kernel_realization(const DynkinType& type,
                                            const DynkinType& kernel);

// --------------------------------------------------------------- J-invariant

/// Ch*(G) mod p = (Z/p)[x_1..x_r]/(x_i^{p^{k_i}}), deg x_i = d_i.
struct KacEntry {
  DynkinType type;
  int p = 2;
  std::vector<int> d;
  std::vector<int> k;

  int rank() const { return static_cast<int>(d.size()); }
};

/// Degrees for the adjoint group of a simple type (PGL, SO, PGSp for the
/// classical series). Empty when p is not a torsion prime.
KacEntry kac_entry(const DynkinType& type, int p);

struct JProfile {
  KacEntry entry;
  std::vector<int> j;
};

/// Checks 0 <= j_i <= k_i and the arity.
JProfile make_profile(const DynkinType& type, int p, std::vector<int> j);

/// |M| < |N|, or equal and m_i <= n_i at the greatest i with m_i != n_i.
bool deglex_leq(const std::vector<int>& m, const std::vector<int>& n,
                const std::vector<int>& d);

/// prod (t^{d_i p^{j_i}} - 1) / (t^{d_i} - 1).
IntPoly jinv_poincare_factor(const JProfile& jp);

struct RationalPoincare {
  IntPoly quotient;  // exact quotient, or the power series truncated at dim
  bool is_polynomial = false;
};

/// g(X) / jinv_poincare_factor(jp): the Poincare polynomial of the rational classes if
/// X were generically split.
RationalPoincare predicted_rational_poincare(const RootSystem& rs,
                                             const VertexSet& theta,
                                             const JProfile& jp);

/// False exactly for the rows of the classification of projective
/// homogeneous varieties of exceptional groups that are not generically
/// split; vertex i names the maximal parabolic.
bool is_generically_split(const DynkinType& type, int i, const TableInvariants& inv);

/// 1-based indices i for which no class of the kernel has degree d_i, so
/// that j_i must vanish.
std::vector<int> forced_zero_indices(const DynkinType& type, int p,
                                     const DynkinType& kernel);

}  // namespace flagchow

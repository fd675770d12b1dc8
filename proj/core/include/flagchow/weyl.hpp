#pragma once

// Weyl group elements, minimal coset representatives and the weak-order
// Hasse diagram of W^Theta.
//
// Words list 1-based simple reflections; [i1,...,il] is s_{i1}...s_{il}.
// An element is determined by its action on rho, which is what is stored.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagchow/rootdata.hpp"

namespace flagchow {

using Word = std::vector<int>;

struct WeightHash {
  size_t operator()(const Weight& w) const noexcept;
};

class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(const RootSystem& rs);
  /// Any word, reduced or not.
  static WeylElement from_word(const RootSystem& rs, const Word& word);
  /// The element w with w(rho) = image.
  static WeylElement from_rho_image(const RootSystem& rs, Weight image);

  /// Lexicographically least reduced word.
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  const Weight& rho_image() const { return rho_image_; }

  bool operator==(const WeylElement& o) const { return rho_image_ == o.rho_image_; }

 private:
  Word word_;
  Weight rho_image_;
};

/// w(lambda) for the element given by a word.
Weight act(const RootSystem& rs, const Word& word, Weight lambda);
/// s_beta(lambda) for the k-th positive root.
Weight reflect_by_root(const RootSystem& rs, int k, Weight lambda);

WeylElement multiply(const RootSystem& rs, const WeylElement& a,
                     const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& a);
/// w * s_beta for the k-th positive root.
WeylElement times_reflection(const RootSystem& rs, const WeylElement& w, int k);
WeylElement longest_element(const RootSystem& rs, const VertexSet& theta);
bool is_reduced(const RootSystem& rs, const Word& word);
/// All reduced words of an element (exponential; small cases only).
std::vector<Word> reduced_words(const RootSystem& rs, const WeylElement& w);
/// |W_Theta| from the Weyl degrees.
uint64_t parabolic_order(const RootSystem& rs, const VertexSet& theta);

std::string word_str(const Word& w);
Word parse_word(std::string_view text);

struct HasseEdge {
  int from = 0;
  int to = 0;
  int label = 0;  // 1-based simple reflection, to = s_label * from

  bool operator==(const HasseEdge&) const = default;
};

inline constexpr uint64_t kDefaultCosetCap = 10'000'000;

class CosetTable {
 public:
  CosetTable(const RootSystem& rs, VertexSet theta,
             uint64_t cap = kDefaultCosetCap);

  const RootSystem& root_system() const { return rs_; }
  const VertexSet& theta() const { return theta_; }
  int size() const { return static_cast<int>(words_.size()); }
  int max_length() const { return max_length_; }

  const Word& word(int idx) const { return words_[idx]; }
  int length(int idx) const { return static_cast<int>(words_[idx].size()); }
  /// w(lambda_Theta) with lambda_Theta = sum of omega_i, i not in Theta.
  const Weight& orbit_point(int idx) const { return points_[idx]; }
  WeylElement element(int idx) const;

  /// Index of the coset containing w (w need not be minimal).
  int coset_of(const WeylElement& w) const;
  int index_of_point(const Weight& mu) const;
  /// Index of the representative whose reduced word is given, if the word
  /// is reduced and names an element of W^Theta.
  std::optional<int> find(const Word& word) const;
  /// Like find but throws InputError.
  int index(const Word& word) const;

  /// Index of w0 w w_theta.
  int dual(int idx) const { return dual_[idx]; }
  /// Indices of the representatives of a given length, in table order.
  const std::vector<int>& of_length(int len) const { return by_length_[len]; }

  /// Successor s_i w in W^Theta or -1, i 1-based.
  int up(int idx, int i) const { return up_[idx][i - 1]; }
  int down(int idx, int i) const { return down_[idx][i - 1]; }

  const WeylElement& w0() const { return w0_; }
  const WeylElement& w_theta() const { return w_theta_; }

 private:
  RootSystem rs_;
  VertexSet theta_;
  Weight lambda_;
  std::vector<Word> words_;
  std::vector<Weight> points_;
  std::unordered_map<Weight, int, WeightHash> index_;
  std::vector<int> dual_;
  std::vector<std::vector<int>> by_length_;
  std::vector<std::vector<int>> up_, down_;
  WeylElement w0_, w_theta_;
  int max_length_ = 0;
};

struct HasseDiagram {
  VertexSet theta;
  int num_vertices = 0;
  std::vector<HasseEdge> edges;  // sorted by (from, label)
};

HasseDiagram hasse_diagram(const CosetTable& ct);

}  // namespace flagchow

#include "flagchow/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "flagchow/errors.hpp"

namespace flagchow {

namespace {

Word descent_word(const RootSystem& rs, Weight mu) {
  Word w;
  const int n = rs.rank();
  while (true) {
    int i = 0;
    while (i < n && mu[i] >= 0) ++i;
    if (i == n) break;
    w.push_back(i + 1);
    rs.reflect_weight(i, mu);
  }
  return w;
}

}  // namespace

size_t WeightHash::operator()(const Weight& w) const noexcept {
  size_t h = 1469598103934665603ULL;
  for (int x : w) {
    h ^= static_cast<size_t>(static_cast<uint32_t>(x));
    h *= 1099511628211ULL;
  }
  return h;
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  WeylElement e;
  e.rho_image_ = rs.rho();
  return e;
}

WeylElement WeylElement::from_word(const RootSystem& rs, const Word& word) {
  for (int i : word) {
    if (i < 1 || i > rs.rank()) {
      throw InputError("reflection index " + std::to_string(i) +
                       " out of range");
    }
  }
  return from_rho_image(rs, act(rs, word, rs.rho()));
}

WeylElement WeylElement::from_rho_image(const RootSystem& rs, Weight image) {
  WeylElement e;
  e.word_ = descent_word(rs, image);
  e.rho_image_ = std::move(image);
  return e;
}

Weight act(const RootSystem& rs, const Word& word, Weight lambda) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    rs.reflect_weight(*it - 1, lambda);
  }
  return lambda;
}

Weight reflect_by_root(const RootSystem& rs, int k, Weight lambda) {
  const int c = rs.pairing(lambda, k);
  if (c == 0) return lambda;
  const Weight b = rs.root_to_weight(rs.positive_roots()[k]);
  for (int j = 0; j < rs.rank(); ++j) lambda[j] -= c * b[j];
  return lambda;
}

WeylElement multiply(const RootSystem& rs, const WeylElement& a,
                     const WeylElement& b) {
  return WeylElement::from_rho_image(rs, act(rs, a.word(), b.rho_image()));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& a) {
  Word r(a.word().rbegin(), a.word().rend());
  return WeylElement::from_word(rs, r);
}

WeylElement times_reflection(const RootSystem& rs, const WeylElement& w,
                             int k) {
  return WeylElement::from_rho_image(
      rs, act(rs, w.word(), reflect_by_root(rs, k, rs.rho())));
}

WeylElement longest_element(const RootSystem& rs, const VertexSet& theta) {
  validate_vertex_set(theta, rs.rank());
  Weight mu = rs.rho();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : theta) {
      if (mu[i - 1] > 0) {
        rs.reflect_weight(i - 1, mu);
        moved = true;
        break;
      }
    }
  }
  return WeylElement::from_rho_image(rs, std::move(mu));
}

bool is_reduced(const RootSystem& rs, const Word& word) {
  return WeylElement::from_word(rs, word).length() ==
         static_cast<int>(word.size());
}

std::vector<Word> reduced_words(const RootSystem& rs, const WeylElement& w) {
  if (w.length() == 0) return {Word{}};
  std::vector<Word> out;
  for (int i = 0; i < rs.rank(); ++i) {
    if (w.rho_image()[i] >= 0) continue;
    Weight mu = w.rho_image();
    rs.reflect_weight(i, mu);
    for (auto& tail : reduced_words(rs, WeylElement::from_rho_image(rs, mu))) {
      Word full{i + 1};
      full.insert(full.end(), tail.begin(), tail.end());
      out.push_back(std::move(full));
    }
  }
  return out;
}

uint64_t parabolic_order(const RootSystem& rs, const VertexSet& theta) {
  uint64_t order = 1;
  for (int d : weyl_degrees(identify_subdiagram(rs, theta))) order *= d;
  return order;
}

std::string word_str(const Word& w) {
  std::string out = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + "]";
}

Word parse_word(std::string_view text) {
  Word out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    if (!std::all_of(cur.begin(), cur.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw InputError("malformed word '" + std::string(text) + "'");
    }
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '[' || c == ']') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

CosetTable::CosetTable(const RootSystem& rs, VertexSet theta, uint64_t cap)
    : rs_(rs), theta_(std::move(theta)) {
  validate_vertex_set(theta_, rs_.rank());
  const int n = rs_.rank();
  const uint64_t expected =
      parabolic_order(rs_, all_vertices(n)) / parabolic_order(rs_, theta_);
  if (expected > cap) {
    throw ResourceError("W^Theta has " + std::to_string(expected) +
                        " elements, above the cap of " + std::to_string(cap));
  }
  lambda_.assign(n, 1);
  for (int i : theta_) lambda_[i - 1] = 0;

  // Breadth-first search: mu -> s_i mu raises the length iff mu_i > 0.
  std::vector<std::vector<Weight>> levels{{lambda_}};
  std::unordered_map<Weight, int, WeightHash> seen{{lambda_, 0}};
  while (true) {
    std::vector<Weight> next;
    for (const auto& mu : levels.back()) {
      for (int i = 0; i < n; ++i) {
        if (mu[i] <= 0) continue;
        Weight nu = mu;
        rs_.reflect_weight(i, nu);
        if (seen.emplace(nu, 0).second) next.push_back(std::move(nu));
      }
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  max_length_ = static_cast<int>(levels.size()) - 1;
  by_length_.resize(levels.size());
  for (auto& level : levels) {
    std::vector<std::pair<Word, Weight>> items;
    items.reserve(level.size());
    for (auto& mu : level) items.emplace_back(descent_word(rs_, mu), std::move(mu));
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [w, mu] : items) {
      const int idx = static_cast<int>(words_.size());
      by_length_[w.size()].push_back(idx);
      index_.emplace(mu, idx);
      words_.push_back(std::move(w));
      points_.push_back(std::move(mu));
    }
  }
  FLAGCHOW_ASSERT(static_cast<uint64_t>(words_.size()) == expected,
                  "coset count disagrees with the Weyl degrees");

  up_.assign(words_.size(), std::vector<int>(n, -1));
  down_.assign(words_.size(), std::vector<int>(n, -1));
  for (int idx = 0; idx < size(); ++idx) {
    for (int i = 0; i < n; ++i) {
      if (points_[idx][i] <= 0) continue;
      Weight nu = points_[idx];
      rs_.reflect_weight(i, nu);
      const int to = index_.at(nu);
      up_[idx][i] = to;
      down_[to][i] = idx;
    }
  }

  w0_ = longest_element(rs_, all_vertices(n));
  w_theta_ = longest_element(rs_, theta_);
  dual_.resize(words_.size());
  for (int idx = 0; idx < size(); ++idx) {
    dual_[idx] = index_.at(act(rs_, w0_.word(), points_[idx]));
  }
}

WeylElement CosetTable::element(int idx) const {
  return WeylElement::from_word(rs_, words_[idx]);
}

int CosetTable::coset_of(const WeylElement& w) const {
  return index_.at(act(rs_, w.word(), lambda_));
}

int CosetTable::index_of_point(const Weight& mu) const {
  auto it = index_.find(mu);
  return it == index_.end() ? -1 : it->second;
}

std::optional<int> CosetTable::find(const Word& word) const {
  for (int i : word) {
    if (i < 1 || i > rs_.rank()) return std::nullopt;
  }
  if (!is_reduced(rs_, word)) return std::nullopt;
  const int idx = index_of_point(act(rs_, word, lambda_));
  if (idx < 0 || length(idx) != static_cast<int>(word.size())) return std::nullopt;
  return idx;
}

int CosetTable::index(const Word& word) const {
  auto idx = find(word);
  if (!idx) {
    throw InputError("word " + word_str(word) +
                     " is not a reduced minimal coset representative");
  }
  return *idx;
}

HasseDiagram hasse_diagram(const CosetTable& ct) {
  HasseDiagram h;
  h.theta = ct.theta();
  h.num_vertices = ct.size();
  const int n = ct.root_system().rank();
  for (int idx = 0; idx < ct.size(); ++idx) {
    for (int i = 1; i <= n; ++i) {
      const int to = ct.up(idx, i);
      if (to >= 0) h.edges.push_back({idx, to, i});
    }
  }
  return h;
}

}  // namespace flagchow

#include "flagchow/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "flagchow/errors.hpp"

namespace flagchow {

namespace {

struct Bond {
  int a, b;  // 0-based vertices
};

// Cartan matrix and squared root lengths of one simple component.
void simple_cartan(const SimpleType& t, IntMatrix& a, std::vector<int>& len) {
  const int n = t.rank;
  a.assign(n, std::vector<int>(n, 0));
  len.assign(n, 2);
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      len[n - 1] = 1;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      for (int i = 0; i + 1 < n; ++i) len[i] = 1;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      len = {2, 2, 1, 1};
      break;
    case 'G':
      a[0][1] = -3;
      a[1][0] = -1;
      len = {1, 3};
      break;
    default:
      throw InputError(std::string("unknown Dynkin family ") + t.family);
  }
}

std::vector<int> simple_degrees(const SimpleType& t) {
  const int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<SimpleType> candidates(int rank) {
  std::vector<SimpleType> out{{'A', rank}};
  if (rank >= 2) out.push_back({'B', rank});
  if (rank >= 3) out.push_back({'C', rank});
  if (rank >= 4) out.push_back({'D', rank});
  if (rank >= 6 && rank <= 8) out.push_back({'E', rank});
  if (rank == 4) out.push_back({'F', 4});
  if (rank == 2) out.push_back({'G', 2});
  return out;
}

// Connected components (0-based vertex lists, each sorted) of the
// subdiagram on `verts`.
std::vector<std::vector<int>> components_of(const IntMatrix& a,
                                            const std::vector<int>& verts) {
  std::vector<std::vector<int>> comps;
  std::set<int> left(verts.begin(), verts.end());
  while (!left.empty()) {
    std::vector<int> comp;
    std::vector<int> stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto it = left.begin(); it != left.end();) {
        if (a[v][*it] != 0) {
          stack.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

// Finds the lexicographically least bijection model vertex -> comp vertex
// preserving Cartan entries.
bool match_component(const IntMatrix& ambient, const std::vector<int>& comp,
                     const IntMatrix& model, std::vector<int>& image) {
  const int r = static_cast<int>(comp.size());
  image.assign(r, -1);
  std::vector<bool> used(r, false);
  std::function<bool(int)> rec = [&](int k) {
    if (k == r) return true;
    for (int c = 0; c < r; ++c) {
      if (used[c]) continue;
      bool ok = ambient[comp[c]][comp[c]] == model[k][k];
      for (int l = 0; ok && l < k; ++l) {
        ok = ambient[comp[c]][image[l]] == model[k][l] &&
             ambient[image[l]][comp[c]] == model[l][k];
      }
      if (!ok) continue;
      used[c] = true;
      image[k] = comp[c];
      if (rec(k + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool is_legal(const SimpleType& t) {
  switch (t.family) {
    case 'A':
      return t.rank >= 1;
    case 'B':
    case 'C':
      return t.rank >= 2;
    case 'D':
      return t.rank >= 4;
    case 'E':
      return t.rank >= 6 && t.rank <= 8;
    case 'F':
      return t.rank == 4;
    case 'G':
      return t.rank == 2;
    default:
      return false;
  }
}

DynkinType::DynkinType(std::vector<SimpleType> components)
    : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (!is_legal(c)) {
      throw InputError(std::string("illegal Dynkin type ") + c.family +
                       std::to_string(c.rank));
    }
  }
}

DynkinType DynkinType::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty() || s == "1") return DynkinType{};
  std::vector<SimpleType> comps;
  std::stringstream ss(s);
  std::string token;
  while (std::getline(ss, token, 'x')) {
    size_t pos = 0;
    int mult = 1;
    if (!token.empty() && std::isdigit(static_cast<unsigned char>(token[0]))) {
      while (pos < token.size() &&
             std::isdigit(static_cast<unsigned char>(token[pos]))) {
        ++pos;
      }
      mult = std::stoi(token.substr(0, pos));
    }
    if (pos >= token.size() ||
        !std::isalpha(static_cast<unsigned char>(token[pos]))) {
      throw InputError("malformed Dynkin type '" + std::string(text) + "'");
    }
    char fam = static_cast<char>(std::toupper(token[pos]));
    std::string digits = token.substr(pos + 1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(c); })) {
      throw InputError("malformed Dynkin type '" + std::string(text) + "'");
    }
    int rank = std::stoi(digits);
    for (int m = 0; m < mult; ++m) comps.push_back({fam, rank});
  }
  return DynkinType(std::move(comps));
}

int DynkinType::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::string DynkinType::str() const {
  if (components_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i) out += "x";
    out += components_[i].family + std::to_string(components_[i].rank);
  }
  return out;
}

std::string DynkinType::display() const {
  if (components_.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < components_.size()) {
    size_t j = i;
    while (j < components_.size() && components_[j] == components_[i]) ++j;
    if (!out.empty()) out += "x";
    if (j - i > 1) out += std::to_string(j - i);
    out += components_[i].family + std::to_string(components_[i].rank);
    i = j;
  }
  return out;
}

RootSystem::RootSystem(DynkinType type) : type_(std::move(type)) {
  rank_ = type_.rank();
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  lengths_.assign(rank_, 2);
  int off = 0;
  for (const auto& comp : type_.components()) {
    IntMatrix a;
    std::vector<int> len;
    simple_cartan(comp, a, len);
    for (int i = 0; i < comp.rank; ++i) {
      lengths_[off + i] = len[i];
      for (int j = 0; j < comp.rank; ++j) cartan_[off + i][off + j] = a[i][j];
    }
    off += comp.rank;
  }
  embedding_.resize(rank_);
  std::iota(embedding_.begin(), embedding_.end(), 1);

  // Closure from the simple roots using root strings.
  std::set<Root> known;
  std::vector<Root> layer;
  for (int i = 0; i < rank_; ++i) {
    Root e(rank_, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), std::greater<>());
    for (const auto& r : layer) positive_.push_back(r);
    std::set<Root> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < rank_; ++i) {
        Root down = beta;
        int p = 0;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int q = p - root_pairing(beta, i);
        if (q > 0) {
          Root up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
  }

  // (alpha_i, alpha_j) = A[i][j] |alpha_i|^2 / 2; computed doubled to stay
  // integral.
  auto norm2 = [&](const Root& b) {
    long long s = 0;
    for (int i = 0; i < rank_; ++i) {
      for (int j = 0; j < rank_; ++j) {
        s += static_cast<long long>(b[i]) * b[j] * cartan_[i][j] * lengths_[i];
      }
    }
    return s;  // = 2 (beta, beta)
  };
  for (const auto& b : positive_) {
    long long n2 = norm2(b);
    Root cv(rank_, 0);
    for (int j = 0; j < rank_; ++j) {
      long long num = 2LL * b[j] * lengths_[j];
      FLAGCHOW_ASSERT(num % n2 == 0, "non-integral coroot");
      cv[j] = static_cast<int>(num / n2);
    }
    coroots_.push_back(cv);
  }
}

int RootSystem::root_index(const Root& beta) const {
  auto it = std::find(positive_.begin(), positive_.end(), beta);
  return it == positive_.end() ? -1 : static_cast<int>(it - positive_.begin());
}

int RootSystem::height(int k) const {
  return std::accumulate(positive_[k].begin(), positive_[k].end(), 0);
}

int RootSystem::pairing(const Weight& lambda, int k) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += coroots_[k][j] * lambda[j];
  return s;
}

int RootSystem::root_pairing(const Root& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * beta[j];
  return s;
}

Weight RootSystem::root_to_weight(const Root& beta) const {
  Weight w(rank_, 0);
  for (int i = 0; i < rank_; ++i) w[i] = root_pairing(beta, i);
  return w;
}

Weight RootSystem::simple_root_weight(int i) const {
  Weight w(rank_, 0);
  for (int k = 0; k < rank_; ++k) w[k] = cartan_[k][i];
  return w;
}

std::vector<mpq_class> RootSystem::weight_to_root(const Weight& lambda) const {
  const int n = rank_;
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
    m[i][n] = lambda[i];
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<mpq_class> out(n);
  for (int i = 0; i < n; ++i) out[i] = m[i][n] / m[i][i];
  return out;
}

void RootSystem::reflect_weight(int i, Weight& lambda) const {
  const int c = lambda[i];
  if (c == 0) return;
  for (int k = 0; k < rank_; ++k) lambda[k] -= c * cartan_[k][i];
}

void RootSystem::reflect_root(int i, Root& beta) const {
  beta[i] -= root_pairing(beta, i);
}

IntMatrix RootSystem::simple_reflection_on_weights(int i) const {
  IntMatrix m(rank_, std::vector<int>(rank_, 0));
  for (int j = 0; j < rank_; ++j) {
    Weight e(rank_, 0);
    e[j] = 1;
    reflect_weight(i, e);
    for (int k = 0; k < rank_; ++k) m[k][j] = e[k];
  }
  return m;
}

RootSystem build_root_system(const DynkinType& type) { return RootSystem(type); }

std::vector<int> weyl_degrees(const DynkinType& type) {
  std::vector<int> out;
  for (const auto& c : type.components()) {
    auto d = simple_degrees(c);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

DynkinType identify_subdiagram(const RootSystem& rs, const VertexSet& theta,
                               std::vector<int>* embedding) {
  validate_vertex_set(theta, rs.rank());
  std::vector<int> verts;
  for (int v : theta) verts.push_back(v - 1);
  std::vector<SimpleType> types;
  std::vector<int> emb;
  for (const auto& comp : components_of(rs.cartan(), verts)) {
    const int r = static_cast<int>(comp.size());
    bool found = false;
    for (const auto& cand : candidates(r)) {
      IntMatrix model;
      std::vector<int> len;
      simple_cartan(cand, model, len);
      std::vector<int> image;
      if (match_component(rs.cartan(), comp, model, image)) {
        types.push_back(cand);
        for (int v : image) emb.push_back(v + 1);
        found = true;
        break;
      }
    }
    FLAGCHOW_ASSERT(found, "unrecognized Dynkin subdiagram");
  }
  if (embedding) *embedding = emb;
  return DynkinType(std::move(types));
}

RootSystem root_subsystem(const RootSystem& rs, const VertexSet& theta) {
  std::vector<int> emb;
  DynkinType t = identify_subdiagram(rs, theta, &emb);
  RootSystem sub(t);
  sub.set_embedding(emb);
  return sub;
}

std::string kernel_display(const RootSystem& rs, const VertexSet& theta) {
  std::vector<int> verts;
  for (int v : theta) verts.push_back(v - 1);
  // ambient component boundaries
  std::vector<std::pair<int, SimpleType>> starts;
  int off = 0;
  for (const auto& c : rs.type().components()) {
    starts.push_back({off, c});
    off += c.rank;
  }
  std::vector<std::string> names;
  for (const auto& comp : components_of(rs.cartan(), verts)) {
    VertexSet labels;
    for (int v : comp) labels.push_back(v + 1);
    std::string name = identify_subdiagram(rs, labels).str();
    for (const auto& [start, st] : starts) {
      if (comp[0] < start || comp[0] >= start + st.rank) continue;
      const int last = start + st.rank - 1;
      const bool at_end = std::find(comp.begin(), comp.end(), last) != comp.end();
      const int r = static_cast<int>(comp.size());
      if (at_end && st.family == 'B' && st.rank > 1) name = "B" + std::to_string(r);
      if (at_end && st.family == 'C' && st.rank > 1) name = "C" + std::to_string(r);
    }
    names.push_back(name);
  }
  if (names.empty()) return "1";
  std::sort(names.begin(), names.end());
  std::string out;
  size_t i = 0;
  while (i < names.size()) {
    size_t j = i;
    while (j < names.size() && names[j] == names[i]) ++j;
    if (!out.empty()) out += "x";
    if (j - i > 1) out += std::to_string(j - i);
    out += names[i];
    i = j;
  }
  return out;
}

VertexSet parse_vertex_set(std::string_view text) {
  VertexSet out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    if (!std::all_of(cur.begin(), cur.end(),
                     [](char c) { return std::isdigit(c); })) {
      throw InputError("malformed vertex list '" + std::string(text) + "'");
    }
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '{' || c == '}' || c == '[' || c == ']') {
      continue;
    } else {
      cur.push_back(c);
    }
  }
  flush();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet all_vertices(int rank) {
  VertexSet v(rank);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

VertexSet complement(const VertexSet& s, int rank) {
  VertexSet out;
  for (int v = 1; v <= rank; ++v) {
    if (!contains(s, v)) out.push_back(v);
  }
  return out;
}

bool contains(const VertexSet& s, int v) {
  return std::find(s.begin(), s.end(), v) != s.end();
}

std::string vertex_set_str(const VertexSet& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

void validate_vertex_set(const VertexSet& s, int rank) {
  for (int v : s) {
    if (v < 1 || v > rank) {
      throw InputError("vertex " + std::to_string(v) + " out of range 1.." +
                       std::to_string(rank));
    }
  }
}

}  // namespace flagchow

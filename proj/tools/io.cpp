#include "io.hpp"

#include <algorithm>
#include <sstream>

#include "flagchow/errors.hpp"

namespace flagchow::io {

namespace {

json coeff_to_json(const mpq_class& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
  return c.get_str();
}

mpq_class coeff_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<int64_t>());
  if (j.is_string()) {
    mpq_class c;
    if (c.set_str(j.get<std::string>(), 10) != 0) {
      throw InputError("malformed coefficient '" + j.get<std::string>() + "'");
    }
    c.canonicalize();
    return c;
  }
  throw InputError("coefficient must be an integer or a \"p/q\" string");
}

int modulus_of_ring(const std::string& ring) {
  if (ring == "Z" || ring == "Q") return 0;
  if (ring.rfind("Z/", 0) == 0) {
    const std::string p = ring.substr(2);
    if (!p.empty() && std::all_of(p.begin(), p.end(), ::isdigit) && p.size() < 6) {
      const int m = std::stoi(p);
      if (m >= 2) return m;
    }
  }
  throw InputError("unknown coefficient ring '" + ring + "'");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

VertexSet vertex_list(const json& j) {
  if (!j.is_array()) throw InputError("expected a list of vertices");
  VertexSet out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("vertices must be integers");
    out.push_back(v.get<int>());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string words_label(const CosetTable& ct, int idx) {
  return word_str(ct.word(idx)) + " (" + std::to_string(ct.length(idx)) + ")";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* const kPalette[] = {"lightblue", "lightpink", "palegreen", "khaki",
                                "plum",      "lightsalmon", "lightcyan", "wheat",
                                "thistle",   "aquamarine"};

}  // namespace

json class_to_json(const FlagVariety& x, const ChowClass& c) {
  if (c.theta != x.theta()) throw InputError("class lives on another variety");
  json terms = json::array();
  for (const auto& [idx, coef] : c.coeffs) {
    terms.push_back({{"word", x.cosets().word(idx)}, {"coeff", coeff_to_json(coef)}});
  }
  return {{"type", x.root_system().type().str()},
          {"theta", x.theta()},
          {"ring", c.ring()},
          {"terms", terms}};
}

ChowClass class_from_json(const FlagVariety& x, const json& j) {
  if (!j.is_object()) throw InputError("a class must be a JSON object");
  const json& type = field(j, "type");
  if (!type.is_string() || !(DynkinType::parse(type.get<std::string>()) == x.root_system().type())) {
    throw InputError("class type does not match " + x.root_system().type().str());
  }
  if (vertex_list(field(j, "theta")) != x.theta()) {
    throw InputError("class theta does not match " + vertex_set_str(x.theta()));
  }
  const json& ring = field(j, "ring");
  if (!ring.is_string()) throw InputError("\"ring\" must be a string");
  const int modulus = modulus_of_ring(ring.get<std::string>());
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("\"terms\" must be a list");
  ChowClass out = x.zero(modulus);
  for (const auto& t : terms) {
    const json& w = field(t, "word");
    if (!w.is_array()) throw InputError("\"word\" must be a list");
    Word word;
    for (const auto& l : w) {
      if (!l.is_number_integer()) throw InputError("word letters must be integers");
      word.push_back(l.get<int>());
    }
    for (int l : word) {
      if (l < 1 || l > x.root_system().rank()) throw InputError("word letter out of range");
    }
    auto idx = x.cosets().find(word);
    if (!idx) throw InputError("word " + word_str(word) + " is not a reduced word in W^theta");
    const bool dual = t.contains("dual") && t.at("dual").is_boolean() && t.at("dual").get<bool>();
    const mpq_class c = coeff_from_json(field(t, "coeff"));
    if (modulus > 0 && c.get_den() != 1) {
      throw InputError("fractional coefficient in ring " + ring.get<std::string>());
    }
    out.add(dual ? x.cosets().dual(*idx) : *idx, c);
  }
  return out;
}

json hasse_to_json(const CosetTable& ct) {
  const HasseDiagram h = hasse_diagram(ct);
  json vertices = json::array(), edges = json::array();
  for (int v = 0; v < ct.size(); ++v) {
    vertices.push_back({{"index", v},
                        {"word", ct.word(v)},
                        {"length", ct.length(v)},
                        {"codim", ct.max_length() - ct.length(v)}});
  }
  for (const auto& e : h.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  }
  return {{"type", ct.root_system().type().str()},
          {"theta", ct.theta()},
          {"vertices", vertices},
          {"edges", edges}};
}

std::string hasse_to_dot(const CosetTable& ct) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int v = 0; v < ct.size(); ++v) {
    os << "  v" << v << " [label=" << quoted(words_label(ct, v)) << "];\n";
  }
  for (const auto& e : hasse_diagram(ct).edges) {
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

json decomposition_to_json(const CosetTable& ct, const VertexSet& circled,
                           const std::vector<MotiveSummand>& parts) {
  json comps = json::array();
  for (const auto& s : parts) {
    json words = json::array();
    for (int v : s.vertices) words.push_back(ct.word(v));
    comps.push_back({{"twist", s.twist},
                     {"profile", s.profile},
                     {"kernel_type", s.kernel_type.str()},
                     {"words", words}});
  }
  return {{"type", ct.root_system().type().str()},
          {"theta", ct.theta()},
          {"circled", circled},
          {"components", comps}};
}

json rost_to_json(const RostDecomposition& r) {
  return {{"lefschetz", r.lefschetz}, {"rost", r.rost}};
}

std::string decomposition_to_dot(const CosetTable& ct, const VertexSet& circled,
                                 const std::vector<MotiveSummand>& parts) {
  std::vector<int> comp(ct.size(), 0);
  for (size_t k = 0; k < parts.size(); ++k) {
    for (int v : parts[k].vertices) comp[v] = static_cast<int>(k);
  }
  constexpr size_t kColors = sizeof(kPalette) / sizeof(kPalette[0]);
  std::ostringstream os;
  os << "digraph decomposition {\n  rankdir=BT;\n  node [shape=box, style=filled];\n";
  for (int v = 0; v < ct.size(); ++v) {
    os << "  v" << v << " [label=" << quoted(words_label(ct, v))
       << ", fillcolor=" << kPalette[comp[v] % kColors] << "];\n";
  }
  for (const auto& e : hasse_diagram(ct).edges) {
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"";
    if (contains(circled, e.label)) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

json automaton_to_json(const Automaton& a) {
  json edges = json::array();
  for (const auto& e : a.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"labels", e.labels}});
  }
  return {{"type", a.type.str()},
          {"states", a.states},
          {"names", a.names},
          {"initial", a.initial},
          {"edges", edges},
          {"height", height(a)}};
}

std::string automaton_to_dot(const Automaton& a) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n";
  for (size_t s = 0; s < a.states.size(); ++s) {
    os << "  s" << s << " [label=" << quoted(a.names[s]);
    if (static_cast<int>(s) == a.initial) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& e : a.edges) {
    std::string label;
    for (size_t k = 0; k < e.labels.size(); ++k) {
      if (k) label += ",";
      label += std::to_string(e.labels[k]);
    }
    os << "  s" << e.from << " -> s" << e.to << " [label=" << quoted(label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<VertexSet> omega_from_json(const json& j) {
  const json& list = j.is_object() ? field(j, "states") : j;
  if (!list.is_array()) throw InputError("omega must be a list of vertex lists");
  std::vector<VertexSet> out;
  for (const auto& s : list) out.push_back(vertex_list(s));
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace flagchow::io

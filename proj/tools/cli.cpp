#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "flagchow/errors.hpp"
#include "flagchow/steenrod.hpp"
#include "io.hpp"

namespace flagchow::cli {

namespace {

using io::json;

struct Options {
  std::string type, theta, circled, format = "json";
  std::string a, b, cls, omega;
  std::optional<int> codim, mod, i;
  bool rost = false;
  int p = 0, vertex = 0;
  std::optional<std::string> profile, j2, j3;
  bool no_zero_cycle = false;
};

/// Inline JSON when it starts with '{' or '[', otherwise a file path.
std::string load_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    const auto b = cur.find_first_not_of(' ');
    if (b == std::string::npos) continue;
    cur = cur.substr(b, cur.find_last_not_of(' ') - b + 1);
    if (cur.empty() || !std::all_of(cur.begin(), cur.end(), ::isdigit) || cur.size() > 6) {
      throw InputError("malformed integer list '" + text + "'");
    }
    out.push_back(std::stoi(cur));
  }
  return out;
}

RootSystem root_system(const Options& o) { return RootSystem(DynkinType::parse(o.type)); }

VertexSet vertices(const RootSystem& rs, const std::string& text) {
  VertexSet s = parse_vertex_set(text);
  validate_vertex_set(s, rs.rank());
  return s;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void check_format(const Options& o) {
  if (o.format != "json" && o.format != "dot") {
    throw InputError("--format must be json or dot");
  }
}

int cmd_roots(const Options& o, std::ostream& out) {
  const RootSystem rs = root_system(o);
  print(out, {{"type", rs.type().str()},
              {"rank", rs.rank()},
              {"cartan", rs.cartan()},
              {"num_positive_roots", rs.num_positive_roots()},
              {"num_roots", 2 * rs.num_positive_roots()},
              {"weyl_order", parabolic_order(rs, all_vertices(rs.rank()))},
              {"positive_roots", rs.positive_roots()}});
  return 0;
}

int cmd_cosets(const Options& o, std::ostream& out) {
  const RootSystem rs = root_system(o);
  const CosetTable ct(rs, vertices(rs, o.theta));
  json j = io::hasse_to_json(ct);
  j.erase("edges");
  j["size"] = ct.size();
  j["max_length"] = ct.max_length();
  print(out, j);
  return 0;
}

int cmd_poincare(const Options& o, std::ostream& out) {
  const RootSystem rs = root_system(o);
  out << intpoly_str(poincare_polynomial(rs, vertices(rs, o.theta))) << "\n";
  return 0;
}

int cmd_mult(const Options& o, std::ostream& out) {
  const RootSystem rs = root_system(o);
  const FlagVariety x(rs, vertices(rs, o.theta));
  const ChowClass a = io::class_from_json(x, io::parse_json(load_text(o.a)));
  const ChowClass b = io::class_from_json(x, io::parse_json(load_text(o.b)));
  print(out, io::class_to_json(x, x.multiply(a, b)));
  return 0;
}

int cmd_chern(const Options& o, std::ostream& out) {
  const RootSystem rs = root_system(o);
  const FlagVariety x(rs, vertices(rs, o.theta));
  if (o.mod && *o.mod < 2) throw InputError("--mod must be at least 2");
  if (o.codim && (*o.codim < 0 || *o.codim > x.dim())) {
    throw InputError("--codim out of range 0.." + std::to_string(x.dim()));
  }
  auto c = x.chern_tangent();
  if (o.mod) {
    for (auto& ci : c) ci = ci.reduced(*o.mod);
  }
  if (o.codim) {
    print(out, io::class_to_json(x, c[*o.codim]));
  } else {
    json arr = json::array();
    for (const auto& ci : c) arr.push_back(io::class_to_json(x, ci));
    print(out, arr);
  }
  return 0;
}

int cmd_steenrod(const Options& o, std::ostream& out) {
  const RootSystem rs = root_system(o);
  const FlagVariety x(rs, vertices(rs, o.theta));
  ChowClass c = io::class_from_json(x, io::parse_json(load_text(o.cls)));
  if (c.modulus == 0) c = c.reduced(2);
  if (c.modulus != 2) throw InputError("Steenrod squares need a class mod 2");
  const SteenrodSquares sq(x);
  if (o.i) {
    if (*o.i < 0) throw InputError("--i must be non-negative");
    print(out, io::class_to_json(x, sq.component(c, *o.i)));
    return 0;
  }
  json arr = json::array();
  for (const auto& s : sq.total(c)) arr.push_back(io::class_to_json(x, s));
  print(out, arr);
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  check_format(o);
  const RootSystem rs = root_system(o);
  const VertexSet theta = vertices(rs, o.theta);
  const VertexSet circled = vertices(rs, o.circled);
  const CosetTable ct(rs, theta);
  const auto parts = decompose(ct, circled);
  if (o.format == "dot") {
    out << io::decomposition_to_dot(ct, circled, parts);
    return 0;
  }
  json j = io::decomposition_to_json(ct, circled, parts);
  if (o.rost) j["rost"] = io::rost_to_json(refine_rost(parts, poincare_polynomial(rs, theta)));
  print(out, j);
  return 0;
}

int cmd_hasse(const Options& o, std::ostream& out) {
  check_format(o);
  const RootSystem rs = root_system(o);
  const CosetTable ct(rs, vertices(rs, o.theta));
  if (o.format == "dot") {
    out << io::hasse_to_dot(ct);
  } else {
    print(out, io::hasse_to_json(ct));
  }
  return 0;
}

int cmd_automaton(const Options& o, std::ostream& out) {
  check_format(o);
  const RootSystem rs = root_system(o);
  const HigherIndexSet omega{rs.type(), io::omega_from_json(io::parse_json(load_text(o.omega)))};
  const Automaton a = automaton(rs, omega);
  if (o.format == "dot") {
    out << io::automaton_to_dot(a);
  } else {
    print(out, io::automaton_to_json(a));
  }
  return 0;
}

JProfile profile_of(const Options& o) {
  if (o.p == 0 || !o.profile) throw InputError("--p and --profile are required");
  return make_profile(DynkinType::parse(o.type), o.p, int_list(*o.profile));
}

TableInvariants invariants_of(const Options& o) {
  TableInvariants inv;
  if (o.profile) {
    if (o.p == 2) {
      inv.j2 = int_list(*o.profile);
    } else if (o.p == 3) {
      inv.j3 = int_list(*o.profile);
    } else {
      throw InputError("table queries use p = 2 or p = 3");
    }
  }
  if (o.j2) inv.j2 = int_list(*o.j2);
  if (o.j3) inv.j3 = int_list(*o.j3);
  inv.zero_cycle_of_degree_one = !o.no_zero_cycle;
  return inv;
}

int cmd_jinv_rhs(const Options& o, std::ostream& out) {
  out << intpoly_str(jinv_poincare_factor(profile_of(o))) << "\n";
  return 0;
}

int cmd_jinv_predict(const Options& o, std::ostream& out) {
  const RootSystem rs = root_system(o);
  const auto r = predicted_rational_poincare(rs, vertices(rs, o.theta), profile_of(o));
  print(out, {{"is_polynomial", r.is_polynomial},
              {"quotient", intpoly_str(r.quotient)},
              {"coefficients", r.quotient}});
  return 0;
}

int cmd_jinv_gensplit(const Options& o, std::ostream& out) {
  const DynkinType t = DynkinType::parse(o.type);
  print(out, {{"type", t.str()},
              {"vertex", o.vertex},
              {"generically_split", is_generically_split(t, o.vertex, invariants_of(o))}});
  return 0;
}

int cmd_jinv_table(const Options& o, std::ostream& out) {
  const DynkinType t = DynkinType::parse(o.type);
  const HigherIndexSet s = higher_index_table(t, invariants_of(o));
  print(out, {{"type", t.str()}, {"states", s.indices}});
  return 0;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Chow rings, Steenrod squares and motives of projective homogeneous varieties",
               "flagchow"};
  app.require_subcommand(1);

  auto add_type = [&](CLI::App* s) { s->add_option("--type", o.type, "Dynkin type, e.g. E7")->required(); };
  auto add_theta = [&](CLI::App* s) {
    s->add_option("--theta", o.theta, "retained vertices of the parabolic, e.g. 2,3,4")
        ->default_val("");
  };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json or dot")->default_val("json");
  };

  auto* roots = app.add_subcommand("roots", "root counts and Cartan matrix");
  add_type(roots);
  auto* cosets = app.add_subcommand("cosets", "minimal coset representatives W^theta");
  add_type(cosets);
  add_theta(cosets);
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of G/P_theta");
  add_type(poincare);
  add_theta(poincare);
  auto* mult = app.add_subcommand("mult", "product of two classes");
  add_type(mult);
  add_theta(mult);
  mult->add_option("--a", o.a, "class JSON or file")->required();
  mult->add_option("--b", o.b, "class JSON or file")->required();
  auto* chern = app.add_subcommand("chern", "Chern classes of the tangent bundle");
  add_type(chern);
  add_theta(chern);
  chern->add_option("--codim", o.codim, "single codimension");
  chern->add_option("--mod", o.mod, "reduce modulo p");
  auto* steenrod = app.add_subcommand("steenrod", "Steenrod squares of a class mod 2");
  add_type(steenrod);
  add_theta(steenrod);
  steenrod->add_option("--class", o.cls, "class JSON or file")->required();
  steenrod->add_option("--i", o.i, "single square S^i");
  auto* dec = app.add_subcommand("decompose", "motivic decomposition of an isotropic variety");
  add_type(dec);
  add_theta(dec);
  dec->add_option("--circled", o.circled, "circled vertices of the Tits index")->default_val("");
  dec->add_flag("--rost", o.rost, "split components into Rost motives");
  add_format(dec);
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of W^theta");
  add_type(hasse);
  add_theta(hasse);
  add_format(hasse);
  auto* aut = app.add_subcommand("automaton", "automaton of a set of higher Tits indices");
  add_type(aut);
  aut->add_option("--omega", o.omega, "JSON list of circled subsets, or file")->required();
  add_format(aut);

  auto* jinv = app.add_subcommand("jinv", "J-invariant arithmetic and tables");
  add_type(jinv);
  jinv->add_option("--p", o.p, "prime");
  jinv->add_option("--profile", o.profile, "J-invariant j_1,...,j_r");
  jinv->add_option("--j2", o.j2, "J_2 for table queries");
  jinv->add_option("--j3", o.j3, "J_3 for table queries");
  jinv->add_flag("--no-zero-cycle", o.no_zero_cycle,
                 "E7: no zero-cycle of degree 1 on the variety of type 7");
  jinv->require_subcommand(1);
  auto* rhs = jinv->add_subcommand("rhs", "product of (t^{d p^j} - 1)/(t^d - 1)");
  auto* predict = jinv->add_subcommand("predict", "Poincare polynomial of rational classes");
  add_theta(predict);
  auto* gensplit = jinv->add_subcommand("gensplit", "is the variety of type i generically split");
  gensplit->add_option("--vertex", o.vertex, "maximal parabolic")->required();
  auto* table = jinv->add_subcommand("table", "higher Tits indices from the known tables");

  std::vector<std::string> argv_store{"flagchow"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(o, out);
    if (cosets->parsed()) return cmd_cosets(o, out);
    if (poincare->parsed()) return cmd_poincare(o, out);
    if (mult->parsed()) return cmd_mult(o, out);
    if (chern->parsed()) return cmd_chern(o, out);
    if (steenrod->parsed()) return cmd_steenrod(o, out);
    if (dec->parsed()) return cmd_decompose(o, out);
    if (hasse->parsed()) return cmd_hasse(o, out);
    if (aut->parsed()) return cmd_automaton(o, out);
    if (rhs->parsed()) return cmd_jinv_rhs(o, out);
    if (predict->parsed()) return cmd_jinv_predict(o, out);
    if (gensplit->parsed()) return cmd_jinv_gensplit(o, out);
    if (table->parsed()) return cmd_jinv_table(o, out);
    err << "error: no command\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return 2;
  } catch (const io::json::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "resource limit: " << one_line(e.what()) << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << one_line(e.what()) << "\n";
    return 4;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return 3;
  }
}

}  // namespace flagchow::cli

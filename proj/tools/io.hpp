#pragma once

// JSON and DOT encodings of Chow classes, Hasse diagrams, motivic
// decompositions and Tits automata.

#include <string>
#include <vector>

#include <json.hpp>

#include "flagchow/motive.hpp"
#include "flagchow/titsjinv.hpp"

namespace flagchow::io {

using nlohmann::json;

/// {"type","theta","ring","terms":[{"word":[...],"coeff":n}]}, terms by
/// coset index. Coefficients are integers, or "p/q" strings over Q.
json class_to_json(const FlagVariety& x, const ChowClass& c);
/// Inverse of class_to_json. A term may carry "dual": true to mean
/// Z_w = [X_{w0 w w_theta}]; words may be any reduced word of the
/// representative. Throws InputError on mismatch with x.
ChowClass class_from_json(const FlagVariety& x, const json& j);

json hasse_to_json(const CosetTable& ct);
std::string hasse_to_dot(const CosetTable& ct);

json decomposition_to_json(const CosetTable& ct, const VertexSet& circled,
                           const std::vector<MotiveSummand>& parts);
json rost_to_json(const RostDecomposition& r);
std::string decomposition_to_dot(const CosetTable& ct, const VertexSet& circled,
                                 const std::vector<MotiveSummand>& parts);

json automaton_to_json(const Automaton& a);
std::string automaton_to_dot(const Automaton& a);
/// Accepts a list of circled subsets, or an automaton JSON (its "states").
std::vector<VertexSet> omega_from_json(const json& j);

/// Parses text as JSON, turning syntax errors into InputError.
json parse_json(const std::string& text);

}  // namespace flagchow::io

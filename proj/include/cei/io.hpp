#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cei/graph.hpp"
#include "cei/graph_ideals.hpp"
#include "cei/monomial.hpp"
#include "cei/resolutions.hpp"
#include "cei/structure.hpp"

namespace cei {

// Graph text: first line n, then one "i j" pair per line. Lines starting
// with '#' and blank lines are ignored.
Graph parse_graph_text(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string format_graph_text(const Graph& g);

// Family specs: path:n, cycle:n, complete:n, empty:n,
// complete_multipartite:a,b,c and union:spec,spec,... (a union takes every
// remaining spec, bare integers continue the previous spec's list).
Graph parse_family_spec(const std::string& spec);
bool looks_like_family_spec(const std::string& text);

// A family spec when the prefix names a family, otherwise a file path.
Graph load_graph(const std::string& source);

// Ideal text: first line n, then one monomial per line written as
// "x1x3^2", "x1*x3^2", "x1 x3^2" or "1". JSON: {"n": 3, "gens": [[1,0,2], ...]}.
MonomialIdeal parse_ideal_text(std::istream& in);
MonomialIdeal parse_ideal_json(const nlohmann::json& j);
MonomialIdeal read_ideal_file(const std::string& path);

nlohmann::json ideal_json(const MonomialIdeal& a);
nlohmann::json decomposition_json(const std::vector<PrimeSupport>& primes);
nlohmann::json betti_json(const BettiTable& t);
nlohmann::json classification_json(const ClassificationReport& r);
nlohmann::json ladder_json(const LadderReport& r);

// Columns are homological degrees i of the ideal, rows are j - i, with a
// "total:" row on top and "." for zero entries.
std::string format_betti_table(const BettiTable& t);

std::string format_classification(const ClassificationReport& r);

}  // namespace cei

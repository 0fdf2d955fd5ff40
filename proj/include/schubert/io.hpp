#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "schubert/gwchev.hpp"
#include "schubert/nbhd.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

// Words serialize as space-separated 1-based simple indices; the identity
// serializes as "e".
std::string format_word(const std::vector<int>& word);
std::string format_word(const RootSystem& rs, const WeylElt& w);
std::vector<int> parse_word(const std::string& text, int rank);

// Coordinate vectors (roots, coroots, degrees) serialize as comma-separated
// integers in increasing simple-index order.
std::string format_coords(const Coords& v);
Coords parse_coords(const std::string& text);
std::string format_degree(const Degree& d);

// Comma-separated 1-based simple indices ("1,3"); empty string is allowed.
std::vector<int> parse_parabolic(const std::string& text, int rank);

Json coset_json(const Coset& c);
Json roots_json(const RootSystem& rs);
Json chevalley_json(const ParabolicData& par, const ChevalleyResult& r);
Json moment_graph_json(const MomentGraph& g);
std::string moment_graph_dot(const MomentGraph& g);

}  // namespace schubert

#include "schubert/io.hpp"

#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

std::string format_word(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << ' ';
    out << word[i] + 1;
  }
  return out.str();
}

std::string format_word(const RootSystem& rs, const WeylElt& w) {
  return format_word(canonical_word(rs, w));
}

std::vector<int> parse_word(const std::string& text, int rank) {
  std::istringstream in(text);
  std::string tok;
  std::vector<int> word;
  while (in >> tok) {
    if (tok == "e") continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw usage_error("invalid word letter: " + tok);
    }
    if (used != tok.size() || v < 1 || v > rank)
      throw usage_error("invalid word letter: " + tok);
    word.push_back(v - 1);
  }
  return word;
}

std::string format_coords(const Coords& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

Coords parse_coords(const std::string& text) {
  Coords out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw usage_error("invalid integer list: " + text);
    }
    if (used != tok.size()) throw usage_error("invalid integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw usage_error("empty integer list");
  return out;
}

std::string format_degree(const Degree& d) { return format_coords(d.coords()); }

std::vector<int> parse_parabolic(const std::string& text, int rank) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (int v : parse_coords(text)) {
    if (v < 1 || v > rank)
      throw usage_error("parabolic index out of range: " + std::to_string(v));
    out.push_back(v - 1);
  }
  return out;
}

Json coset_json(const Coset& c) {
  const ParabolicData& par = *c.parabolic;
  Json j;
  j["word"] = format_word(par.system(), c.min_rep);
  j["length"] = coset_length(par, c.min_rep);
  return j;
}

Json roots_json(const RootSystem& rs) {
  Json arr = Json::array();
  for (const Root& r : rs.positive_roots()) {
    Json j;
    j["index"] = r.index;
    j["root"] = format_coords(r.root_coords);
    j["coroot"] = format_coords(r.coroot_coords);
    j["height"] = height(r.root_coords);
    if (!rs.simply_laced()) j["class"] = rs.is_long(r) ? "long" : "short";
    arr.push_back(std::move(j));
  }
  return arr;
}

Json chevalley_json(const ParabolicData& par, const ChevalleyResult& r) {
  Json j;
  j["classical"] = Json::array();
  for (const auto& t : r.classical) {
    Json term;
    term["coset"] = format_word(par.system(), t.coset.min_rep);
    term["coeff"] = t.coeff;
    j["classical"].push_back(std::move(term));
  }
  j["equivariant"] = Json::object();
  j["equivariant"]["weight"] = r.equivariant.root_coords;
  j["quantum"] = Json::array();
  for (const auto& t : r.quantum) {
    Json term;
    term["degree"] = format_degree(t.degree);
    term["coset"] = format_word(par.system(), t.coset.min_rep);
    term["coeff"] = t.coeff;
    j["quantum"].push_back(std::move(term));
  }
  return j;
}

Json moment_graph_json(const MomentGraph& g) {
  const ParabolicData& par = *g.parabolic;
  const RootSystem& rs = par.system();
  Json j;
  j["vertices"] = Json::array();
  for (const WeylElt& v : g.vertices) {
    Json vj;
    vj["word"] = format_word(rs, v);
    vj["length"] = coset_length(par, v);
    j["vertices"].push_back(std::move(vj));
  }
  j["edges"] = Json::array();
  for (const MomentGraphEdge& e : g.edges) {
    Json ej;
    ej["u"] = format_word(rs, g.vertices[e.u]);
    ej["v"] = format_word(rs, g.vertices[e.v]);
    ej["degree"] = format_coords(e.degree_coords);
    ej["root"] = format_coords(rs.root(e.root_index).root_coords);
    j["edges"].push_back(std::move(ej));
  }
  return j;
}

std::string moment_graph_dot(const MomentGraph& g) {
  const ParabolicData& par = *g.parabolic;
  const RootSystem& rs = par.system();
  std::ostringstream out;
  out << "graph moment_graph {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    out << "  v" << i << " [label=\"" << format_word(rs, g.vertices[i])
        << "\"];\n";
  for (const MomentGraphEdge& e : g.edges)
    out << "  v" << e.u << " -- v" << e.v << " [label=\"d="
        << format_coords(e.degree_coords) << " root="
        << format_coords(rs.root(e.root_index).root_coords) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace schubert

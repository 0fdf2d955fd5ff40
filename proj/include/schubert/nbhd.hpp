#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "schubert/degree.hpp"
#include "schubert/hecke.hpp"

namespace schubert {

struct MomentGraphEdge {
  int u = 0, v = 0;       // vertex ids, u < v
  int root_index = -1;    // root alpha with v W_P = u s_alpha W_P
  Coords degree_coords;   // projected coroot of alpha
};

// Graph on the T-fixed points of X = G/P: vertices are the minimal coset
// representatives, edges the irreducible T-stable curves with their
// degrees.
struct MomentGraph {
  const ParabolicData* parabolic = nullptr;
  std::vector<WeylElt> vertices;  // BFS order by coset length
  std::vector<MomentGraphEdge> edges;
  std::vector<std::vector<int>> adjacency;  // per vertex: edge ids
  std::unordered_map<WeylElt, int, WeylHash> index;

  int vertex_id(const WeylElt& min_rep) const;
};

MomentGraph build_moment_graph(const ParabolicData& par, std::size_t cap);

// Gamma_d(X(w)) as the coset of the Hecke product w . z_d^P.
Coset curve_neighborhood(const ParabolicData& par, const WeylElt& w,
                         const Degree& d);

// Pareto-minimal path weights within the box [0, box], reachable from the
// seed vertices.  A vertex's list is empty iff it is unreachable within
// the box.  The result is independent of traversal order.
std::vector<std::vector<Coords>> oracle_pareto_labels(
    const MomentGraph& graph, const std::vector<char>& seeds,
    const Coords& box);

// Brute-force fixed-point computation of Gamma_d(X(w)): all cosets
// reachable from the Bruhat lower set of w W_P by a path of weight <= d.
std::vector<Coset> neighborhood_oracle(const ParabolicData& par,
                                       const WeylElt& w, const Degree& d,
                                       std::size_t cap);

// w_P(gamma) for gamma a simple index outside Delta_P; the largest root
// congruent to gamma modulo Z Delta_P.
Root wp_max_root(const ParabolicData& par, int gamma);

// True iff gamma is at least as long as every simple root in its connected
// component of the Dynkin diagram on Delta_P u {gamma}.
bool is_fano_root(const ParabolicData& par, int gamma);

// The coset of w_P s_gamma, which equals the degree-gamma^vee curve
// neighborhood of a point.  Requires is_fano_root(par, gamma).
Coset line_neighborhood(const ParabolicData& par, int gamma);

// The complement simple index when P is maximal and that index has
// coefficient one in the highest root; nullopt otherwise.
std::optional<int> is_cominuscule(const ParabolicData& par);

// Number of occurrences of the cominuscule letter in any reduced word of
// the minimal representative: the smallest degree of a rational curve from
// the base point to u.P.
int degree_distance(const ParabolicData& par, const WeylElt& u);

// z_d^P as a d-fold Hecke power of w_P s_gamma.
Coset cominuscule_z(const ParabolicData& par, int d);

}  // namespace schubert

#include "schubert/nbhd.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

bool coords_leq(const Coords& a, const Coords& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Insert into a Pareto-minimal set; false when dominated by an element.
bool pareto_insert(std::vector<Coords>& set, const Coords& w) {
  for (const Coords& e : set)
    if (coords_leq(e, w)) return false;
  set.erase(std::remove_if(set.begin(), set.end(),
                           [&](const Coords& e) { return coords_leq(w, e); }),
            set.end());
  set.push_back(w);
  return true;
}

}  // namespace

int MomentGraph::vertex_id(const WeylElt& min_rep) const {
  auto it = index.find(min_rep);
  return it == index.end() ? -1 : it->second;
}

MomentGraph build_moment_graph(const ParabolicData& par, std::size_t cap) {
  const RootSystem& rs = par.system();
  MomentGraph g;
  g.parabolic = &par;
  g.vertices = enumerate_min_reps(par, cap);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    g.index.emplace(g.vertices[i], static_cast<int>(i));
  g.adjacency.assign(g.vertices.size(), {});
  for (std::size_t ui = 0; ui < g.vertices.size(); ++ui) {
    for (const Root& r : rs.positive_roots()) {
      if (par.root_in_rp[r.index]) continue;
      WeylElt x = multiply(g.vertices[ui], reflection(rs, r));
      int vi = g.vertex_id(coset_factor(par, x).u);
      if (vi < 0) throw std::logic_error("moment graph neighbor not found");
      if (vi == static_cast<int>(ui))
        throw std::logic_error("moment graph edge to itself");
      if (vi < static_cast<int>(ui)) continue;  // recorded from the other end
      MomentGraphEdge e;
      e.u = static_cast<int>(ui);
      e.v = vi;
      e.root_index = r.index;
      e.degree_coords = par.proj_coroot[r.index];
      int id = static_cast<int>(g.edges.size());
      g.edges.push_back(std::move(e));
      g.adjacency[ui].push_back(id);
      g.adjacency[vi].push_back(id);
    }
  }
  return g;
}

Coset curve_neighborhood(const ParabolicData& par, const WeylElt& w,
                         const Degree& d) {
  WeylElt u0 = coset_factor(par, w).u;
  if (d.is_zero()) return Coset{u0, &par};
  ZElement z = z_of_degree(d);
  WeylElt h = hecke_mul(par.system(), u0, z.z_times_wp);
  return make_coset(par, h);
}

std::vector<std::vector<Coords>> oracle_pareto_labels(
    const MomentGraph& graph, const std::vector<char>& seeds,
    const Coords& box) {
  const std::size_t n = graph.vertices.size();
  std::vector<std::vector<Coords>> labels(n);
  std::deque<std::pair<int, Coords>> work;
  Coords zero(box.size(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (seeds[v]) {
      labels[v].push_back(zero);
      work.emplace_back(static_cast<int>(v), zero);
    }
  }
  while (!work.empty()) {
    auto [v, wt] = work.front();
    work.pop_front();
    // Skip labels that have been dominated since they were queued.
    if (std::find(labels[v].begin(), labels[v].end(), wt) == labels[v].end())
      continue;
    for (int eid : graph.adjacency[v]) {
      const MomentGraphEdge& e = graph.edges[eid];
      int to = e.u == v ? e.v : e.u;
      Coords next = wt;
      for (std::size_t i = 0; i < next.size(); ++i)
        next[i] += e.degree_coords[i];
      if (!coords_leq(next, box)) continue;
      if (pareto_insert(labels[to], next)) work.emplace_back(to, next);
    }
  }
  return labels;
}

std::vector<Coset> neighborhood_oracle(const ParabolicData& par,
                                       const WeylElt& w, const Degree& d,
                                       std::size_t cap) {
  const RootSystem& rs = par.system();
  MomentGraph graph = build_moment_graph(par, cap);
  WeylElt wmin = coset_factor(par, w).u;
  std::vector<char> seeds(graph.vertices.size(), 0);
  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    seeds[v] = bruhat_leq(rs, graph.vertices[v], wmin);
  auto labels = oracle_pareto_labels(graph, seeds, d.coords());
  std::vector<Coset> out;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    if (!labels[v].empty()) out.push_back(Coset{graph.vertices[v], &par});
  return out;
}

Root wp_max_root(const ParabolicData& par, int gamma) {
  const RootSystem& rs = par.system();
  if (gamma < 0 || gamma >= rs.rank() || par.in_p[gamma])
    throw usage_error("wp_max_root: index must lie outside Delta_P");
  Coords image = par.w_p.act(rs.simple(gamma));
  const Root& rho = rs.root(rs.index_of(image));
  // rho dominates every root congruent to gamma modulo Z Delta_P.
  for (const Root& r : rs.positive_roots()) {
    bool congruent = true;
    for (int j : par.complement)
      if (r.root_coords[j] != (j == gamma ? 1 : 0)) congruent = false;
    if (congruent && !root_leq(r.root_coords, rho.root_coords))
      throw std::logic_error("w_P(gamma) is not the largest root in its class");
  }
  return rho;
}

bool is_fano_root(const ParabolicData& par, int gamma) {
  const RootSystem& rs = par.system();
  if (gamma < 0 || gamma >= rs.rank() || par.in_p[gamma])
    throw usage_error("is_fano_root: index must lie outside Delta_P");
  // Connected component of gamma in the diagram on Delta_P u {gamma}.
  std::vector<char> allowed(rs.rank(), 0), visited(rs.rank(), 0);
  for (int i : par.delta_p) allowed[i] = 1;
  allowed[gamma] = 1;
  std::vector<int> stack{gamma};
  visited[gamma] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (rs.sym(i) > rs.sym(gamma)) return false;  // strictly longer root
    for (int j = 0; j < rs.rank(); ++j)
      if (j != i && allowed[j] && !visited[j] && rs.cartan(i, j) != 0) {
        visited[j] = 1;
        stack.push_back(j);
      }
  }
  return true;
}

Coset line_neighborhood(const ParabolicData& par, int gamma) {
  const RootSystem& rs = par.system();
  if (!is_fano_root(par, gamma))
    throw usage_error("line_neighborhood requires a Fano root");
  Root rho = wp_max_root(par, gamma);
  Degree d(par, par.proj_coroot[rho.index]);
  std::vector<int> maxima = maximal_roots(d);
  if (maxima.size() != 1 || maxima[0] != rho.index)
    throw std::logic_error("w_P(gamma) is not the unique maximal root");
  WeylElt s = simple_reflection(rs, gamma);
  Coset c = make_coset(par, multiply(par.w_p, s));
  if (c.min_rep != z_of_degree(d).z_min)
    throw std::logic_error("line neighborhood disagrees with z_d^P");
  return c;
}

std::optional<int> is_cominuscule(const ParabolicData& par) {
  if (par.complement.size() != 1) return std::nullopt;
  int gamma = par.complement[0];
  const RootSystem& rs = par.system();
  if (rs.highest_root().root_coords[gamma] != 1) return std::nullopt;
  return gamma;
}

int degree_distance(const ParabolicData& par, const WeylElt& u) {
  auto gamma = is_cominuscule(par);
  if (!gamma) throw usage_error("degree_distance requires a cominuscule space");
  WeylElt m = coset_factor(par, u).u;
  int count = 0;
  for (int i : canonical_word(par.system(), m))
    if (i == *gamma) ++count;
  return count;
}

Coset cominuscule_z(const ParabolicData& par, int d) {
  auto gamma = is_cominuscule(par);
  if (!gamma) throw usage_error("cominuscule_z requires a cominuscule space");
  if (d < 0) throw usage_error("cominuscule_z: degree must be nonnegative");
  const RootSystem& rs = par.system();
  WeylElt factor = multiply(par.w_p, simple_reflection(rs, *gamma));
  WeylElt h = WeylElt::identity(rs.rank());
  for (int k = 0; k < d; ++k) h = hecke_mul(rs, h, factor);
  Coset c = make_coset(par, h);
  Coset direct{z_of_degree(Degree(par, {d})).z_min, &par};
  if (c != direct)
    throw std::logic_error("cominuscule Hecke power disagrees with z_d^P");
  return c;
}

}  // namespace schubert

#include "schubert/degree.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/errors.hpp"
#include "schubert/hecke.hpp"

namespace schubert {

Degree::Degree(const ParabolicData& par, Coords coords)
    : par_(&par), coords_(std::move(coords)) {
  if (coords_.size() != par.complement.size())
    throw usage_error("degree has wrong number of coordinates");
  for (int x : coords_)
    if (x < 0) throw usage_error("degree is not effective");
}

bool Degree::is_zero() const {
  for (int x : coords_)
    if (x != 0) return false;
  return true;
}

Degree project_degree(const ParabolicData& par, const Coords& coroot_vec) {
  if (coroot_vec.size() != static_cast<std::size_t>(par.system().rank()))
    throw usage_error("project_degree: wrong vector size");
  Coords out(par.complement.size());
  for (std::size_t k = 0; k < par.complement.size(); ++k)
    out[k] = coroot_vec[par.complement[k]];
  return Degree(par, std::move(out));
}

Coords lift_degree(const Degree& d) {
  const ParabolicData& par = d.parabolic();
  Coords out(par.system().rank(), 0);
  for (std::size_t k = 0; k < par.complement.size(); ++k)
    out[par.complement[k]] = d.coords()[k];
  return out;
}

static void check_compatible(const Degree& a, const Degree& b) {
  if (!a.parabolic().same_as(b.parabolic()))
    throw usage_error("degrees belong to different homogeneous spaces");
}

Degree degree_add(const Degree& a, const Degree& b) {
  check_compatible(a, b);
  Coords out = a.coords();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coords()[i];
  return Degree(a.parabolic(), std::move(out));
}

std::optional<Degree> degree_try_sub(const Degree& a, const Degree& b) {
  check_compatible(a, b);
  Coords out = a.coords();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] -= b.coords()[i];
    if (out[i] < 0) return std::nullopt;
  }
  return Degree(a.parabolic(), std::move(out));
}

bool deg_leq(const Degree& a, const Degree& b) {
  check_compatible(a, b);
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    if (a.coords()[i] > b.coords()[i]) return false;
  return true;
}

static bool proj_leq(const ParabolicData& par, int root_index,
                     const Degree& d) {
  const Coords& proj = par.proj_coroot[root_index];
  for (std::size_t i = 0; i < proj.size(); ++i)
    if (proj[i] > d.coords()[i]) return false;
  return true;
}

std::vector<int> maximal_roots(const Degree& d) {
  const ParabolicData& par = d.parabolic();
  const RootSystem& rs = par.system();
  if (d.is_zero()) throw usage_error("maximal_roots: degree must be positive");
  std::vector<int> cands;
  for (const Root& r : rs.positive_roots())
    if (!par.root_in_rp[r.index] && proj_leq(par, r.index, d))
      cands.push_back(r.index);
  std::vector<int> out;
  for (int a : cands) {
    bool maximal = true;
    for (int b : cands) {
      if (a != b && root_leq(rs.root(a).root_coords, rs.root(b).root_coords)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  // Distinct maximal roots of the same degree are pairwise separated.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (!rs.are_separated(rs.root(out[i]), rs.root(out[j])))
        throw std::logic_error("maximal roots are not pairwise separated");
  return out;
}

GreedyDecomposition greedy(const Degree& d) {
  const ParabolicData& par = d.parabolic();
  GreedyDecomposition out{{}, d};
  Degree cur = d;
  while (!cur.is_zero()) {
    std::vector<int> maxima = maximal_roots(cur);
    int pick = maxima.front();  // smallest table index
    out.roots.push_back(pick);
    auto next =
        degree_try_sub(cur, Degree(par, par.proj_coroot[pick]));
    if (!next) throw std::logic_error("greedy step left a negative degree");
    cur = *next;
  }
  return out;
}

ZElement z_of_degree(const Degree& d) {
  const ParabolicData& par = d.parabolic();
  const RootSystem& rs = par.system();
  GreedyDecomposition dec = greedy(d);
  WeylElt h = WeylElt::identity(rs.rank());
  for (int idx : dec.roots) h = hecke_mul(rs, h, reflection(rs, rs.root(idx)));
  h = hecke_mul(rs, h, par.w_p);
  WeylElt z = coset_factor(par, h).u;
  // h is the maximal representative: w_P . h = h.
  if (hecke_mul(rs, par.w_p, h) != h)
    throw std::logic_error("z_d^P w_P is not w_P-stable");
  return ZElement{z, h};
}

bool is_cosmall(const ParabolicData& par, const Root& alpha) {
  if (par.root_in_rp[alpha.index])
    throw usage_error("is_cosmall: root lies in R+_P");
  Degree d(par, par.proj_coroot[alpha.index]);
  std::vector<int> maxima = maximal_roots(d);
  return maxima.size() == 1 && maxima[0] == alpha.index;
}

int c1_pairing(const Degree& d) {
  const ParabolicData& par = d.parabolic();
  const RootSystem& rs = par.system();
  Coords e = lift_degree(d);
  int sum = 0;
  for (const Root& r : rs.positive_roots())
    if (!par.root_in_rp[r.index]) sum += rs.pair(r.root_coords, e);
  return sum;
}

CosmallCriteria cosmall_criteria(const ParabolicData& par, const Root& alpha) {
  const RootSystem& rs = par.system();
  if (par.root_in_rp[alpha.index])
    throw usage_error("cosmall_criteria: root lies in R+_P");
  CosmallCriteria out;
  out.is_p_cosmall = is_cosmall(par, alpha);

  Degree d(par, par.proj_coroot[alpha.index]);
  WeylElt s = reflection(rs, alpha);
  out.length_equality = coset_length(par, s) == c1_pairing(d) - 1;

  // (R+ \ R+_P) n s_alpha(R+_P) empty, and every inversion of s_alpha
  // outside R+_P u {alpha} pairs to 1 with alpha^vee.
  bool cond = true;
  for (int idx : par.rp) {
    Coords img = s.act(rs.root(idx).root_coords);
    auto found = rs.find(img);
    if (found && !par.root_in_rp[*found]) {
      cond = false;
      break;
    }
  }
  if (cond) {
    for (int idx : inversion_set(rs, s)) {
      if (par.root_in_rp[idx] || idx == alpha.index) continue;
      if (rs.pair(rs.root(idx).root_coords, alpha.coroot_coords) != 1) {
        cond = false;
        break;
      }
    }
  }
  out.condition_c = cond;

  if (out.is_p_cosmall != out.length_equality ||
      out.is_p_cosmall != out.condition_c)
    throw std::logic_error("cosmall criteria disagree");
  return out;
}

bool is_small(const RootSystem& rs, const Root& alpha) {
  if (rs.simply_laced()) return true;
  if (!rs.is_long(alpha)) return true;
  std::vector<int> shorts;
  for (const Root& r : rs.positive_roots())
    if (rs.is_short(r)) shorts.push_back(r.index);
  for (std::size_t i = 0; i < shorts.size(); ++i) {
    for (std::size_t j = i; j < shorts.size(); ++j) {
      const Coords& a = rs.root(shorts[i]).root_coords;
      const Coords& b = rs.root(shorts[j]).root_coords;
      bool equal = true;
      for (int k = 0; k < rs.rank(); ++k)
        if (a[k] + b[k] != alpha.root_coords[k]) {
          equal = false;
          break;
        }
      if (equal) return false;  // large
    }
  }
  return true;
}

ConjectureReport conjecture_6_3_scan(const ParabolicData& par,
                                     std::size_t cap) {
  const RootSystem& rs = par.system();
  if (!rs.simply_laced())
    throw usage_error("conjecture scan requires a simply laced type");
  ConjectureReport report;
  for (const Root& r : rs.positive_roots()) {
    if (par.root_in_rp[r.index]) continue;
    if (static_cast<std::size_t>(report.roots_checked) >= cap)
      throw resource_error("conjecture scan exceeds cap " +
                           std::to_string(cap));
    ++report.roots_checked;
    bool lhs = is_cosmall(par, r);
    Degree d(par, par.proj_coroot[r.index]);
    WeylElt z = z_of_degree(d).z_min;
    WeylElt s_min = coset_factor(par, reflection(rs, r)).u;
    bool rhs = z == s_min;
    if (lhs != rhs) report.counterexamples.push_back(r.index);
  }
  return report;
}

}  // namespace schubert

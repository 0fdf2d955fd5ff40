#include "schubert/gwchev.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/errors.hpp"
#include "schubert/hecke.hpp"

namespace schubert {

Weight weight_difference(const RootSystem& rs, const WeylElt& u, int beta) {
  if (beta < 0 || beta >= rs.rank())
    throw usage_error("weight_difference: simple index out of range");
  // Track u.omega_beta = omega_beta - sum r_j alpha_j while applying the
  // letters of u right to left; each step uses
  // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
  std::vector<int> word = canonical_word(rs, u);
  Coords r(rs.rank(), 0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    int pairing = (i == beta) ? 1 : 0;
    for (int j = 0; j < rs.rank(); ++j) pairing -= r[j] * rs.cartan(j, i);
    r[i] += pairing;
  }
  for (int x : r)
    if (x < 0)
      throw std::logic_error("weight difference has a negative coordinate");
  return Weight{std::move(r)};
}

std::optional<Coset> pushforward_class(const ParabolicData& par,
                                       const WeylElt& w, const Degree& d) {
  const RootSystem& rs = par.system();
  if (d.is_zero())
    throw usage_error("pushforward_class: degree must be positive");
  WeylElt u0 = coset_factor(par, w).u;
  ZElement z = z_of_degree(d);
  WeylElt h = hecke_mul(rs, u0, z.z_times_wp);
  WeylElt c = coset_factor(par, h).u;
  int expected = length(rs, u0) + c1_pairing(d) - 1;
  if (length(rs, c) != expected) return std::nullopt;
  // A nonzero pushforward certifies d as the class of a P-cosmall root
  // alpha with the target coset equal to w s_alpha W_P.
  int found = -1;
  for (const Root& r : rs.positive_roots()) {
    if (par.root_in_rp[r.index]) continue;
    if (par.proj_coroot[r.index] != d.coords()) continue;
    if (!is_cosmall(par, r)) continue;
    if (found >= 0)
      throw std::logic_error("pushforward certificate is not unique");
    found = r.index;
  }
  if (found < 0)
    throw std::logic_error("pushforward without a P-cosmall certificate");
  if (!cosmall_criteria(par, rs.root(found)).is_p_cosmall)
    throw std::logic_error("pushforward certificate fails cosmall criteria");
  WeylElt ws = coset_factor(par, multiply(u0, reflection(rs, rs.root(found)))).u;
  if (ws != c)
    throw std::logic_error("pushforward coset differs from w s_alpha W_P");
  return Coset{c, &par};
}

int gw_two_point(const ParabolicData& par, const WeylElt& u, const WeylElt& w,
                 const Degree& d) {
  auto pf = pushforward_class(par, w, d);
  if (!pf) return 0;
  return pf->min_rep == coset_factor(par, u).u ? 1 : 0;
}

int ktheory_two_point(const ParabolicData& par, const WeylElt& u,
                      const WeylElt& w, const Degree& d) {
  const RootSystem& rs = par.system();
  WeylElt target = coset_factor(par, w).u;
  if (!d.is_zero())
    target =
        coset_factor(par, hecke_mul(rs, target, z_of_degree(d).z_times_wp)).u;
  return bruhat_leq(rs, coset_factor(par, u).u, target) ? 1 : 0;
}

ChevalleyResult quantum_chevalley(const ParabolicData& par, const WeylElt& u,
                                  int beta) {
  const RootSystem& rs = par.system();
  if (beta < 0 || beta >= rs.rank() || par.in_p[beta])
    throw usage_error("quantum_chevalley: beta must lie outside Delta_P");
  WeylElt u0 = coset_factor(par, u).u;
  int lu = length(rs, u0);
  ChevalleyResult out;
  out.equivariant = weight_difference(rs, u0, beta);
  for (const Root& r : rs.positive_roots()) {
    if (par.root_in_rp[r.index]) continue;
    int coeff = r.coroot_coords[beta];  // (omega_beta, alpha^vee)
    if (coeff == 0) continue;
    WeylElt target = coset_factor(par, multiply(u0, reflection(rs, r))).u;
    int lt = length(rs, target);
    if (lt == lu + 1)
      out.classical.push_back({Coset{target, &par}, coeff});
    Degree d(par, par.proj_coroot[r.index]);
    if (lt == lu + 1 - c1_pairing(d))
      out.quantum.push_back({d, Coset{target, &par}, coeff});
  }
  auto word_key = [&](const Coset& c) { return canonical_word(rs, c.min_rep); };
  std::sort(out.classical.begin(), out.classical.end(),
            [&](const auto& a, const auto& b) {
              return word_key(a.coset) < word_key(b.coset);
            });
  std::sort(out.quantum.begin(), out.quantum.end(),
            [&](const auto& a, const auto& b) {
              if (a.degree.coords() != b.degree.coords())
                return a.degree.coords() < b.degree.coords();
              return word_key(a.coset) < word_key(b.coset);
            });
  return out;
}

int divisor_three_point(const ParabolicData& par, const WeylElt& u, int beta,
                        const WeylElt& w, const Degree& d) {
  const RootSystem& rs = par.system();
  if (beta < 0 || beta >= rs.rank() || par.in_p[beta])
    throw usage_error("divisor_three_point: beta must lie outside Delta_P");
  int pos = -1;
  for (std::size_t k = 0; k < par.complement.size(); ++k)
    if (par.complement[k] == beta) pos = static_cast<int>(k);
  return d.coords()[pos] * gw_two_point(par, u, w, d);
}

}  // namespace schubert

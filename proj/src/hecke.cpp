#include "schubert/hecke.hpp"

#include <cassert>

namespace schubert {

WeylElt hecke_mul_word(const RootSystem& rs, const WeylElt& u,
                       const std::vector<int>& word) {
  WeylElt r = u;
  for (int i : word)
    if (!is_right_descent(rs, r, i)) r = multiply(r, simple_reflection(rs, i));
  return r;
}

WeylElt hecke_mul(const RootSystem& rs, const WeylElt& u, const WeylElt& v) {
  return hecke_mul_word(rs, u, canonical_word(rs, v));
}

Coset hecke_mul_coset(const ParabolicData& par, const WeylElt& u,
                      const Coset& c) {
  WeylElt h = hecke_mul(par.system(), u, c.min_rep);
  return make_coset(par, h);
}

bool is_reduced_product(const RootSystem& rs, const WeylElt& u,
                        const WeylElt& v) {
  bool reduced =
      length(rs, multiply(u, v)) == length(rs, u) + length(rs, v);
#ifndef NDEBUG
  // l(uv) = l(u) + l(v) iff I(u) and I(v^{-1}) are disjoint.
  auto negative = [](const Coords& v2) {
    for (int x : v2) {
      if (x > 0) return false;
      if (x < 0) return true;
    }
    return false;
  };
  bool disjoint = true;
  WeylElt vinv = v.inverse();
  for (const Root& r : rs.positive_roots()) {
    if (negative(u.act(r.root_coords)) && negative(vinv.act(r.root_coords))) {
      disjoint = false;
      break;
    }
  }
  assert(reduced == disjoint);
#endif
  return reduced;
}

}  // namespace schubert

#pragma once

#include "schubert/weyl.hpp"

namespace schubert {

// Hecke (Demazure) monoid product: fold the canonical reduced word of v
// into u, extending only when the length grows.
WeylElt hecke_mul(const RootSystem& rs, const WeylElt& u, const WeylElt& v);

// Fold an explicit word (0-based simple indices); the word need not be
// reduced.
WeylElt hecke_mul_word(const RootSystem& rs, const WeylElt& u,
                       const std::vector<int>& word);

// Induced action on W/W_P: u . (w W_P) = (u . w) W_P.
Coset hecke_mul_coset(const ParabolicData& par, const WeylElt& u,
                      const Coset& c);

// True iff l(uv) = l(u) + l(v).
bool is_reduced_product(const RootSystem& rs, const WeylElt& u,
                        const WeylElt& v);

}  // namespace schubert

#pragma once

#include <optional>
#include <vector>

#include "schubert/degree.hpp"

namespace schubert {

// An element of the root lattice in simple-root coordinates, used for the
// equivariant coefficient c_T(omega_beta - u.omega_beta).
struct Weight {
  Coords root_coords;

  bool is_zero() const {
    for (int x : root_coords)
      if (x != 0) return false;
    return true;
  }
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.root_coords == b.root_coords;
  }
};

struct ChevalleyClassicalTerm {
  Coset coset;
  int coeff = 0;
};

struct ChevalleyQuantumTerm {
  Degree degree;
  Coset coset;
  int coeff = 0;
};

struct ChevalleyResult {
  std::vector<ChevalleyClassicalTerm> classical;
  Weight equivariant;  // may be zero
  std::vector<ChevalleyQuantumTerm> quantum;
};

// omega_beta - u.omega_beta in root coordinates (beta a 0-based simple
// index).  Always has nonnegative coordinates.
Weight weight_difference(const RootSystem& rs, const WeylElt& u, int beta);

// Class of the first evaluation pushforward of the degree-d space of
// curves meeting X(w): the coset of w . z_d^P when its length equals
// l(w W_P) + (c_1, d) - 1, and nothing otherwise.  Requires d > 0.
std::optional<Coset> pushforward_class(const ParabolicData& par,
                                       const WeylElt& w, const Degree& d);

// Two-point Gromov-Witten invariant I_d([Y(u)], [X(w)]) in {0, 1}.
int gw_two_point(const ParabolicData& par, const WeylElt& u, const WeylElt& w,
                 const Degree& d);

// K-theoretic analogue: 1 iff u W_P <= (w . z_d^P) W_P.  d may be zero.
int ktheory_two_point(const ParabolicData& par, const WeylElt& u,
                      const WeylElt& w, const Degree& d);

// Expansion of [Y(u)] * [Y(s_beta)] into classical, equivariant, and
// quantum terms.  beta is a 0-based simple index outside Delta_P.
ChevalleyResult quantum_chevalley(const ParabolicData& par, const WeylElt& u,
                                  int beta);

// (omega_beta, d) * I_d([Y(u)], [X(w)]): the three-point invariant with a
// divisor insertion, via the divisor axiom.  Requires d > 0.
int divisor_three_point(const ParabolicData& par, const WeylElt& u, int beta,
                        const WeylElt& w, const Degree& d);

}  // namespace schubert

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

// An effective curve class in H_2(X), stored as its canonical coordinate
// vector on Delta \ Delta_P (coroot coordinates with the Delta_P entries
// dropped).  The referenced ParabolicData must outlive the Degree.
class Degree {
 public:
  Degree(const ParabolicData& par, Coords coords);

  const Coords& coords() const { return coords_; }
  const ParabolicData& parabolic() const { return *par_; }
  bool is_zero() const;

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.par_->same_as(*b.par_) && a.coords_ == b.coords_;
  }
  friend bool operator!=(const Degree& a, const Degree& b) {
    return !(a == b);
  }

 private:
  const ParabolicData* par_;
  Coords coords_;
};

// Canonical representative of a full coroot vector modulo Z Delta_P^vee.
Degree project_degree(const ParabolicData& par, const Coords& coroot_vec);
// A lift back to the full coroot lattice, with Delta_P coordinates zero.
Coords lift_degree(const Degree& d);

Degree degree_add(const Degree& a, const Degree& b);
// Componentwise difference; nullopt when the result would not be effective.
std::optional<Degree> degree_try_sub(const Degree& a, const Degree& b);
bool deg_leq(const Degree& a, const Degree& b);

// Maximal elements, under the root partial order, of the roots in
// R+ \ R+_P whose projected coroot is <= d.  Requires d > 0.
std::vector<int> maximal_roots(const Degree& d);

struct GreedyDecomposition {
  std::vector<int> roots;  // positive root indices, in greedy order
  Degree degree;
};

// Canonical greedy decomposition: at each step the maximal root with the
// smallest table index is removed.
GreedyDecomposition greedy(const Degree& d);

struct ZElement {
  WeylElt z_min;       // minimal coset representative z_d^P
  WeylElt z_times_wp;  // the Hecke product of the greedy reflections and w_P
};

ZElement z_of_degree(const Degree& d);

// True iff alpha is the unique maximal root of its own projected coroot
// class.  Requires alpha in R+ \ R+_P.
bool is_cosmall(const ParabolicData& par, const Root& alpha);

// Pairing of c_1(T_X) = sum of the roots in R+ \ R+_P with d.
int c1_pairing(const Degree& d);

struct CosmallCriteria {
  bool is_p_cosmall = false;
  bool length_equality = false;
  bool condition_c = false;
};

// Evaluates the three equivalent cosmall conditions independently and
// throws logic_error if they disagree.
CosmallCriteria cosmall_criteria(const ParabolicData& par, const Root& alpha);

// A root is large when it is long and a sum of two short positive roots;
// small otherwise.  In simply laced systems every root counts as small.
bool is_small(const RootSystem& rs, const Root& alpha);

struct ConjectureReport {
  int roots_checked = 0;
  std::vector<int> counterexamples;  // root indices
};

// Scans all alpha in R+ \ R+_P of a simply laced system for the
// biconditional "alpha is P-cosmall iff z_{alpha^vee}^P W_P = s_alpha W_P".
// Reports, never asserts.
ConjectureReport conjecture_6_3_scan(const ParabolicData& par,
                                     std::size_t cap);

}  // namespace schubert

#pragma once

#include <cstddef>
#include <vector>

#include "schubert/rootsys.hpp"

namespace schubert {

// A Weyl group element, stored as the integer matrix of its action on
// root-lattice coordinates (column j = image of alpha_j) together with the
// matrix of the inverse element.  Values are immutable; equality and
// hashing use the action matrix only.
class WeylElt {
 public:
  static WeylElt identity(int rank);
  static WeylElt from_matrices(int rank, std::vector<int> fwd,
                               std::vector<int> inv);

  int rank() const { return rank_; }
  bool is_identity() const;
  int entry(int i, int j) const { return fwd_[i * rank_ + j]; }
  int inv_entry(int i, int j) const { return inv_[i * rank_ + j]; }
  Coords act(const Coords& v) const;
  Coords act_inverse(const Coords& v) const;
  WeylElt inverse() const;

  const std::vector<int>& matrix_data() const { return fwd_; }
  const std::vector<int>& inverse_matrix_data() const { return inv_; }

  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    return a.rank_ == b.rank_ && a.fwd_ == b.fwd_;
  }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) {
    return !(a == b);
  }

 private:
  WeylElt(int rank, std::vector<int> fwd, std::vector<int> inv);
  int rank_;
  std::vector<int> fwd_, inv_;
};

struct WeylHash {
  std::size_t operator()(const WeylElt& w) const;
};

WeylElt multiply(const WeylElt& a, const WeylElt& b);
WeylElt inverse(const WeylElt& w);
Coords act(const WeylElt& w, const Coords& v);

// Action on coroot-lattice coordinates: the same linear map expressed in
// the simple-coroot basis (conjugate by the symmetrizers).
Coords act_coroot(const RootSystem& rs, const WeylElt& w, const Coords& v);

WeylElt simple_reflection(const RootSystem& rs, int i);
WeylElt reflection(const RootSystem& rs, const Root& alpha);

// True iff w(alpha_i) < 0, i.e. l(w s_i) < l(w).
bool is_right_descent(const RootSystem& rs, const WeylElt& w, int i);
// True iff w^{-1}(alpha_i) < 0, i.e. l(s_i w) < l(w).
bool is_left_descent(const RootSystem& rs, const WeylElt& w, int i);

int length(const RootSystem& rs, const WeylElt& w);
// Indices of the positive roots sent to negative roots by w.
std::vector<int> inversion_set(const RootSystem& rs, const WeylElt& w);

// Lexicographically smallest reduced word (0-based simple indices).
std::vector<int> canonical_word(const RootSystem& rs, const WeylElt& w);
WeylElt word_to_element(const RootSystem& rs, const std::vector<int>& word);

// Longest element of the standard parabolic subgroup on the given simple
// indices (empty set gives the identity).
WeylElt longest_element(const RootSystem& rs, const std::vector<int>& subset);

// Bruhat order on W; memoized in the root system's shared cache.
bool bruhat_leq(const RootSystem& rs, const WeylElt& u, const WeylElt& w);

struct ParabolicData {
  const RootSystem* rs = nullptr;
  std::vector<int> delta_p;       // sorted 0-based simple indices
  std::vector<char> in_p;         // size rank mask
  std::vector<int> rp;            // positive root indices of R+_P
  std::vector<char> root_in_rp;   // mask over the positive root table
  std::vector<int> complement;    // sorted Delta \ Delta_P
  std::vector<Coords> proj_coroot;  // per positive root: coroot dropped to
                                    // the complement coordinates
  WeylElt w_p = WeylElt::identity(1);

  const RootSystem& system() const { return *rs; }
  bool same_as(const ParabolicData& other) const {
    return rs == other.rs && delta_p == other.delta_p;
  }
};

ParabolicData make_parabolic(const RootSystem& rs, std::vector<int> delta_p);
ParabolicData full_flag(const RootSystem& rs);

struct Coset {
  WeylElt min_rep;
  const ParabolicData* parabolic = nullptr;

  friend bool operator==(const Coset& a, const Coset& b) {
    return a.min_rep == b.min_rep;
  }
  friend bool operator!=(const Coset& a, const Coset& b) { return !(a == b); }
};

struct CosetFactorization {
  WeylElt u;  // minimal representative, I(u) disjoint from R+_P
  WeylElt v;  // element of W_P with w = u v reduced
};

CosetFactorization coset_factor(const ParabolicData& par, const WeylElt& w);
Coset make_coset(const ParabolicData& par, const WeylElt& w);
int coset_length(const ParabolicData& par, const WeylElt& w);
bool is_min_rep(const ParabolicData& par, const WeylElt& w);
bool bruhat_leq_coset(const ParabolicData& par, const WeylElt& u,
                      const WeylElt& w);

// All minimal representatives in BFS order by coset length, discovered via
// left multiplication by simple reflections.  Throws resource_error when
// more than `cap` cosets are found.
std::vector<WeylElt> enumerate_min_reps(const ParabolicData& par,
                                        std::size_t cap);

}  // namespace schubert

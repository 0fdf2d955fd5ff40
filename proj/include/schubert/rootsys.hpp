#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

// Integer coefficient vector over the simple roots (or simple coroots).
using Coords = std::vector<int>;

// Cartan data for a finite crystallographic root system.
//
// cartan[i][j] = <alpha_i, alpha_j^vee>, so the reflection s_j sends
// alpha_i to alpha_i - cartan[i][j] * alpha_j.  sym[i] is the half squared
// length of alpha_i under the invariant form normalized so that short roots
// have squared length 2; cartan[i][j] * sym[j] is the (symmetric) Gram
// matrix of the form.
struct CartanDatum {
  char type_label = 'X';  // 'A'..'G', or 'X' for raw matrices (e.g. duals)
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<int> sym;

  static CartanDatum of_type(char type_label, int rank);
  static CartanDatum from_matrix(std::vector<std::vector<int>> cartan,
                                 char label = 'X');

  // Throws usage_error on malformed data (wrong diagonal, sign pattern,
  // asymmetric or non positive definite Gram matrix, rank out of range).
  void validate() const;
};

// Smallest positive integers d with cartan[i][j]*d[j] symmetric, one scale
// per connected component of the Dynkin diagram.
std::vector<int> derive_symmetrizers(
    const std::vector<std::vector<int>>& cartan);

struct Root {
  Coords root_coords;    // over simple roots
  Coords coroot_coords;  // over simple coroots
  int index = -1;        // position in the positive root table
  bool is_positive = true;
  int norm2 = 2;  // squared length (alpha, alpha)
};

// Partial order on R*Delta: a <= b iff b - a has nonnegative coefficients.
bool root_leq(const Coords& a, const Coords& b);
// Componentwise maximum (least upper bound in the coefficient order).
Coords join(const Coords& a, const Coords& b);
// Sum of coefficients.
int height(const Coords& v);

class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum);
  static RootSystem of_type(char type_label, int rank);

  ~RootSystem();
  RootSystem(const RootSystem&) = delete;
  RootSystem& operator=(const RootSystem&) = delete;
  RootSystem(RootSystem&&) noexcept;
  RootSystem& operator=(RootSystem&&) noexcept;

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& root(int index) const { return positive_.at(index); }
  const Root& highest_root() const;

  // Index of a positive root by its coordinates; nullopt if not a root.
  std::optional<int> find(const Coords& root_coords) const;
  int index_of(const Coords& root_coords) const;  // throws usage_error

  int cartan(int i, int j) const { return datum_.cartan[i][j]; }
  int sym(int i) const { return datum_.sym[i]; }
  Coords simple(int i) const;  // coordinate vector of alpha_i

  // Cartan pairing <v, c> of a root-lattice vector with a coroot-lattice
  // vector, extended bilinearly from <alpha_i, alpha_j^vee> = cartan[i][j].
  int pair(const Coords& root_vec, const Coords& coroot_vec) const;
  // W-invariant form (a, b) on the root lattice.
  long long form(const Coords& a, const Coords& b) const;

  bool simply_laced() const { return min_norm2_ == max_norm2_; }
  bool is_long(const Root& r) const { return r.norm2 == max_norm2_; }
  bool is_short(const Root& r) const { return r.norm2 == min_norm2_; }

  // True iff supp(a) union supp(b) is disconnected in the Dynkin diagram.
  bool are_separated(const Root& a, const Root& b) const;

  // The dual root system (transposed Cartan matrix); roots of the dual are
  // the coroots of this system, with matching coordinate vectors.
  RootSystem dual() const;

  // Shared memo table for the Bruhat order (thread-safe, idempotent).
  bool memo_lookup(const std::vector<int>& key, bool* out) const;
  void memo_store(const std::vector<int>& key, bool value) const;

 private:
  struct Memo;
  CartanDatum datum_;
  std::vector<Root> positive_;
  std::map<Coords, int> lookup_;
  int highest_ = -1;
  int min_norm2_ = 2;
  int max_norm2_ = 2;
  std::unique_ptr<Memo> memo_;
};

}  // namespace schubert

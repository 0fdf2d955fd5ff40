#include "schubert/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

bool vec_negative(const Coords& v) {
  for (int x : v) {
    if (x > 0) return false;
    if (x < 0) return true;
  }
  return false;  // zero vector
}

}  // namespace

WeylElt::WeylElt(int rank, std::vector<int> fwd, std::vector<int> inv)
    : rank_(rank), fwd_(std::move(fwd)), inv_(std::move(inv)) {}

WeylElt WeylElt::identity(int rank) {
  std::vector<int> m(rank * rank, 0);
  for (int i = 0; i < rank; ++i) m[i * rank + i] = 1;
  return WeylElt(rank, m, m);
}

WeylElt WeylElt::from_matrices(int rank, std::vector<int> fwd,
                               std::vector<int> inv) {
  return WeylElt(rank, std::move(fwd), std::move(inv));
}

bool WeylElt::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (fwd_[i * rank_ + j] != (i == j)) return false;
  return true;
}

Coords WeylElt::act(const Coords& v) const {
  Coords out(rank_, 0);
  for (int j = 0; j < rank_; ++j) {
    if (v[j] == 0) continue;
    for (int i = 0; i < rank_; ++i) out[i] += fwd_[i * rank_ + j] * v[j];
  }
  return out;
}

Coords WeylElt::act_inverse(const Coords& v) const {
  Coords out(rank_, 0);
  for (int j = 0; j < rank_; ++j) {
    if (v[j] == 0) continue;
    for (int i = 0; i < rank_; ++i) out[i] += inv_[i * rank_ + j] * v[j];
  }
  return out;
}

WeylElt WeylElt::inverse() const { return WeylElt(rank_, inv_, fwd_); }

std::size_t WeylHash::operator()(const WeylElt& w) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : w.matrix_data()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

WeylElt multiply(const WeylElt& a, const WeylElt& b) {
  const int n = a.rank();
  if (n != b.rank()) throw usage_error("multiply: rank mismatch");
  std::vector<int> fwd(n * n, 0), inv(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int av = a.entry(i, k);
      if (av == 0) continue;
      for (int j = 0; j < n; ++j) fwd[i * n + j] += av * b.entry(k, j);
    }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int bv = b.inv_entry(i, k);
      if (bv == 0) continue;
      for (int j = 0; j < n; ++j) inv[i * n + j] += bv * a.inv_entry(k, j);
    }
  return WeylElt::from_matrices(n, std::move(fwd), std::move(inv));
}

WeylElt inverse(const WeylElt& w) { return w.inverse(); }

Coords act(const WeylElt& w, const Coords& v) { return w.act(v); }

Coords act_coroot(const RootSystem& rs, const WeylElt& w, const Coords& v) {
  const int n = rs.rank();
  long long lcm = 1;
  for (int i = 0; i < n; ++i) lcm = std::lcm(lcm, (long long)rs.sym(i));
  Coords out(n, 0);
  for (int i = 0; i < n; ++i) {
    long long sum = 0;
    for (int j = 0; j < n; ++j)
      sum += static_cast<long long>(w.entry(i, j)) * v[j] * (lcm / rs.sym(j));
    long long scaled = sum * rs.sym(i);
    if (scaled % lcm != 0)
      throw usage_error("vector is not in the coroot lattice");
    out[i] = static_cast<int>(scaled / lcm);
  }
  return out;
}

WeylElt simple_reflection(const RootSystem& rs, int i) {
  const int n = rs.rank();
  if (i < 0 || i >= n) throw usage_error("simple index out of range");
  std::vector<int> m(n * n, 0);
  for (int j = 0; j < n; ++j) m[j * n + j] = 1;
  for (int j = 0; j < n; ++j) m[i * n + j] -= rs.cartan(j, i);
  return WeylElt::from_matrices(n, m, m);
}

WeylElt reflection(const RootSystem& rs, const Root& alpha) {
  const int n = rs.rank();
  std::vector<int> m(n * n, 0);
  for (int j = 0; j < n; ++j) {
    // column j = e_j - <alpha_j, alpha^vee> alpha
    int p = 0;
    for (int k = 0; k < n; ++k) p += rs.cartan(j, k) * alpha.coroot_coords[k];
    m[j * n + j] += 1;
    for (int r = 0; r < n; ++r) m[r * n + j] -= p * alpha.root_coords[r];
  }
  return WeylElt::from_matrices(n, m, m);
}

bool is_right_descent(const RootSystem& rs, const WeylElt& w, int i) {
  const int n = rs.rank();
  (void)rs;
  for (int r = 0; r < n; ++r) {
    int x = w.entry(r, i);
    if (x > 0) return false;
    if (x < 0) return true;
  }
  return false;
}

bool is_left_descent(const RootSystem& rs, const WeylElt& w, int i) {
  const int n = rs.rank();
  (void)rs;
  for (int r = 0; r < n; ++r) {
    int x = w.inv_entry(r, i);
    if (x > 0) return false;
    if (x < 0) return true;
  }
  return false;
}

int length(const RootSystem& rs, const WeylElt& w) {
  int count = 0;
  for (const Root& r : rs.positive_roots())
    if (vec_negative(w.act(r.root_coords))) ++count;
  return count;
}

std::vector<int> inversion_set(const RootSystem& rs, const WeylElt& w) {
  std::vector<int> out;
  for (const Root& r : rs.positive_roots())
    if (vec_negative(w.act(r.root_coords))) out.push_back(r.index);
  return out;
}

std::vector<int> canonical_word(const RootSystem& rs, const WeylElt& w) {
  std::vector<int> word;
  WeylElt x = w;
  while (!x.is_identity()) {
    int i = 0;
    for (; i < rs.rank(); ++i)
      if (is_left_descent(rs, x, i)) break;
    if (i == rs.rank()) throw usage_error("matrix is not a Weyl element");
    word.push_back(i);
    x = multiply(simple_reflection(rs, i), x);
    if (word.size() > static_cast<std::size_t>(4 * rs.num_positive()))
      throw usage_error("matrix is not a Weyl element");
  }
  return word;
}

WeylElt word_to_element(const RootSystem& rs, const std::vector<int>& word) {
  WeylElt w = WeylElt::identity(rs.rank());
  for (int i : word) w = multiply(w, simple_reflection(rs, i));
  return w;
}

WeylElt longest_element(const RootSystem& rs, const std::vector<int>& subset) {
  WeylElt w = WeylElt::identity(rs.rank());
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : subset) {
      if (!is_right_descent(rs, w, i)) {
        w = multiply(w, simple_reflection(rs, i));
        progress = true;
      }
    }
  }
  return w;
}

bool bruhat_leq(const RootSystem& rs, const WeylElt& u, const WeylElt& w) {
  if (u == w) return true;
  int lu = length(rs, u), lw = length(rs, w);
  if (lu >= lw) return false;
  std::vector<int> key;
  key.reserve(u.matrix_data().size() * 2);
  key.insert(key.end(), u.matrix_data().begin(), u.matrix_data().end());
  key.insert(key.end(), w.matrix_data().begin(), w.matrix_data().end());
  bool cached = false;
  if (rs.memo_lookup(key, &cached)) return cached;
  int s = 0;
  while (!is_right_descent(rs, w, s)) ++s;  // exists since w != id
  WeylElt ws = multiply(w, simple_reflection(rs, s));
  bool result;
  if (is_right_descent(rs, u, s)) {
    result = bruhat_leq(rs, multiply(u, simple_reflection(rs, s)), ws);
  } else {
    result = bruhat_leq(rs, u, ws);
  }
  rs.memo_store(key, result);
  return result;
}

ParabolicData make_parabolic(const RootSystem& rs, std::vector<int> delta_p) {
  std::sort(delta_p.begin(), delta_p.end());
  delta_p.erase(std::unique(delta_p.begin(), delta_p.end()), delta_p.end());
  for (int i : delta_p)
    if (i < 0 || i >= rs.rank())
      throw usage_error("parabolic index out of range");
  ParabolicData par;
  par.rs = &rs;
  par.delta_p = delta_p;
  par.in_p.assign(rs.rank(), 0);
  for (int i : delta_p) par.in_p[i] = 1;
  par.root_in_rp.assign(rs.num_positive(), 0);
  for (const Root& r : rs.positive_roots()) {
    bool inside = true;
    for (int j = 0; j < rs.rank(); ++j)
      if (r.root_coords[j] != 0 && !par.in_p[j]) inside = false;
    if (inside) {
      par.root_in_rp[r.index] = 1;
      par.rp.push_back(r.index);
    }
  }
  for (int j = 0; j < rs.rank(); ++j)
    if (!par.in_p[j]) par.complement.push_back(j);
  par.proj_coroot.assign(rs.num_positive(), {});
  for (const Root& r : rs.positive_roots()) {
    Coords proj(par.complement.size());
    for (std::size_t k = 0; k < par.complement.size(); ++k)
      proj[k] = r.coroot_coords[par.complement[k]];
    par.proj_coroot[r.index] = std::move(proj);
  }
  par.w_p = longest_element(rs, delta_p);
  if (length(rs, par.w_p) != static_cast<int>(par.rp.size()))
    throw usage_error("parabolic longest element has wrong length");
  return par;
}

ParabolicData full_flag(const RootSystem& rs) { return make_parabolic(rs, {}); }

CosetFactorization coset_factor(const ParabolicData& par, const WeylElt& w) {
  const RootSystem& rs = par.system();
  WeylElt u = w;
  WeylElt v = WeylElt::identity(rs.rank());
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : par.delta_p) {
      if (is_right_descent(rs, u, i)) {
        WeylElt s = simple_reflection(rs, i);
        u = multiply(u, s);
        v = multiply(s, v);
        progress = true;
      }
    }
  }
  return {u, v};
}

Coset make_coset(const ParabolicData& par, const WeylElt& w) {
  return Coset{coset_factor(par, w).u, &par};
}

int coset_length(const ParabolicData& par, const WeylElt& w) {
  const RootSystem& rs = par.system();
  int count = 0;
  for (const Root& r : rs.positive_roots())
    if (!par.root_in_rp[r.index] && vec_negative(w.act(r.root_coords)))
      ++count;
  return count;
}

bool is_min_rep(const ParabolicData& par, const WeylElt& w) {
  for (int i : par.delta_p)
    if (is_right_descent(par.system(), w, i)) return false;
  return true;
}

bool bruhat_leq_coset(const ParabolicData& par, const WeylElt& u,
                      const WeylElt& w) {
  return bruhat_leq(par.system(), coset_factor(par, u).u,
                    coset_factor(par, w).u);
}

std::vector<WeylElt> enumerate_min_reps(const ParabolicData& par,
                                        std::size_t cap) {
  const RootSystem& rs = par.system();
  std::vector<WeylElt> out{WeylElt::identity(rs.rank())};
  std::set<std::vector<int>> seen{out[0].matrix_data()};
  std::vector<WeylElt> frontier = out;
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const WeylElt& u : frontier) {
      for (int i = 0; i < rs.rank(); ++i) {
        if (is_left_descent(rs, u, i)) continue;  // length must grow
        WeylElt cand = multiply(simple_reflection(rs, i), u);
        if (!is_min_rep(par, cand)) continue;
        if (seen.insert(cand.matrix_data()).second) {
          next.push_back(cand);
          if (seen.size() > cap)
            throw resource_error(
                "coset enumeration exceeds cap " + std::to_string(cap) +
                " (at least " + std::to_string(seen.size()) + " cosets)");
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace schubert

#include <algorithm>

#include "doctest.h"
#include "support/testutil.hpp"
#include "schubert/gwchev.hpp"

using namespace schubert;
using namespace testutil;

namespace {

// Exhaustive consistency between the Chevalley quantum terms and the
// divisor-axiom three point invariants on one space.
void cross_check_space(const RootSystem& rs, const ParabolicData& par) {
  std::vector<WeylElt> reps = enumerate_min_reps(par, 1000);
  for (const WeylElt& u : reps) {
    for (int beta : par.complement) {
      ChevalleyResult res = quantum_chevalley(par, u, beta);
      for (const auto& term : res.quantum) {
        CHECK(term.coeff ==
              divisor_three_point(par, u, beta, term.coset.min_rep,
                                  term.degree));
        CHECK(coset_length(par, term.coset.min_rep) ==
              coset_length(par, u) + 1 - c1_pairing(term.degree));
        CHECK(term.coeff > 0);
      }
      for (const auto& term : res.classical) {
        CHECK(coset_length(par, term.coset.min_rep) ==
              coset_length(par, u) + 1);
        if (par.delta_p.empty()) CHECK(term.coeff > 0);
      }
      for (int x : res.equivariant.root_coords) CHECK(x >= 0);
      // reverse direction: every nonzero divisor three-point invariant
      // appears among the quantum terms
      for (const WeylElt& w : reps) {
        for (const Root& r : rs.positive_roots()) {
          if (par.root_in_rp[r.index]) continue;
          Degree d(par, par.proj_coroot[r.index]);
          int value = divisor_three_point(par, u, beta, w, d);
          bool found = false;
          for (const auto& term : res.quantum)
            if (term.degree == d && term.coset.min_rep == w &&
                term.coeff == value)
              found = true;
          if (value != 0) CHECK(found);
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("pushforward classes") {
  const RootSystem& a3 = rs_of('A', 3);
  ParabolicData p13 = make_parabolic(a3, {0, 2});
  WeylElt id3 = WeylElt::identity(3);
  auto pf1 = pushforward_class(p13, id3, Degree(p13, {1}));
  REQUIRE(pf1.has_value());
  CHECK(coset_length(p13, pf1->min_rep) == 3);
  CHECK(c1_pairing(Degree(p13, {1})) == 4);
  CHECK_FALSE(pushforward_class(p13, id3, Degree(p13, {2})).has_value());
  CHECK_THROWS_AS(pushforward_class(p13, id3, Degree(p13, {0})), usage_error);

  const RootSystem& a1 = rs_of('A', 1);
  ParabolicData fa1 = full_flag(a1);
  auto pf2 = pushforward_class(fa1, WeylElt::identity(1), Degree(fa1, {1}));
  REQUIRE(pf2.has_value());
  CHECK(pf2->min_rep == simple_reflection(a1, 0));
}

TEST_CASE("two point invariants") {
  const RootSystem& a3 = rs_of('A', 3);
  ParabolicData p13 = make_parabolic(a3, {0, 2});
  WeylElt id3 = WeylElt::identity(3);
  std::vector<WeylElt> reps = enumerate_min_reps(p13, 100);
  WeylElt rho_coset = pushforward_class(p13, id3, Degree(p13, {1}))->min_rep;
  CHECK(gw_two_point(p13, rho_coset, id3, Degree(p13, {1})) == 1);
  for (const WeylElt& u : reps)
    CHECK(gw_two_point(p13, u, id3, Degree(p13, {2})) == 0);

  const RootSystem& a1 = rs_of('A', 1);
  ParabolicData fa1 = full_flag(a1);
  CHECK(gw_two_point(fa1, simple_reflection(a1, 0), WeylElt::identity(1),
                     Degree(fa1, {1})) == 1);
}

TEST_CASE("k-theoretic two point invariants") {
  const RootSystem& a3 = rs_of('A', 3);
  ParabolicData p13 = make_parabolic(a3, {0, 2});
  WeylElt id3 = WeylElt::identity(3);
  std::vector<WeylElt> reps = enumerate_min_reps(p13, 100);
  WeylElt top = reps.back();
  for (const WeylElt& w : reps)
    for (int dv = 0; dv <= 2; ++dv)
      CHECK(ktheory_two_point(p13, id3, w, Degree(p13, {dv})) == 1);
  CHECK(ktheory_two_point(p13, top, id3, Degree(p13, {1})) == 0);
  CHECK(ktheory_two_point(p13, top, id3, Degree(p13, {2})) == 1);
}

TEST_CASE("chevalley at the identity") {
  for (auto [label, rank] :
       std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}, {'C', 3}}) {
    const RootSystem& rs = rs_of(label, rank);
    for (const auto& subset : all_subsets(rank)) {
      ParabolicData par = make_parabolic(rs, subset);
      for (int beta : par.complement) {
        ChevalleyResult res =
            quantum_chevalley(par, WeylElt::identity(rank), beta);
        REQUIRE(res.classical.size() == 1);
        CHECK(res.classical[0].coeff == 1);
        CHECK(res.classical[0].coset ==
              make_coset(par, simple_reflection(rs, beta)));
        CHECK(res.equivariant.is_zero());
        CHECK(res.quantum.empty());
      }
    }
  }
}

TEST_CASE("chevalley closed form on the projective line") {
  const RootSystem& a1 = rs_of('A', 1);
  ParabolicData fa1 = full_flag(a1);
  WeylElt s1 = simple_reflection(a1, 0);
  ChevalleyResult res = quantum_chevalley(fa1, s1, 0);
  CHECK(res.classical.empty());
  CHECK(res.equivariant.root_coords == Coords{1});
  REQUIRE(res.quantum.size() == 1);
  CHECK(res.quantum[0].degree.coords() == Coords{1});
  CHECK(res.quantum[0].coset.min_rep.is_identity());
  CHECK(res.quantum[0].coeff == 1);
}

TEST_CASE("chevalley closed forms on the projective plane") {
  const RootSystem& a2 = rs_of('A', 2);
  ParabolicData par = make_parabolic(a2, {1});  // lines in three-space
  WeylElt id2 = WeylElt::identity(2);
  WeylElt s1 = simple_reflection(a2, 0);
  WeylElt s2s1 = multiply(simple_reflection(a2, 1), s1);

  ChevalleyResult r0 = quantum_chevalley(par, id2, 0);
  REQUIRE(r0.classical.size() == 1);
  CHECK(r0.classical[0].coset.min_rep == s1);
  CHECK(r0.equivariant.is_zero());
  CHECK(r0.quantum.empty());

  ChevalleyResult r1 = quantum_chevalley(par, s1, 0);
  REQUIRE(r1.classical.size() == 1);
  CHECK(r1.classical[0].coset.min_rep == coset_factor(par, s2s1).u);
  CHECK(r1.classical[0].coeff == 1);
  CHECK(r1.equivariant.root_coords == Coords{1, 0});
  CHECK(r1.quantum.empty());

  ChevalleyResult r2 = quantum_chevalley(par, s2s1, 0);
  CHECK(r2.classical.empty());
  CHECK(r2.equivariant.root_coords == Coords{1, 1});
  REQUIRE(r2.quantum.size() == 1);
  CHECK(r2.quantum[0].degree.coords() == Coords{1});
  CHECK(r2.quantum[0].coset.min_rep.is_identity());
  CHECK(r2.quantum[0].coeff == 1);
}

TEST_CASE("chevalley on the four-space grassmannian") {
  const RootSystem& a3 = rs_of('A', 3);
  ParabolicData p13 = make_parabolic(a3, {0, 2});
  // representative of coset length three
  WeylElt u = curve_neighborhood(p13, WeylElt::identity(3), Degree(p13, {1}))
                  .min_rep;
  ChevalleyResult res = quantum_chevalley(p13, u, 1);
  REQUIRE(res.classical.size() == 1);
  CHECK(coset_length(p13, res.classical[0].coset.min_rep) == 4);
  CHECK(res.classical[0].coeff == 1);
  REQUIRE(res.quantum.size() == 1);
  CHECK(res.quantum[0].degree.coords() == Coords{1});
  CHECK(res.quantum[0].coset.min_rep.is_identity());
  CHECK(res.quantum[0].coeff == 1);
}

TEST_CASE("usage errors for divisor indices inside the parabolic") {
  const RootSystem& a3 = rs_of('A', 3);
  ParabolicData p13 = make_parabolic(a3, {0, 2});
  WeylElt id3 = WeylElt::identity(3);
  CHECK_THROWS_AS(quantum_chevalley(p13, id3, 0), usage_error);
  CHECK_THROWS_AS(divisor_three_point(p13, id3, 2, id3, Degree(p13, {1})),
                  usage_error);
  CHECK_THROWS_AS(gw_two_point(p13, id3, id3, Degree(p13, {0})), usage_error);
}

TEST_CASE("divisor three point invariants") {
  const RootSystem& a1 = rs_of('A', 1);
  ParabolicData fa1 = full_flag(a1);
  CHECK(divisor_three_point(fa1, simple_reflection(a1, 0), 0,
                            WeylElt::identity(1), Degree(fa1, {1})) == 1);

  const RootSystem& a3 = rs_of('A', 3);
  ParabolicData p13 = make_parabolic(a3, {0, 2});
  WeylElt id3 = WeylElt::identity(3);
  WeylElt rho_coset = pushforward_class(p13, id3, Degree(p13, {1}))->min_rep;
  CHECK(divisor_three_point(p13, rho_coset, 1, id3, Degree(p13, {1})) == 1);
  CHECK(divisor_three_point(p13, id3, 1, id3, Degree(p13, {2})) == 0);
}

TEST_CASE("chevalley cross-consistency on small spaces") {
  const RootSystem& a3 = rs_of('A', 3);
  cross_check_space(a3, make_parabolic(a3, {0, 2}));
  const RootSystem& a2 = rs_of('A', 2);
  cross_check_space(a2, full_flag(a2));
  const RootSystem& b2 = rs_of('B', 2);
  cross_check_space(b2, make_parabolic(b2, {0}));
  cross_check_space(b2, make_parabolic(b2, {1}));
}

TEST_CASE("quantum term certificates are unique") {
  for (auto [label, rank] :
       std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}}) {
    const RootSystem& rs = rs_of(label, rank);
    for (const auto& subset : all_subsets(rank)) {
      ParabolicData par = make_parabolic(rs, subset);
      if (par.complement.empty()) continue;
      std::vector<WeylElt> reps = enumerate_min_reps(par, 1000);
      for (const WeylElt& u : reps) {
        int lu = coset_length(par, u);
        for (const WeylElt& w : reps) {
          std::vector<int> witnesses;
          for (const Root& r : rs.positive_roots()) {
            if (par.root_in_rp[r.index]) continue;
            Degree d(par, par.proj_coroot[r.index]);
            bool cond_coset =
                make_coset(par, multiply(u, reflection(rs, r))).min_rep == w;
            bool cond_len =
                coset_length(par, w) == lu + 1 - c1_pairing(d);
            if (cond_coset && cond_len) witnesses.push_back(r.index);
          }
          CHECK(witnesses.size() <= 1);
        }
      }
    }
  }
}

TEST_CASE("weight differences") {
  const RootSystem& a2 = rs_of('A', 2);
  WeylElt s1 = simple_reflection(a2, 0);
  CHECK(weight_difference(a2, s1, 0).root_coords == Coords{1, 0});
  CHECK(weight_difference(a2, s1, 1).root_coords == Coords{0, 0});
  WeylElt w0 = longest_element(a2, {0, 1});
  CHECK(weight_difference(a2, w0, 0).root_coords == Coords{1, 1});

  // independent route: the pairings of u.omega_beta with every simple
  // coroot determine it, and <u.omega, alpha_i^vee> = <omega,
  // u^{-1}(alpha_i^vee)> reads off a coroot coordinate
  Rng rng;
  for (auto [label, rank] :
       std::vector<std::pair<char, int>>{{'B', 2}, {'G', 2}, {'A', 3}}) {
    const RootSystem& rs = rs_of(label, rank);
    for (int t = 0; t < 40; ++t) {
      WeylElt u = random_element(rs, rng);
      for (int beta = 0; beta < rank; ++beta) {
        Weight diff = weight_difference(rs, u, beta);
        for (int i = 0; i < rank; ++i) {
          Coords ci(rank, 0);
          ci[i] = 1;
          int expected = act_coroot(rs, inverse(u), ci)[beta];
          int from_diff =
              (i == beta ? 1 : 0) - rs.pair(diff.root_coords, ci);
          CHECK(from_diff == expected);
        }
      }
    }
  }
}

#include <algorithm>
#include <thread>

#include "doctest.h"
#include "support/testutil.hpp"

using namespace schubert;
using namespace testutil;

TEST_CASE("reflections: lengths and inversion sets") {
  const RootSystem& rs = rs_of('B', 2);
  for (int i = 0; i < 2; ++i)
    CHECK(length(rs, simple_reflection(rs, i)) == 1);
  const Root& gamma = rs.root(rs.index_of({1, 2}));
  const Root& alpha = rs.root(rs.index_of({1, 1}));
  WeylElt sg = reflection(rs, gamma);
  CHECK(length(rs, sg) == 3);
  std::vector<int> expected = {rs.index_of({0, 1}), rs.index_of({1, 1}),
                               rs.index_of({1, 2})};
  std::sort(expected.begin(), expected.end());
  CHECK(inversion_set(rs, sg) == expected);
  CHECK(length(rs, reflection(rs, alpha)) == 3);
  CHECK(multiply(sg, sg).is_identity());
  CHECK(inverse(sg) == sg);
}

TEST_CASE("action examples") {
  const RootSystem& b2 = rs_of('B', 2);
  CHECK(act(WeylElt::identity(2), b2.simple(0)) == b2.simple(0));
  CHECK(act(simple_reflection(b2, 1), b2.simple(0)) == Coords{1, 2});
  const RootSystem& a3 = rs_of('A', 3);
  WeylElt s1s3 = multiply(simple_reflection(a3, 0), simple_reflection(a3, 2));
  CHECK(act(s1s3, a3.simple(1)) == Coords{1, 1, 1});
}

TEST_CASE("length and group laws") {
  const RootSystem& b2 = rs_of('B', 2);
  CHECK(length(b2, WeylElt::identity(2)) == 0);
  CHECK(length(b2, longest_element(b2, {0, 1})) == 4);

  const RootSystem& a2 = rs_of('A', 2);
  WeylElt w0 = multiply(simple_reflection(a2, 0),
                        multiply(simple_reflection(a2, 1),
                                 simple_reflection(a2, 0)));
  CHECK(length(a2, w0) == 3);
  CHECK(w0 == longest_element(a2, {0, 1}));
  CHECK(multiply(simple_reflection(a2, 0), simple_reflection(a2, 0))
            .is_identity());

  Rng rng;
  for (int t = 0; t < 100; ++t) {
    WeylElt u = random_element(a2, rng), v = random_element(a2, rng);
    CHECK(multiply(inverse(u), u).is_identity());
    CHECK(inverse(multiply(u, v)) == multiply(inverse(v), inverse(u)));
    // action matrices compose
    Coords x = a2.simple(rng.below(2));
    CHECK(multiply(u, v).act(x) == u.act(v.act(x)));
  }
}

TEST_CASE("longest elements of standard parabolics") {
  const RootSystem& a3 = rs_of('A', 3);
  CHECK(longest_element(a3, {}).is_identity());
  CHECK(length(a3, longest_element(a3, {0, 2})) == 2);
  CHECK(longest_element(a3, {0, 2}) ==
        multiply(simple_reflection(a3, 0), simple_reflection(a3, 2)));
}

TEST_CASE("coset factorization") {
  const RootSystem& a3 = rs_of('A', 3);
  ParabolicData p13 = make_parabolic(a3, {0, 2});
  WeylElt w0 = longest_element(a3, {0, 1, 2});
  auto [u, v] = coset_factor(p13, w0);
  CHECK(length(a3, u) == 4);
  CHECK(v == multiply(simple_reflection(a3, 0), simple_reflection(a3, 2)));
  CHECK(multiply(u, v) == w0);

  const RootSystem& b2 = rs_of('B', 2);
  ParabolicData p2 = make_parabolic(b2, {1});
  auto f = coset_factor(p2, longest_element(b2, {0, 1}));
  CHECK(length(b2, f.u) == 3);
  CHECK(f.v == simple_reflection(b2, 1));

  // identity factorization inside W_P
  WeylElt s2 = simple_reflection(b2, 1);
  auto g = coset_factor(p2, s2);
  CHECK(g.u.is_identity());
  CHECK(g.v == s2);

  // roundtrip with additive lengths over a whole group
  for (const auto& subset : all_subsets(3)) {
    ParabolicData par = make_parabolic(a3, subset);
    for (const WeylElt& w : enumerate_min_reps(full_flag(a3), 1000)) {
      auto fac = coset_factor(par, w);
      CHECK(multiply(fac.u, fac.v) == w);
      CHECK(length(a3, w) == length(a3, fac.u) + length(a3, fac.v));
      CHECK(is_min_rep(par, fac.u));
      CHECK(length(a3, fac.u) == coset_length(par, w));
    }
  }
}

TEST_CASE("coset lengths") {
  const RootSystem& a3 = rs_of('A', 3);
  ParabolicData p13 = make_parabolic(a3, {0, 2});
  CHECK(coset_length(p13, WeylElt::identity(3)) == 0);
  CHECK(coset_length(p13, longest_element(a3, {0, 1, 2})) == 4);
  const RootSystem& b2 = rs_of('B', 2);
  ParabolicData p2 = make_parabolic(b2, {1});
  CHECK(coset_length(p2, elt(b2, "1 2 1")) == 3);
}

TEST_CASE("bruhat order: examples and subword oracle") {
  const RootSystem& a2 = rs_of('A', 2);
  CHECK(bruhat_leq(a2, elt(a2, "1"), elt(a2, "2 1")));
  CHECK_FALSE(bruhat_leq(a2, elt(a2, "1 2"), elt(a2, "2 1")));
  const RootSystem& b2 = rs_of('B', 2);
  CHECK(bruhat_leq(b2, elt(b2, "2 1 2"), longest_element(b2, {0, 1})));

  for (auto [label, rank] : std::vector<std::pair<char, int>>{
           {'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}, {'C', 3}}) {
    const RootSystem& rs = rs_of(label, rank);
    std::vector<WeylElt> all = enumerate_min_reps(full_flag(rs), 1000);
    for (const WeylElt& w : all) {
      auto closure = subword_closure(rs, w);
      for (const WeylElt& u : all) {
        bool expected = closure.count(u.matrix_data()) > 0;
        CHECK(bruhat_leq(rs, u, w) == expected);
      }
      CHECK(bruhat_leq(rs, WeylElt::identity(rs.rank()), w));
    }
  }
}

TEST_CASE("bruhat order is compatible with coset order") {
  Rng rng;
  for (auto [label, rank] :
       std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}}) {
    const RootSystem& rs = rs_of(label, rank);
    for (const auto& subset : all_subsets(rank)) {
      ParabolicData par = make_parabolic(rs, subset);
      for (int t = 0; t < 50; ++t) {
        WeylElt w = random_element(rs, rng);
        WeylElt u = random_bruhat_below(rs, w, rng);
        CHECK(bruhat_leq(rs, u, w));
        CHECK(bruhat_leq_coset(par, u, w));
      }
    }
  }
}

TEST_CASE("distinct reflections give distinct cosets") {
  for (auto [label, rank] : std::vector<std::pair<char, int>>{
           {'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'G', 2}, {'F', 4}}) {
    const RootSystem& rs = rs_of(label, rank);
    for (const auto& subset : all_subsets(rank)) {
      ParabolicData par = make_parabolic(rs, subset);
      std::vector<int> outside;
      for (const Root& r : rs.positive_roots())
        if (!par.root_in_rp[r.index]) outside.push_back(r.index);
      for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t j = i + 1; j < outside.size(); ++j) {
          WeylElt a = coset_factor(par, reflection(rs, rs.root(outside[i]))).u;
          WeylElt b = coset_factor(par, reflection(rs, rs.root(outside[j]))).u;
          CHECK(a != b);
        }
    }
  }
}

TEST_CASE("enumerate_min_reps") {
  const RootSystem& a3 = rs_of('A', 3);
  CHECK(enumerate_min_reps(make_parabolic(a3, {0, 1, 2}), 10).size() == 1);
  CHECK(enumerate_min_reps(make_parabolic(a3, {0, 2}), 10).size() == 6);
  const RootSystem& b2 = rs_of('B', 2);
  CHECK(enumerate_min_reps(full_flag(b2), 10).size() == 8);
  CHECK_THROWS_AS(enumerate_min_reps(full_flag(b2), 3), resource_error);

  // BFS order: coset lengths are nondecreasing
  std::vector<WeylElt> reps = enumerate_min_reps(make_parabolic(a3, {1}), 100);
  ParabolicData par = make_parabolic(a3, {1});
  for (std::size_t i = 0; i + 1 < reps.size(); ++i)
    CHECK(coset_length(par, reps[i]) <= coset_length(par, reps[i + 1]));
}

TEST_CASE("canonical word is the lex-min reduced word") {
  for (auto [label, rank] :
       std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'A', 3}}) {
    const RootSystem& rs = rs_of(label, rank);
    for (const WeylElt& w : enumerate_min_reps(full_flag(rs), 1000)) {
      auto words = all_reduced_words(rs, w);
      auto canonical = canonical_word(rs, w);
      CHECK(canonical == *std::min_element(words.begin(), words.end()));
      CHECK(static_cast<int>(canonical.size()) == length(rs, w));
      CHECK(word_to_element(rs, canonical) == w);
    }
  }
}

TEST_CASE("bruhat memo is safe under concurrent queries") {
  const RootSystem& rs = rs_of('B', 3);
  std::vector<WeylElt> all = enumerate_min_reps(full_flag(rs), 1000);
  // reference answers computed single-threaded on a fresh system
  RootSystem fresh = RootSystem::of_type('B', 3);
  std::vector<char> expected;
  for (const WeylElt& u : all)
    for (const WeylElt& w : all) expected.push_back(bruhat_leq(rs, u, w));
  std::vector<std::thread> threads;
  std::vector<char> results[4];
  for (int t = 0; t < 4; ++t) {
    results[t].resize(expected.size());
    threads.emplace_back([&, t] {
      std::size_t i = 0;
      for (const WeylElt& u : all)
        for (const WeylElt& w : all) results[t][i++] = bruhat_leq(fresh, u, w);
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 0; t < 4; ++t) CHECK(results[t] == expected);
}

TEST_CASE("coroot action is the dual representation") {
  Rng rng;
  for (auto [label, rank] :
       std::vector<std::pair<char, int>>{{'B', 3}, {'G', 2}, {'A', 3}}) {
    const RootSystem& rs = rs_of(label, rank);
    for (int t = 0; t < 30; ++t) {
      WeylElt w = random_element(rs, rng);
      for (const Root& r : rs.positive_roots()) {
        Coords img = w.act(r.root_coords);
        Coords flipped = img;
        bool negative = !rs.find(img).has_value();
        if (negative)
          for (auto& c : flipped) c = -c;
        const Root& target = rs.root(rs.index_of(flipped));
        Coords cimg = act_coroot(rs, w, r.coroot_coords);
        if (negative)
          for (auto& c : cimg) c = -c;
        CHECK(cimg == target.coroot_coords);
      }
    }
  }
}

TEST_CASE("reflection length identity against heights") {
  for (auto [label, rank] :
       std::vector<std::pair<char, int>>{{'B', 3}, {'G', 2}}) {
    const RootSystem& rs = rs_of(label, rank);
    for (const Root& r : rs.positive_roots()) {
      int expected =
          2 * std::min(height(r.root_coords), height(r.coroot_coords)) - 1;
      CHECK(length(rs, reflection(rs, r)) == expected);
    }
  }
}

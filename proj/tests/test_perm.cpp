#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "qcat/perm.hpp"
#include "qcat/quandle.hpp"

using namespace qcat;

namespace {

Permutation P(std::vector<Point> v) { return Permutation(std::move(v)); }

std::vector<oracle::Img> raw(const std::vector<Permutation>& ps) {
  std::vector<oracle::Img> out;
  for (const auto& p : ps) out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

}  // namespace

TEST_CASE("permutation construction rejects non-bijections") {
  CHECK_THROWS_AS(P({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 3, 1}), std::invalid_argument);
  CHECK_NOTHROW(P({}));
  CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("compose applies the right factor first") {
  const auto cycle = P({1, 2, 0});
  CHECK(compose(Permutation::identity(3), cycle) == cycle);
  CHECK(compose(P({0, 2, 1}), P({0, 2, 1})).is_identity());
  // (0 1) after (1 2): 0 -> 0 -> 1, 1 -> 2 -> 2, 2 -> 1 -> 0.
  CHECK(compose(P({1, 0, 2}), P({0, 2, 1})) == P({1, 2, 0}));
  CHECK_THROWS_AS(compose(P({0, 1}), P({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("inverse, order, conjugate, to_string") {
  const auto c = P({1, 2, 3, 0});
  CHECK(compose(c, c.inverse()).is_identity());
  CHECK(c.order() == 4);
  CHECK(Permutation::identity(5).order() == 1);
  const auto t = P({1, 0, 2, 3});
  CHECK(conjugate(c, t) == compose(compose(c, t), c.inverse()));
  CHECK(to_string(P({0, 2, 1})) == "[0 2 1]");
}

TEST_CASE("close_group on small generating sets") {
  const Quandle r3 = dihedral_quandle(3);
  CHECK(close_group({r3.symmetry(0), r3.symmetry(1), r3.symmetry(2)}).order() == 6);
  CHECK(close_group({Permutation::identity(4)}).order() == 1);
  const Quandle r9 = dihedral_quandle(9);
  std::vector<Permutation> s9;
  for (Point x = 0; x < 9; ++x) s9.push_back(r9.symmetry(x));
  CHECK(close_group(s9).order() == 18);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(dihedral_group(9).order() == 18);
  CHECK(cyclic_group(7).order() == 7);
  CHECK_THROWS_AS(close_group({}), std::invalid_argument);
  CHECK_THROWS_AS(close_group({P({0, 1}), P({0, 1, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_group(6, 100), CapExceeded);
}

TEST_CASE("identity is element 0 and elements are sorted") {
  const auto g = symmetric_group(4);
  CHECK(g.elements().front().is_identity());
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  CHECK(g.index(g.elements()[5]) == 5);
  CHECK_THROWS_AS(g.index(Permutation::identity(3)), std::out_of_range);
  CHECK_FALSE(g.find(P({1, 0, 2})).has_value());
}

TEST_CASE("evaluate_word") {
  const Quandle r3 = dihedral_quandle(3);
  std::vector<Permutation> gens{r3.symmetry(0), r3.symmetry(1), r3.symmetry(2)};
  const auto g = close_group(gens);
  CHECK(g.evaluate({}).is_identity());
  CHECK(g.evaluate({{0, 1}}) == r3.symmetry(0));
  // s0 s1 s0^-1 = s_{s0(1)} = s2 in R3.
  CHECK(g.evaluate({{0, 1}, {1, 1}, {0, 1}}) == r3.symmetry(2));
  CHECK_THROWS_AS(g.evaluate({{3, 1}}), std::out_of_range);
}

TEST_CASE("centralizer and conjugation stability examples") {
  const Quandle r3 = dihedral_quandle(3);
  std::vector<Permutation> s3{r3.symmetry(0), r3.symmetry(1), r3.symmetry(2)};
  const auto inn3 = close_group(s3);
  CHECK(centralizer_of_subset_is_trivial(inn3, s3));

  const auto c3 = cyclic_group(3);
  CHECK_FALSE(centralizer_of_subset_is_trivial(c3, std::vector{P({1, 2, 0})}));

  const auto d18 = dihedral_group(9);
  CHECK(centralizer_of_subset_is_trivial(d18, dihedral_reflections(9)));
  CHECK(is_conjugation_stable(d18, dihedral_reflections(9)));

  const auto sym3 = symmetric_group(3);
  CHECK_FALSE(is_conjugation_stable(sym3, std::vector{P({1, 0, 2})}));
  CHECK(is_conjugation_stable(sym3, sym3.elements()));
  CHECK_THROWS_AS(is_conjugation_stable(c3, std::vector{P({1, 0, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(centralizer_of_subset_is_trivial(c3, std::vector{P({1, 0, 2})}),
                  std::invalid_argument);
}

TEST_CASE("closure agrees with a naive pairwise fixpoint") {
  std::mt19937_64 rng(7);
  std::size_t compared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t degree = 1 + rng() % 8;
    const std::size_t ngens = 1 + rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t k = 0; k < ngens; ++k) {
      std::vector<Point> v(degree);
      std::iota(v.begin(), v.end(), Point{0});
      std::shuffle(v.begin(), v.end(), rng);
      gens.emplace_back(v);
    }
    const auto g = close_group(gens);
    // The pairwise fixpoint is quadratic per round; keep it to small groups.
    if (g.order() > 720) continue;
    ++compared;
    const auto naive = oracle::naive_closure(raw(gens));
    REQUIRE(g.order() == naive.size());
    for (const auto& e : g.elements()) {
      CHECK(naive.contains(oracle::Img(e.images().begin(), e.images().end())));
    }
  }
  CHECK(compared >= 30);
}

TEST_CASE("closure soundness and witness soundness") {
  std::mt19937_64 rng(11);
  for (const auto& g : {symmetric_group(5), dihedral_group(12), cyclic_group(9)}) {
    for (std::size_t i = 0; i < g.order(); ++i) {
      CHECK(g.evaluate(g.witness(i)) == g.elements()[i]);
    }
    for (const auto& gen : g.generators()) CHECK(g.contains(gen));
    for (int k = 0; k < 200; ++k) {
      const auto& a = g.elements()[rng() % g.order()];
      const auto& b = g.elements()[rng() % g.order()];
      CHECK(g.contains(compose(a, b)));
      CHECK(g.contains(a.inverse()));
    }
  }
}

TEST_CASE("witness words are shortest over the signed alphabet") {
  const auto g = symmetric_group(4);
  // Breadth-first distances computed independently.
  std::vector<oracle::Img> alphabet;
  for (const auto& s : g.generators()) {
    alphabet.emplace_back(s.images().begin(), s.images().end());
    const auto si = s.inverse();
    alphabet.emplace_back(si.images().begin(), si.images().end());
  }
  std::map<oracle::Img, std::size_t> dist{{oracle::ident(4), 0}};
  std::vector<oracle::Img> frontier{oracle::ident(4)};
  while (!frontier.empty()) {
    std::vector<oracle::Img> next;
    for (const auto& e : frontier)
      for (const auto& a : alphabet) {
        auto m = oracle::mul(e, a);
        if (!dist.contains(m)) {
          dist[m] = dist[e] + 1;
          next.push_back(m);
        }
      }
    frontier = std::move(next);
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& e = g.elements()[i];
    CHECK(g.witness(i).size() == dist.at(oracle::Img(e.images().begin(), e.images().end())));
  }
}

TEST_CASE("conjugation stability matches the pairwise definition") {
  std::mt19937_64 rng(3);
  for (const auto& g : {symmetric_group(4), dihedral_group(6), dihedral_group(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Permutation> s;
      for (const auto& e : g.elements())
        if (rng() % 3 == 0) s.push_back(e);
      if (s.empty()) continue;
      bool expected = true;
      for (const auto& x : g.elements())
        for (const auto& y : s)
          expected = expected && std::find(s.begin(), s.end(), compose(compose(x, y), x.inverse())) != s.end();
      CHECK(is_conjugation_stable(g, s) == expected);
    }
  }
}

TEST_CASE("dihedral recognition") {
  for (std::size_t n : {3, 4, 5, 9, 11}) {
    auto d = recognize_dihedral(dihedral_group(n));
    REQUIRE(d.has_value());
    CHECK(d->n == n);
    CHECK(d->rotation.order() == n);
    CHECK(d->reflection.order() == 2);
    CHECK(compose(d->reflection, compose(d->rotation, d->reflection)) == d->rotation.inverse());
  }
  CHECK_FALSE(recognize_dihedral(cyclic_group(6)).has_value());
  CHECK_FALSE(recognize_dihedral(symmetric_group(4)).has_value());
  // S3 is dihedral of order 6; the seed only changes the search order.
  for (std::uint64_t seed : {0u, 1u, 99u}) CHECK(recognize_dihedral(symmetric_group(3), seed).has_value());
}

#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qcat/functors.hpp"
#include "qcat/homs.hpp"
#include "qcat/io.hpp"

using namespace qcat;

namespace {

std::vector<std::vector<Point>> maps_of(const std::vector<QuandleHom>& hs) {
  std::vector<std::vector<Point>> out;
  for (const auto& h : hs) out.push_back(h.map);
  return out;
}

Quandle from_table(std::size_t n, const oracle::Table& t) {
  return Quandle(n, std::vector<Point>(t.begin(), t.end()));
}

}  // namespace

TEST_CASE("check_hom examples") {
  const auto r3 = dihedral_quandle(3), r9 = dihedral_quandle(9);
  CHECK(check_hom(identity_hom(r9)).empty());
  CHECK(check_hom(QuandleHom{r3, r9, {0, 3, 6}}).empty());
  CHECK(check_hom(QuandleHom{r3, r3, {0, 0, 0}}).empty());
  const auto v = check_hom(QuandleHom{r3, r3, {0, 0, 1}});
  CHECK_FALSE(v.empty());
  CHECK_THROWS_AS(check_hom(QuandleHom{r3, r9, {0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(check_hom(QuandleHom{r3, r9, {0, 3, 9}}), std::invalid_argument);
}

TEST_CASE("hom modes parse and print") {
  CHECK(parse_hom_mode("inj") == HomMode::Injective);
  CHECK(parse_hom_mode("surjective") == HomMode::Surjective);
  CHECK(to_string(HomMode::All) == "all");
  CHECK_THROWS_AS(parse_hom_mode("bij"), std::invalid_argument);
}

TEST_CASE("injective homs R3 -> R9 are exactly k -> c + e*3k") {
  const auto homs = enumerate_homs(dihedral_quandle(3), dihedral_quandle(9), HomMode::Injective);
  CHECK(homs.size() == 18);
  std::set<std::vector<Point>> expected;
  for (int c = 0; c < 9; ++c)
    for (int e : {1, -1}) {
      std::vector<Point> f(3);
      for (int k = 0; k < 3; ++k) f[k] = static_cast<Point>(((c + e * 3 * k) % 9 + 9) % 9);
      expected.insert(f);
    }
  const auto got = maps_of(homs);
  CHECK(std::set<std::vector<Point>>(got.begin(), got.end()) == expected);
  CHECK(std::is_sorted(got.begin(), got.end()));
}

TEST_CASE("small enumerations") {
  CHECK(enumerate_homs(dihedral_quandle(3), dihedral_quandle(5), HomMode::Injective).empty());
  CHECK(enumerate_homs(dihedral_quandle(3), dihedral_quandle(7), HomMode::Injective).empty());
  const auto q = alexander_quandle({{5}, {{2}}});
  const auto self = enumerate_homs(q, q, HomMode::All);
  CHECK(std::find(self.begin(), self.end(), identity_hom(q)) != self.end());
  CHECK(enumerate_homs(dihedral_quandle(3), dihedral_quandle(3), HomMode::All).size() ==
        oracle::brute_homs(dihedral_quandle(3), dihedral_quandle(3), 0).size());
  CHECK(enumerate_homs(dihedral_quandle(5), dihedral_quandle(3), HomMode::Injective).empty());
  CHECK(enumerate_homs(dihedral_quandle(3), dihedral_quandle(5), HomMode::Surjective).empty());
}

TEST_CASE("enumeration agrees with the filter over all maps") {
  std::vector<Quandle> qs;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : oracle::quandles_up_to_iso(n)) qs.push_back(from_table(n, t));
  REQUIRE(qs.size() == 12);
  const HomMode modes[] = {HomMode::All, HomMode::Injective, HomMode::Surjective};
  for (const auto& a : qs)
    for (const auto& b : qs)
      for (int m = 0; m < 3; ++m) CHECK(maps_of(enumerate_homs(a, b, modes[m])) == oracle::brute_homs(a, b, m));
  const auto r3 = dihedral_quandle(3), r9 = dihedral_quandle(9);
  for (int m = 0; m < 3; ++m) CHECK(maps_of(enumerate_homs(r3, r9, modes[m])) == oracle::brute_homs(r3, r9, m));
}

TEST_CASE("induced surjective maps") {
  const auto r3 = dihedral_quandle(3), r9 = dihedral_quandle(9);
  const auto id = induced_surjective(identity_hom(r3));
  CHECK(id == identity_surj(inn(r3)));
  CHECK(id.map.size() == 6);

  std::vector<Point> neg(9);
  for (Point x = 0; x < 9; ++x) neg[x] = (9 - x) % 9;
  const QuandleHom f{r9, r9, neg};
  const auto m = induced_surjective(f);
  CHECK(is_surj_isomorphism(m));
  for (Point x = 0; x < 9; ++x) CHECK(m(r9.symmetry(x)) == r9.symmetry(neg[x]));

  std::vector<Point> mod3(9);
  for (Point x = 0; x < 9; ++x) mod3[x] = x % 3;
  const QuandleHom g{r9, r3, mod3};
  REQUIRE(check_hom(g).empty());
  const auto mg = induced_surjective(g);
  std::set<Permutation> image(mg.map.begin(), mg.map.end());
  CHECK(image.size() == inn(r3).group().order());
  CHECK(inn(r9).group().order() % image.size() == 0);

  CHECK_THROWS_AS(induced_surjective(QuandleHom{r3, r9, {0, 3, 6}}), std::invalid_argument);
  const auto r4 = dihedral_quandle(4);
  CHECK_THROWS_AS(induced_surjective(identity_hom(r4)), std::invalid_argument);
}

TEST_CASE("induced injective maps") {
  const auto r3 = dihedral_quandle(3), r9 = dihedral_quandle(9);
  const auto m = induced_injective(QuandleHom{r3, r9, {0, 3, 6}});
  CHECK(m.h.order() == 6);
  CHECK(m.h.degree() == 9);
  CHECK(m.gamma.size() == 3);
  std::set<Permutation> image(m.pi.begin(), m.pi.end());
  CHECK(image.size() == inn(r3).group().order());
  CHECK(check_star_morphism(m).empty());
  CHECK_FALSE(is_star_isomorphism(m));

  CHECK(induced_injective(identity_hom(r9)) == identity_star(inn(r9)));
  CHECK_THROWS_AS(induced_injective(QuandleHom{r3, r3, {0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("functoriality of the induced maps on small chains") {
  const auto r3 = dihedral_quandle(3), r9 = dihedral_quandle(9);
  std::vector<Point> neg(9), mod3(9);
  for (Point x = 0; x < 9; ++x) {
    neg[x] = (9 - x) % 9;
    mod3[x] = x % 3;
  }
  const QuandleHom a{r9, r9, neg}, b{r9, r3, mod3};
  CHECK(induced_surjective(compose_hom(b, a)) ==
        compose_surj(induced_surjective(b), induced_surjective(a)));

  const QuandleHom f1{r3, r9, {0, 3, 6}};
  CHECK(induced_injective(compose_hom(a, f1)) ==
        compose_star(induced_injective(a), induced_injective(f1)));

  // Random injective chains between small conjugation quandles.
  const auto s3 = symmetric_group(3), s4 = symmetric_group(4);
  auto involutions = [](const PermGroup& g) {
    std::vector<Permutation> out;
    for (const auto& e : g.elements())
      if (e.order() == 2) out.push_back(e);
    return out;
  };
  const auto t3 = conjugation_quandle(s3, involutions(s3)).quandle;
  std::vector<Permutation> transp;
  for (const auto& e : involutions(s4)) {
    std::size_t moved = 0;
    for (Point i = 0; i < 4; ++i) moved += e(i) != i;
    if (moved == 2) transp.push_back(e);
  }
  const auto t4 = conjugation_quandle(s4, transp).quandle;
  const auto first = enumerate_homs(t3, t4, HomMode::Injective);
  const auto second = enumerate_homs(t4, t4, HomMode::Injective);
  REQUIRE_FALSE(first.empty());
  for (std::size_t i = 0; i < first.size(); i += 3)
    for (std::size_t j = 0; j < second.size(); j += 5)
      CHECK(induced_injective(compose_hom(second[j], first[i])) ==
            compose_star(induced_injective(second[j]), induced_injective(first[i])));
}

TEST_CASE("nonempty injective hom sets force divisibility of inner group orders") {
  std::vector<Quandle> corpus;
  for (const auto& nq : default_corpus()) corpus.push_back(nq.quandle);
  corpus.push_back(conjugation_quandle(symmetric_group(4), symmetric_group(4).elements()).quandle);
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      if (enumerate_homs(a, b, HomMode::Injective).empty()) continue;
      CHECK(inn(b).group().order() % inn(a).group().order() == 0);
    }
}

TEST_CASE("a hom whose image is a non-faithful subquandle") {
  // Conj(S3) -> Conj(S3): even permutations to the identity, odd ones to (0 1).
  const auto s3 = symmetric_group(3);
  const auto c = conjugation_quandle(s3, s3.elements());
  const Permutation e = Permutation::identity(3), t({1, 0, 2});
  const auto idx = [&](const Permutation& p) {
    return static_cast<Point>(std::find(c.points.begin(), c.points.end(), p) - c.points.begin());
  };
  std::vector<Point> map;
  for (const auto& g : c.points) {
    std::size_t inversions = 0;
    for (Point i = 0; i < 3; ++i)
      for (Point j = i + 1; j < 3; ++j) inversions += g(i) > g(j);
    map.push_back(idx(inversions % 2 ? t : e));
  }
  const QuandleHom f{c.quandle, c.quandle, map};
  CHECK(check_hom(f).empty());
  CHECK(is_faithful(c.quandle));
  std::vector<Point> image(map.begin(), map.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const auto w = subquandle_closure(c.quandle, image);
  CHECK(w.points == image);
  const auto sub = restrict_quandle(c.quandle, w);
  CHECK(sub.size() == 2);
  CHECK_FALSE(is_faithful(sub));
}

TEST_CASE("no group hom makes the square commute for T1 -> R3") {
  const auto t1 = trivial_quandle(1), r3 = dihedral_quandle(3);
  const QuandleHom f{t1, r3, {0}};
  REQUIRE(check_hom(f).empty());
  const auto g1 = inn(t1).group(), g2 = inn(r3).group();
  // Every map Inn(T1) -> Inn(R3) that is multiplicative.
  std::size_t homs = 0, commuting = 0;
  for (const auto& target : g2.elements()) {
    const std::vector<Permutation> map{target};
    if (!is_multiplicative(g1, map)) continue;
    ++homs;
    commuting += map[g1.index(t1.symmetry(0))] == r3.symmetry(f(0));
  }
  CHECK(homs == 1);
  CHECK(commuting == 0);
}

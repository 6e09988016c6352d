// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qcat/functors.hpp"
#include "qcat/io.hpp"

using namespace qcat;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

bool run(int number, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.ok = false;
    o.detail << " [runtime " << secs << " s over " << limit_s << " s]";
  }
  std::printf("%s criterion %d: %s (%.3f s)%s\n", o.ok ? "PASS" : "FAIL", number, title.c_str(), secs,
              o.detail.str().c_str());
  return o.ok;
}

Permutation power(const Permutation& a, std::size_t k) {
  Permutation r = Permutation::identity(a.degree());
  for (std::size_t i = 0; i < k; ++i) r = compose(a, r);
  return r;
}

std::vector<std::vector<Point>> maps_of(const std::vector<QuandleHom>& hs) {
  std::vector<std::vector<Point>> out;
  for (const auto& h : hs) out.push_back(h.map);
  return out;
}

std::size_t automorphism_order_by_iteration(const AbelianAutomorphism& phi) {
  const auto table = automorphism_table(phi);
  std::vector<Point> cur = table;
  std::size_t k = 1;
  auto is_id = [](const std::vector<Point>& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] != i) return false;
    return true;
  };
  while (!is_id(cur)) {
    for (auto& v : cur) v = table[v];
    ++k;
  }
  return k;
}

void criterion1(Outcome& o) {
  const auto homs = enumerate_homs(dihedral_quandle(3), dihedral_quandle(9), HomMode::Injective);
  std::set<std::vector<Point>> expected;
  for (int c = 0; c < 9; ++c)
    for (int e : {1, -1}) {
      std::vector<Point> f(3);
      for (int k = 0; k < 3; ++k) f[k] = static_cast<Point>(((c + e * 3 * k) % 9 + 9) % 9);
      expected.insert(f);
    }
  const auto got = maps_of(homs);
  o.detail << " count=" << got.size();
  o.require(got.size() == 18, "count 18");
  o.require(std::set<std::vector<Point>>(got.begin(), got.end()) == expected, "set equals f_{c,e}");
}

void criterion2(Outcome& o) {
  const auto d6 = make_genpair(dihedral_group(3), dihedral_reflections(3));
  const auto d18 = make_genpair(dihedral_group(9), dihedral_reflections(9));
  const auto ms = enumerate_star_morphisms(d6, d18);
  std::set<std::vector<Permutation>> subgroups, gammas;
  bool valid = true, sizes = true;
  for (const auto& m : ms) {
    valid = valid && check_star_morphism(m).empty();
    sizes = sizes && m.gamma.size() == 3;
    subgroups.insert(m.h.elements());
    gammas.insert(m.gamma);
  }
  const Permutation a({1, 2, 3, 4, 5, 6, 7, 8, 0});
  const Permutation x({0, 8, 7, 6, 5, 4, 3, 2, 1});
  const auto a3 = power(a, 3);
  const std::set<std::vector<Permutation>> expected_h{
      close_group({a3, x}).elements(), close_group({a3, compose(power(a, 4), x)}).elements(),
      close_group({a3, compose(power(a, 2), x)}).elements()};
  std::set<std::vector<Permutation>> expected_gamma;
  for (std::size_t r = 0; r < 3; ++r) {
    std::vector<Permutation> g;
    for (std::size_t k = 0; k < 3; ++k) g.push_back(compose(power(a, r + 3 * k), x));
    expected_gamma.insert(normalize_set(g));
  }
  o.detail << " morphisms=" << ms.size() << " subgroups=" << subgroups.size();
  o.require(ms.size() == 18, "18 morphisms");
  o.require(valid, "every morphism valid");
  o.require(sizes, "|Gamma| = 3");
  o.require(subgroups == expected_h, "subgroups <a^3,x>, <a^3,a^4x>, <a^3,a^2x>");
  o.require(gammas == expected_gamma, "Gamma sets");
}

void criterion3(Outcome& o) {
  for (std::size_t n : {3, 5, 7, 9, 11}) {
    const auto p = inn(dihedral_quandle(n));
    const auto d = recognize_dihedral(p.group());
    const bool ok = p.group().order() == 2 * n && d && d->n == n;
    o.detail << " n=" << n << ":" << p.group().order();
    o.require(ok, "R" + std::to_string(n));
  }
}

void criterion4(Outcome& o) {
  struct Case {
    std::string name;
    AbelianAutomorphism phi;
    std::size_t expected;  // 0 when gated out
  };
  const std::vector<Case> cases{
      {"Z5,x2", {{5}, {{2}}}, 20},
      {"Z7,x3", {{7}, {{3}}}, 42},
      {"Z3xZ3,swap*neg", {{3, 3}, {{0, -1}, {-1, 0}}}, 54},
      {"Z3xZ3,[[0,-1],[1,1]]", {{3, 3}, {{0, -1}, {1, 1}}}, 54},
  };
  for (const auto& c : cases) {
    const bool free = is_fixed_point_free(c.phi);
    if (!free) {
      o.detail << " " << c.name << ": gated out (not fixed-point free)";
      continue;
    }
    const auto q = alexander_quandle(c.phi);
    const std::size_t order = automorphism_order_by_iteration(c.phi);
    const std::size_t got = inn(q).group().order();
    o.detail << " " << c.name << ":" << got;
    o.require(order == automorphism_order(c.phi), c.name + " order");
    o.require(got == q.size() * order && got == c.expected, c.name);
  }
}

void criterion5(Outcome& o) {
  const auto corpus = default_corpus();
  std::size_t nonempty = 0;
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      if (!is_faithful(a.quandle) || !is_faithful(b.quandle)) continue;
      if (enumerate_homs(a.quandle, b.quandle, HomMode::Injective).empty()) continue;
      ++nonempty;
      const auto ia = inn(a.quandle).group().order(), ib = inn(b.quandle).group().order();
      o.require(ib % ia == 0, a.name + " -> " + b.name);
    }
  o.detail << " nonempty-pairs=" << nonempty;
  o.require(enumerate_homs(dihedral_quandle(3), dihedral_quandle(5), HomMode::Injective).empty(), "R3 -> R5 empty");
  o.require(enumerate_homs(dihedral_quandle(3), dihedral_quandle(7), HomMode::Injective).empty(), "R3 -> R7 empty");
}

void criterion6(Outcome& o) {
  const auto corpus = default_corpus();
  for (HomMode m : {HomMode::Injective, HomMode::Surjective}) {
    const auto r = verify_equivalence(corpus, m);
    o.detail << " " << to_string(m) << ": checks=" << r.checks.size() << " failures=" << r.failures();
    o.require(r.passed() && !r.checks.empty(), to_string(m));
  }
}

void criterion7(Outcome& o) {
  // (a) even permutations to id, odd ones to (0 1) on Conj(S3).
  {
    const auto s3 = symmetric_group(3);
    const auto c = conjugation_quandle(s3, s3.elements());
    const Permutation e = Permutation::identity(3), t({1, 0, 2});
    auto idx = [&](const Permutation& p) {
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
    std::vector<Point> image = map;
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const auto sub = restrict_quandle(c.quandle, subquandle_closure(c.quandle, image));
    const bool a = check_hom(f).empty() && is_faithful(c.quandle) && sub.size() == 2 && !is_faithful(sub);
    o.detail << " (a)=" << a;
    o.require(a, "non-faithful image");
  }
  // (b) T1 -> R3: no group hom Inn(T1) -> Inn(R3) sends s_0 to s_{f(0)}.
  {
    const auto t1 = trivial_quandle(1), r3 = dihedral_quandle(3);
    const QuandleHom f{t1, r3, {0}};
    const auto g1 = inn(t1).group(), g2 = inn(r3).group();
    std::size_t commuting = 0;
    for (const auto& target : g2.elements()) {
      const std::vector<Permutation> map{target};
      if (is_multiplicative(g1, map) && map[g1.index(t1.symmetry(0))] == r3.symmetry(f(0))) ++commuting;
    }
    const bool b = check_hom(f).empty() && commuting == 0;
    o.detail << " (b)=" << b;
    o.require(b, "no commuting group hom");
  }
  // (c) S3 x <(3 4 5)> inside S6 projecting onto S3.
  {
    const auto s3 = symmetric_group(3);
    std::vector<Permutation> transpositions;
    for (const auto& g : s3.elements()) {
      std::size_t moved = 0;
      for (Point i = 0; i < 3; ++i) moved += g(i) != i;
      if (moved == 2) transpositions.push_back(g);
    }
    const auto source = make_genpair(s3, transpositions);
    std::vector<Permutation> gamma;
    for (const auto& t : source.omega()) gamma.push_back(Permutation({t(0), t(1), t(2), 4, 5, 3}));
    gamma = normalize_set(gamma);
    const auto h = close_group(gamma);
    std::vector<Permutation> pi;
    for (const auto& x : h.elements()) pi.push_back(Permutation({x(0), x(1), x(2)}));
    const auto s6 = symmetric_group(6);
    const auto target = make_genpair(s6, s6.elements());
    const StarMorphism m{source, target, h, gamma, pi};
    const bool c = check_star_morphism(m).empty() &&
                   std::set<Permutation>(pi.begin(), pi.end()).size() < h.order();
    o.detail << " (c)=" << c;
    o.require(c, "valid star morphism with non-injective pi");
  }
}

void criterion8(Outcome& o) {
  std::vector<Quandle> qs;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : oracle::quandles_up_to_iso(n)) qs.push_back(Quandle(n, std::vector<Point>(t.begin(), t.end())));
  o.require(qs.size() == 12, "12 quandles of order <= 4");
  const HomMode modes[] = {HomMode::All, HomMode::Injective, HomMode::Surjective};
  std::size_t compared = 0;
  auto agree = [&](const Quandle& a, const Quandle& b) {
    for (int m = 0; m < 3; ++m) {
      ++compared;
      if (maps_of(enumerate_homs(a, b, modes[m])) != oracle::brute_homs(a, b, m)) return false;
    }
    return true;
  };
  bool small = true;
  for (const auto& a : qs)
    for (const auto& b : qs) small = agree(a, b) && small;
  o.require(small, "order <= 4 pairs");
  o.require(agree(dihedral_quandle(3), dihedral_quandle(9)), "(R3, R9)");
  o.detail << " comparisons=" << compared;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "Hom_inj(R3, R9) is the 18 maps c + e*3k", 1.0, criterion1);
  ok &= run(2, "star morphisms (D6, B) -> (D18, A): 18 over 3 subgroups", 5.0, criterion2);
  ok &= run(3, "|Inn(Rn)| = 2n and dihedral relations, n in {3,5,7,9,11}", 0, criterion3);
  ok &= run(4, "|Inn(Alex(A, phi))| = |A| ord(phi) on fixed-point-free instances", 0, criterion4);
  ok &= run(5, "divisibility over the corpus and empty Hom_inj(R3, R5), Hom_inj(R3, R7)", 0, criterion5);
  ok &= run(6, "equivalence suite inj and surj on the default corpus", 60.0, criterion6);
  ok &= run(7, "counterexample regressions", 0, criterion7);
  ok &= run(8, "enumeration agrees with the brute-force filter", 0, criterion8);
  return ok ? 0 : 1;
}

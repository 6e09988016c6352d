#include "qcat/functors.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qcat {

GenPair inner_pair(const Quandle& q, std::size_t cap) {
  if (!check_axioms(q).empty()) throw std::invalid_argument("inner_pair: not a quandle");
  if (!is_faithful(q)) throw std::invalid_argument("inner_pair: quandle is not faithful");
  return inn(q, cap);
}

SurjMorphism inner_surj_morphism(const QuandleHom& f, std::size_t cap) {
  return induced_surjective(f, cap);
}

StarMorphism inner_star_morphism(const QuandleHom& f, std::size_t cap) {
  return induced_injective(f, cap);
}

ConjugationQuandle conjugation_object(const GenPair& p) {
  if (!p.conj_stable()) throw std::invalid_argument("conjugation_object: omega is not conjugation-stable");
  if (!p.faithful()) throw std::invalid_argument("conjugation_object: omega is not faithful");
  ConjugationQuandle c = conjugation_quandle(p.group(), p.omega());
  if (!is_faithful(c.quandle)) {
    throw std::logic_error("conjugation_object: Conj(omega) of a faithful pair is not faithful");
  }
  return c;
}

QuandleHom conjugation_surj_morphism(const SurjMorphism& m) {
  const ConjugationQuandle c1 = conjugation_object(m.source);
  const ConjugationQuandle c2 = conjugation_object(m.target);
  std::vector<Point> map;
  for (const auto& w : c1.points) map.push_back(static_cast<Point>(m.target.omega_index(m(w))));
  return QuandleHom{c1.quandle, c2.quandle, std::move(map)};
}

QuandleHom conjugation_star_morphism(const StarMorphism& m) {
  const ConjugationQuandle c1 = conjugation_object(m.source);
  const ConjugationQuandle c2 = conjugation_object(m.target);
  std::vector<Point> map;
  for (const auto& w : c1.points) {
    auto it = std::find_if(m.gamma.begin(), m.gamma.end(),
                           [&](const Permutation& g) { return m(g) == w; });
    if (it == m.gamma.end()) {
      throw std::invalid_argument("conjugation_star_morphism: pi misses an omega member");
    }
    map.push_back(static_cast<Point>(m.target.omega_index(*it)));
  }
  return QuandleHom{c1.quandle, c2.quandle, std::move(map)};
}

SurjMorphism conjugation_representation(const GenPair& p) {
  const ConjugationQuandle c = conjugation_object(p);
  GenPair target = inn(c.quandle);
  std::vector<Permutation> map;
  map.reserve(p.group().order());
  for (const auto& g : p.group().elements()) {
    std::vector<Point> images;
    for (const auto& w : c.points) images.push_back(static_cast<Point>(p.omega_index(conjugate(g, w))));
    map.emplace_back(std::move(images));
  }
  return SurjMorphism{p, std::move(target), std::move(map)};
}

QuandleHom quandle_counit(const Quandle& q) {
  const ConjugationQuandle c = conjugation_object(inner_pair(q));
  std::vector<Permutation> syms;
  for (Point x = 0; x < q.size(); ++x) syms.push_back(q.symmetry(x));
  std::vector<Point> map;
  for (const auto& s : c.points) {
    auto it = std::find(syms.begin(), syms.end(), s);
    map.push_back(static_cast<Point>(it - syms.begin()));
  }
  QuandleHom theta{c.quandle, q, std::move(map)};
  if (!check_hom(theta).empty() || !is_injective(theta) || !is_surjective(theta)) {
    throw std::logic_error("quandle_counit: s_x -> x is not a quandle isomorphism");
  }
  return theta;
}

SurjMorphism group_counit_surj(const GenPair& p) {
  SurjMorphism phi = conjugation_representation(p);
  if (!check_surj_morphism(phi).empty() || !is_surj_isomorphism(phi)) {
    throw std::logic_error("group_counit_surj: conjugation representation is not an isomorphism");
  }
  return inverse_surj(phi);
}

StarMorphism group_counit_star(const GenPair& p) {
  SurjMorphism phi = conjugation_representation(p);
  StarMorphism eta{phi.target, p, p.group(), p.omega(), std::move(phi.map)};
  if (!check_star_morphism(eta).empty() || !is_star_isomorphism(eta)) {
    throw std::logic_error("group_counit_star: ((G, omega), phi) is not an isomorphism");
  }
  return eta;
}

std::size_t EquivalenceReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.passed; }));
}

namespace {

/// Group-side morphism of either category, dispatched on the mode.
template <class Morphism>
struct Side;

template <>
struct Side<SurjMorphism> {
  static SurjMorphism functor(const QuandleHom& f, std::size_t cap) {
    return inner_surj_morphism(f, cap);
  }
  static QuandleHom back(const SurjMorphism& m) { return conjugation_surj_morphism(m); }
  static SurjMorphism compose(const SurjMorphism& a, const SurjMorphism& b) {
    return compose_surj(a, b);
  }
  static SurjMorphism identity(const GenPair& p) { return identity_surj(p); }
  static SurjMorphism counit(const GenPair& p) { return group_counit_surj(p); }
  static bool valid(const SurjMorphism& m) { return check_surj_morphism(m).empty(); }
  static bool iso(const SurjMorphism& m) { return valid(m) && is_surj_isomorphism(m); }
  static bool less(const SurjMorphism& a, const SurjMorphism& b) { return a.map < b.map; }
  static std::vector<SurjMorphism> enumerate(const GenPair& a, const GenPair& b,
                                             const VerifyOptions&) {
    return enumerate_surj_morphisms(a, b);
  }
};

template <>
struct Side<StarMorphism> {
  static StarMorphism functor(const QuandleHom& f, std::size_t cap) {
    return inner_star_morphism(f, cap);
  }
  static QuandleHom back(const StarMorphism& m) { return conjugation_star_morphism(m); }
  static StarMorphism compose(const StarMorphism& a, const StarMorphism& b) {
    return compose_star(a, b);
  }
  static StarMorphism identity(const GenPair& p) { return identity_star(p); }
  static StarMorphism counit(const GenPair& p) { return group_counit_star(p); }
  static bool valid(const StarMorphism& m) { return check_star_morphism(m).empty(); }
  static bool iso(const StarMorphism& m) { return valid(m) && is_star_isomorphism(m); }
  static bool less(const StarMorphism& a, const StarMorphism& b) { return star_less(a, b); }
  static std::vector<StarMorphism> enumerate(const GenPair& a, const GenPair& b,
                                             const VerifyOptions& o) {
    return enumerate_star_morphisms(a, b, o.subset_cap);
  }
};

/// Accumulates one named check over many instances into a single record.
class Tally {
 public:
  Tally(std::string name, std::string instance)
      : record_{std::move(name), std::move(instance), true, ""} {}

  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && record_.passed) {
      record_.passed = false;
      record_.detail = "first failure: " + what;
    }
  }
  CheckRecord done() && {
    if (record_.passed) record_.detail = std::to_string(total_) + " checked";
    return std::move(record_);
  }

 private:
  CheckRecord record_;
  std::size_t total_ = 0;
};

template <class Morphism>
struct PairData {
  std::vector<QuandleHom> homs;          // sorted by map
  std::vector<Morphism> group_side;      // sorted canonically
  std::vector<Morphism> images;          // images[k] = F(homs[k])
  std::vector<QuandleHom> back_images;   // back_images[k] = G(group_side[k])
  std::vector<CheckRecord> checks;
};

std::string map_string(const std::vector<Point>& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i];
  out << ']';
  return out.str();
}

template <class Morphism>
PairData<Morphism> check_pair(const NamedQuandle& q1, const NamedQuandle& q2, const GenPair& p1,
                              const GenPair& p2, const QuandleHom& theta1,
                              const QuandleHom& theta2, const Morphism& eta1,
                              const Morphism& eta2, HomMode mode, const VerifyOptions& opt) {
  using S = Side<Morphism>;
  const std::string inst = q1.name + " -> " + q2.name;
  PairData<Morphism> d;
  try {
    d.homs = enumerate_homs(q1.quandle, q2.quandle, mode);
    d.group_side = S::enumerate(p1, p2, opt);
  } catch (const std::exception& e) {
    // Cap overruns and the like are reported against this pair only.
    d.homs.clear();
    d.group_side.clear();
    d.checks.push_back({"enumeration", inst, false, e.what()});
    return d;
  }

  CheckRecord count{"count", inst, d.homs.size() == d.group_side.size(),
                    "quandle side " + std::to_string(d.homs.size()) + ", group side " +
                        std::to_string(d.group_side.size())};
  d.checks.push_back(count);

  Tally valid("functor-image-valid", inst);
  for (const auto& f : d.homs) {
    try {
      d.images.push_back(S::functor(f, opt.group_cap));
      valid.expect(S::valid(d.images.back()), map_string(f.map));
    } catch (const std::exception& e) {
      valid.expect(false, map_string(f.map) + ": " + e.what());
    }
  }
  d.checks.push_back(std::move(valid).done());

  // Bijection: F is injective on homs and its image is exactly the group side.
  {
    std::vector<Morphism> sorted = d.images;
    std::sort(sorted.begin(), sorted.end(), S::less);
    bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    bool onto = sorted == d.group_side;
    CheckRecord bij{"hom-bijection", inst, d.images.size() == d.homs.size() && distinct && onto,
                    ""};
    bij.detail = bij.passed ? std::to_string(d.homs.size()) + " matched"
                            : std::string(distinct ? "" : "F not injective; ") +
                                  (onto ? "" : "image differs from group side");
    d.checks.push_back(std::move(bij));
  }

  Tally theta_nat("theta-naturality", inst);
  for (std::size_t k = 0; k < d.homs.size() && k < d.images.size(); ++k) {
    const QuandleHom gf = S::back(d.images[k]);
    const QuandleHom lhs = compose_hom(theta2, gf);
    const QuandleHom rhs = compose_hom(d.homs[k], theta1);
    theta_nat.expect(lhs.map == rhs.map, map_string(d.homs[k].map));
  }
  d.checks.push_back(std::move(theta_nat).done());

  Tally eta_nat("eta-naturality", inst);
  Tally unit("unit-law", inst);
  for (const auto& m : d.group_side) {
    try {
      d.back_images.push_back(S::back(m));
      const Morphism fg = S::functor(d.back_images.back(), opt.group_cap);
      eta_nat.expect(S::compose(m, eta1) == S::compose(eta2, fg), "group-side morphism");
      unit.expect(S::compose(m, S::identity(p1)) == m && S::compose(S::identity(p2), m) == m,
                  "group-side morphism");
    } catch (const std::exception& e) {
      eta_nat.expect(false, e.what());
    }
  }
  d.checks.push_back(std::move(eta_nat).done());
  d.checks.push_back(std::move(unit).done());
  return d;
}

template <class Morphism>
EquivalenceReport verify_impl(const std::vector<NamedQuandle>& corpus, HomMode mode,
                              const VerifyOptions& opt) {
  using S = Side<Morphism>;
  EquivalenceReport report;
  report.mode = to_string(mode);
  const std::size_t n = corpus.size();
  for (const auto& q : corpus) {
    if (!check_axioms(q.quandle).empty()) {
      throw std::invalid_argument(q.name + ": not a quandle");
    }
    if (!is_faithful(q.quandle)) throw std::invalid_argument(q.name + ": not faithful");
    report.instances.push_back(q.name);
  }

  if (n == 0) return report;

  std::vector<GenPair> pairs;
  std::vector<QuandleHom> thetas;
  std::vector<Morphism> etas;
  for (const auto& q : corpus) {
    pairs.push_back(inner_pair(q.quandle, opt.group_cap));
    CheckRecord obj{"object", q.name, true, ""};
    try {
      thetas.push_back(quandle_counit(q.quandle));
      etas.push_back(S::counit(pairs.back()));
      bool ok = S::iso(etas.back());
      bool f_id = S::functor(identity_hom(q.quandle), opt.group_cap) == S::identity(pairs.back());
      bool g_id = S::back(S::identity(pairs.back())) == identity_hom(conjugation_object(pairs.back()).quandle);
      obj.passed = ok && f_id && g_id;
      obj.detail = obj.passed ? "theta, eta isomorphisms; identities preserved"
                              : std::string(ok ? "" : "eta not an isomorphism; ") +
                                    (f_id ? "" : "F(id) != id; ") + (g_id ? "" : "G(id) != id");
    } catch (const std::exception& e) {
      obj.passed = false;
      obj.detail = e.what();
    }
    report.checks.push_back(std::move(obj));
  }
  if (report.failures() > 0) return report;

  for (const auto& [name, p] : opt.extra_pairs) {
    CheckRecord rec{"essential-surjectivity", name, true, ""};
    try {
      rec.passed = S::iso(S::counit(p));
      rec.detail = rec.passed ? "FG(P) isomorphic to P via eta" : "eta is not an isomorphism";
    } catch (const std::exception& e) {
      rec.passed = false;
      rec.detail = e.what();
    }
    report.checks.push_back(std::move(rec));
  }

  // Ordered pairs, concurrently; merged in corpus order.
  std::vector<std::future<PairData<Morphism>>> futures;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      futures.push_back(std::async(std::launch::async, [&, i, j] {
        return check_pair<Morphism>(corpus[i], corpus[j], pairs[i], pairs[j], thetas[i],
                                    thetas[j], etas[i], etas[j], mode, opt);
      }));
    }
  }
  std::vector<PairData<Morphism>> data;
  for (auto& f : futures) data.push_back(f.get());
  auto at = [&](std::size_t i, std::size_t j) -> const PairData<Morphism>& { return data[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& d = at(i, j);
      report.hom_counts.emplace_back(corpus[i].name + " -> " + corpus[j].name, d.homs.size());
      for (const auto& c : d.checks) report.checks.push_back(c);
    }
  }

  // Functor laws on every composable pair.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::string inst = corpus[i].name + " -> " + corpus[j].name + " -> " + corpus[k].name;
        const auto &d1 = at(i, j), &d2 = at(j, k), &d3 = at(i, k);
        Tally f_law("functor-composition-F", inst);
        if (d1.images.size() == d1.homs.size() && d2.images.size() == d2.homs.size() &&
            d3.images.size() == d3.homs.size()) {
          for (std::size_t a = 0; a < d1.homs.size(); ++a) {
            for (std::size_t b = 0; b < d2.homs.size(); ++b) {
              const QuandleHom comp = compose_hom(d2.homs[b], d1.homs[a]);
              auto it = std::lower_bound(
                  d3.homs.begin(), d3.homs.end(), comp,
                  [](const QuandleHom& x, const QuandleHom& y) { return x.map < y.map; });
              if (it == d3.homs.end() || it->map != comp.map) {
                f_law.expect(false, "composite " + map_string(comp.map) + " not enumerated");
                continue;
              }
              const auto& direct = d3.images[static_cast<std::size_t>(it - d3.homs.begin())];
              f_law.expect(direct == S::compose(d2.images[b], d1.images[a]), map_string(comp.map));
            }
          }
        } else {
          f_law.expect(false, "functor images incomplete");
        }
        report.checks.push_back(std::move(f_law).done());

        Tally g_law("functor-composition-G", inst);
        if (d1.back_images.size() == d1.group_side.size() &&
            d2.back_images.size() == d2.group_side.size()) {
          for (std::size_t a = 0; a < d1.group_side.size(); ++a) {
            for (std::size_t b = 0; b < d2.group_side.size(); ++b) {
              try {
                const Morphism comp = S::compose(d2.group_side[b], d1.group_side[a]);
                g_law.expect(S::valid(comp) &&
                                 S::back(comp) == compose_hom(d2.back_images[b], d1.back_images[a]),
                             "composite group-side morphism");
              } catch (const std::exception& e) {
                g_law.expect(false, e.what());
              }
            }
          }
        } else {
          g_law.expect(false, "G images incomplete");
        }
        report.checks.push_back(std::move(g_law).done());
      }
    }
  }

  // Associativity on sampled composable triples.
  Tally assoc("associativity", "sampled triples");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const auto &a = at(i, j).group_side, &b = at(j, k).group_side, &c = at(k, l).group_side;
          if (a.empty() || b.empty() || c.empty()) continue;
          std::mt19937_64 rng(opt.seed ^ (((i * n + j) * n + k) * n + l) * 0x9e3779b97f4a7c15ULL);
          for (std::size_t s = 0; s < opt.associativity_samples; ++s) {
            const auto& m1 = a[rng() % a.size()];
            const auto& m2 = b[rng() % b.size()];
            const auto& m3 = c[rng() % c.size()];
            try {
              assoc.expect(S::compose(m3, S::compose(m2, m1)) == S::compose(S::compose(m3, m2), m1),
                           corpus[i].name + " -> " + corpus[j].name + " -> " + corpus[k].name +
                               " -> " + corpus[l].name);
            } catch (const std::exception& e) {
              assoc.expect(false, e.what());
            }
          }
        }
      }
    }
  }
  report.checks.push_back(std::move(assoc).done());
  return report;
}

}  // namespace

EquivalenceReport verify_equivalence(const std::vector<NamedQuandle>& corpus, HomMode mode,
                                     const VerifyOptions& options) {
  switch (mode) {
    case HomMode::Surjective: return verify_impl<SurjMorphism>(corpus, mode, options);
    case HomMode::Injective: return verify_impl<StarMorphism>(corpus, mode, options);
    case HomMode::All: break;
  }
  throw std::invalid_argument("verify_equivalence: mode must be inj or surj");
}

}  // namespace qcat

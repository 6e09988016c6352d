#include "qcat/grpgen.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace qcat {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

GenPair::GenPair(PermGroup group, std::vector<Permutation> omega)
    : group_(std::move(group)), omega_(std::move(omega)) {}

GenPair GenPair::make(PermGroup group, std::vector<Permutation> omega) {
  omega = normalize_set(std::move(omega));
  if (omega.empty()) throw std::invalid_argument("make_genpair: omega is empty");
  for (const auto& w : omega) {
    if (!group.contains(w)) {
      throw std::invalid_argument("make_genpair: omega member " + to_string(w) +
                                  " is not a group element");
    }
  }
  PermGroup generated = PermGroup::close(omega, group.order());
  if (!generated.same_elements(group)) {
    throw std::invalid_argument("make_genpair: omega generates a subgroup of order " +
                                std::to_string(generated.order()) + ", not the group of order " +
                                std::to_string(group.order()));
  }
  GenPair p(std::move(group), std::move(omega));
  p.conj_stable_ = is_conjugation_stable(p.group_, p.omega_);
  p.faithful_ = centralizer_of_subset_is_trivial(p.group_, p.omega_);
  return p;
}

std::size_t GenPair::omega_index(const Permutation& w) const {
  auto it = std::lower_bound(omega_.begin(), omega_.end(), w);
  if (it == omega_.end() || *it != w) {
    throw std::out_of_range("not an omega member: " + to_string(w));
  }
  return static_cast<std::size_t>(it - omega_.begin());
}

bool GenPair::omega_contains(const Permutation& w) const {
  return std::binary_search(omega_.begin(), omega_.end(), w);
}

std::optional<std::vector<Permutation>> extend_to_homomorphism(
    const PermGroup& domain, std::span<const Permutation> gens,
    std::span<const Permutation> images) {
  if (gens.size() != images.size()) {
    throw std::invalid_argument("extend_to_homomorphism: generator/image count mismatch");
  }
  const std::size_t image_degree = images.empty() ? 1 : images.front().degree();
  std::vector<std::optional<Permutation>> assigned(domain.order());
  assigned[0] = Permutation::identity(image_degree);
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t at = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto next = domain.find(compose(domain.elements()[at], gens[i]));
      if (!next) return std::nullopt;
      Permutation value = compose(*assigned[at], images[i]);
      if (assigned[*next]) {
        if (*assigned[*next] != value) return std::nullopt;
      } else {
        assigned[*next] = std::move(value);
        queue.push_back(*next);
      }
    }
  }
  if (queue.size() != domain.order()) return std::nullopt;
  std::vector<Permutation> out;
  out.reserve(assigned.size());
  for (auto& a : assigned) out.push_back(std::move(*a));
  return out;
}

std::vector<Permutation> generating_subset(std::span<const Permutation> candidates,
                                           std::size_t cap) {
  std::vector<Permutation> kept;
  std::optional<PermGroup> current;
  for (const auto& c : candidates) {
    if (c.is_identity()) continue;
    if (current && current->contains(c)) continue;
    kept.push_back(c);
    current = PermGroup::close(kept, cap);
  }
  if (kept.empty() && !candidates.empty()) kept.push_back(candidates.front());
  return kept;
}

bool is_multiplicative(const PermGroup& domain, std::span<const Permutation> map) {
  if (map.size() != domain.order()) return false;
  const auto& el = domain.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = 0; j < el.size(); ++j) {
      const std::size_t k = domain.index(compose(el[i], el[j]));
      if (map[k] != compose(map[i], map[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string to_string(SurjClause c) {
  switch (c) {
    case SurjClause::Shape: return "shape";
    case SurjClause::Codomain: return "codomain";
    case SurjClause::Homomorphism: return "homomorphism";
    case SurjClause::OmegaImage: return "omega-image";
    case SurjClause::OmegaSurjective: return "omega-surjective";
    case SurjClause::OmegaBijective: return "omega-bijective";
  }
  return "?";
}

std::string to_string(StarClause c) {
  switch (c) {
    case StarClause::Subgroup: return "subgroup";
    case StarClause::GammaSubset: return "gamma-subset";
    case StarClause::Generation: return "generation";
    case StarClause::Stability: return "stability";
    case StarClause::Homomorphism: return "homomorphism";
    case StarClause::Bijectivity: return "bijectivity";
  }
  return "?";
}

std::vector<SurjViolation> check_surj_morphism(const SurjMorphism& m,
                                               bool require_bijective_on_omega) {
  std::vector<SurjViolation> out;
  const PermGroup& g1 = m.source.group();
  const PermGroup& g2 = m.target.group();
  if (m.map.size() != g1.order()) {
    out.push_back({SurjClause::Shape, "map has " + std::to_string(m.map.size()) +
                                          " entries for a group of order " +
                                          std::to_string(g1.order())});
    return out;
  }
  for (std::size_t i = 0; i < m.map.size(); ++i) {
    if (m.map[i].degree() != g2.degree() || !g2.contains(m.map[i])) {
      out.push_back({SurjClause::Codomain, "image of " + to_string(g1.elements()[i]) +
                                               " is not a target element"});
      return out;
    }
  }
  if (!is_multiplicative(g1, m.map)) {
    out.push_back({SurjClause::Homomorphism, "map is not multiplicative"});
  }
  std::set<Permutation> hit;
  for (const auto& w : m.source.omega()) {
    const Permutation& img = m.map[g1.index(w)];
    if (!m.target.omega_contains(img)) {
      out.push_back({SurjClause::OmegaImage,
                     to_string(w) + " maps outside target omega to " + to_string(img)});
    } else {
      hit.insert(img);
    }
  }
  if (hit.size() != m.target.omega().size()) {
    out.push_back({SurjClause::OmegaSurjective,
                   "omega image covers " + std::to_string(hit.size()) + " of " +
                       std::to_string(m.target.omega().size())});
  }
  if (require_bijective_on_omega && m.source.omega().size() != hit.size()) {
    out.push_back({SurjClause::OmegaBijective, "restriction to omega is not injective"});
  }
  return out;
}

SurjMorphism identity_surj(const GenPair& p) {
  return SurjMorphism{p, p, p.group().elements()};
}

SurjMorphism compose_surj(const SurjMorphism& m2, const SurjMorphism& m1) {
  if (!(m1.target == m2.source)) {
    throw std::invalid_argument("compose_surj: morphisms are not composable");
  }
  std::vector<Permutation> map;
  map.reserve(m1.map.size());
  for (const auto& g : m1.map) map.push_back(m2(g));
  return SurjMorphism{m1.source, m2.target, std::move(map)};
}

bool is_surj_isomorphism(const SurjMorphism& m) {
  if (m.source.group().order() != m.target.group().order()) return false;
  return normalize_set(m.map).size() == m.map.size();
}

SurjMorphism inverse_surj(const SurjMorphism& m) {
  if (!is_surj_isomorphism(m)) {
    throw std::invalid_argument("inverse_surj: group map is not bijective");
  }
  const auto& src = m.source.group().elements();
  std::vector<Permutation> inv(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) inv[m.target.group().index(m.map[i])] = src[i];
  return SurjMorphism{m.target, m.source, std::move(inv)};
}

namespace {

/// Calls `visit` with every tuple of `choices` of length `k` (odometer order);
/// with `distinct`, only tuples of pairwise different entries.
void for_each_tuple(std::span<const Permutation> choices, std::size_t k, bool distinct,
                    const std::function<void(std::span<const Permutation>)>& visit) {
  std::vector<Permutation> tuple(k);
  std::vector<bool> used(choices.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == k) {
      visit(tuple);
      return;
    }
    for (std::size_t i = 0; i < choices.size(); ++i) {
      if (distinct && used[i]) continue;
      used[i] = true;
      tuple[depth] = choices[i];
      rec(depth + 1);
      used[i] = false;
    }
  };
  rec(0);
}

}  // namespace

std::vector<SurjMorphism> enumerate_surj_morphisms(const GenPair& src, const GenPair& tgt) {
  std::vector<SurjMorphism> out;
  if (src.omega().size() < tgt.omega().size()) return out;
  const auto gens = generating_subset(src.omega(), src.group().order());
  for_each_tuple(tgt.omega(), gens.size(), false, [&](std::span<const Permutation> images) {
    auto map = extend_to_homomorphism(src.group(), gens, images);
    if (!map) return;
    std::set<Permutation> hit;
    for (const auto& w : src.omega()) {
      const Permutation& img = (*map)[src.group().index(w)];
      if (!tgt.omega_contains(img)) return;
      hit.insert(img);
    }
    if (hit.size() != tgt.omega().size()) return;
    out.push_back(SurjMorphism{src, tgt, std::move(*map)});
  });
  std::sort(out.begin(), out.end(),
            [](const SurjMorphism& a, const SurjMorphism& b) { return a.map < b.map; });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<StarViolation> check_star_morphism(const StarMorphism& m) {
  std::vector<StarViolation> out;
  const PermGroup& g1 = m.source.group();
  const PermGroup& g2 = m.target.group();

  if (!m.h.is_subgroup_of(g2)) {
    out.push_back({StarClause::Subgroup, "H is not contained in the target group"});
  }
  bool gamma_ok = !m.gamma.empty();
  if (!gamma_ok) out.push_back({StarClause::GammaSubset, "gamma is empty"});
  for (const auto& g : m.gamma) {
    if (!m.target.omega_contains(g)) {
      out.push_back({StarClause::GammaSubset, to_string(g) + " is not in target omega"});
      gamma_ok = false;
    }
  }
  if (gamma_ok) {
    bool inside = std::all_of(m.gamma.begin(), m.gamma.end(),
                              [&](const Permutation& g) { return m.h.contains(g); });
    if (!inside) {
      out.push_back({StarClause::Generation, "gamma is not contained in H"});
    } else {
      PermGroup generated = PermGroup::close(m.gamma, m.h.order());
      if (!generated.same_elements(m.h)) {
        out.push_back({StarClause::Generation,
                       "gamma generates a subgroup of order " +
                           std::to_string(generated.order()) + " inside H of order " +
                           std::to_string(m.h.order())});
      }
      if (!is_conjugation_stable(m.h, m.gamma)) {
        out.push_back({StarClause::Stability, "gamma is not stable under conjugation by H"});
      }
    }
  }

  if (m.pi.size() != m.h.order()) {
    out.push_back({StarClause::Homomorphism, "pi is not total on H"});
    return out;
  }
  bool into = std::all_of(m.pi.begin(), m.pi.end(), [&](const Permutation& g) {
    return g.degree() == g1.degree() && g1.contains(g);
  });
  if (!into) {
    out.push_back({StarClause::Homomorphism, "pi leaves the source group"});
  } else if (!is_multiplicative(m.h, m.pi)) {
    out.push_back({StarClause::Homomorphism, "pi is not multiplicative"});
  }

  if (gamma_ok && std::all_of(m.gamma.begin(), m.gamma.end(),
                              [&](const Permutation& g) { return m.h.contains(g); })) {
    std::vector<Permutation> image;
    for (const auto& g : m.gamma) image.push_back(m(g));
    const std::size_t distinct = normalize_set(image).size();
    if (distinct != m.gamma.size() || normalize_set(image) != m.source.omega()) {
      out.push_back({StarClause::Bijectivity,
                     "pi restricted to gamma is not a bijection onto source omega"});
    }
  }
  return out;
}

StarMorphism identity_star(const GenPair& p) {
  return StarMorphism{p, p, p.group(), p.omega(), p.group().elements()};
}

StarMorphism compose_star(const StarMorphism& m2, const StarMorphism& m1) {
  if (!(m1.target == m2.source)) {
    throw std::invalid_argument("compose_star: morphisms are not composable");
  }
  std::vector<Permutation> gamma;
  for (const auto& g : m2.gamma) {
    if (std::binary_search(m1.gamma.begin(), m1.gamma.end(), m2(g))) gamma.push_back(g);
  }
  if (gamma.empty()) throw std::logic_error("compose_star: empty pulled-back gamma");
  PermGroup h = PermGroup::close(gamma, m2.h.order());
  std::vector<Permutation> pi;
  pi.reserve(h.order());
  for (const auto& x : h.elements()) {
    auto mid = m1.h.find(m2(x));
    if (!mid) throw std::logic_error("compose_star: pi does not land in the inner subgroup");
    pi.push_back(m1.pi[*mid]);
  }
  return StarMorphism{m1.source, m2.target, std::move(h), std::move(gamma), std::move(pi)};
}

bool is_star_isomorphism(const StarMorphism& m) {
  if (!m.h.same_elements(m.target.group())) return false;
  if (m.gamma != m.target.omega()) return false;
  if (m.pi.size() != m.source.group().order()) return false;
  if (normalize_set(m.pi) != m.source.group().elements()) return false;
  std::vector<Permutation> image;
  for (const auto& w : m.gamma) image.push_back(m(w));
  return normalize_set(std::move(image)) == m.source.omega();
}

bool star_less(const StarMorphism& a, const StarMorphism& b) {
  if (a.gamma != b.gamma) return a.gamma < b.gamma;
  if (a.pi != b.pi) return a.pi < b.pi;
  return a.h.elements() < b.h.elements();
}

namespace {

/// Indices (into `omega`) of the smallest superset of `seed` closed under
/// conjugation by its own members, or nullopt if the closure leaves omega or
/// grows past `limit`.
std::optional<std::vector<std::size_t>> conjugation_closure(
    const std::vector<Permutation>& omega, const std::vector<std::size_t>& seed,
    std::size_t limit) {
  std::vector<bool> in(omega.size(), false);
  std::vector<std::size_t> members = seed;
  for (std::size_t i : seed) in[i] = true;
  for (std::size_t a = 0; a < members.size(); ++a) {
    // Each new member must be conjugated by, and conjugate, all earlier ones.
    for (std::size_t b = 0; b <= a; ++b) {
      const std::pair<std::size_t, std::size_t> pairs[2] = {{members[a], members[b]},
                                                            {members[b], members[a]}};
      for (auto [x, y] : pairs) {
        Permutation c = conjugate(omega[x], omega[y]);
        auto it = std::lower_bound(omega.begin(), omega.end(), c);
        if (it == omega.end() || *it != c) return std::nullopt;
        const auto idx = static_cast<std::size_t>(it - omega.begin());
        if (!in[idx]) {
          if (members.size() >= limit) return std::nullopt;
          in[idx] = true;
          members.push_back(idx);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<StarMorphism> enumerate_star_morphisms(const GenPair& src, const GenPair& tgt,
                                                   std::size_t subset_cap) {
  std::vector<StarMorphism> out;
  const std::size_t k = src.omega().size();
  const auto& omega2 = tgt.omega();
  if (k > omega2.size()) return out;

  std::vector<std::vector<std::size_t>> subsets;
  std::size_t visited = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    if (++visited > subset_cap) {
      throw CapExceeded("star morphism subset search exceeded cap of " +
                        std::to_string(subset_cap) + " nodes");
    }
    if (chosen.size() == k) {
      subsets.push_back(chosen);
      return;
    }
    for (std::size_t i = start; i < omega2.size(); ++i) {
      if (omega2.size() - i < k - chosen.size()) break;
      chosen.push_back(i);
      auto closure = conjugation_closure(omega2, chosen, k);
      bool viable = closure.has_value();
      if (viable) {
        // Indices below i that were skipped can never be added later.
        for (std::size_t c : *closure) {
          if (c < i && !std::binary_search(chosen.begin(), chosen.end(), c)) {
            viable = false;
            break;
          }
        }
      }
      if (viable && chosen.size() == k && closure->size() != k) viable = false;
      if (viable) grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);

  for (const auto& idx : subsets) {
    std::vector<Permutation> gamma;
    for (std::size_t i : idx) gamma.push_back(omega2[i]);
    PermGroup h = PermGroup::close(gamma, tgt.group().order());
    if (!is_conjugation_stable(h, gamma)) continue;
    const auto gens = generating_subset(gamma, h.order());
    for_each_tuple(src.omega(), gens.size(), true, [&](std::span<const Permutation> images) {
      auto pi = extend_to_homomorphism(h, gens, images);
      if (!pi) return;
      std::vector<Permutation> image;
      for (const auto& g : gamma) {
        const Permutation& v = (*pi)[h.index(g)];
        if (!src.omega_contains(v)) return;
        image.push_back(v);
      }
      if (normalize_set(std::move(image)).size() != k) return;
      out.push_back(StarMorphism{src, tgt, h, gamma, std::move(*pi)});
    });
  }
  std::sort(out.begin(), out.end(), star_less);
  return out;
}

}  // namespace qcat

#include "qcat/homs.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qcat {

std::string to_string(HomMode m) {
  switch (m) {
    case HomMode::All: return "all";
    case HomMode::Injective: return "inj";
    case HomMode::Surjective: return "surj";
  }
  return "?";
}

HomMode parse_hom_mode(const std::string& s) {
  if (s == "all") return HomMode::All;
  if (s == "inj" || s == "injective") return HomMode::Injective;
  if (s == "surj" || s == "surjective") return HomMode::Surjective;
  throw std::invalid_argument("unknown hom mode '" + s + "' (expected all, inj or surj)");
}

std::vector<EquivarianceViolation> check_hom(const QuandleHom& f) {
  const std::size_t n1 = f.source.size();
  if (f.map.size() != n1) {
    throw std::invalid_argument("check_hom: map has " + std::to_string(f.map.size()) +
                                " entries for a source of order " + std::to_string(n1));
  }
  for (Point v : f.map) {
    if (v >= f.target.size()) throw std::invalid_argument("check_hom: map value out of range");
  }
  std::vector<EquivarianceViolation> out;
  for (Point x = 0; x < n1; ++x) {
    for (Point y = 0; y < n1; ++y) {
      if (f.map[f.source(x, y)] != f.target(f.map[x], f.map[y])) out.push_back({x, y});
    }
  }
  return out;
}

bool is_injective(const QuandleHom& f) {
  std::vector<bool> hit(f.target.size(), false);
  for (Point v : f.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_surjective(const QuandleHom& f) {
  std::vector<bool> hit(f.target.size(), false);
  for (Point v : f.map) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

QuandleHom identity_hom(const Quandle& q) {
  std::vector<Point> map(q.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Point>(i);
  return QuandleHom{q, q, std::move(map)};
}

QuandleHom compose_hom(const QuandleHom& f2, const QuandleHom& f1) {
  if (!(f1.target == f2.source)) {
    throw std::invalid_argument("compose_hom: homomorphisms are not composable");
  }
  std::vector<Point> map(f1.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = f2(f1(static_cast<Point>(i)));
  return QuandleHom{f1.source, f2.target, std::move(map)};
}

std::vector<QuandleHom> enumerate_homs(const Quandle& q1, const Quandle& q2, HomMode mode) {
  const std::size_t n1 = q1.size();
  const std::size_t n2 = q2.size();
  std::vector<QuandleHom> out;
  if (mode == HomMode::Injective && n1 > n2) return out;
  if (mode == HomMode::Surjective && n1 < n2) return out;

  struct Triple {
    Point x, y, z;
  };
  // checks[k]: triples whose largest point is k, decidable once k is assigned.
  std::vector<std::vector<Triple>> checks(n1);
  for (Point x = 0; x < n1; ++x) {
    for (Point y = 0; y < n1; ++y) {
      const Point z = q1(x, y);
      checks[std::max({x, y, z})].push_back({x, y, z});
    }
  }

  std::vector<Point> map(n1);
  std::vector<std::size_t> uses(n2, 0);
  std::size_t covered = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == n1) {
      out.push_back(QuandleHom{q1, q2, map});
      return;
    }
    for (Point v = 0; v < n2; ++v) {
      if (mode == HomMode::Injective && uses[v] > 0) continue;
      map[k] = v;
      bool ok = true;
      for (const Triple& t : checks[k]) {
        if (map[t.z] != q2(map[t.x], map[t.y])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (uses[v]++ == 0) ++covered;
      const std::size_t remaining = n1 - k - 1;
      if (mode != HomMode::Surjective || n2 - covered <= remaining) assign(k + 1);
      if (--uses[v] == 0) --covered;
    }
  };
  assign(0);
  return out;
}

namespace {

void require_valid(const QuandleHom& f, const char* op) {
  if (!check_hom(f).empty()) {
    throw std::invalid_argument(std::string(op) + ": map is not a quandle homomorphism");
  }
  if (!is_faithful(f.source) || !is_faithful(f.target)) {
    throw std::invalid_argument(std::string(op) + ": quandles must be faithful");
  }
}

std::vector<Permutation> symmetries(const Quandle& q) {
  std::vector<Permutation> s;
  for (Point x = 0; x < q.size(); ++x) s.push_back(q.symmetry(x));
  return s;
}

}  // namespace

SurjMorphism induced_surjective(const QuandleHom& f, std::size_t cap) {
  require_valid(f, "induced_surjective");
  if (!is_surjective(f)) throw std::invalid_argument("induced_surjective: map is not surjective");
  GenPair p1 = inn(f.source, cap);
  GenPair p2 = inn(f.target, cap);

  // Generator i of Inn(Q1) is s_i; rewrite it to s_{f(i)}.
  const auto target_syms = symmetries(f.target);
  std::vector<Permutation> rewritten;
  for (Point x = 0; x < f.source.size(); ++x) rewritten.push_back(target_syms[f(x)]);

  std::vector<Permutation> map;
  map.reserve(p1.group().order());
  for (std::size_t i = 0; i < p1.group().order(); ++i) {
    map.push_back(evaluate_word(rewritten, p1.group().witness(i), f.target.size()));
  }
  SurjMorphism m{std::move(p1), std::move(p2), std::move(map)};
  if (auto v = check_surj_morphism(m); !v.empty()) {
    throw std::logic_error("induced_surjective: rewritten map failed verification (" +
                           to_string(v.front().clause) + ": " + v.front().detail + ")");
  }
  return m;
}

StarMorphism induced_injective(const QuandleHom& f, std::size_t cap) {
  require_valid(f, "induced_injective");
  if (!is_injective(f)) throw std::invalid_argument("induced_injective: map is not injective");

  std::vector<Point> image(f.map);
  std::sort(image.begin(), image.end());
  SubquandleWitness w = subquandle_closure(f.target, image);
  if (w.points != image) throw std::logic_error("induced_injective: image is not a subquandle");

  GenPair rel = inn_relative(f.target, w, cap);

  // Generator j of H is s_{w_j}; rewrite it to s_x for the unique x with f(x) = w_j.
  const auto source_syms = symmetries(f.source);
  std::vector<Permutation> rewritten;
  for (Point wj : w.points) {
    auto it = std::find(f.map.begin(), f.map.end(), wj);
    rewritten.push_back(source_syms[static_cast<std::size_t>(it - f.map.begin())]);
  }

  const PermGroup& h = rel.group();
  std::vector<Permutation> pi;
  pi.reserve(h.order());
  for (std::size_t i = 0; i < h.order(); ++i) {
    pi.push_back(evaluate_word(rewritten, h.witness(i), f.source.size()));
  }
  StarMorphism m{inn(f.source, cap), inn(f.target, cap), h, rel.omega(), std::move(pi)};
  if (auto v = check_star_morphism(m); !v.empty()) {
    throw std::logic_error("induced_injective: rewritten map failed verification (" +
                           to_string(v.front().clause) + ": " + v.front().detail + ")");
  }
  return m;
}

}  // namespace qcat

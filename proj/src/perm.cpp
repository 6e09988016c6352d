#include "qcat/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

namespace qcat {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("permutation images are not a bijection: " +
                                  to_string(*this));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::size_t Permutation::order() const {
  std::size_t k = 1;
  Permutation p = *this;
  while (!p.is_identity()) {
    p = compose(p, *this);
    ++k;
  }
  return k;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t seed = p.degree();
  for (Point x : p.images()) seed ^= x + 0x9e3779b9 + (seed << 6) + (seed >> 2);
  return seed;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()) + ")");
  }
  std::vector<Point> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p(q(static_cast<Point>(i)));
  return Permutation(std::move(r));
}

Permutation conjugate(const Permutation& g, const Permutation& s) {
  return compose(compose(g, s), g.inverse());
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) out << ' ';
    out << p.images()[i];
  }
  out << ']';
  return out.str();
}

std::vector<Permutation> normalize_set(std::vector<Permutation> perms) {
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  return perms;
}

Permutation evaluate_word(std::span<const Permutation> generators, const Word& word,
                          std::size_t degree) {
  Permutation result = Permutation::identity(degree);
  for (const Letter& l : word) {
    if (l.generator >= generators.size()) {
      throw std::out_of_range("word letter " + std::to_string(l.generator) +
                              " outside generator list of size " +
                              std::to_string(generators.size()));
    }
    const Permutation& g = generators[l.generator];
    result = compose(result, l.exponent < 0 ? g.inverse() : g);
  }
  return result;
}

PermGroup PermGroup::close(std::vector<Permutation> generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("close_group: empty generator list");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("close_group: degree mismatch");
  }

  std::vector<std::pair<Permutation, Letter>> alphabet;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    alphabet.emplace_back(generators[i], Letter{i, 1});
    alphabet.emplace_back(generators[i].inverse(), Letter{i, -1});
  }

  std::vector<Permutation> found{Permutation::identity(degree)};
  std::vector<Word> words{Word{}};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{found.front(), 0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& [letter_perm, letter] : alphabet) {
      Permutation next = compose(found[head], letter_perm);
      if (seen.contains(next)) continue;
      if (found.size() >= cap) {
        throw CapExceeded("group closure exceeded cap of " + std::to_string(cap) +
                          " elements");
      }
      Word w = words[head];
      w.push_back(letter);
      seen.emplace(next, found.size());
      found.push_back(std::move(next));
      words.push_back(std::move(w));
    }
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });

  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.elements_.reserve(found.size());
  g.witness_.reserve(found.size());
  for (std::size_t i : order) {
    g.index_.emplace(found[i], g.elements_.size());
    g.elements_.push_back(std::move(found[i]));
    g.witness_.push_back(std::move(words[i]));
  }
  return g;
}

std::optional<std::size_t> PermGroup::find(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::index(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw std::out_of_range("not a group element: " + to_string(g));
  return it->second;
}

Permutation PermGroup::evaluate(const Word& word) const {
  return evaluate_word(generators_, word, degree_);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

namespace {

void require_subset(const PermGroup& group, std::span<const Permutation> subset,
                    const char* op) {
  for (const auto& s : subset) {
    if (!group.contains(s)) {
      throw std::invalid_argument(std::string(op) + ": " + to_string(s) +
                                  " is not an element of the group");
    }
  }
}

}  // namespace

bool centralizer_of_subset_is_trivial(const PermGroup& group,
                                      std::span<const Permutation> subset) {
  require_subset(group, subset, "centralizer_of_subset_is_trivial");
  for (const auto& g : group.elements()) {
    if (g.is_identity()) continue;
    bool commutes = std::all_of(subset.begin(), subset.end(), [&](const Permutation& s) {
      return compose(g, s) == compose(s, g);
    });
    if (commutes) return false;
  }
  return true;
}

bool is_conjugation_stable(const PermGroup& group, std::span<const Permutation> subset) {
  require_subset(group, subset, "is_conjugation_stable");
  std::unordered_map<Permutation, bool, PermutationHash> members;
  for (const auto& s : subset) members.emplace(s, true);
  for (const auto& g : group.elements()) {
    for (const auto& s : subset) {
      if (!members.contains(conjugate(g, s))) return false;
    }
  }
  return true;
}

namespace {

Permutation rotation(std::size_t n) {
  std::vector<Point> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<Point>((i + 1) % n);
  return Permutation(std::move(r));
}

Permutation reflection(std::size_t n, std::size_t k) {
  std::vector<Point> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<Point>((k + n - i) % n);
  return Permutation(std::move(r));
}

}  // namespace

PermGroup cyclic_group(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("cyclic_group: n must be positive");
  return PermGroup::close({rotation(n)}, cap);
}

PermGroup dihedral_group(std::size_t n, std::size_t cap) {
  if (n < 3) throw std::invalid_argument("dihedral_group: n must be at least 3");
  return PermGroup::close({rotation(n), reflection(n, 0)}, cap);
}

PermGroup symmetric_group(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("symmetric_group: n must be positive");
  if (n == 1) return PermGroup::close({Permutation::identity(1)}, cap);
  std::vector<Point> t(n);
  std::iota(t.begin(), t.end(), Point{0});
  std::swap(t[0], t[1]);
  return PermGroup::close({Permutation(std::move(t)), rotation(n)}, cap);
}

std::vector<Permutation> dihedral_reflections(std::size_t n) {
  std::vector<Permutation> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(reflection(n, k));
  return normalize_set(std::move(out));
}

std::optional<DihedralPresentation> recognize_dihedral(const PermGroup& group,
                                                       std::uint64_t seed) {
  const std::size_t order = group.order();
  if (order < 2 || order % 2 != 0) return std::nullopt;
  const std::size_t n = order / 2;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < order; ++i) {
    if (group.elements()[i].order() == n) candidates.push_back(i);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (std::size_t ai : candidates) {
    const Permutation& a = group.elements()[ai];
    std::vector<Permutation> powers{Permutation::identity(group.degree())};
    for (std::size_t k = 1; k < n; ++k) powers.push_back(compose(a, powers.back()));
    std::sort(powers.begin(), powers.end());
    const Permutation a_inv = a.inverse();
    for (const auto& x : group.elements()) {
      if (x.order() != 2 || std::binary_search(powers.begin(), powers.end(), x)) continue;
      if (compose(x, compose(a, x)) == a_inv) return DihedralPresentation{n, a, x};
    }
  }
  return std::nullopt;
}

}  // namespace qcat

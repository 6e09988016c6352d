#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qcat {

using Point = std::uint32_t;

/// A bijection on {0, ..., n-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// p∘q: apply q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);

/// g s g^-1.
Permutation conjugate(const Permutation& g, const Permutation& s);

/// `[i0 i1 ... i(n-1)]`
std::string to_string(const Permutation& p);

/// Sorts and deduplicates; the canonical form of a "set of permutations".
std::vector<Permutation> normalize_set(std::vector<Permutation> perms);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One letter of a word over a generating list: generator index and ±1.
struct Letter {
  std::size_t generator;
  int exponent;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

inline constexpr std::size_t kDefaultGroupCap = 100'000;

/// Product of generators[l.generator]^l.exponent in word order; empty word is
/// the identity of `degree`.
Permutation evaluate_word(std::span<const Permutation> generators, const Word& word,
                          std::size_t degree);

/// A finite permutation group, fully enumerated.
///
/// Elements are stored in lexicographic order of their image arrays, so the
/// identity is always element 0 and two groups with the same element set have
/// identical element vectors. Every element carries a witness word over the
/// generator list: the first word found by breadth-first search, where the
/// alphabet is ordered (g0, g0^-1, g1, g1^-1, ...).
///
/// Immutable after construction.
class PermGroup {
 public:
  /// Closes `generators` under composition. Throws CapExceeded if more than
  /// `cap` elements are reached, std::invalid_argument on an empty list or a
  /// degree mismatch.
  static PermGroup close(std::vector<Permutation> generators,
                         std::size_t cap = kDefaultGroupCap);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Word& witness(std::size_t index) const { return witness_.at(index); }
  const Word& witness(const Permutation& g) const { return witness_.at(index(g)); }

  bool contains(const Permutation& g) const { return index_.contains(g); }
  std::optional<std::size_t> find(const Permutation& g) const;
  /// Throws std::out_of_range if `g` is not an element.
  std::size_t index(const Permutation& g) const;

  /// Throws std::out_of_range on a generator index outside the list.
  Permutation evaluate(const Word& word) const;

  bool same_elements(const PermGroup& other) const { return elements_ == other.elements_; }
  bool is_subgroup_of(const PermGroup& other) const;

 private:
  PermGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<Word> witness_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

inline PermGroup close_group(std::vector<Permutation> generators,
                             std::size_t cap = kDefaultGroupCap) {
  return PermGroup::close(std::move(generators), cap);
}

/// True iff the only element of `group` commuting with every member of
/// `subset` is the identity. Throws std::invalid_argument if `subset` is not
/// contained in the group.
bool centralizer_of_subset_is_trivial(const PermGroup& group,
                                      std::span<const Permutation> subset);

/// True iff g s g^-1 lies in `subset` for every g in the group and s in
/// `subset`. Throws std::invalid_argument if `subset` is not contained in the
/// group.
bool is_conjugation_stable(const PermGroup& group, std::span<const Permutation> subset);

/// ⟨(0 1 ... n-1)⟩ on n points.
PermGroup cyclic_group(std::size_t n, std::size_t cap = kDefaultGroupCap);
/// Symmetries of the n-gon on its vertices: order 2n, requires n >= 3.
PermGroup dihedral_group(std::size_t n, std::size_t cap = kDefaultGroupCap);
/// Full symmetric group on n points, generated by (0 1) and the n-cycle.
PermGroup symmetric_group(std::size_t n, std::size_t cap = kDefaultGroupCap);

/// Elements of the dihedral group of the n-gon that are reflections i ↦ k - i.
std::vector<Permutation> dihedral_reflections(std::size_t n);

/// Elements a, x of a group of order 2n with a^n = x^2 = 1, x a x = a^-1 and
/// x outside ⟨a⟩, so that ⟨a, x⟩ is the whole group.
struct DihedralPresentation {
  std::size_t n;
  Permutation rotation;
  Permutation reflection;
};

/// Searches for a dihedral presentation. Candidate rotations are tried in an
/// order shuffled by `seed`; the answer (found or not) does not depend on it.
std::optional<DihedralPresentation> recognize_dihedral(const PermGroup& group,
                                                       std::uint64_t seed = 0);

}  // namespace qcat

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcat/perm.hpp"

namespace qcat {

/// A permutation group together with a distinguished generating subset Ω.
///
/// Ω is kept sorted (canonical order), which is also the point order of the
/// conjugation quandle built from it. The conjugation-stability and
/// faithfulness flags are computed once on construction.
class GenPair {
 public:
  /// Throws std::invalid_argument if Ω is empty, not contained in the group,
  /// or does not generate it.
  static GenPair make(PermGroup group, std::vector<Permutation> omega);

  const PermGroup& group() const noexcept { return group_; }
  const std::vector<Permutation>& omega() const noexcept { return omega_; }
  /// g Ω g^-1 ⊆ Ω for all g.
  bool conj_stable() const noexcept { return conj_stable_; }
  /// The conjugation action on Ω has trivial kernel.
  bool faithful() const noexcept { return faithful_; }
  /// Position of `w` in omega(); throws std::out_of_range if absent.
  std::size_t omega_index(const Permutation& w) const;
  bool omega_contains(const Permutation& w) const;

  friend bool operator==(const GenPair& a, const GenPair& b) {
    return a.group_.same_elements(b.group_) && a.omega_ == b.omega_;
  }

 private:
  GenPair(PermGroup group, std::vector<Permutation> omega);

  PermGroup group_;
  std::vector<Permutation> omega_;
  bool conj_stable_ = false;
  bool faithful_ = false;
};

inline GenPair make_genpair(PermGroup group, std::vector<Permutation> omega) {
  return GenPair::make(std::move(group), std::move(omega));
}

/// Extends the assignment gens[i] ↦ images[i] to a homomorphism on `domain`
/// by breadth-first propagation along right multiplication by the generators.
/// Returns the image of every element (aligned with domain.elements()), or
/// nullopt on a conflict or if `gens` does not generate the domain.
std::optional<std::vector<Permutation>> extend_to_homomorphism(
    const PermGroup& domain, std::span<const Permutation> gens,
    std::span<const Permutation> images);

/// Greedy subset of `candidates` (in order) that generates the same group.
std::vector<Permutation> generating_subset(std::span<const Permutation> candidates,
                                           std::size_t cap = kDefaultGroupCap);

/// True iff map[i] = image of elements[i] is multiplicative on every pair.
bool is_multiplicative(const PermGroup& domain, std::span<const Permutation> map);

// ---------------------------------------------------------------------------
// Surjective category

/// A homomorphism source.group → target.group restricting to a surjection
/// source.omega → target.omega. `map` is aligned with source.group().elements().
struct SurjMorphism {
  GenPair source;
  GenPair target;
  std::vector<Permutation> map;

  const Permutation& operator()(const Permutation& g) const {
    return map[source.group().index(g)];
  }
  friend bool operator==(const SurjMorphism&, const SurjMorphism&) = default;
};

enum class SurjClause { Shape, Codomain, Homomorphism, OmegaImage, OmegaSurjective, OmegaBijective };

struct SurjViolation {
  SurjClause clause;
  std::string detail;
};

/// Empty iff `m` is a valid morphism; with `require_bijective_on_omega` the
/// restriction to Ω must be a bijection.
std::vector<SurjViolation> check_surj_morphism(const SurjMorphism& m,
                                               bool require_bijective_on_omega = false);

SurjMorphism identity_surj(const GenPair& p);
/// m2 ∘ m1; throws std::invalid_argument unless m1.target == m2.source.
SurjMorphism compose_surj(const SurjMorphism& m2, const SurjMorphism& m1);
/// Invertible iff the underlying group map is bijective.
bool is_surj_isomorphism(const SurjMorphism& m);
/// Inverse of a bijective morphism; throws std::invalid_argument otherwise.
SurjMorphism inverse_surj(const SurjMorphism& m);

/// Every morphism src → tgt, found by assigning values in tgt.omega to a
/// generating subset of src.omega and extending. Sorted by map.
std::vector<SurjMorphism> enumerate_surj_morphisms(const GenPair& src, const GenPair& tgt);

// ---------------------------------------------------------------------------
// Star category

/// ((H, Γ), π): H ≤ target.group generated by Γ ⊆ target.omega, and
/// π : H → source.group with π|Γ a bijection onto source.omega. `pi` is
/// aligned with h.elements().
///
/// Equality is structural: same H element set, same Γ, same π graph.
struct StarMorphism {
  GenPair source;
  GenPair target;
  PermGroup h;
  std::vector<Permutation> gamma;
  std::vector<Permutation> pi;

  const Permutation& operator()(const Permutation& g) const { return pi[h.index(g)]; }

  friend bool operator==(const StarMorphism& a, const StarMorphism& b) {
    return a.source == b.source && a.target == b.target && a.h.same_elements(b.h) &&
           a.gamma == b.gamma && a.pi == b.pi;
  }
};

enum class StarClause { Subgroup, GammaSubset, Generation, Stability, Homomorphism, Bijectivity };

struct StarViolation {
  StarClause clause;
  std::string detail;
};

std::string to_string(StarClause c);
std::string to_string(SurjClause c);

std::vector<StarViolation> check_star_morphism(const StarMorphism& m);

/// ((G, Ω), id).
StarMorphism identity_star(const GenPair& p);

/// m2 ∘ m1 (m1 : P1 → P2, m2 : P2 → P3). Γ' is the set of γ in m2.gamma with
/// m2.pi(γ) in m1.gamma, H' = ⟨Γ'⟩, π' = m1.pi ∘ m2.pi on H'.
/// Throws std::invalid_argument unless m1.target == m2.source.
StarMorphism compose_star(const StarMorphism& m2, const StarMorphism& m1);

/// H = target group, Γ = target Ω, and π a group isomorphism with π(Ω₂) = Ω₁.
bool is_star_isomorphism(const StarMorphism& m);

inline constexpr std::size_t kDefaultSubsetCap = 1'000'000;

/// Every star morphism src → tgt. Γ ranges over |src.omega|-subsets of
/// tgt.omega closed under conjugation by themselves; π ranges over
/// homomorphisms ⟨Γ⟩ → src.group that are bijective from Γ onto src.omega.
/// Sorted by (Γ, π). Throws CapExceeded if the subset search visits more than
/// `subset_cap` nodes.
std::vector<StarMorphism> enumerate_star_morphisms(const GenPair& src, const GenPair& tgt,
                                                   std::size_t subset_cap = kDefaultSubsetCap);

/// Canonical order for sorting enumerations.
bool star_less(const StarMorphism& a, const StarMorphism& b);

}  // namespace qcat

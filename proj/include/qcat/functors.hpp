#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcat/grpgen.hpp"
#include "qcat/homs.hpp"
#include "qcat/quandle.hpp"

namespace qcat {

// Quandle → group side. The object part is shared by both categories.

/// (Inn Q, s(Q)); throws std::invalid_argument if Q is not a faithful quandle.
GenPair inner_pair(const Quandle& q, std::size_t cap = kDefaultGroupCap);
/// s_x ↦ s_{f(x)} for a surjective f between faithful quandles.
SurjMorphism inner_surj_morphism(const QuandleHom& f, std::size_t cap = kDefaultGroupCap);
/// ((Inn(Q2, f(Q1)), s(f(Q1))), s_{f(x)} ↦ s_x) for an injective f.
StarMorphism inner_star_morphism(const QuandleHom& f, std::size_t cap = kDefaultGroupCap);

// Group side → quandle side.

/// Conj(Ω); throws std::invalid_argument unless P is conjugation-stable and
/// faithful.
ConjugationQuandle conjugation_object(const GenPair& p);
/// ω ↦ m(ω), re-indexed through the Conj point order.
QuandleHom conjugation_surj_morphism(const SurjMorphism& m);
/// ω ↦ the unique γ ∈ Γ with π(γ) = ω.
QuandleHom conjugation_star_morphism(const StarMorphism& m);

/// g ↦ (ω ↦ g ω g^-1) as a map G → Inn(Conj Ω). Aligned with
/// p.group().elements(); the target is inner_pair(conjugation_object(p)).
SurjMorphism conjugation_representation(const GenPair& p);

/// GF(Q) → Q, s_x ↦ x. The Conj point carrying the permutation s_x is matched
/// to x by comparing permutations, not indices.
QuandleHom quandle_counit(const Quandle& q);

/// FG(P) → P in the surjective category: the inverse of the conjugation
/// representation.
SurjMorphism group_counit_surj(const GenPair& p);
/// FG(P) → P in the star category: ((G, Ω), conjugation representation).
StarMorphism group_counit_star(const GenPair& p);

struct NamedQuandle {
  std::string name;
  Quandle quandle;
};

struct CheckRecord {
  std::string name;      // e.g. "count", "theta-naturality"
  std::string instance;  // e.g. "R3 -> R9"
  bool passed = true;
  std::string detail;
};

struct EquivalenceReport {
  std::string mode;
  std::vector<std::string> instances;
  std::vector<CheckRecord> checks;
  /// Per ordered pair: quandle-side hom count (equal to the group side when
  /// the count check passes).
  std::vector<std::pair<std::string, std::size_t>> hom_counts;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

struct VerifyOptions {
  std::size_t group_cap = kDefaultGroupCap;
  std::size_t subset_cap = kDefaultSubsetCap;
  /// Composable triples sampled per object quadruple for associativity.
  std::size_t associativity_samples = 8;
  std::uint64_t seed = 0;
  /// Extra group-side objects whose counit must be an isomorphism.
  std::vector<std::pair<std::string, GenPair>> extra_pairs;
};

/// Certifies the equivalence (mode Injective or Surjective) on a finite corpus
/// of faithful quandles. Every ordered pair is checked concurrently; the report
/// is merged in corpus order. Check failures are recorded, not thrown; a
/// non-faithful corpus member throws std::invalid_argument up front.
EquivalenceReport verify_equivalence(const std::vector<NamedQuandle>& corpus, HomMode mode,
                                     const VerifyOptions& options = {});

}  // namespace qcat

#pragma once

#include <string>
#include <vector>

#include "qcat/grpgen.hpp"
#include "qcat/quandle.hpp"

namespace qcat {

/// A map between quandle point sets; a homomorphism when check_hom() is empty.
struct QuandleHom {
  Quandle source;
  Quandle target;
  std::vector<Point> map;

  Point operator()(Point x) const { return map[x]; }
  friend bool operator==(const QuandleHom&, const QuandleHom&) = default;
};

enum class HomMode { All, Injective, Surjective };

std::string to_string(HomMode m);
/// Accepts all|inj|injective|surj|surjective; throws std::invalid_argument.
HomMode parse_hom_mode(const std::string& s);

/// A pair (x, y) with map[s_x(y)] != s_{map[x]}(map[y]).
struct EquivarianceViolation {
  Point x, y;
  friend bool operator==(const EquivarianceViolation&, const EquivarianceViolation&) = default;
};

/// Throws std::invalid_argument if the map has the wrong length or a value
/// out of range.
std::vector<EquivarianceViolation> check_hom(const QuandleHom& f);

bool is_injective(const QuandleHom& f);
bool is_surjective(const QuandleHom& f);

QuandleHom identity_hom(const Quandle& q);
/// f2 ∘ f1; throws std::invalid_argument unless f1.target == f2.source.
QuandleHom compose_hom(const QuandleHom& f2, const QuandleHom& f1);

/// Every homomorphism Q1 → Q2 satisfying `mode`, in lexicographic order of
/// the map arrays.
///
/// Backtracking assigns points 0, 1, 2, ... in order. Each triple
/// (x, y, s_x(y)) is checked as soon as its last point receives a value;
/// injectivity is enforced on the fly and a partial map is dropped when the
/// remaining points cannot cover the targets still missing.
std::vector<QuandleHom> enumerate_homs(const Quandle& q1, const Quandle& q2, HomMode mode);

/// The group homomorphism Inn(Q1) → Inn(Q2), s_x ↦ s_{f(x)}, obtained by
/// rewriting each element's witness word. Both ends are the inn() pairs.
/// Throws std::invalid_argument unless f is a surjective homomorphism between
/// faithful quandles, and std::logic_error if the rewritten map fails the
/// exhaustive multiplicativity check.
SurjMorphism induced_surjective(const QuandleHom& f, std::size_t cap = kDefaultGroupCap);

/// ((Inn(Q2, f(Q1)), s(f(Q1))), π) with π : s_{f(x)} ↦ s_x, computed by
/// witness-word rewriting. Throws std::invalid_argument unless f is an
/// injective homomorphism between faithful quandles, and std::logic_error if
/// π fails verification.
StarMorphism induced_injective(const QuandleHom& f, std::size_t cap = kDefaultGroupCap);

}  // namespace qcat

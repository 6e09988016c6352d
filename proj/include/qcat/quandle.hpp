#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcat/grpgen.hpp"
#include "qcat/perm.hpp"

namespace qcat {

/// A finite binary structure on {0, ..., n-1} given by its table of
/// symmetries: table(x, y) = s_x(y).
///
/// Construction only checks shape and range; use check_axioms() to decide
/// whether the table is a quandle. Labels are optional display names.
class Quandle {
 public:
  /// Throws std::invalid_argument on n == 0, a table of the wrong size, an
  /// out-of-range entry, or a label list of the wrong length.
  Quandle(std::size_t n, std::vector<Point> table, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  Point operator()(Point x, Point y) const { return table_[x * n_ + y]; }
  std::span<const Point> row(Point x) const { return {table_.data() + x * n_, n_}; }
  const std::vector<Point>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// s_x as a permutation; throws std::invalid_argument if row x is not one.
  Permutation symmetry(Point x) const;

  friend bool operator==(const Quandle&, const Quandle&) = default;

 private:
  std::size_t n_;
  std::vector<Point> table_;
  std::vector<std::string> labels_;
};

enum class Axiom { Idempotence, Bijectivity, SelfDistributivity };

std::string to_string(Axiom a);

/// One failed axiom instance. Idempotence uses x; Bijectivity uses x (the row)
/// and y (a repeated value); SelfDistributivity uses x, y, z.
struct AxiomViolation {
  Axiom axiom;
  Point x = 0, y = 0, z = 0;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

/// Every violated axiom instance; empty iff the table is a quandle.
std::vector<AxiomViolation> check_axioms(const Quandle& q);

/// x ↦ s_x is injective.
bool is_faithful(const Quandle& q);

Quandle trivial_quandle(std::size_t n);

/// s_x(y) = 2x - y mod n.
Quandle dihedral_quandle(std::size_t n);

/// A finite abelian group Z/d_0 ⊕ ... ⊕ Z/d_{r-1} with an endomorphism given
/// by an integer matrix: φ(b)_i = Σ_j matrix[i][j] b_j mod d_i.
struct AbelianAutomorphism {
  std::vector<std::uint32_t> orders;
  std::vector<std::vector<std::int64_t>> matrix;
};

/// Group elements in mixed-radix order, last factor fastest.
std::vector<std::vector<std::uint32_t>> abelian_elements(std::span<const std::uint32_t> orders);

/// φ evaluated on every element, by index. Throws std::invalid_argument if the
/// matrix is malformed, or φ is not additive or not bijective.
std::vector<Point> automorphism_table(const AbelianAutomorphism& phi);

/// Multiplicative order of φ.
std::size_t automorphism_order(const AbelianAutomorphism& phi);

/// φ(a) = a only for a = 0.
bool is_fixed_point_free(const AbelianAutomorphism& phi);

/// s_a(b) = φ(b) + a - φ(a). Throws std::invalid_argument if φ is not an
/// automorphism.
Quandle alexander_quandle(const AbelianAutomorphism& phi);

/// A conjugation quandle with the group element carried by each point.
struct ConjugationQuandle {
  Quandle quandle;
  std::vector<Permutation> points;  // sorted; points[i] is point i
};

/// Conj(Ω): points are Ω in sorted order, s_x(y) is the index of ω_x ω_y ω_x^-1.
///
/// Requires Ω to be stable under conjugation by `group`. Passing ⟨Ω⟩ as the
/// group gives the weaker requirement used for star-morphism sources; passing
/// an ambient group whose conjugacy classes Ω is a union of gives Conj_G(Ω).
/// Throws std::invalid_argument if Ω is empty or not stable.
ConjugationQuandle conjugation_quandle(const PermGroup& group,
                                       std::span<const Permutation> omega);

/// A subset of a quandle's points closed under s_x and s_x^-1 for x inside.
struct SubquandleWitness {
  std::vector<Point> points;  // sorted
};

/// Smallest subquandle containing `seed`. Throws std::invalid_argument on an
/// empty seed or out-of-range point.
SubquandleWitness subquandle_closure(const Quandle& q, std::span<const Point> seed);

/// The subquandle as a quandle in its own right, re-indexed in sorted order.
Quandle restrict_quandle(const Quandle& q, const SubquandleWitness& w);

/// (Inn Q, s(Q)). The group is closed from [s_0, ..., s_{n-1}] in point order,
/// so generator i of the group is the symmetry of point i; witness words are
/// therefore words over points. Equal symmetries collapse to one Ω member.
GenPair inn(const Quandle& q, std::size_t cap = kDefaultGroupCap);

/// (Inn(Q, W), s(W)), acting on all of Q. Generator i is the symmetry of
/// w.points[i].
GenPair inn_relative(const Quandle& q, const SubquandleWitness& w,
                     std::size_t cap = kDefaultGroupCap);

}  // namespace qcat

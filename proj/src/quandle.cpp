#include "qcat/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qcat {

Quandle::Quandle(std::size_t n, std::vector<Point> table, std::vector<std::string> labels)
    : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
  if (n_ == 0) throw std::invalid_argument("quandle: order must be positive");
  if (table_.size() != n_ * n_) {
    throw std::invalid_argument("quandle: table has " + std::to_string(table_.size()) +
                                " entries, expected " + std::to_string(n_ * n_));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= n_) {
      throw std::invalid_argument("quandle: entry (" + std::to_string(i / n_) + ", " +
                                  std::to_string(i % n_) + ") = " +
                                  std::to_string(table_[i]) + " is out of range");
    }
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw std::invalid_argument("quandle: label count does not match order");
  }
}

Permutation Quandle::symmetry(Point x) const {
  auto r = row(x);
  return Permutation(std::vector<Point>(r.begin(), r.end()));
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Idempotence: return "Q1";
    case Axiom::Bijectivity: return "Q2";
    case Axiom::SelfDistributivity: return "Q3";
  }
  return "?";
}

std::vector<AxiomViolation> check_axioms(const Quandle& q) {
  std::vector<AxiomViolation> out;
  const auto n = static_cast<Point>(q.size());
  for (Point x = 0; x < n; ++x) {
    if (q(x, x) != x) out.push_back({Axiom::Idempotence, x});
  }
  for (Point x = 0; x < n; ++x) {
    std::vector<bool> seen(n, false);
    for (Point y = 0; y < n; ++y) {
      Point v = q(x, y);
      if (seen[v]) out.push_back({Axiom::Bijectivity, x, v});
      seen[v] = true;
    }
  }
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      for (Point z = 0; z < n; ++z) {
        if (q(x, q(y, z)) != q(q(x, y), q(x, z))) {
          out.push_back({Axiom::SelfDistributivity, x, y, z});
        }
      }
    }
  }
  return out;
}

bool is_faithful(const Quandle& q) {
  std::set<std::vector<Point>> rows;
  for (Point x = 0; x < q.size(); ++x) {
    auto r = q.row(x);
    if (!rows.emplace(r.begin(), r.end()).second) return false;
  }
  return true;
}

Quandle trivial_quandle(std::size_t n) {
  if (n == 0) throw std::invalid_argument("trivial_quandle: n must be positive");
  std::vector<Point> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<Point>(y);
  }
  return Quandle(n, std::move(table));
}

Quandle dihedral_quandle(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dihedral_quandle: n must be positive");
  std::vector<Point> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<Point>((2 * x + n - y) % n);
  }
  return Quandle(n, std::move(table));
}

std::vector<std::vector<std::uint32_t>> abelian_elements(std::span<const std::uint32_t> orders) {
  std::vector<std::vector<std::uint32_t>> out{{}};
  for (std::uint32_t d : orders) {
    if (d == 0) throw std::invalid_argument("abelian group: cyclic factor of order 0");
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& prefix : out) {
      for (std::uint32_t v = 0; v < d; ++v) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

std::size_t element_index(std::span<const std::uint32_t> orders,
                          std::span<const std::uint32_t> coords) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + coords[i];
  return idx;
}

std::vector<std::uint32_t> add(std::span<const std::uint32_t> orders,
                               std::span<const std::uint32_t> a,
                               std::span<const std::uint32_t> b) {
  std::vector<std::uint32_t> r(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) r[i] = (a[i] + b[i]) % orders[i];
  return r;
}

}  // namespace

std::vector<Point> automorphism_table(const AbelianAutomorphism& phi) {
  const auto& orders = phi.orders;
  const std::size_t r = orders.size();
  if (phi.matrix.size() != r ||
      std::any_of(phi.matrix.begin(), phi.matrix.end(),
                  [r](const auto& row) { return row.size() != r; })) {
    throw std::invalid_argument("automorphism: matrix must be " + std::to_string(r) + "x" +
                                std::to_string(r));
  }
  const auto elems = abelian_elements(orders);
  std::vector<std::vector<std::uint32_t>> images;
  images.reserve(elems.size());
  for (const auto& b : elems) {
    std::vector<std::uint32_t> img(r);
    for (std::size_t i = 0; i < r; ++i) {
      const auto d = static_cast<std::int64_t>(orders[i]);
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc = (acc + phi.matrix[i][j] % d * b[j]) % d;
      img[i] = static_cast<std::uint32_t>((acc + d) % d);
    }
    images.push_back(std::move(img));
  }
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      const auto sum = element_index(orders, add(orders, elems[a], elems[b]));
      if (images[sum] != add(orders, images[a], images[b])) {
        throw std::invalid_argument("automorphism: map is not additive");
      }
    }
  }
  std::vector<Point> table(elems.size());
  std::vector<bool> hit(elems.size(), false);
  for (std::size_t a = 0; a < elems.size(); ++a) {
    table[a] = static_cast<Point>(element_index(orders, images[a]));
    if (hit[table[a]]) throw std::invalid_argument("automorphism: map is not bijective");
    hit[table[a]] = true;
  }
  return table;
}

std::size_t automorphism_order(const AbelianAutomorphism& phi) {
  return Permutation(automorphism_table(phi)).order();
}

bool is_fixed_point_free(const AbelianAutomorphism& phi) {
  const auto table = automorphism_table(phi);
  for (std::size_t a = 1; a < table.size(); ++a) {
    if (table[a] == a) return false;
  }
  return true;
}

Quandle alexander_quandle(const AbelianAutomorphism& phi) {
  const auto table = automorphism_table(phi);
  const auto elems = abelian_elements(phi.orders);
  const auto& orders = phi.orders;
  const std::size_t n = elems.size();
  std::vector<Point> out(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    // a - φ(a)
    std::vector<std::uint32_t> shift(orders.size());
    const auto& pa = elems[table[a]];
    for (std::size_t i = 0; i < orders.size(); ++i) {
      shift[i] = (elems[a][i] + orders[i] - pa[i]) % orders[i];
    }
    for (std::size_t b = 0; b < n; ++b) {
      out[a * n + b] =
          static_cast<Point>(element_index(orders, add(orders, elems[table[b]], shift)));
    }
  }
  return Quandle(n, std::move(out));
}

ConjugationQuandle conjugation_quandle(const PermGroup& group,
                                       std::span<const Permutation> omega) {
  auto points = normalize_set(std::vector<Permutation>(omega.begin(), omega.end()));
  if (points.empty()) throw std::invalid_argument("conjugation_quandle: omega is empty");
  if (!is_conjugation_stable(group, points)) {
    throw std::invalid_argument("conjugation_quandle: omega is not conjugation-stable");
  }
  const std::size_t n = points.size();
  std::vector<Point> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back(to_string(points[x]));
    for (std::size_t y = 0; y < n; ++y) {
      Permutation c = conjugate(points[x], points[y]);
      auto it = std::lower_bound(points.begin(), points.end(), c);
      table[x * n + y] = static_cast<Point>(it - points.begin());
    }
  }
  return ConjugationQuandle{Quandle(n, std::move(table), std::move(labels)), std::move(points)};
}

SubquandleWitness subquandle_closure(const Quandle& q, std::span<const Point> seed) {
  if (seed.empty()) throw std::invalid_argument("subquandle_closure: empty seed");
  const std::size_t n = q.size();
  std::vector<bool> in(n, false);
  std::vector<Point> members;
  for (Point p : seed) {
    if (p >= n) throw std::invalid_argument("subquandle_closure: point out of range");
    if (!in[p]) {
      in[p] = true;
      members.push_back(p);
    }
  }
  std::vector<Permutation> inverses;
  for (Point x = 0; x < n; ++x) inverses.push_back(q.symmetry(x).inverse());
  auto add = [&](Point v) {
    if (!in[v]) {
      in[v] = true;
      members.push_back(v);
    }
  };
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      const Point x = members[a], y = members[b];
      add(q(x, y));
      add(q(y, x));
      add(inverses[x](y));
      add(inverses[y](x));
    }
  }
  std::sort(members.begin(), members.end());
  return SubquandleWitness{std::move(members)};
}

Quandle restrict_quandle(const Quandle& q, const SubquandleWitness& w) {
  const std::size_t m = w.points.size();
  std::vector<Point> table(m * m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(q.labels().empty() ? std::to_string(w.points[i])
                                        : q.labels()[w.points[i]]);
    for (std::size_t j = 0; j < m; ++j) {
      const Point v = q(w.points[i], w.points[j]);
      auto it = std::lower_bound(w.points.begin(), w.points.end(), v);
      if (it == w.points.end() || *it != v) {
        throw std::invalid_argument("restrict_quandle: point set is not closed");
      }
      table[i * m + j] = static_cast<Point>(it - w.points.begin());
    }
  }
  return Quandle(m, std::move(table), std::move(labels));
}

GenPair inn(const Quandle& q, std::size_t cap) {
  std::vector<Permutation> gens;
  for (Point x = 0; x < q.size(); ++x) gens.push_back(q.symmetry(x));
  PermGroup g = PermGroup::close(gens, cap);
  return GenPair::make(std::move(g), std::move(gens));
}

GenPair inn_relative(const Quandle& q, const SubquandleWitness& w, std::size_t cap) {
  std::vector<Permutation> gens;
  for (Point x : w.points) gens.push_back(q.symmetry(x));
  PermGroup g = PermGroup::close(gens, cap);
  return GenPair::make(std::move(g), std::move(gens));
}

}  // namespace qcat

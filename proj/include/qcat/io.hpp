#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcat/functors.hpp"
#include "qcat/grpgen.hpp"
#include "qcat/homs.hpp"
#include "qcat/perm.hpp"
#include "qcat/quandle.hpp"

namespace qcat {

/// Malformed text input. Carries a 1-based line number when one applies.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline constexpr int kJsonSchema = 1;

// Text formats ---------------------------------------------------------------

/// `[i0 i1 ... i(n-1)]`
Permutation parse_permutation(std::string_view text);

/// `quandle <n>` followed by n rows of n integers, each optionally followed
/// by `# label`. Labels are written only when the quandle has them.
std::string format_quandle(const Quandle& q);
Quandle parse_quandle(std::string_view text);

/// `cyclic n`, `dihedral n` (order 2n), `symmetric n`. Tokens after the
/// family are not consumed; `used` receives the number of tokens read.
PermGroup group_from_family(const std::vector<std::string>& tokens, std::size_t& used,
                            std::size_t cap = kDefaultGroupCap);

/// all | nonidentity | involutions | reflections | transpositions.
/// `reflections` selects the members i ↦ k - i of the group.
std::vector<Permutation> omega_from_keyword(const PermGroup& group, const std::string& keyword);

/// Group block then omega line:
///   group perms <degree>         group dihedral 9
///   [..generator..]              omega reflections
///   omega <indices>
/// Omega indices refer to the sorted element order. format_genpair always
/// writes the explicit `perms` form with indices.
std::string format_genpair(const GenPair& p);
GenPair parse_genpair(std::string_view text, std::size_t cap = kDefaultGroupCap);

// Specs ----------------------------------------------------------------------

/// `dihedral N`, `trivial N`, `alexander z5 x2`, `alexander z3xz3 m:0,-1;1,1`,
/// `conj <family...> <omega keyword>`.
Quandle quandle_from_spec(const std::vector<std::string>& tokens,
                          std::size_t cap = kDefaultGroupCap);
/// `<family...> <omega keyword>`, or `inn <quandle spec>`.
GenPair genpair_from_spec(const std::vector<std::string>& tokens,
                          std::size_t cap = kDefaultGroupCap);

/// Abelian group token `z5` / `z3xz3` and automorphism token `x2` (scalar) or
/// `m:a,b;c,d` (row-major matrix).
AbelianAutomorphism parse_alexander(const std::string& group, const std::string& automorphism);

/// Splits on whitespace.
std::vector<std::string> tokenize(std::string_view text);

/// The default verification corpus: R3, R5, R7, R9, Conj(S3), Alex(Z5, x2).
std::vector<NamedQuandle> default_corpus();

/// `default`, or quandle specs / file paths separated by `;`. `default` may
/// appear as one of the items.
std::vector<NamedQuandle> parse_corpus(std::string_view spec, std::size_t cap = kDefaultGroupCap);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);

// JSON -----------------------------------------------------------------------

nlohmann::json homs_to_json(const Quandle& source, const Quandle& target, HomMode mode,
                            const std::vector<QuandleHom>& homs);
/// H, Gamma and pi by element index: H and Gamma into the target group's
/// sorted elements, pi as [target index, source index] pairs.
nlohmann::json star_morphism_to_json(const StarMorphism& m);
nlohmann::json star_morphisms_to_json(const std::vector<StarMorphism>& ms);
nlohmann::json report_to_json(const EquivalenceReport& r);

}  // namespace qcat

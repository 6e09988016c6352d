#include "qcat/io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qcat {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::uint64_t parse_uint(std::string_view tok, const char* what, std::size_t line = 0) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty()) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(tok) + "'", line);
  }
  return v;
}

std::int64_t parse_int(std::string_view tok, const char* what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty()) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return v;
}

std::size_t need_size(const std::vector<std::string>& tokens, std::size_t i, const char* what) {
  if (i >= tokens.size()) throw ParseError(std::string("missing ") + what);
  return static_cast<std::size_t>(parse_uint(tokens[i], what));
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("permutation must look like [i0 i1 ...], got '" + std::string(text) + "'");
  }
  std::vector<Point> images;
  for (const auto& tok : tokenize(text.substr(1, text.size() - 2))) {
    images.push_back(static_cast<Point>(parse_uint(tok, "image point")));
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_quandle(const Quandle& q) {
  std::ostringstream out;
  out << "quandle " << q.size() << '\n';
  for (Point x = 0; x < q.size(); ++x) {
    auto row = q.row(x);
    for (std::size_t y = 0; y < row.size(); ++y) out << (y ? " " : "") << row[y];
    if (!q.labels().empty()) out << " # " << q.labels()[x];
    out << '\n';
  }
  return out.str();
}

Quandle parse_quandle(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty quandle file");
  const auto head = tokenize(lines[0]);
  if (head.size() != 2 || head[0] != "quandle") throw ParseError("expected 'quandle <n>'", 1);
  const auto n = static_cast<std::size_t>(parse_uint(head[1], "order", 1));
  if (n == 0) throw ParseError("order must be positive", 1);
  if (lines.size() < n + 1) throw ParseError("expected " + std::to_string(n) + " rows");
  std::vector<Point> table;
  std::vector<std::string> labels;
  std::size_t labelled = 0;
  for (std::size_t x = 0; x < n; ++x) {
    std::string_view line = lines[x + 1];
    std::string label;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      label = std::string(trim(line.substr(hash + 1)));
      line = line.substr(0, hash);
      ++labelled;
    }
    labels.push_back(label);
    const auto toks = tokenize(line);
    if (toks.size() != n) {
      throw ParseError("row has " + std::to_string(toks.size()) + " entries, expected " +
                           std::to_string(n),
                       x + 2);
    }
    for (const auto& t : toks) table.push_back(static_cast<Point>(parse_uint(t, "entry", x + 2)));
  }
  for (std::size_t i = n + 1; i < lines.size(); ++i) {
    if (!trim(lines[i]).empty()) throw ParseError("unexpected trailing content", i + 1);
  }
  if (labelled != 0 && labelled != n) throw ParseError("either every row or no row has a label");
  if (labelled == 0) labels.clear();
  try {
    return Quandle(n, std::move(table), std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

PermGroup group_from_family(const std::vector<std::string>& tokens, std::size_t& used,
                            std::size_t cap) {
  if (tokens.empty()) throw ParseError("missing group family");
  const std::string& fam = tokens[0];
  used = 2;
  if (fam == "cyclic") {
    const auto n = need_size(tokens, 1, "cyclic order");
    if (n == 0) throw ParseError("cyclic order must be positive");
    return cyclic_group(n, cap);
  }
  if (fam == "dihedral") return dihedral_group(need_size(tokens, 1, "polygon size"), cap);
  if (fam == "symmetric") return symmetric_group(need_size(tokens, 1, "degree"), cap);
  throw ParseError("unknown group family '" + fam + "' (expected cyclic, dihedral, symmetric)");
}

std::vector<Permutation> omega_from_keyword(const PermGroup& group, const std::string& keyword) {
  std::vector<Permutation> out;
  const auto& el = group.elements();
  if (keyword == "all") {
    out = el;
  } else if (keyword == "nonidentity") {
    std::copy_if(el.begin(), el.end(), std::back_inserter(out),
                 [](const Permutation& g) { return !g.is_identity(); });
  } else if (keyword == "involutions") {
    std::copy_if(el.begin(), el.end(), std::back_inserter(out),
                 [](const Permutation& g) { return g.order() == 2; });
  } else if (keyword == "reflections") {
    for (const auto& r : dihedral_reflections(group.degree())) {
      if (group.contains(r)) out.push_back(r);
    }
  } else if (keyword == "transpositions") {
    std::copy_if(el.begin(), el.end(), std::back_inserter(out), [](const Permutation& g) {
      std::size_t moved = 0;
      for (std::size_t i = 0; i < g.degree(); ++i) moved += g(static_cast<Point>(i)) != i;
      return moved == 2;
    });
  } else {
    throw ParseError("unknown omega keyword '" + keyword +
                     "' (expected all, nonidentity, involutions, reflections, transpositions)");
  }
  if (out.empty()) throw ParseError("omega keyword '" + keyword + "' selects no elements");
  return out;
}

std::string format_genpair(const GenPair& p) {
  std::ostringstream out;
  out << "group perms " << p.group().degree() << '\n';
  for (const auto& g : p.group().generators()) out << to_string(g) << '\n';
  out << "omega";
  for (const auto& w : p.omega()) out << ' ' << p.group().index(w);
  out << '\n';
  return out.str();
}

GenPair parse_genpair(std::string_view text, std::size_t cap) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto next_nonempty = [&]() {
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
  };
  next_nonempty();
  if (i >= lines.size()) throw ParseError("empty genpair file");
  auto head = tokenize(lines[i]);
  if (head.empty() || head[0] != "group") throw ParseError("expected 'group ...'", i + 1);
  head.erase(head.begin());
  const std::size_t head_line = i + 1;
  ++i;

  std::optional<PermGroup> group;
  try {
    if (!head.empty() && head[0] == "perms") {
      if (head.size() != 2) throw ParseError("expected 'group perms <degree>'", head_line);
      const auto degree = static_cast<std::size_t>(parse_uint(head[1], "degree", head_line));
      std::vector<Permutation> gens;
      for (; i < lines.size(); ++i) {
        auto t = trim(lines[i]);
        if (t.empty()) continue;
        if (t.front() != '[') break;
        try {
          gens.push_back(parse_permutation(t));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), i + 1);
        }
        if (gens.back().degree() != degree) throw ParseError("generator degree mismatch", i + 1);
      }
      if (gens.empty()) gens.push_back(Permutation::identity(degree));
      group = PermGroup::close(std::move(gens), cap);
    } else {
      std::size_t used = 0;
      group = group_from_family(head, used, cap);
      if (used != head.size()) throw ParseError("trailing tokens after group family", head_line);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), head_line);
  }

  next_nonempty();
  if (i >= lines.size()) throw ParseError("missing 'omega' line");
  const auto om = tokenize(lines[i]);
  if (om.empty() || om[0] != "omega") throw ParseError("expected 'omega ...'", i + 1);
  std::vector<Permutation> omega;
  if (om.size() == 2 && !om[1].empty() && !std::isdigit(static_cast<unsigned char>(om[1][0]))) {
    omega = omega_from_keyword(*group, om[1]);
  } else {
    for (std::size_t k = 1; k < om.size(); ++k) {
      const auto idx = parse_uint(om[k], "element index", i + 1);
      if (idx >= group->order()) throw ParseError("element index out of range", i + 1);
      omega.push_back(group->elements()[idx]);
    }
  }
  const std::size_t omega_line = i + 1;
  ++i;
  next_nonempty();
  if (i < lines.size()) throw ParseError("unexpected trailing content", i + 1);
  try {
    return GenPair::make(std::move(*group), std::move(omega));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), omega_line);
  }
}

AbelianAutomorphism parse_alexander(const std::string& group, const std::string& automorphism) {
  AbelianAutomorphism phi;
  std::string_view g = group;
  while (!g.empty()) {
    if (g.front() != 'z' && g.front() != 'Z') {
      throw ParseError("abelian group must look like z5 or z3xz3, got '" + group + "'");
    }
    g.remove_prefix(1);
    auto x = g.find('x');
    phi.orders.push_back(static_cast<std::uint32_t>(parse_uint(g.substr(0, x), "cyclic order")));
    if (phi.orders.back() == 0) throw ParseError("cyclic order must be positive");
    g = x == std::string_view::npos ? std::string_view{} : g.substr(x + 1);
  }
  if (phi.orders.empty()) throw ParseError("empty abelian group");
  const std::size_t r = phi.orders.size();
  if (automorphism.size() > 1 && automorphism[0] == 'x') {
    const auto c = parse_int(std::string_view(automorphism).substr(1), "scalar");
    phi.matrix.assign(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t k = 0; k < r; ++k) phi.matrix[k][k] = c;
  } else if (automorphism.rfind("m:", 0) == 0) {
    std::string_view body = std::string_view(automorphism).substr(2);
    while (true) {
      auto semi = body.find(';');
      std::vector<std::int64_t> row;
      std::string_view rs = body.substr(0, semi);
      while (true) {
        auto comma = rs.find(',');
        row.push_back(parse_int(rs.substr(0, comma), "matrix entry"));
        if (comma == std::string_view::npos) break;
        rs = rs.substr(comma + 1);
      }
      phi.matrix.push_back(std::move(row));
      if (semi == std::string_view::npos) break;
      body = body.substr(semi + 1);
    }
  } else {
    throw ParseError("automorphism must look like x2 or m:0,-1;1,1, got '" + automorphism + "'");
  }
  return phi;
}

Quandle quandle_from_spec(const std::vector<std::string>& tokens, std::size_t cap) {
  if (tokens.empty()) throw ParseError("empty quandle spec");
  const std::string& kind = tokens[0];
  auto expect_count = [&](std::size_t n) {
    if (tokens.size() != n) throw ParseError("spec '" + kind + "' takes " + std::to_string(n - 1) + " argument(s)");
  };
  try {
    if (kind == "dihedral") {
      expect_count(2);
      return dihedral_quandle(need_size(tokens, 1, "order"));
    }
    if (kind == "trivial") {
      expect_count(2);
      return trivial_quandle(need_size(tokens, 1, "order"));
    }
    if (kind == "alexander") {
      expect_count(3);
      return alexander_quandle(parse_alexander(tokens[1], tokens[2]));
    }
    if (kind == "conj") {
      std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
      std::size_t used = 0;
      PermGroup g = group_from_family(rest, used, cap);
      if (rest.size() != used + 1) throw ParseError("expected 'conj <family> <n> <omega keyword>'");
      return conjugation_quandle(g, omega_from_keyword(g, rest[used])).quandle;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown quandle spec '" + kind + "' (expected dihedral, trivial, alexander, conj)");
}

GenPair genpair_from_spec(const std::vector<std::string>& tokens, std::size_t cap) {
  if (!tokens.empty() && tokens[0] == "inn") {
    std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
    return inn(quandle_from_spec(rest, cap), cap);
  }
  std::size_t used = 0;
  PermGroup g = group_from_family(tokens, used, cap);
  if (tokens.size() != used + 1) throw ParseError("expected '<family> <n> <omega keyword>'");
  auto omega = omega_from_keyword(g, tokens[used]);
  try {
    return GenPair::make(std::move(g), std::move(omega));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::vector<NamedQuandle> default_corpus() {
  std::vector<NamedQuandle> c;
  for (std::size_t n : {3, 5, 7, 9}) c.push_back({"R" + std::to_string(n), dihedral_quandle(n)});
  c.push_back({"Conj(S3)", conjugation_quandle(symmetric_group(3), symmetric_group(3).elements()).quandle});
  c.push_back({"Alex(Z5,x2)", alexander_quandle({{5}, {{2}}})});
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<NamedQuandle> parse_corpus(std::string_view spec, std::size_t cap) {
  std::vector<NamedQuandle> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto semi = spec.find(';', start);
    std::string item(trim(spec.substr(start, semi == std::string_view::npos ? spec.npos : semi - start)));
    if (!item.empty()) {
      if (item == "default") {
        for (auto& q : default_corpus()) out.push_back(std::move(q));
      } else if (std::filesystem::is_regular_file(item)) {
        out.push_back({item, parse_quandle(read_file(item))});
      } else {
        out.push_back({item, quandle_from_spec(tokenize(item), cap)});
      }
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (out.empty()) throw ParseError("empty corpus");
  return out;
}

nlohmann::json homs_to_json(const Quandle& source, const Quandle& target, HomMode mode,
                            const std::vector<QuandleHom>& homs) {
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& f : homs) maps.push_back(f.map);
  return {{"schema", kJsonSchema},   {"source_n", source.size()}, {"target_n", target.size()},
          {"mode", to_string(mode)}, {"homs", std::move(maps)},  {"count", homs.size()}};
}

nlohmann::json star_morphism_to_json(const StarMorphism& m) {
  const PermGroup& g2 = m.target.group();
  const PermGroup& g1 = m.source.group();
  nlohmann::json h = nlohmann::json::array(), gamma = nlohmann::json::array(),
                 pi = nlohmann::json::array();
  for (const auto& e : m.h.elements()) h.push_back(g2.index(e));
  for (const auto& e : m.gamma) gamma.push_back(g2.index(e));
  for (std::size_t k = 0; k < m.h.order(); ++k) {
    pi.push_back({g2.index(m.h.elements()[k]), g1.index(m.pi[k])});
  }
  return {{"H", std::move(h)}, {"Gamma", std::move(gamma)}, {"pi", std::move(pi)}};
}

nlohmann::json star_morphisms_to_json(const std::vector<StarMorphism>& ms) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& m : ms) list.push_back(star_morphism_to_json(m));
  nlohmann::json j{{"schema", kJsonSchema}, {"count", ms.size()}, {"morphisms", std::move(list)}};
  if (!ms.empty()) {
    j["source_order"] = ms.front().source.group().order();
    j["target_order"] = ms.front().target.group().order();
  }
  return j;
}

nlohmann::json report_to_json(const EquivalenceReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"name", c.name}, {"instance", c.instance}, {"passed", c.passed}, {"detail", c.detail}});
  }
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [pair, n] : r.hom_counts) counts.push_back({{"pair", pair}, {"count", n}});
  return {{"schema", kJsonSchema},
          {"mode", r.mode},
          {"instances", r.instances},
          {"failures", r.failures()},
          {"passed", r.passed()},
          {"hom_counts", std::move(counts)},
          {"checks", std::move(checks)}};
}

}  // namespace qcat

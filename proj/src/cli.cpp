#include "qcat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>

#include "qcat/io.hpp"

namespace qcat {

namespace {

/// Input error raised by command handlers; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class InputKind { Quandle, Pair };

struct Loaded {
  std::optional<Quandle> quandle;
  std::optional<GenPair> pair;
};

/// A single argument that names a file, or a whitespace-separated spec.
Loaded load(const std::vector<std::string>& words, std::size_t cap,
            std::optional<InputKind> want = std::nullopt) {
  if (words.empty()) throw InputError("missing input");
  Loaded r;
  std::vector<std::string> tokens;
  for (const auto& w : words) {
    for (auto& t : tokenize(w)) tokens.push_back(std::move(t));
  }
  if (words.size() == 1 && std::filesystem::is_regular_file(words[0])) {
    const std::string text = read_file(words[0]);
    const auto first = tokenize(text.substr(0, text.find('\n')));
    if (!first.empty() && first[0] == "quandle") {
      r.quandle = parse_quandle(text);
    } else if (!first.empty() && first[0] == "group") {
      r.pair = parse_genpair(text, cap);
    } else {
      throw InputError(words[0] + ": neither a quandle nor a genpair file");
    }
  } else if (tokens.empty()) {
    throw InputError("missing input");
  } else if (tokens[0] == "pair" || want == InputKind::Pair) {
    if (tokens[0] == "pair") tokens.erase(tokens.begin());
    r.pair = genpair_from_spec(tokens, cap);
  } else {
    r.quandle = quandle_from_spec(tokens, cap);
  }
  if (want == InputKind::Quandle && !r.quandle) throw InputError("expected a quandle");
  if (want == InputKind::Pair && !r.pair) throw InputError("expected a group with generators");
  return r;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void describe_quandle(const Quandle& q, std::ostream& out) {
  const auto v = check_axioms(q);
  out << "order: " << q.size() << '\n';
  out << "axioms: " << (v.empty() ? "ok" : "violated") << '\n';
  if (!v.empty()) {
    const auto& f = v.front();
    out << "first violation: " << to_string(f.axiom) << " at (" << f.x << ", " << f.y << ", "
        << f.z << "), " << v.size() << " total\n";
  }
  out << "faithful: " << yes_no(is_faithful(q)) << '\n';
}

void describe_pair(const GenPair& p, std::ostream& out) {
  out << "group order: " << p.group().order() << '\n';
  out << "omega size: " << p.omega().size() << '\n';
  out << "conjugation-stable: " << yes_no(p.conj_stable()) << '\n';
  out << "faithful: " << yes_no(p.faithful()) << '\n';
}

std::string map_text(std::span<const Point> m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " " : "") + std::to_string(m[i]);
  return s + "]";
}

struct Common {
  std::size_t cap = kDefaultGroupCap;
  std::uint64_t seed = 0;
  bool json = false;
  std::string out_path;
  std::string mode = "all";
};

void add_common(CLI::App* sub, Common& c, bool with_mode) {
  sub->add_option("--cap", c.cap, "group element cap")->capture_default_str();
  sub->add_option("--seed", c.seed, "seed for randomized search order")->capture_default_str();
  sub->add_flag("--json", c.json, "emit JSON");
  sub->add_option("--out", c.out_path, "write the result to PATH");
  if (with_mode) {
    sub->add_option("--mode", c.mode, "hom mode")
        ->check(CLI::IsMember({"all", "inj", "surj"}))
        ->capture_default_str();
  }
}

int cmd_make(const std::vector<std::string>& spec, const Common& c, std::ostream& out,
             std::ostream& err) {
  Loaded l = load(spec, c.cap);
  // Without --out the file text goes to stdout and the summary to stderr.
  std::ostream& summary = c.out_path.empty() ? err : out;
  if (l.quandle) {
    emit(format_quandle(*l.quandle), c.out_path, out);
    describe_quandle(*l.quandle, summary);
  } else {
    emit(format_genpair(*l.pair), c.out_path, out);
    describe_pair(*l.pair, summary);
  }
  return kExitOk;
}

int cmd_check(const std::vector<std::string>& input, const Common& c, std::ostream& out) {
  Loaded l = load(input, c.cap);
  if (l.quandle) {
    describe_quandle(*l.quandle, out);
    return check_axioms(*l.quandle).empty() ? kExitOk : kExitVerificationFailed;
  }
  describe_pair(*l.pair, out);
  return kExitOk;
}

int cmd_inn(const std::vector<std::string>& input, const Common& c, std::ostream& out) {
  Loaded l = load(input, c.cap, InputKind::Quandle);
  const Quandle& q = *l.quandle;
  if (!check_axioms(q).empty()) throw InputError("input is not a quandle");
  GenPair p = inn(q, c.cap);
  auto d = recognize_dihedral(p.group(), c.seed);
  if (c.json) {
    nlohmann::json j{{"schema", kJsonSchema},
                     {"inn_order", p.group().order()},
                     {"symmetries", p.omega().size()},
                     {"dihedral_recognized", d.has_value()}};
    if (d) {
      j["n"] = d->n;
      j["rotation"] = to_string(d->rotation);
      j["reflection"] = to_string(d->reflection);
    }
    emit(j.dump(2) + "\n", c.out_path, out);
    return kExitOk;
  }
  std::ostringstream s;
  s << "|Inn(Q)|: " << p.group().order() << '\n';
  s << "|s(Q)|: " << p.omega().size() << '\n';
  s << "dihedral-recognized: " << (d ? "yes" : "no");
  if (d) s << ", n=" << d->n << " (a=" << to_string(d->rotation) << ", x=" << to_string(d->reflection) << ")";
  s << '\n';
  emit(s.str(), c.out_path, out);
  return kExitOk;
}

int cmd_homs(const std::string& src, const std::string& tgt, const Common& c, std::ostream& out) {
  Loaded a = load({src}, c.cap, InputKind::Quandle);
  Loaded b = load({tgt}, c.cap, InputKind::Quandle);
  const HomMode mode = parse_hom_mode(c.mode);
  const auto homs = enumerate_homs(*a.quandle, *b.quandle, mode);
  if (c.json) {
    emit(homs_to_json(*a.quandle, *b.quandle, mode, homs).dump(2) + "\n", c.out_path, out);
    return kExitOk;
  }
  std::ostringstream s;
  s << "count: " << homs.size() << '\n';
  for (const auto& f : homs) s << map_text(f.map) << '\n';
  emit(s.str(), c.out_path, out);
  return kExitOk;
}

int cmd_star_homs(const std::string& src, const std::string& tgt, const Common& c,
                  std::ostream& out) {
  Loaded a = load({src}, c.cap, InputKind::Pair);
  Loaded b = load({tgt}, c.cap, InputKind::Pair);
  const auto ms = enumerate_star_morphisms(*a.pair, *b.pair);
  if (c.json) {
    emit(star_morphisms_to_json(ms).dump(2) + "\n", c.out_path, out);
    return kExitOk;
  }
  std::ostringstream s;
  s << "count: " << ms.size() << '\n';
  std::vector<std::vector<Permutation>> subgroups;
  for (const auto& m : ms) {
    if (std::find(subgroups.begin(), subgroups.end(), m.h.elements()) == subgroups.end()) {
      subgroups.push_back(m.h.elements());
    }
  }
  s << "subgroups: " << subgroups.size() << '\n';
  const PermGroup& g2 = b.pair->group();
  const PermGroup& g1 = a.pair->group();
  for (const auto& m : ms) {
    s << "|H|=" << m.h.order() << " Gamma=[";
    for (std::size_t k = 0; k < m.gamma.size(); ++k) s << (k ? " " : "") << g2.index(m.gamma[k]);
    s << "] pi(Gamma)=[";
    for (std::size_t k = 0; k < m.gamma.size(); ++k) s << (k ? " " : "") << g1.index(m(m.gamma[k]));
    s << "]\n";
  }
  emit(s.str(), c.out_path, out);
  return kExitOk;
}

void print_report(const EquivalenceReport& r, std::ostream& out) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_name;  // passed, total
  std::vector<std::string> order;
  for (const auto& ch : r.checks) {
    if (!by_name.contains(ch.name)) order.push_back(ch.name);
    auto& [p, t] = by_name[ch.name];
    p += ch.passed;
    ++t;
  }
  out << "mode: " << r.mode << "  instances: " << r.instances.size() << '\n';
  out << std::left << std::setw(26) << "check" << std::right << std::setw(8) << "passed"
      << std::setw(8) << "total" << '\n';
  for (const auto& name : order) {
    const auto [p, t] = by_name[name];
    out << std::left << std::setw(26) << name << std::right << std::setw(8) << p << std::setw(8)
        << t << '\n';
  }
  for (const auto& ch : r.checks) {
    if (!ch.passed) out << "FAIL " << ch.name << " [" << ch.instance << "]: " << ch.detail << '\n';
  }
  out << "failures: " << r.failures() << '\n';
}

// Mode "all" runs the inj and surj suites one after the other.
int cmd_verify(const std::string& corpus_spec, std::size_t samples, const Common& c,
               std::ostream& out) {
  auto corpus = parse_corpus(corpus_spec, c.cap);
  VerifyOptions opt;
  opt.group_cap = c.cap;
  opt.seed = c.seed;
  opt.associativity_samples = samples;
  std::vector<HomMode> modes;
  if (c.mode == "all")
    modes = {HomMode::Injective, HomMode::Surjective};
  else
    modes = {parse_hom_mode(c.mode)};
  std::vector<EquivalenceReport> reports;
  for (HomMode m : modes) reports.push_back(verify_equivalence(corpus, m, opt));
  const bool passed =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

  nlohmann::json j;
  if (reports.size() == 1) {
    j = report_to_json(reports.front());
  } else {
    j = {{"schema", kJsonSchema}, {"mode", "all"}, {"passed", passed}, {"reports", nlohmann::json::array()}};
    for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
  }
  if (!c.out_path.empty()) emit(j.dump(2) + "\n", c.out_path, out);
  if (c.json && c.out_path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) print_report(r, out);
  }
  return passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quandles, groups with generators, and the functors between them", "qcat"};
  app.require_subcommand(1);
  Common common;

  std::vector<std::string> spec;
  auto* make = app.add_subcommand("make", "build a quandle or genpair and write its file");
  make->add_option("spec", spec, "e.g. dihedral 9 | alexander z5 x2 | pair dihedral 3 reflections")
      ->required();
  add_common(make, common, false);

  std::vector<std::string> input;
  auto* check = app.add_subcommand("check", "report axioms and flags of a quandle or genpair");
  check->add_option("input", input, "file or spec")->required();
  add_common(check, common, false);

  auto* innc = app.add_subcommand("inn", "inner automorphism group of a quandle");
  innc->add_option("input", input, "file or spec")->required();
  add_common(innc, common, false);

  std::string src, tgt;
  auto* homs = app.add_subcommand("homs", "enumerate quandle homomorphisms");
  homs->add_option("source", src, "file or quoted spec")->required();
  homs->add_option("target", tgt, "file or quoted spec")->required();
  add_common(homs, common, true);

  auto* star = app.add_subcommand("star-homs", "enumerate star-category morphisms");
  star->add_option("source", src, "genpair file or quoted spec")->required();
  star->add_option("target", tgt, "genpair file or quoted spec")->required();
  add_common(star, common, false);

  std::string corpus = "default";
  std::size_t samples = 8;
  auto* verify = app.add_subcommand("verify", "certify the equivalence on a corpus");
  verify->add_option("--corpus", corpus, "'default' or specs/files separated by ';'")
      ->capture_default_str();
  verify->add_option("--samples", samples, "associativity samples per object quadruple")
      ->capture_default_str();
  add_common(verify, common, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (*make) return cmd_make(spec, common, out, err);
    if (*check) return cmd_check(input, common, out);
    if (*innc) return cmd_inn(input, common, out);
    if (*homs) return cmd_homs(src, tgt, common, out);
    if (*star) return cmd_star_homs(src, tgt, common, out);
    if (*verify) return cmd_verify(corpus, samples, common, out);
  } catch (const CapExceeded& e) {
    err << "error: group cap exceeded: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace qcat

// Command-line front end: orbits | table | sigma | verify.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>

#include "bruhat/bruhat.hpp"
#include "bruhat/report.hpp"

namespace {

using namespace bruhat;

struct RunConfig {
  std::string type;
  std::string word;
  std::string uv;
  std::string group;
  std::string format = "json";
  std::string check;
  int trials = 25;
  std::uint64_t seed = 1;
  int guard_bits = 28;
  unsigned threads = 1;
  bool list = false;
  bool check_e6 = false;
  bool all_words = false;
  bool swapped = false;
};

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  std::string msg = "--format " + c.format + " is not available here (choose from";
  for (const char* f : allowed) msg += std::string(" ") + f;
  throw InvalidInput(msg + ")");
}

/// The word named by --word, or the default word for --uv.
DoubleWord select_word(const RunConfig& c, const WeylGroup& w, const std::string& default_uv = {}) {
  if (!c.word.empty() && !c.uv.empty()) throw InvalidInput("give either --word or --uv, not both");
  if (!c.word.empty()) {
    DoubleWord d = parse_word(c.word, w.rank());
    validate_double_reduced(w, d);
    return d;
  }
  const std::string uv = c.uv.empty() ? default_uv : c.uv;
  if (uv.empty()) throw InvalidInput("one of --word or --uv is required");
  const DoublePair p = parse_uv(w, uv);
  return default_double_word(w, p.u, p.v);
}

OrbitOptions orbit_options(const RunConfig& c) {
  OrbitOptions o;
  o.guard_bits = c.guard_bits;
  o.threads = c.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : c.threads;
  return o;
}

int cmd_orbits(const RunConfig& c) {
  require_format(c, {"json", "csv", "table"});
  if (c.type.empty()) throw InvalidInput("--type is required");
  const CartanMatrix a = cartan_matrix(c.type);
  const WeylGroup w(a);
  const OrbitOptions opt = orbit_options(c);

  if (c.all_words) {
    if (c.uv.empty() || !c.word.empty()) throw InvalidInput("--all-words needs --uv and no --word");
    const DoublePair p = parse_uv(w, c.uv);
    const auto words = double_reduced_words(w, p.u, p.v, 20000);
    Json j;
    j["schema"] = kSchemaVersion;
    j["type"] = a.name();
    j["uv"] = c.uv;
    j["word_count"] = words.size();
    std::map<std::size_t, std::size_t> counts;
    Json rows = Json::array();
    for (const auto& d : words) {
      const OrbitReport r = enumerate_orbits(a, d, opt);
      ++counts[r.orbit_count];
      rows.push_back({{"word", d.str()}, {"orbit_count", r.orbit_count}});
    }
    j["invariant"] = counts.size() <= 1;
    j["orbit_count"] = counts.size() == 1 ? Json(counts.begin()->first) : Json(nullptr);
    j["words"] = rows;
    std::cout << j.dump(2) << '\n';
    return counts.size() <= 1 ? 0 : 1;
  }

  const DoubleWord d = select_word(c, w);
  const auto gens = transvections_f2(a, d);
  const OrbitReport r = enumerate_orbits(gens, d.size(), opt);
  if (c.format == "csv") {
    std::cout << orbit_csv(r);
  } else if (c.format == "table") {
    std::cout << orbit_text(a.name(), d, r);
  } else {
    Json j = orbit_json(a.name(), d, r);
    if (c.list) add_orbit_lists(j, gens, r);
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_table(const RunConfig& c) {
  require_format(c, {"json", "csv", "table"});
  const auto rows = component_table(orbit_options(c));
  if (c.format == "csv") std::cout << table_csv(rows);
  else if (c.format == "table") std::cout << table_text(rows);
  else std::cout << table_json(rows).dump(2) << '\n';
  for (const auto& r : rows)
    if (r.computed && r.expected && !r.matches()) return 1;
  return 0;
}

int cmd_sigma(const RunConfig& c) {
  require_format(c, {"json", "dot"});
  if (c.type.empty()) throw InvalidInput("--type is required");
  const CartanMatrix a = cartan_matrix(c.type);
  const WeylGroup w(a);
  const DoubleWord d = select_word(c, w);
  const SigmaGraph g = build_sigma(a, d);
  if (g.uses_rule_three())
    std::cerr << "note: edge condition (iii) produced edges for word " << d.str() << '\n';

  std::optional<bool> e6;
  std::vector<int> witness;
  if (c.check_e6) {
    const SigmaGraph b = bounded_subgraph(g);
    e6 = e6_compatible(b);
    witness = find_induced_e6(b);
  }
  if (c.format == "dot") {
    std::cout << export_dot(g);
    if (e6) std::cerr << "e6_compatible: " << (*e6 ? "true" : "false") << '\n';
    return 0;
  }
  Json j = sigma_json(a.name(), g);
  if (e6) {
    j["e6_compatible"] = *e6;
    j["e6_witness"] = witness;
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_verify(const RunConfig& c) {
  require_format(c, {"json"});
  if (c.trials < 1) throw InvalidInput("--trials must be at least 1");
  VerifyOptions opt;
  opt.trials = c.trials;
  opt.seed = c.seed;
  opt.dodgson_form = c.swapped ? DodgsonForm::swapped : DodgsonForm::consistent;

  auto group = [&](const char* fallback) {
    return GroupDescriptor::parse(c.group.empty() ? fallback : c.group);
  };
  VerifyReport r;
  if (c.check == "roundtrip") {
    const auto g = group("SL3");
    r = verify_roundtrip(g, select_word(c, g.weyl(), "w0,w0"), opt);
  } else if (c.check == "mprime") {
    const auto g = group("SP4");
    r = verify_mprime(g, select_word(c, g.weyl(), "e,w0"), opt);
  } else if (c.check == "dodgson") {
    r = verify_dodgson(group("SL3"), opt);
  } else if (c.check == "nonmixed") {
    r = verify_nonmixed(group("SL3"), opt);
  } else if (c.check == "hexagon") {
    r = verify_hexagon(group("SP4"), opt);
  } else if (c.check == "cone") {
    const CartanMatrix a = !c.type.empty() ? cartan_matrix(c.type) : group("SL3").cartan();
    r = verify_cone(a, select_word(c, WeylGroup(a), "e,w0"), opt);
  } else if (c.check == "signs") {
    const auto g = group("SL3");
    r = verify_signs(g, select_word(c, g.weyl(), "e,w0"), opt);
  } else {
    throw InvalidInput("unknown check '" + c.check + "'");
  }
  std::cout << verify_json(r).dump(2) << '\n';
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected components of real double Bruhat cells and exact identity checks"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_type = [&](CLI::App* s) { s->add_option("--type", c.type, "Cartan type, e.g. A3, B2, G2, D4"); };
  auto add_word = [&](CLI::App* s) {
    s->add_option("--word", c.word, "Signed letters, e.g. -2,1,-3 (i/j allowed in rank 2)");
    s->add_option("--uv", c.uv, "Pair selector such as e,w0 or s1s2,w0");
  };
  auto add_orbit_flags = [&](CLI::App* s) {
    s->add_option("--guard-bits", c.guard_bits, "Largest m enumerated exhaustively")->check(CLI::Range(1, 40));
    s->add_option("--threads", c.threads, "Worker threads for orbit enumeration (0 = all cores)");
  };

  auto* orbits = app.add_subcommand("orbits", "Orbits of the mod-2 transvection group");
  add_type(orbits);
  add_word(orbits);
  add_orbit_flags(orbits);
  orbits->add_option("--format", c.format, "json | csv | table");
  orbits->add_flag("--list", c.list, "Include every orbit's members");
  orbits->add_flag("--all-words", c.all_words, "Repeat for every word of R(u,v)");

  auto* table = app.add_subcommand("table", "Component counts C(X_r) for (e, w0)");
  add_orbit_flags(table);
  table->add_option("--format", c.format, "json | csv | table");

  auto* sigma = app.add_subcommand("sigma", "Export the graph Sigma(i)");
  add_type(sigma);
  add_word(sigma);
  sigma->add_option("--format", c.format, "json | dot");
  sigma->add_flag("--check-e6", c.check_e6, "Test the bounded subgraph for E6-compatibility");

  auto* verify = app.add_subcommand("verify", "Randomized exact identity checks");
  verify->add_option("check", c.check, "roundtrip | mprime | dodgson | nonmixed | hexagon | cone | signs")
      ->required();
  verify->add_option("--group", c.group, "SL2, SL3, SL4 or SP4");
  add_type(verify);
  add_word(verify);
  verify->add_option("--trials", c.trials, "Number of random trials");
  verify->add_option("--seed", c.seed, "Base seed");
  verify->add_option("--format", c.format, "json");
  verify->add_flag("--swapped-rhs", c.swapped,
                   "dodgson: use Delta_{u'w_j, v'w_j} on the right-hand side");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*orbits) return cmd_orbits(c);
    if (*table) return cmd_table(c);
    if (*sigma) return cmd_sigma(c);
    return cmd_verify(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

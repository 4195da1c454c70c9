// sqfree-nbhd: closed neighborhood ideals of trees from the command line.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sqfree/sqfree.hpp"

namespace {

using namespace sqfree;

struct UsageError {
  std::string flag;
  std::string message;
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string family;
  std::optional<int> k;
  Field field = Field::GF2;
  std::optional<Label> root;
  unsigned threads = 1;
  bool json = false;
  std::optional<std::size_t> budget;
  std::optional<std::uint64_t> seed;
  RegMode mode = RegMode::Quotient;
  bool betti = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string slurp(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError{"--input", "cannot open " + path};
    buf << in.rdbuf();
  }
  return buf.str();
}

Tree load_tree(const RunConfig& cfg) {
  if (!cfg.input.empty()) {
    const std::string text = slurp(cfg.input);
    try {
      auto first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && text[first] == '{') return tree_from_json(json::parse(text));
      return parse_tree(text);
    } catch (const Error& e) {
      throw UsageError{"--input", e.what()};
    } catch (const json::exception& e) {
      throw UsageError{"--input", e.what()};
    }
  }
  if (!cfg.family.empty()) {
    std::string spec = cfg.family;
    // "random_tree:12" plus --seed 7 means "random_tree:12:7".
    if (cfg.seed && spec.rfind("random_", 0) == 0 && std::count(spec.begin(), spec.end(), ':') == 1)
      spec += ":" + std::to_string(*cfg.seed);
    try {
      return gen_family(spec);
    } catch (const Error& e) {
      throw UsageError{"--family", e.what()};
    }
  }
  throw UsageError{"--input", "one of --input or --family is required"};
}

std::optional<int> resolve_root(const RunConfig& cfg, const Tree& t) {
  if (!cfg.root) return std::nullopt;
  auto v = t.find(*cfg.root);
  if (!v) throw UsageError{"--root", "vertex " + std::to_string(*cfg.root) + " is not in the tree"};
  try {
    require_pendant(t, *v);
  } catch (const Error& e) {
    throw UsageError{"--root", e.what()};
  }
  return v;
}

int resolve_k(const RunConfig& cfg, const TreeAnalysis& a) {
  if (!cfg.k) return a.nu;
  if (*cfg.k < 1 || *cfg.k > a.nu)
    throw UsageError{"--k", "k must lie in 1.." + std::to_string(a.nu) + " (the matching number)"};
  return *cfg.k;
}

BettiOptions betti_options(const RunConfig& cfg) {
  BettiOptions opt;
  opt.field = cfg.field;
  opt.threads = cfg.threads;
  if (cfg.budget) opt.lattice_budget = *cfg.budget;
  return opt;
}

std::vector<std::string> variable_names(const NComplex& c) {
  std::vector<std::string> names;
  for (Label l : c.labels()) names.push_back("x" + std::to_string(l));
  return names;
}

std::string label_list(const NComplex& c, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](int v) {
    if (!first) out += ",";
    out += std::to_string(c.labels()[static_cast<std::size_t>(v)]);
    first = false;
  });
  return out + "}";
}

std::string key_name(const FacetKey& k) {
  return "F_{" + std::to_string(k.i) + "," + std::to_string(k.j) + "," + std::to_string(k.k) + "}";
}

std::string path_name(const Tree& t, const std::vector<int>& path) {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "-" : "") + std::to_string(t.label(path[i]));
  return s;
}

int cmd_complex(const RunConfig& cfg) {
  const Tree t = load_tree(cfg);
  const NComplex c = neighborhood_facets(t);
  const bool forest = is_simplicial_forest(c).is_forest;
  if (cfg.json) {
    json j = to_json(c);
    j["simplicial_forest"] = forest;
    emit(j);
    return 0;
  }
  std::cout << "vertices: " << c.n() << "\nfacets: " << c.facet_count() << "\n";
  for (int f = 0; f < c.facet_count(); ++f)
    std::cout << facet_name(c, f) << " = " << label_list(c, c.facet(f).vertices) << "\n";
  std::cout << "simplicial forest: " << (forest ? "yes" : "no") << "\n";
  return 0;
}

int cmd_matchings(const RunConfig& cfg) {
  const TreeAnalysis a(load_tree(cfg));
  const int k = resolve_k(cfg, a);
  const auto ms = k == a.nu ? a.nu_matchings : enumerate_matchings(a.complex, k);
  if (cfg.json) {
    json j = matchings_json(a.complex, k, ms);
    j["nu"] = a.nu;
    emit(j);
    return 0;
  }
  std::cout << "nu = " << a.nu << ", k = " << k << ", " << ms.size() << " matchings\n";
  for (const auto& m : ms)
    std::cout << matching_name(a.complex, m) << "  " << label_list(a.complex, m.vertices) << "\n";
  return 0;
}

int cmd_power(const RunConfig& cfg) {
  const TreeAnalysis a(load_tree(cfg));
  const int k = resolve_k(cfg, a);
  const MonomialIdeal ideal = sqfree_power_matchings(a.complex, k);
  if (cfg.json) {
    json j = to_json(ideal, a.complex.labels());
    j["k"] = k;
    emit(j);
    return 0;
  }
  const auto names = variable_names(a.complex);
  std::cout << "NI^[" << k << "]: " << ideal.gens().size() << " generators, degrees " << ideal.min_degree() << ".."
            << ideal.max_degree() << "\n";
  for (const auto& g : ideal.gens()) std::cout << format(g, names) << "\n";
  return 0;
}

int cmd_order(const RunConfig& cfg) {
  const TreeAnalysis a(load_tree(cfg));
  const auto root = resolve_root(cfg, a.tree);
  const OrderedGenerators og = order_ell(a, root);
  if (cfg.json) {
    emit(to_json(a, og));
    return 0;
  }
  const NComplex& c = a.complex;
  std::vector<int> by_key(static_cast<std::size_t>(c.facet_count()));
  for (int f = 0; f < c.facet_count(); ++f) by_key[static_cast<std::size_t>(f)] = f;
  std::sort(by_key.begin(), by_key.end(), [&](int x, int y) { return og.keys[x] < og.keys[y]; });
  std::cout << "root: " << a.tree.label(og.root) << "\nfacets, largest first:\n";
  for (int f : by_key)
    std::cout << "  " << key_name(og.keys[f]) << " = " << facet_name(c, f) << " = " << label_list(c, c.facet(f).vertices)
              << "\n";
  std::cout << "U = " << matching_name(c, og.U) << "\n";
  std::cout << "nu-matchings under >_lex:\n";
  for (const auto& m : og.lex_order) std::cout << "  " << matching_name(c, m) << "\n";
  std::cout << "nu-matchings under >_ell:\n";
  for (std::size_t i = 0; i < og.matchings.size(); ++i)
    std::cout << "  " << matching_name(c, og.matchings[i]) << "  beta=" << og.betas[i] << " level=" << og.levels[i]
              << "\n";
  return 0;
}

void print_witness(const TreeAnalysis& a, const char* name, const std::optional<ConditionWitness>& w) {
  std::cout << name << ": ";
  if (!w) {
    std::cout << "holds\n";
    return;
  }
  std::cout << "fails on path " << path_name(a.tree, w->path) << "\n"
            << "    Y = " << matching_name(a.complex, w->Y) << "\n"
            << "    " << matching_name(a.complex, w->first) << " and " << matching_name(a.complex, w->second) << "\n";
}

int cmd_cwl(const RunConfig& cfg) {
  const TreeAnalysis a(load_tree(cfg));
  CwlOptions opt;
  opt.root = resolve_root(cfg, a.tree);
  opt.with_betti = cfg.betti;
  opt.betti = betti_options(cfg);
  const CwlReport rep = cwl_verdict(a, opt);
  const int status = rep.consistent() ? 0 : 1;
  if (cfg.json) {
    emit(to_json(a, rep));
    return status;
  }
  std::cout << "nu = " << a.nu << ", " << a.nu_matchings.size() << " generators\n";
  print_witness(a, "C1", rep.c1);
  print_witness(a, "C2", rep.c2);
  std::cout << "linear quotients under >_ell: ";
  if (rep.lq_under_ell.ok) std::cout << "yes\n";
  else std::cout << "no (u_" << rep.lq_under_ell.j + 1 << " against u_" << rep.lq_under_ell.i + 1 << ")\n";
  if (rep.certificate) {
    const auto names = variable_names(a.complex);
    std::cout << "not linearly related in degree " << rep.certificate->degree << ": "
              << format(rep.certificate->u, names) << " and " << format(rep.certificate->v, names) << "\n";
  }
  if (rep.betti) {
    std::cout << "betti: ";
    for (const auto& comp : rep.betti->components)
      std::cout << "deg " << comp.degree << (comp.linear ? " linear; " : " NOT linear; ");
    std::cout << "\n";
  }
  std::cout << "verdict: " << (rep.verdict ? "componentwise linear" : "not componentwise linear") << "\n";
  if (status) std::cout << "inconsistent: the checks above disagree\n";
  return status;
}

BettiTable power_table(const RunConfig& cfg, const TreeAnalysis& a, int k) {
  const MonomialIdeal ideal = sqfree_power_matchings(a.complex, k);
  try {
    return graded_betti(ideal, betti_options(cfg));
  } catch (const Error& e) {
    if (e.code() == Errc::BudgetExceeded) throw UsageError{"--budget", e.what()};
    throw;
  }
}

int cmd_betti(const RunConfig& cfg) {
  const TreeAnalysis a(load_tree(cfg));
  const int k = resolve_k(cfg, a);
  const BettiTable table = power_table(cfg, a, k);
  if (cfg.json) {
    json j = to_json(table, cfg.mode);
    j["k"] = k;
    emit(j);
    return 0;
  }
  std::cout << betti_diagram(table, cfg.mode);
  std::cout << "regularity: " << regularity(table, cfg.mode) << "\n";
  return 0;
}

int cmd_reg(const RunConfig& cfg) {
  const TreeAnalysis a(load_tree(cfg));
  const int k = resolve_k(cfg, a);
  const int r = regularity(power_table(cfg, a, k), cfg.mode);
  if (cfg.json) {
    json j = header("regularity");
    j["k"] = k;
    j["mode"] = cfg.mode == RegMode::Ideal ? "ideal" : "quotient";
    j["field"] = to_string(cfg.field);
    j["regularity"] = r;
    emit(j);
    return 0;
  }
  std::cout << r << "\n";
  return 0;
}

bool decisive_failure(const LemmaReport& rep) {
  for (const auto& r : rep.results)
    if (r.status == CheckStatus::Fail && !is_refuted_lemma(r.name)) return true;
  return false;
}

int cmd_verify_lemmas(const RunConfig& cfg) {
  if (cfg.input.empty() && cfg.family.empty()) {
    AcceptanceOptions opt;
    opt.threads = cfg.threads;
    opt.seed = cfg.seed.value_or(0);
    const CriterionResult r = criterion_lemmas(opt);
    if (cfg.json) {
      json j = header("lemma-suite");
      j["passed"] = r.passed;
      j["detail"] = r.detail;
      emit(j);
    } else {
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "\n" << r.detail << "\n";
    }
    return r.passed ? 0 : 1;
  }
  const TreeAnalysis a(load_tree(cfg));
  const auto root = resolve_root(cfg, a.tree);
  LemmaOptions lo;
  lo.seed = cfg.seed.value_or(0);
  if (cfg.budget) lo.pair_cap = *cfg.budget;

  std::vector<std::pair<std::string, LemmaReport>> sections;
  for (int k = 1; k <= a.nu; ++k)
    sections.emplace_back("matchings k=" + std::to_string(k), verify_matching_lemmas(a, k, lo));
  sections.emplace_back("orders", verify_order_properties(a, root));
  if (is_caterpillar(a.tree)) sections.emplace_back("caterpillar colons", verify_caterpillar_colon_structure(a, root));

  bool failed = false;
  for (const auto& s : sections) failed = failed || decisive_failure(s.second);
  if (cfg.json) {
    json j = header("lemma-run");
    j["tree"] = to_json(a.tree);
    j["sections"] = json::array();
    for (const auto& [name, rep] : sections) {
      json x = to_json(rep);
      x.erase("schema");
      x.erase("kind");
      x["section"] = name;
      j["sections"].push_back(std::move(x));
    }
    j["passed"] = !failed;
    emit(j);
    return failed ? 1 : 0;
  }
  for (const auto& [name, rep] : sections) {
    std::cout << name << ":\n";
    for (const auto& r : rep.results) {
      std::cout << "  " << to_string(r.status) << "  " << r.name << " (" << r.pairs_checked << " checked)";
      if (r.status == CheckStatus::Fail && is_refuted_lemma(r.name)) std::cout << " [reported only]";
      if (r.counterexample) std::cout << "  " << *r.counterexample;
      std::cout << "\n";
    }
  }
  std::cout << (failed ? "FAIL" : "PASS") << "\n";
  return failed ? 1 : 0;
}

int cmd_verify_paper(const RunConfig& cfg) {
  AcceptanceOptions opt;
  opt.threads = cfg.threads;
  opt.seed = cfg.seed.value_or(0);
  auto results = run_acceptance(opt, [&](const CriterionResult& r) {
    if (cfg.json) return;
    std::ostringstream line;
    line << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << std::fixed
         << std::setprecision(2) << r.seconds << " s)";
    std::cout << line.str() << "\n";
    if (!r.passed) std::cout << r.detail << "\n";
    std::cout.flush();
  });
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (cfg.json) {
    json j = header("acceptance");
    j["passed"] = ok;
    j["criteria"] = json::array();
    for (const auto& r : results)
      j["criteria"].push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    emit(j);
  } else {
    std::cout << (ok ? "all criteria passed" : "acceptance FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int dispatch(const RunConfig& cfg) {
  if (cfg.command == "complex") return cmd_complex(cfg);
  if (cfg.command == "matchings") return cmd_matchings(cfg);
  if (cfg.command == "power") return cmd_power(cfg);
  if (cfg.command == "order") return cmd_order(cfg);
  if (cfg.command == "cwl") return cmd_cwl(cfg);
  if (cfg.command == "betti") return cmd_betti(cfg);
  if (cfg.command == "reg") return cmd_reg(cfg);
  if (cfg.command == "verify-lemmas") return cmd_verify_lemmas(cfg);
  return cmd_verify_paper(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.threads = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"Closed neighborhood ideals of trees: squarefree powers, orders, Betti numbers"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  auto* input = app.add_option("--input", cfg.input, "edge list or tree JSON (\"-\" reads stdin)");
  auto* family = app.add_option("--family", cfg.family, "family spec, e.g. fig1, g1:2, random_tree:12:7");
  input->excludes(family);
  app.add_option("--k", cfg.k, "matching size (default: the matching number)");
  std::string field_name = "gf2", mode_name = "quotient";
  app.add_option("--field", field_name, "coefficient field: gf2 or qq")->check(CLI::IsMember({"gf2", "qq"}));
  app.add_option("--root", cfg.root, "pendant root vertex label for the facet order");
  app.add_option("--threads", cfg.threads, "worker threads (default: available cores)")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "print JSON");
  app.add_option("--budget", cfg.budget, "lcm lattice budget for betti/reg, pair cap for verify-lemmas")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for sampling and for random families given without one");
  app.add_option("--mode", mode_name, "Betti numbers and regularity of the ideal or of the quotient")
      ->check(CLI::IsMember({"ideal", "quotient"}));

  const std::vector<std::pair<std::string, std::string>> commands{
      {"complex", "facets of the closed neighborhood complex"},
      {"matchings", "k-matchings of the complex"},
      {"power", "generators of the squarefree power NI^[k]"},
      {"order", "rooted facet order, U, and the >_lex and >_ell orders on nu-matchings"},
      {"cwl", "componentwise linearity verdict for NI^[nu] with witnesses"},
      {"betti", "graded Betti table of NI^[k]"},
      {"reg", "regularity of NI^[k]"},
      {"verify-lemmas", "run the structural property checks (all small trees without an input)"},
      {"verify-paper", "run every acceptance criterion"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&cfg, name = name] { cfg.command = name; });
    if (name == "cwl") sub->add_flag("--betti", cfg.betti, "also run the Betti engine on each component");
  }

  if (argc > 1 && argv[1][0] != '-' &&
      std::none_of(commands.begin(), commands.end(), [&](const auto& c) { return c.first == argv[1]; })) {
    std::cerr << "usage error: unknown command \"" << argv[1] << "\"\n";
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 2;
  }
  cfg.field = field_name == "qq" ? Field::QQ : Field::GF2;
  cfg.mode = mode_name == "ideal" ? RegMode::Ideal : RegMode::Quotient;

  try {
    return dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.flag << ": " << e.message << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

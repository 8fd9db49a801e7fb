// walg: batch frontend for the weight-algebra toolkit.
//
// Subcommands: eval, laws, wset, closure, impedance, transform.
// Exit codes: 0 success / all laws pass, 1 law violation or counterexample,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "walg/laws.hpp"
#include "walg/network_io.hpp"

namespace {

constexpr const char* kFormulaGrammar =
    "formula  := additive ('-o' formula)?      lollipop, right-associative\n"
    "additive := mult (('&' | '(+)') mult)*    with / plus\n"
    "mult     := unary (('*' | '@') unary)*    tensor / par\n"
    "unary    := primary '^'*                  postfix dual\n"
    "primary  := atom | '1' | '0' | 'bot' | 'top' | '(' formula ')'\n"
    "atom     := [a-z][a-z0-9_]*\n";

constexpr const char* kWeightGrammar =
    "weight   := 'inf' | <int> | <int>/<int> | decimal (at most 9 fractional "
    "digits)\n";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw walg::error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

walg::TensorKind tensor_kind_of(const std::string& name) {
  if (name == "additive") return walg::TensorKind::additive;
  if (name == "multiplicative") return walg::TensorKind::multiplicative;
  throw walg::error("unknown tensor kind '" + name + "'");
}

walg::WeightKind weight_kind_of(const std::string& name) {
  if (name == "additive") return walg::WeightKind::additive;
  if (name == "multiplicative") return walg::WeightKind::multiplicative;
  if (name == "sup") return walg::WeightKind::sup;
  throw walg::error("unknown kind '" + name + "'");
}

int run_eval(const std::string& expr,
             const std::vector<std::string>& bindings, bool check_valid) {
  walg::linlog::Formula f = walg::linlog::parse(expr);
  walg::linlog::Environment env;
  for (const std::string& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos)
      throw walg::error("binding '" + b + "': want name=weight");
    env[b.substr(0, eq)] = walg::Weight::from_string(b.substr(eq + 1));
  }
  if (!check_valid) {
    std::cout << walg::linlog::eval(f, env).to_string() << "\n";
    return 0;
  }
  // pinned atoms keep their binding, the rest range over the grid
  std::vector<std::string> free_atoms;
  for (const std::string& a : walg::linlog::atoms(f))
    if (!env.count(a)) free_atoms.push_back(a);
  std::vector<walg::linlog::Environment> envs;
  for (const auto& g : walg::linlog::grid_environments(free_atoms)) {
    walg::linlog::Environment e = env;
    e.insert(g.begin(), g.end());
    envs.push_back(std::move(e));
  }
  walg::linlog::Validity v = walg::linlog::check_valid(f, envs);
  if (v.valid) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << "counterexample";
  for (const auto& [name, w] : v.counterexample)
    std::cout << " " << name << "=" << w.to_string();
  std::cout << " value=" << v.value.to_string() << "\n";
  return 1;
}

int run_laws(const std::string& suite, std::size_t samples,
             std::uint64_t seed, bool corrupt_hom) {
  walg::laws::Options opt;
  opt.samples = samples;
  opt.seed = seed;
  opt.corrupt_hom = corrupt_hom;
  bool all_ok = true;
  for (const auto& result : walg::laws::run_suites(suite, opt)) {
    for (const auto& law : result.laws) {
      std::cout << (law.failed == 0 ? "PASS " : "FAIL ") << result.suite
                << "." << law.name << " pass=" << law.checked - law.failed
                << " fail=" << law.failed;
      if (law.failed != 0) {
        all_ok = false;
        std::cout << " first=" << law.first_failure;
      }
      std::cout << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

int run_closure(const std::string& path, const std::string& kind) {
  walg::WGraph g = walg::WGraph::from_string(read_file(path));
  std::cout << walg::best_cost(g, weight_kind_of(kind)).to_tsv();
  return 0;
}

int run_impedance(const std::string& path, const std::string& omega) {
  walg::Rat w = walg::Rat::from_string(omega);
  if (!(w > walg::Rat(0))) throw walg::error("omega must be positive");
  walg::NetworkTree net = walg::network_from_string(read_file(path));
  walg::ProjValue z = walg::reduce_network(net, w);
  std::cout << z.to_string() << "\n";
  std::cout << "~ " << z.to_double_string() << "\n";
  return 0;
}

int run_transform(const std::string& literal, const std::string& to,
                  const std::string& back) {
  char buf[64];
  if (!to.empty()) {
    walg::Weight w = walg::Weight::from_string(literal);
    walg::Scale s = to == "probabilistic" ? walg::Scale::probabilistic
                                          : walg::Scale::relative;
    std::snprintf(buf, sizeof buf, "%.17g", walg::transform(w, s).value);
    std::cout << buf << "\n";
    return 0;
  }
  walg::Scale s = back == "probabilistic" ? walg::Scale::probabilistic
                                          : walg::Scale::relative;
  char* end = nullptr;
  double v = std::strtod(literal.c_str(), &end);
  if (end == literal.c_str() || *end != '\0')
    throw walg::error("bad value '" + literal + "'");
  walg::ApproxWeight a = walg::transform_back({v, s});
  std::snprintf(buf, sizeof buf, "%.17g", a.value);
  std::cout << "~ " << buf << " (inexact)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walg: exact arithmetic on the weights [0, inf], weighted "
               "sets, path closure and impedance networks"};
  app.require_subcommand(1);
  app.footer(std::string("formula grammar:\n") + kFormulaGrammar + "\n" +
             kWeightGrammar +
             "\ngraph files: '<src> <dst> <weight>' per line, '#' comments\n"
             "weighted-set files: '<id> <weight>' per line\n"
             "map files: '<src-id> -> <dst-id>' per line\n"
             "network files: JSON of {\"series\"|\"parallel\": [...]},"
             " {\"R\"|\"L\"|\"C\": \"<rational>\"}");

  // eval
  std::string expr;
  std::vector<std::string> bindings;
  bool check_valid = false;
  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate a linear-logic formula over [0, inf]");
  eval->add_option("expr", expr, "formula, e.g. 'x @ x^'")->required();
  eval->add_option("bindings", bindings, "atom bindings, name=weight");
  eval->add_flag("--check-valid", check_valid,
                 "check [f] <= 1 over the standard grid (unbound atoms) "
                 "instead of evaluating");

  // laws
  std::string suite;
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  bool corrupt_hom = false;
  CLI::App* laws = app.add_subcommand("laws", "run executable law suites");
  std::string suite_help = "suite name or 'all'; one of:";
  for (const auto& n : walg::laws::suite_names()) suite_help += " " + n;
  laws->add_option("suite", suite, suite_help)->required();
  laws->add_option("--samples", samples, "random samples per law (500)");
  laws->add_option("--seed", seed, "generator seed (0)");
  laws->add_flag("--corrupt-hom", corrupt_hom,
                 "fault-injection fixture: run against a corrupted hom "
                 "table (must fail)");

  // wset
  CLI::App* wset = app.add_subcommand(
      "wset", "operations on weighted-set files");
  wset->require_subcommand(1);
  std::vector<std::string> wset_files;
  std::string wset_kind = "additive";
  std::string radius = "inf";
  CLI::App* wtensor = wset->add_subcommand("tensor",
                                           "tensor product of two files");
  wtensor->add_option("files", wset_files, "two weighted-set files")
      ->expected(2);
  wtensor->add_option("--kind", wset_kind, "additive | multiplicative");
  CLI::App* wproduct =
      wset->add_subcommand("product", "cartesian product (sup weight)");
  wproduct->add_option("files", wset_files, "weighted-set files");
  CLI::App* wcoproduct =
      wset->add_subcommand("coproduct", "tagged disjoint union");
  wcoproduct->add_option("files", wset_files, "weighted-set files");
  CLI::App* wball = wset->add_subcommand(
      "ball", "elements with weight at most the radius");
  wball->add_option("files", wset_files, "one weighted-set file")
      ->expected(1);
  wball->add_option("--radius", radius, "weight literal (inf)");
  std::string classes;
  CLI::App* wquotient = wset->add_subcommand(
      "quotient", "collapse classes of elements (inf weight per class)");
  wquotient->add_option("files", wset_files, "one weighted-set file")
      ->expected(1);
  wquotient
      ->add_option("--classes", classes,
                   "partition, e.g. 'a,b;c' (';' between classes)")
      ->required();
  CLI::App* wmapweight = wset->add_subcommand(
      "mapweight", "hom weight of a map between two files");
  wmapweight
      ->add_option("files", wset_files,
                   "source file, target file, map file")
      ->expected(3);
  wmapweight->add_option("--kind", wset_kind, "additive | multiplicative");

  // closure
  std::string graph_file;
  std::string closure_kind = "additive";
  CLI::App* closure = app.add_subcommand(
      "closure", "best-cost closure of a weighted graph (TSV)");
  closure->add_option("file", graph_file, "graph file")->required();
  closure->add_option("--kind", closure_kind,
                      "additive | multiplicative | sup");

  // impedance
  std::string net_file;
  std::string omega;
  CLI::App* impedance = app.add_subcommand(
      "impedance", "reduce a series/parallel RLC network at fixed omega");
  impedance->add_option("file", net_file, "network JSON file")->required();
  impedance->add_option("--omega", omega, "angular speed, positive rational")
      ->required();

  // transform
  std::string literal;
  std::string to_scale, back_scale;
  CLI::App* transform = app.add_subcommand(
      "transform", "move weights through the probabilistic/relative scales");
  transform
      ->add_option("value", literal,
                   "weight literal, or a double with --back")
      ->required();
  CLI::Option* to_opt =
      transform->add_option("--to", to_scale, "probabilistic | relative");
  CLI::Option* back_opt =
      transform->add_option("--back", back_scale, "probabilistic | relative");
  to_opt->excludes(back_opt);
  auto check_scale = CLI::IsMember({"probabilistic", "relative"});
  to_opt->check(check_scale);
  back_opt->check(check_scale);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return run_eval(expr, bindings, check_valid);
    if (*laws) return run_laws(suite, samples, seed, corrupt_hom);
    if (*closure) return run_closure(graph_file, closure_kind);
    if (*impedance) return run_impedance(net_file, omega);
    if (*transform) {
      if (to_scale.empty() && back_scale.empty())
        throw walg::error("transform needs --to or --back");
      return run_transform(literal, to_scale, back_scale);
    }
    if (*wset) {
      if (*wmapweight) {
        walg::WSet src = walg::WSet::from_string(read_file(wset_files[0]));
        walg::WSet dst = walg::WSet::from_string(read_file(wset_files[1]));
        walg::WMap m = walg::WMap::from_string(std::move(src), std::move(dst),
                                               read_file(wset_files[2]));
        std::cout << walg::map_weight(m, tensor_kind_of(wset_kind)).to_string()
                  << "\n";
        return 0;
      }
      std::vector<walg::WSet> sets;
      for (const auto& f : wset_files)
        sets.push_back(walg::WSet::from_string(read_file(f)));
      if (*wtensor) {
        std::cout << walg::tensor(sets[0], sets[1], tensor_kind_of(wset_kind))
                         .to_string();
      } else if (*wproduct) {
        std::cout << walg::product(sets).to_string();
      } else if (*wcoproduct) {
        std::cout << walg::coproduct(sets).to_string();
      } else if (*wball) {
        for (const auto& id :
             walg::ball(sets[0], walg::Weight::from_string(radius)))
          std::cout << id << "\n";
      } else if (*wquotient) {
        std::vector<std::vector<std::string>> partition;
        std::istringstream cs(classes);
        std::string cls;
        while (std::getline(cs, cls, ';')) {
          std::vector<std::string> members;
          std::istringstream ms(cls);
          std::string m;
          while (std::getline(ms, m, ','))
            if (!m.empty()) members.push_back(m);
          if (!members.empty()) partition.push_back(std::move(members));
        }
        std::cout << walg::quotient(sets[0], partition).to_string();
      }
      return 0;
    }
  } catch (const walg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

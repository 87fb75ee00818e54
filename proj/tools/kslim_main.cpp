#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "kslim/problem_io.hpp"
#include "kslim/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;

void write_or_print(const nlohmann::json& doc, const std::string& out_path) {
  std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

int cmd_analyze(const std::string& path, const std::string& example,
                int zeta_terms, long long neron_components,
                const std::string& out_path) {
  kslim::ProblemFile problem;
  try {
    if (!example.empty()) {
      auto spec = kslim::parse_example_name(example);
      if (!spec) throw kslim::ParseError("unknown example name: " + example);
      problem = kslim::problem_from_example(*spec);
    } else {
      problem = kslim::load_problem(path);
    }
    if (zeta_terms > 0) problem.zeta_terms = std::size_t(zeta_terms);
    if (neron_components > 0)
      problem.neron_components = mpz_class(static_cast<long>(neron_components));
  } catch (const kslim::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }

  nlohmann::json report;
  try {
    report = kslim::analyze_report(problem);
  } catch (const kslim::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  write_or_print(report, out_path);
  if (!report["validation"]["ok"].get<bool>()) {
    std::cerr << "validation failed; see the axiom list in the report\n";
    return kExitValidation;
  }
  return kExitOk;
}

int cmd_verify(const std::string& scope, std::uint64_t seed,
               bool naive_monodromy_only) {
  std::vector<kslim::CheckResult> results;
  if (naive_monodromy_only) {
    results = kslim::run_verification("ks", seed);
    std::erase_if(results, [](const kslim::CheckResult& r) {
      return r.name != "ks.naive_operator_differs";
    });
  } else {
    results = kslim::run_verification(scope, seed);
  }
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.pass && !r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << results.size() - failed << "/" << results.size()
            << " checks passed\n";
  return failed == 0 ? kExitOk : 1;
}

int cmd_example(const std::string& name, const std::string& out_path) {
  auto spec = kslim::parse_example_name(name);
  if (!spec) {
    std::cerr << "unknown example name: " << name << "\navailable:";
    for (const auto& b : kslim::builtin_examples())
      std::cerr << " " << kslim::example_name(b);
    std::cerr << " (and padded ranks, e.g. EX-II.5)\n";
    return kExitParse;
  }
  try {
    kslim::ProblemFile problem = kslim::problem_from_example(*spec);
    write_or_print(kslim::problem_to_json(problem), out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Kuga-Satake construction for limit mixed Hodge structures of K3 "
      "type, with its degeneration invariants"};
  app.require_subcommand(1);

  std::string path, example, out_path;
  int zeta_terms = 0;
  long long neron_components = 0;
  auto* analyze = app.add_subcommand(
      "analyze", "validate a problem file and compute every invariant");
  analyze->add_option("file", path, "problem file (JSON)");
  analyze->add_option("--example", example, "built-in input, e.g. II:4 or EX-II.4");
  analyze->add_option("--zeta-terms", zeta_terms, "zeta coefficients to emit")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--neron-components", neron_components,
                      "number of Neron components (otherwise symbolic N)")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--out", out_path, "write the report here instead of stdout");

  std::string scope = "all";
  std::uint64_t seed = 1;
  bool naive = false;
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--scope", scope, "all|clifford|ks|degeneration");
  verify->add_option("--seed", seed, "seed for the randomized checks");
  verify->add_flag("--naive-monodromy", naive,
                   "only the naive-operator regression");

  std::string name;
  auto* example_cmd =
      app.add_subcommand("example", "write a built-in problem file");
  example_cmd->add_option("name", name, "e.g. EX-I.3, EX-II.4, EX-III.3")
      ->required();
  example_cmd->add_option("--out", out_path, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) {
      if (path.empty() == example.empty()) {
        std::cerr << "analyze needs exactly one of <file> or --example\n";
        return kExitParse;
      }
      return cmd_analyze(path, example, zeta_terms, neron_components, out_path);
    }
    if (app.got_subcommand(verify)) return cmd_verify(scope, seed, naive);
    return cmd_example(name, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

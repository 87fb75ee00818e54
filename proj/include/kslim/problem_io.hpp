#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "kslim/examples.hpp"

namespace kslim {

/// Thrown on malformed problem files (maps to CLI exit code 1; validation
/// failures map to exit code 2 and are reported, not thrown).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// On-disk problem description. All scalars are exact strings "p/q"; the
/// period vector is split into rational real and imaginary parts.
struct ProblemFile {
  std::size_t rank = 0;
  Mat gram;
  Mat n;
  Vec v_lim;
  std::optional<mpz_class> neron_components;
  std::size_t zeta_terms = 5;

  K3LimitMHS to_mhs() const;  // throws ParseError on structural mismatch
};

ProblemFile problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const ProblemFile& p);
ProblemFile problem_from_example(const ExampleSpec& spec);

ProblemFile load_problem(const std::string& path);
void save_problem(const ProblemFile& p, const std::string& path);

/// The full analysis pipeline as a deterministic JSON document: input echo,
/// type, filtration dimensions, diamonds, dual-complex and Neron data, zeta
/// coefficients, and the verification matrix.
nlohmann::json analyze_report(const ProblemFile& p);

nlohmann::json validation_to_json(const ValidationReport& rep);

}  // namespace kslim

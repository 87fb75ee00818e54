#pragma once

#include <optional>
#include <string>

#include "kslim/hodge.hpp"

namespace kslim {

/// Request for a deterministic built-in structure: a degeneration type at a
/// given rank. Minimal ranks are 3 (types I, III) and 4 (type II); larger
/// ranks pad with an orthogonal sum of norm -2 lines on which N acts by zero.
struct ExampleSpec {
  DegenerationType type;
  std::size_t rank;
};

/// Builds the named structure and, where the sign conventions of the base
/// construction leave a choice, picks the variant (N vs -N, v_lim vs its
/// conjugate) that passes the validator. The result always validates.
K3LimitMHS make_example(const ExampleSpec& spec);

std::string example_name(const ExampleSpec& spec);  // "EX-II.4"

/// Accepts "EX-II.4" or the shorthand "II:4" (case-insensitive).
std::optional<ExampleSpec> parse_example_name(const std::string& name);

/// The canonical minimal-rank instances: EX-I.3, EX-II.4, EX-III.3.
std::vector<ExampleSpec> builtin_examples();

}  // namespace kslim

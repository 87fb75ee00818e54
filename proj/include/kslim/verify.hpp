#pragma once

#include <random>
#include <string>

#include "kslim/degeneration.hpp"

namespace kslim {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Deterministic small-value generator for the randomized invariant checks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi);
  Scalar rational(long max_num = 9, long max_den = 5);
  Scalar gaussian(long max_num = 9, long max_den = 5);
  Vec vector(std::size_t n, bool gaussian_entries = false);
  /// Invertible over Q, entries in [-2, 2].
  Mat invertible(std::size_t n);
  /// Random element of so(V,q) through the bivector isomorphism.
  Mat so_element(const QuadSpace& q);

 private:
  std::mt19937_64 gen_;
};

/// Runs the invariant suite. Scopes: "all", "clifford", "ks", "degeneration".
std::vector<CheckResult> run_verification(const std::string& scope,
                                          std::uint64_t seed);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace kslim

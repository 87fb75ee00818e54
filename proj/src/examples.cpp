#include "kslim/examples.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kslim {

namespace {

Mat diag(const std::vector<long>& entries) {
  Mat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = Scalar(entries[i]);
  return m;
}

struct BaseData {
  Mat gram;
  Mat n;
  Vec v_lim;
};

BaseData base_type_i() {
  Mat n(3, 3);
  Vec v{Scalar(1), Scalar::i(), Scalar(0)};
  return {diag({2, 2, -2}), std::move(n), std::move(v)};
}

// q(e1)=q(e2)=2, q(e3)=q(e4)=-2; N e1 = -N e4 = (e2+e3)/2,
// N e3 = -N e2 = (e1+e4)/2.
BaseData base_type_ii() {
  Mat n(4, 4);
  Scalar half = Scalar::rational(1, 2);
  n(1, 0) = half;
  n(2, 0) = half;
  n(0, 1) = -half;
  n(3, 1) = -half;
  n(0, 2) = half;
  n(3, 2) = half;
  n(1, 3) = -half;
  n(2, 3) = -half;
  Vec v{Scalar(1), Scalar::i(), Scalar(0), Scalar(0)};
  return {diag({2, 2, -2, -2}), std::move(n), std::move(v)};
}

// q(e1)=2, q(e2)=-2, q(e3)=2; N e1 = -e3, N e2 = e3, N e3 = e1 + e2.
BaseData base_type_iii() {
  Mat n(3, 3);
  n(2, 0) = Scalar(-1);
  n(2, 1) = Scalar(1);
  n(0, 2) = Scalar(1);
  n(1, 2) = Scalar(1);
  Vec v{Scalar(1), Scalar(0), -Scalar::i()};
  return {diag({2, -2, 2}), std::move(n), std::move(v)};
}

BaseData pad(BaseData base, std::size_t rank) {
  std::size_t r0 = base.gram.rows();
  if (rank == r0) return base;
  Mat gram(rank, rank);
  Mat n(rank, rank);
  for (std::size_t i = 0; i < r0; ++i)
    for (std::size_t j = 0; j < r0; ++j) {
      gram(i, j) = base.gram(i, j);
      n(i, j) = base.n(i, j);
    }
  for (std::size_t i = r0; i < rank; ++i) gram(i, i) = Scalar(-2);
  Vec v = base.v_lim;
  v.resize(rank);
  return {std::move(gram), std::move(n), std::move(v)};
}

}  // namespace

K3LimitMHS make_example(const ExampleSpec& spec) {
  std::size_t min_rank = spec.type == DegenerationType::II ? 4 : 3;
  if (spec.rank < min_rank)
    throw std::invalid_argument("type " + type_name(spec.type) +
                                " needs rank >= " + std::to_string(min_rank));

  BaseData base;
  switch (spec.type) {
    case DegenerationType::I: base = base_type_i(); break;
    case DegenerationType::II: base = base_type_ii(); break;
    case DegenerationType::III: base = base_type_iii(); break;
  }
  base = pad(std::move(base), spec.rank);

  // The basis constructions fix N and v_lim only up to sign/conjugation;
  // the validator arbitrates.
  QuadSpace space(base.gram);
  for (int flip_n = 0; flip_n < 2; ++flip_n) {
    for (int conj_v = 0; conj_v < 2; ++conj_v) {
      K3LimitMHS m{space, flip_n ? -base.n : base.n,
                   conj_v ? conj(base.v_lim) : base.v_lim};
      if (validate_pmhs_k3(m).ok()) return m;
    }
  }
  throw std::logic_error("no sign variant of " + example_name(spec) +
                         " validates");
}

std::string example_name(const ExampleSpec& spec) {
  return "EX-" + type_name(spec.type) + "." + std::to_string(spec.rank);
}

std::optional<ExampleSpec> parse_example_name(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(char(std::toupper(static_cast<unsigned char>(c))));
  if (s.rfind("EX-", 0) == 0) s = s.substr(3);
  std::size_t sep = s.find_first_of(".:");
  if (sep == std::string::npos) return std::nullopt;

  std::string roman = s.substr(0, sep);
  DegenerationType type;
  if (roman == "I")
    type = DegenerationType::I;
  else if (roman == "II")
    type = DegenerationType::II;
  else if (roman == "III")
    type = DegenerationType::III;
  else
    return std::nullopt;

  std::size_t rank = 0;
  try {
    std::size_t pos = 0;
    rank = std::stoul(s.substr(sep + 1), &pos);
    if (pos != s.size() - sep - 1) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return ExampleSpec{type, rank};
}

std::vector<ExampleSpec> builtin_examples() {
  return {{DegenerationType::I, 3},
          {DegenerationType::II, 4},
          {DegenerationType::III, 3}};
}

}  // namespace kslim

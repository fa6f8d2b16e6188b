#pragma once

// Verification suites: polytope side against the explicit-module oracle.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pbw/module.hpp"
#include "pbw/straighten.hpp"

namespace pbw {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const;
};

struct VerifyOptions {
  std::optional<Family> family;  // both when empty
  int max_rank = 0;              // 0: suite default
  int max_coeff = 2;
  std::uint64_t seed = 20240229;
  int samples = 0;               // 0: suite default
};

struct BasisReport {
  std::size_t dim = 0;
  std::size_t points = 0;
  bool independent = false;
  bool count_matches = false;
  std::size_t samples = 0;
  std::size_t integral = 0;  // samples with integral coordinates
  std::string detail;
  bool pass() const { return independent && count_matches && integral == samples; }
};

/// Independence and count of {f^(s) v : s in S(lambda)}, and integrality of
/// the coordinates of random f^(m) v in that basis.
BasisReport verify_basis(const ExplicitModule& mod, const Polytope& poly, int samples, std::uint64_t seed);

struct StraightenReport {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0; }
};

/// reduce() on each exponent: support in S(lambda), same degree and drop,
/// idempotent on its output, and f^(s) v - sum c_t f^(t) v in V_{deg s - 1}.
StraightenReport check_straightening(const ExplicitModule& mod, const Straightener& st,
                                     const std::vector<MultiExponent>& cases);

/// Random exponent of total degree at most max_degree.
MultiExponent random_exponent(std::size_t nroots, int max_degree, std::mt19937_64& rng);
/// All exponents of degree at most max_degree.
std::vector<MultiExponent> exponents_up_to(std::size_t nroots, int max_degree);

/// Graded characters must match exactly; returns a description of the first
/// mismatch, or empty.
std::string character_mismatch(const GradedCharacter& a, const GradedCharacter& b);

Report verify_dims(const VerifyOptions& o);
Report verify_table1(const VerifyOptions& o);
Report verify_characters(const VerifyOptions& o);
Report verify_freudenthal(const VerifyOptions& o);
Report verify_basis_suite(const VerifyOptions& o);
Report verify_straighten_suite(const VerifyOptions& o);
Report verify_minkowski(const VerifyOptions& o);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
Report run_suite(std::string_view name, const VerifyOptions& o);

struct Table1Entry {
  SimpleRootVector drop;
  std::vector<std::int64_t> poly;
};
/// (C,2), lambda = 2 omega_1 + omega_2, B_2 columns relabeled.
const std::vector<Table1Entry>& table1();

}  // namespace pbw

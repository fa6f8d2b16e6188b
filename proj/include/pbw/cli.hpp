#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace pbw {

struct CommandConfig {
  std::string subcommand;  // roots, paths, points, character, straighten, verify
  std::string family = "A";
  int rank = 1;
  std::string weight;     // "m1,m2,..."
  std::string exponent;   // "a[1,2]=2,a[2,2]=1"
  std::string format;     // text, json, csv; empty picks the subcommand default
  std::string suite;      // verify only
  bool family_given = false;
  int max_rank = 0;
  int max_coeff = 2;
  int samples = 0;
  std::uint64_t seed = 20240229;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

/// Runs one subcommand.  Diagnostics go to err.
int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace pbw

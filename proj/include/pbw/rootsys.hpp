#pragma once

// Positive roots of A_n and C_n in the two-index notation a[i,j] / a[i,~j].
//
// Type A_n:  a[i,j] = alpha_i + ... + alpha_j,              1 <= i <= j <= n.
// Type C_n:  a[i,j]  as above,                              1 <= i <= j <= n,
//            a[i,~j] = alpha_i + ... + alpha_n + alpha_{n-1} + ... + alpha_j,
//                                                           1 <= i <= j <= n-1.
// The root a[i,~n] coincides with a[i,n] and is always stored as a[i,n].
//
// Columns are ordered along the alphabet 1 < 2 < ... < n < ~(n-1) < ... < ~1.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbw {

enum class Family { A, C };

char family_letter(Family f);
Family parse_family(std::string_view s);

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

struct ColumnIndex {
  int k = 1;
  bool barred = false;

  static ColumnIndex plain(int k) { return {k, false}; }
  static ColumnIndex bar(int k) { return {k, true}; }

  friend bool operator==(const ColumnIndex&, const ColumnIndex&) = default;
};

/// Position of a column in the alphabet J of a rank-n system: plain k -> k,
/// barred k -> 2n - k.  Barred n is mapped onto plain n.
int j_position(ColumnIndex c, int rank);

struct PositiveRoot {
  int i = 1;
  ColumnIndex j;

  friend bool operator==(const PositiveRoot&, const PositiveRoot&) = default;
};

using RootId = int;

/// Coefficients over the simple roots alpha_1..alpha_n.
using SimpleRootVector = std::vector<int>;

enum class PairKind { Kill, TypeA2, C2_ad2, C2_ad3, C2_ad4, C2_ad5 };

const char* to_string(PairKind k);

/// Immutable table of the positive roots of one system, in canonical
/// row-major order (row i, then column in J-order).
class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }
  int rank() const { return spec_.rank; }
  std::size_t size() const { return roots_.size(); }

  std::span<const PositiveRoot> roots() const { return roots_; }
  const PositiveRoot& root(RootId id) const { return roots_[static_cast<std::size_t>(id)]; }

  /// Canonicalizes a[i,~n] to a[i,n]; empty if the pair is not a root here.
  std::optional<RootId> find(PositiveRoot r) const;
  std::optional<RootId> find(int i, ColumnIndex j) const { return find(PositiveRoot{i, j}); }
  /// Like find() but throws std::out_of_range.
  RootId index(PositiveRoot r) const;

  RootId simple(int i) const;
  bool is_simple(RootId id) const;
  /// a[j,~j] in type C (a[n,n] for j = n).
  bool is_symplectic_top(RootId id) const;

  std::span<const int> simple_coords(RootId id) const { return simple_[static_cast<std::size_t>(id)]; }
  /// Coordinates over eps_1..eps_{n+1} (A) or eps_1..eps_n (C).
  std::span<const int> eps_coords(RootId id) const { return eps_[static_cast<std::size_t>(id)]; }
  int height(RootId id) const;
  /// Long roots are the 2 eps_i of type C; every other root is short.
  bool is_long(RootId id) const;

  /// Root whose eps-coordinates equal v, if any.
  std::optional<RootId> from_eps(std::span<const int> v) const;
  /// var - op as a positive root, if it is one.
  std::optional<RootId> difference(RootId var, RootId op) const;

  /// Roots reachable in one Dyck step: a[p,q+1] first, then a[p+1,q].
  std::vector<RootId> successors(RootId id) const;

  PairKind classify(RootId op, RootId var) const;

  /// <beta, alpha_i^vee> for the simple coroot alpha_i^vee.
  int pairing(RootId beta, int i) const;

  std::string token(RootId id) const;
  /// Parses "a[i,j]" or "a[i,~j]"; throws std::invalid_argument naming the token.
  RootId parse_token(std::string_view tok) const;

 private:
  RootSystemSpec spec_;
  std::vector<PositiveRoot> roots_;
  std::vector<std::vector<int>> simple_;
  std::vector<std::vector<int>> eps_;
  std::vector<int> lookup_;  // (i-1) * (2n) + j_position - 1  ->  RootId or -1
};

RootSystemSpec make_spec(Family family, int rank);

std::vector<PositiveRoot> positive_roots(const RootSystemSpec& spec);
SimpleRootVector to_simple_coords(const RootSystemSpec& spec, const PositiveRoot& r);
std::vector<PositiveRoot> root_successors(const RootSystemSpec& spec, const PositiveRoot& r);
PairKind classify_pair(const RootSystemSpec& spec, const PositiveRoot& op, const PositiveRoot& var);

std::string root_token(const PositiveRoot& r);

}  // namespace pbw

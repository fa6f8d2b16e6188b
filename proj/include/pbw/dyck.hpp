#pragma once

#include <span>
#include <vector>

#include "pbw/rootsys.hpp"

namespace pbw {

struct DyckPath {
  std::vector<RootId> roots;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

/// s_{b(0)} + ... + s_{b(k)} <= m_low + ... + m_high
struct PathInequality {
  std::vector<RootId> roots;
  int low = 1;
  int high = 1;

  long long bound(std::span<const int> m) const;
};

/// Every (symplectic) Dyck path once: by start root, then depth first with
/// the a[p,q+1] branch before a[p+1,q].
std::vector<DyckPath> enumerate_paths(const RootSystem& rs);
std::vector<std::vector<PositiveRoot>> enumerate_paths(const RootSystemSpec& spec);

bool is_path(const RootSystem& rs, std::span<const RootId> seq);
bool is_path(const RootSystemSpec& spec, std::span<const PositiveRoot> seq);

/// Throws std::invalid_argument for a sequence that is not a path.
PathInequality path_inequality(const RootSystem& rs, const DyckPath& path);

std::string path_string(const RootSystem& rs, const DyckPath& path);

}  // namespace pbw

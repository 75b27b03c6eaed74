#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "tree.hpp"

namespace geomgroup {

/// Every shape with n leaves, built by splitting n = k + (n - k).
inline const std::vector<Tree>& all_shapes(std::size_t n) {
  static std::map<std::size_t, std::vector<Tree>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<Tree> out;
  if (n == 1) {
    out.push_back(bullet());
  } else {
    for (std::size_t k = 1; k < n; ++k)
      for (const auto& l : all_shapes(k))
        for (const auto& r : all_shapes(n - k)) out.push_back(l * r);
  }
  return memo.emplace(n, std::move(out)).first->second;
}

/// Every labelling of `shape` by a permutation of 1..n.
inline std::vector<Tree> all_labellings(const Tree& shape) {
  std::vector<int> perm(shape.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Tree> out;
  do {
    std::size_t k = 0;
    out.push_back(map_labels(shape, [&](int) { return perm[k++]; }));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::size_t catalan(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

inline std::size_t factorial(std::size_t n) { return n < 2 ? 1 : n * factorial(n - 1); }

}  // namespace geomgroup

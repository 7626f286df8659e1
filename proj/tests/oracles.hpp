#pragma once

// Brute-force reference implementations used only by tests. None of these
// call the enumeration or bijection code they are used to check.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;
using Segments = std::vector<Seq>;

/// Right-to-left minima straight from the definition (quadratic scan).
std::size_t rl_min(const Seq& s);
/// General descents straight from the definition.
std::size_t gdes(const Segments& d);

/// Every disposition of [m] into n segments: all functions [m] -> [n], then
/// every ordering of every preimage. Sorted lexicographically.
std::vector<Segments> all_dispositions(int m, int n);

/// Every plane tree on [n] as canonical text: all parent arrays with one root
/// and no cycle, then every ordering of every child list. Sorted.
std::vector<std::string> all_plane_tree_texts(int n, int root = 0);

/// Maximum-leaf removal, rescanning the whole tree at each step.
std::vector<int> prufer_marks(const std::vector<int>& parent);

/// sum_k c(m, k) n^k with unsigned Stirling numbers of the first kind.
std::uint64_t colored_permutation_count(int m, int n);

std::uint64_t factorial(int k);

}  // namespace oracle

#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dispo/disposition.hpp"
#include "dispo/polynomial.hpp"

namespace dispo {

/// A cycle stored as its standard word: the rotation ending at its minimum.
using Cycle = std::vector<Element>;

/// Rotation of `cycle` that ends at its minimum element.
Cycle standard_word(std::span<const Element> cycle);

/// Disjoint cycles sorted by increasing minima. The support is the union of
/// the cycles; `covers_ground_set()` tells whether it is exactly [m].
class CycleDecomposition {
 public:
  CycleDecomposition() = default;
  /// Cycles may be given in any rotation and any order.
  explicit CycleDecomposition(std::vector<Cycle> cycles);
  /// From one-line notation: image[i-1] = pi(i).
  static CycleDecomposition from_one_line(std::span<const Element> image);

  /// Number of elements in the support.
  std::size_t m() const noexcept { return m_; }
  std::size_t cycle_count() const noexcept { return cycles_.size(); }
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
  bool covers_ground_set() const noexcept;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<Cycle> cycles_;
};

/// Standard words in order of increasing minima, parentheses erased.
std::vector<Element> fundamental_bijection(const CycleDecomposition& p);
/// Cuts the word after each right-to-left minimum. Entries must be distinct.
CycleDecomposition word_to_cycles(std::span<const Element> word);

/// Permutation of [m] in cycle form with every cycle colored from [n].
class ColoredCyclePermutation {
 public:
  /// `colors[k]` colors `base.cycles()[k]`.
  ColoredCyclePermutation(CycleDecomposition base, std::vector<std::size_t> colors, std::size_t n);

  std::size_t m() const noexcept { return base_.m(); }
  std::size_t n() const noexcept { return n_; }
  const CycleDecomposition& base() const noexcept { return base_; }
  const std::vector<std::size_t>& colors() const noexcept { return colors_; }
  /// counts[i-1] = c_i, the number of cycles colored i.
  std::vector<std::size_t> color_counts() const;

  /// `(6 1)@6(8)@6`; the empty permutation is the empty string.
  std::string to_text() const;
  /// {"m": M, "n": N, "cycles": [[6, 1], [8]], "colors": [6, 6]}
  std::string to_json() const;

  friend bool operator==(const ColoredCyclePermutation&, const ColoredCyclePermutation&) = default;

 private:
  CycleDecomposition base_;
  std::vector<std::size_t> colors_;
  std::size_t n_ = 1;
};

/// Text form. A run of cycles followed by `@c` all take color c, so
/// `(6 1)(8)@6` and `(6 1)@6(8)@6` are the same object.
ColoredCyclePermutation parse_colored_text(std::string_view text, std::size_t n);
ColoredCyclePermutation parse_colored_json(std::string_view json);

/// D_i is the fundamental word of the cycles colored i.
Disposition colored_to_disposition(const ColoredCyclePermutation& p, std::size_t n);
Disposition colored_to_disposition(const ColoredCyclePermutation& p);
/// Cuts every segment into cycles and colors them with the segment index.
ColoredCyclePermutation disposition_to_colored(const Disposition& d);

using ColoredVisitor = std::function<void(const ColoredCyclePermutation&)>;

/// Permutations in lexicographic one-line order; for each, colorings in
/// mixed-radix order over the cycles sorted by minima (first cycle slowest).
void for_each_colored(std::size_t m, std::size_t n, const ColoredVisitor& visit);
std::vector<ColoredCyclePermutation> enumerate_colored(std::size_t m, std::size_t n);

/// sum over colored permutations of prod x_i^c_i, over x1..xn.
Polynomial cycle_color_generating_function(std::size_t m, std::size_t n);

}  // namespace dispo

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dispo/polynomial.hpp"

namespace dispo {

using Element = int;
using Segment = std::vector<Element>;

/// n linearly ordered (possibly empty) segments whose concatenation is a
/// permutation of [m]. Segment indices are 1-based at the interface.
class Disposition {
 public:
  /// Validates that the concatenated segments are exactly {1, ..., m}.
  explicit Disposition(std::vector<Segment> segments);

  /// The unique disposition of [0] into n segments.
  static Disposition empty(std::size_t n);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return segments_.size(); }
  /// D_i for 1 <= i <= n.
  const Segment& segment(std::size_t i) const;
  const std::vector<Segment>& segments() const noexcept { return segments_; }
  /// 1-based index of the segment holding `e`.
  std::size_t segment_of(Element e) const;

  /// `[2 9|7 4||5||6 1 8|3|]`
  std::string to_text() const;
  /// {"m": M, "n": N, "segments": [[...], ...]}
  std::string to_json() const;

  friend bool operator==(const Disposition&, const Disposition&) = default;
  friend auto operator<=>(const Disposition& a, const Disposition& b) { return a.segments_ <=> b.segments_; }

 private:
  std::size_t m_ = 0;
  std::vector<Segment> segments_;
};

Disposition parse_disposition_text(std::string_view text);
Disposition parse_disposition_json(std::string_view json);
/// Dispatches on the first non-blank character (`{` means JSON).
Disposition parse_disposition(std::string_view text);

struct DispositionStats {
  std::vector<std::size_t> rlmin;  // rlmin[i-1] = RLmin(D_i)
  std::size_t gdes = 0;
};

/// Number of right-to-left minima. Throws InvalidArgument on duplicates.
std::size_t rl_min(std::span<const Element> segment);
/// 0-based positions of the right-to-left minima, left to right.
std::vector<std::size_t> rl_min_positions(std::span<const Element> segment);
/// Number of indices whose entry exceeds some later entry of the same segment.
std::size_t gdes(const Disposition& d);
DispositionStats disposition_stats(const Disposition& d);

/// Inserts element m+1 into D_segment (1-based) before the entry at
/// `position` (0-based; position == |D_segment| appends).
Disposition insert_element(const Disposition& d, std::size_t segment, std::size_t position);

using DispositionVisitor = std::function<void(const Disposition&)>;

/// Streams every disposition of [m] into n segments once. Order: recursive
/// insertion of 1, 2, ..., m; at each step segments left to right, positions
/// front to back.
void for_each_disposition(std::size_t m, std::size_t n, const DispositionVisitor& visit);
std::vector<Disposition> enumerate_dispositions(std::size_t m, std::size_t n);

/// n (n+1) ... (n+m-1); throws OverflowError when it does not fit.
std::uint64_t rising_factorial(std::uint64_t n, std::uint64_t m);

/// sum over D of t^gdes(D) prod x_i^RLmin(D_i), over x1..xn,t.
Polynomial disposition_generating_function(std::size_t m, std::size_t n);

/// Exactly uniform sampler over dispositions of [m] into n segments: step k
/// picks one of the n+k-1 insertion slots uniformly.
class DispositionSampler {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit DispositionSampler(std::uint64_t seed) : engine_(seed) {}
  Disposition operator()(std::size_t m, std::size_t n);

 private:
  std::mt19937_64 engine_;
};

Disposition sample_uniform(std::size_t m, std::size_t n, std::uint64_t seed);

}  // namespace dispo

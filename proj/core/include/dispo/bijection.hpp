#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dispo/disposition.hpp"
#include "dispo/plane_tree.hpp"

namespace dispo {

/// Bijection from vertex labels [n] to marks {0, ..., n-1}.
class MarkTable {
 public:
  /// marks[v-1] is the mark of vertex v.
  explicit MarkTable(std::vector<int> marks);

  std::size_t n() const noexcept { return mark_.size(); }
  int mark(Label v) const;
  Label label_of(int mark) const;
  const std::vector<int>& marks() const noexcept { return mark_; }

  /// Vertices by decreasing mark, e.g. `6:5 4:4 3:3 1:2 5:1 2:0`.
  std::string to_text() const;
  /// {"marks": {"vertex": mark, ...}}
  std::string to_json() const;

  friend bool operator==(const MarkTable&, const MarkTable&) = default;

 private:
  std::vector<int> mark_;
  std::vector<Label> label_;
};

/// Repeatedly deletes the largest current leaf, marking it n-1, n-2, ...;
/// the root ends with 0. Child order plays no role.
MarkTable prufer_marks(const PlaneTree& t);
MarkTable prufer_marks(const RootedTree& t);

/// D_i lists the marks of i's children in child order. The result is a
/// disposition of [n-1] into n segments.
Disposition phi(const PlaneTree& t);

/// Recovers the marks from a disposition of [n-1] into n segments: for
/// c = n-1 down to 1, the rightmost unmarked index whose segment is empty
/// gets mark c, then element c is removed from its segment. The last index
/// left gets 0. Throws InvariantViolation if no empty segment is available.
MarkTable marks_from_disposition(const Disposition& d);

/// Inverse of phi: the vertex marked 0 is the root and the children of i are
/// the vertices whose marks are listed in D_i, in that order.
PlaneTree phi_inverse(const Disposition& d);

/// n unordered blocks covering [m], each stored sorted ascending.
class Decomposition {
 public:
  explicit Decomposition(std::vector<std::vector<Element>> blocks);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Element>>& blocks() const noexcept { return blocks_; }
  /// Each block in ascending order, as a disposition.
  Disposition lift() const;

  /// {"m": M, "n": N, "blocks": [[...], ...]}
  std::string to_json() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<std::vector<Element>> blocks_;
};

Decomposition parse_decomposition_json(std::string_view json);

/// Block i holds the marks of vertex i's children.
Decomposition tree_to_decomposition(const RootedTree& t);
/// Lifts to a disposition, applies phi_inverse and forgets child order.
RootedTree decomposition_to_tree(const Decomposition& dec);

}  // namespace dispo

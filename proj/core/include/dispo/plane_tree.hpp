#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dispo/polynomial.hpp"

namespace dispo {

using Label = int;

/// Labeled rooted tree on [n] whose children are linearly ordered.
class PlaneTree {
 public:
  /// `children[v]` lists the children of v in order; index 0 is unused, so
  /// the table has n+1 entries. Throws InvalidArgument unless the table
  /// describes a tree on [n] rooted at `root`.
  PlaneTree(Label root, std::vector<std::vector<Label>> children);

  static PlaneTree single_vertex() { return PlaneTree(1, {{}, {}}); }

  std::size_t n() const noexcept { return children_.size() - 1; }
  Label root() const noexcept { return root_; }
  std::span<const Label> children(Label v) const;
  /// 0 for the root.
  Label parent(Label v) const;
  const std::vector<std::vector<Label>>& child_table() const noexcept { return children_; }

  /// Canonical text: root-first preorder, e.g. `2(4(6) 5(3 1))`.
  std::string to_text() const;
  /// {"n": N, "tree": {"label": v, "children": [...]}}
  std::string to_json() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

 private:
  Label root_;
  std::vector<std::vector<Label>> children_;
  std::vector<Label> parent_;

  void require_label(Label v) const;
};

PlaneTree parse_tree_text(std::string_view text);
PlaneTree parse_tree_json(std::string_view json);
/// Dispatches on the first non-blank character (`{` means JSON).
PlaneTree parse_tree(std::string_view text);

/// Per-vertex statistics; vectors are indexed by label (entry 0 unused).
struct TreeStats {
  std::vector<Label> beta;
  std::vector<std::size_t> young_children;
  std::vector<std::size_t> eld_children;
  std::size_t eld_total = 0;
  std::size_t young_total = 0;
};

/// Smallest label in the subtree rooted at v (v included).
Label beta(const PlaneTree& t, Label v);
/// True iff some brother to the right of v has a smaller beta.
bool is_elder(const PlaneTree& t, Label v);
/// Right-to-left minima of the beta sequence of v's children.
std::size_t young_children(const PlaneTree& t, Label v);
std::size_t eld_children(const PlaneTree& t, Label v);
std::size_t eld_total(const PlaneTree& t);
/// Younger vertices, the root included.
std::size_t young_total(const PlaneTree& t);
TreeStats tree_stats(const PlaneTree& t);

using TreeVisitor = std::function<void(const PlaneTree&)>;

/// Streams every plane tree on [n] (with the given root, when set) once.
/// The root is chosen first; the remaining labels are then split into an
/// ordered sequence of nonempty blocks, one per subtree, recursively. This
/// never goes through the disposition correspondence.
void for_each_plane_tree(std::size_t n, std::optional<Label> root, const TreeVisitor& visit);
std::vector<PlaneTree> enumerate_plane_trees(std::size_t n, std::optional<Label> root = std::nullopt);

/// (2n-2)!/(n-1)!
std::uint64_t plane_tree_count(std::size_t n);
/// (2n-2)!/n!
std::uint64_t rooted_plane_tree_count(std::size_t n);

/// sum over T of t^eld(T) prod x_i^young_T(i), over x1..xn,t.
Polynomial tree_generating_function(std::size_t n, std::optional<Label> root = std::nullopt);

/// Labeled rooted tree with unordered children, stored as a parent array
/// (parent[root] = 0, index 0 unused).
class RootedTree {
 public:
  explicit RootedTree(std::vector<Label> parent);
  static RootedTree forget_order(const PlaneTree& t);

  std::size_t n() const noexcept { return parent_.size() - 1; }
  Label root() const noexcept { return root_; }
  Label parent(Label v) const { return parent_.at(static_cast<std::size_t>(v)); }
  const std::vector<Label>& parents() const noexcept { return parent_; }
  /// Children of v in ascending label order.
  std::vector<Label> children(Label v) const;
  /// Plane tree with every child list sorted ascending.
  PlaneTree to_plane_tree() const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  std::vector<Label> parent_;
  Label root_ = 0;
};

}  // namespace dispo

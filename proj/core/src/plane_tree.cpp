#include "dispo/plane_tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <json.hpp>

#include "dispo/disposition.hpp"
#include "dispo/error.hpp"

namespace dispo {

namespace {

// Parent table for a child table; throws unless it is a tree on [n] at root.
std::vector<Label> validate_tree(Label root, const std::vector<std::vector<Label>>& children) {
  if (children.size() < 2) throw InvalidArgument("plane tree needs at least one vertex");
  const auto n = static_cast<Label>(children.size() - 1);
  if (!children[0].empty()) throw InvalidArgument("child table entry 0 must be empty");
  if (root < 1 || root > n) throw InvalidArgument("root outside [n]");
  std::vector<Label> parent(children.size(), -1);
  parent[root] = 0;
  for (Label v = 1; v <= n; ++v) {
    for (Label c : children[v]) {
      if (c < 1 || c > n) throw InvalidArgument("child label " + std::to_string(c) + " outside [n]");
      if (c == root) throw InvalidArgument("root cannot be a child");
      if (parent[c] != -1) throw InvalidArgument("vertex " + std::to_string(c) + " has two parents");
      parent[c] = v;
    }
  }
  // connectivity from the root rules out cycles among the remaining edges
  std::vector<Label> stack{root};
  std::size_t reached = 0;
  while (!stack.empty()) {
    Label v = stack.back();
    stack.pop_back();
    ++reached;
    for (Label c : children[v]) stack.push_back(c);
    if (reached > static_cast<std::size_t>(n)) break;
  }
  if (reached != static_cast<std::size_t>(n)) throw InvalidArgument("child table is not a connected tree");
  return parent;
}

}  // namespace

PlaneTree::PlaneTree(Label root, std::vector<std::vector<Label>> children)
    : root_(root), children_(std::move(children)) {
  parent_ = validate_tree(root_, children_);
}

void PlaneTree::require_label(Label v) const {
  if (v < 1 || static_cast<std::size_t>(v) > n()) throw InvalidArgument("unknown vertex label " + std::to_string(v));
}

std::span<const Label> PlaneTree::children(Label v) const {
  require_label(v);
  return children_[static_cast<std::size_t>(v)];
}

Label PlaneTree::parent(Label v) const {
  require_label(v);
  return parent_[static_cast<std::size_t>(v)];
}

std::string PlaneTree::to_text() const {
  std::string out;
  auto emit = [&](auto&& self, Label v) -> void {
    out += std::to_string(v);
    const auto& kids = children_[static_cast<std::size_t>(v)];
    if (kids.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i > 0) out += ' ';
      self(self, kids[i]);
    }
    out += ')';
  };
  emit(emit, root_);
  return out;
}

std::string PlaneTree::to_json() const {
  auto node = [&](auto&& self, Label v) -> nlohmann::ordered_json {
    nlohmann::ordered_json j;
    j["label"] = v;
    auto kids = nlohmann::ordered_json::array();
    for (Label c : children_[static_cast<std::size_t>(v)]) kids.push_back(self(self, c));
    j["children"] = std::move(kids);
    return j;
  };
  nlohmann::ordered_json j;
  j["n"] = n();
  j["tree"] = node(node, root_);
  return j.dump();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Edge {
  Label parent;
  Label child;
};

PlaneTree assemble(Label root, const std::vector<Label>& labels, const std::vector<Edge>& edges) {
  const auto n = labels.size();
  std::vector<bool> seen(n + 1, false);
  for (Label v : labels) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw ParseError("label " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
    if (seen[v]) throw ParseError("label " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  std::vector<std::vector<Label>> children(n + 1);
  for (const auto& e : edges) children[e.parent].push_back(e.child);
  try {
    return PlaneTree(root, std::move(children));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  PlaneTree parse() {
    skip_ws();
    Label root = node();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return assemble(root, labels_, edges_);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<Label> labels_;
  std::vector<Edge> edges_;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree text: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Label label() {
    Label v{};
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == s_.data() + pos_) fail("expected label");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  Label node() {
    Label v = label();
    labels_.push_back(v);
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ')') fail("empty child list");
      while (true) {
        Label c = node();
        edges_.push_back({v, c});
        skip_ws();
        if (pos_ >= s_.size()) fail("unterminated child list");
        if (s_[pos_] == ')') {
          ++pos_;
          break;
        }
      }
    }
    return v;
  }
};

Label json_node(const nlohmann::json& j, std::vector<Label>& labels, std::vector<Edge>& edges) {
  const Label v = j.at("label").get<Label>();
  labels.push_back(v);
  if (j.contains("children")) {
    for (const auto& c : j.at("children")) edges.push_back({v, json_node(c, labels, edges)});
  }
  return v;
}

}  // namespace

PlaneTree parse_tree_text(std::string_view text) { return TextParser(text).parse(); }

PlaneTree parse_tree_json(std::string_view json) {
  std::vector<Label> labels;
  std::vector<Edge> edges;
  Label root = 0;
  std::optional<std::size_t> declared_n;
  try {
    auto j = nlohmann::json::parse(json);
    if (j.contains("n")) declared_n = j["n"].get<std::size_t>();
    root = json_node(j.contains("tree") ? j.at("tree") : j, labels, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad tree JSON: ") + e.what());
  }
  if (declared_n && *declared_n != labels.size()) throw ParseError("tree JSON: n disagrees with vertex count");
  return assemble(root, labels, edges);
}

PlaneTree parse_tree(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return parse_tree_json(text);
  return parse_tree_text(text);
}

// ---------------------------------------------------------------------------
// Statistics

Label beta(const PlaneTree& t, Label v) {
  Label best = v;
  for (Label c : t.children(v)) best = std::min(best, beta(t, c));
  return best;
}

bool is_elder(const PlaneTree& t, Label v) {
  const Label p = t.parent(v);
  if (p == 0) return false;
  const auto siblings = t.children(p);
  auto it = std::find(siblings.begin(), siblings.end(), v);
  const Label bv = beta(t, v);
  for (++it; it != siblings.end(); ++it)
    if (beta(t, *it) < bv) return true;
  return false;
}

std::size_t young_children(const PlaneTree& t, Label v) {
  std::vector<Element> betas;
  for (Label c : t.children(v)) betas.push_back(beta(t, c));
  return rl_min(betas);
}

std::size_t eld_children(const PlaneTree& t, Label v) { return t.children(v).size() - young_children(t, v); }

TreeStats tree_stats(const PlaneTree& t) {
  const auto n = t.n();
  TreeStats st;
  st.beta.assign(n + 1, 0);
  st.young_children.assign(n + 1, 0);
  st.eld_children.assign(n + 1, 0);

  // children are visited before parents in reverse preorder
  std::vector<Label> order;
  order.reserve(n);
  std::vector<Label> stack{t.root()};
  while (!stack.empty()) {
    Label v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Label c : t.children(v)) stack.push_back(c);
  }
  std::vector<Element> betas;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Label v = *it;
    Label b = v;
    betas.clear();
    for (Label c : t.children(v)) {
      betas.push_back(st.beta[c]);
      b = std::min(b, st.beta[c]);
    }
    st.beta[v] = b;
    st.young_children[v] = rl_min(betas);
    st.eld_children[v] = betas.size() - st.young_children[v];
    st.eld_total += st.eld_children[v];
  }
  st.young_total = n - st.eld_total;
  return st;
}

std::size_t eld_total(const PlaneTree& t) { return tree_stats(t).eld_total; }
std::size_t young_total(const PlaneTree& t) { return tree_stats(t).young_total; }

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class ForestWalk {
 public:
  using Continuation = std::function<void()>;

  ForestWalk(std::size_t n, const TreeVisitor& visit) : children_(n + 1), visit_(visit) {}

  void from_root(Label root, std::uint32_t all) {
    forest(all & ~bit(root), root, [&] { visit_(PlaneTree(root, children_)); });
  }

 private:
  std::vector<std::vector<Label>> children_;
  const TreeVisitor& visit_;

  static std::uint32_t bit(Label v) { return std::uint32_t{1} << (v - 1); }

  // Appends an ordered forest on the labels in `mask` as the next children
  // of `parent`, then runs `done`.
  void forest(std::uint32_t mask, Label parent, const Continuation& done) {
    if (mask == 0) {
      done();
      return;
    }
    // nonempty submasks of mask in ascending order
    for (std::uint32_t block = mask & (~mask + 1); block != 0; block = (block - mask) & mask) {
      const std::uint32_t rest = mask & ~block;
      for (std::uint32_t bits = block; bits != 0; bits &= bits - 1) {
        const Label sub_root = static_cast<Label>(__builtin_ctz(bits)) + 1;
        children_[parent].push_back(sub_root);
        forest(block & ~bit(sub_root), sub_root, [&] { forest(rest, parent, done); });
        children_[parent].pop_back();
      }
    }
  }
};

}  // namespace

void for_each_plane_tree(std::size_t n, std::optional<Label> root, const TreeVisitor& visit) {
  if (n < 1) throw InvalidArgument("plane trees need n >= 1");
  if (n > 31) throw InvalidArgument("plane tree enumeration supports n <= 31");
  if (root && (*root < 1 || static_cast<std::size_t>(*root) > n)) throw InvalidArgument("root outside [n]");
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  ForestWalk walk(n, visit);
  for (Label r = 1; r <= static_cast<Label>(n); ++r) {
    if (root && *root != r) continue;
    walk.from_root(r, all);
  }
}

std::vector<PlaneTree> enumerate_plane_trees(std::size_t n, std::optional<Label> root) {
  std::vector<PlaneTree> out;
  for_each_plane_tree(n, root, [&](const PlaneTree& t) { out.push_back(t); });
  return out;
}

namespace {

std::uint64_t product_range(std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t r = 1;
  for (std::uint64_t k = lo; k <= hi; ++k)
    if (__builtin_mul_overflow(r, k, &r)) throw OverflowError("tree count overflow");
  return r;
}

}  // namespace

std::uint64_t plane_tree_count(std::size_t n) {
  if (n < 1) throw InvalidArgument("plane trees need n >= 1");
  return product_range(n, 2 * n - 2);
}

std::uint64_t rooted_plane_tree_count(std::size_t n) {
  if (n < 1) throw InvalidArgument("plane trees need n >= 1");
  return product_range(n + 1, 2 * n - 2);
}

Polynomial tree_generating_function(std::size_t n, std::optional<Label> root) {
  Polynomial sum(VariableContext::x_vars_t(n));
  Monomial mono = Monomial::one(n + 1);
  for_each_plane_tree(n, root, [&](const PlaneTree& t) {
    const auto st = tree_stats(t);
    for (std::size_t i = 1; i <= n; ++i) mono[i - 1] = static_cast<std::uint32_t>(st.young_children[i]);
    mono[n] = static_cast<std::uint32_t>(st.eld_total);
    sum.add_term(mono, 1);
  });
  return sum;
}

// ---------------------------------------------------------------------------
// RootedTree

RootedTree::RootedTree(std::vector<Label> parent) : parent_(std::move(parent)) {
  if (parent_.size() < 2) throw InvalidArgument("rooted tree needs at least one vertex");
  const auto n = static_cast<Label>(parent_.size() - 1);
  parent_[0] = 0;
  for (Label v = 1; v <= n; ++v) {
    const Label p = parent_[v];
    if (p == 0) {
      if (root_ != 0) throw InvalidArgument("rooted tree has two roots");
      root_ = v;
    } else if (p < 1 || p > n || p == v) {
      throw InvalidArgument("bad parent for vertex " + std::to_string(v));
    }
  }
  if (root_ == 0) throw InvalidArgument("rooted tree has no root");
  // every vertex must reach the root within n steps
  for (Label v = 1; v <= n; ++v) {
    Label u = v;
    for (Label step = 0; step < n && u != root_; ++step) u = parent_[u];
    if (u != root_) throw InvalidArgument("parent array has a cycle");
  }
}

RootedTree RootedTree::forget_order(const PlaneTree& t) {
  std::vector<Label> parent(t.n() + 1, 0);
  for (Label v = 1; v <= static_cast<Label>(t.n()); ++v) parent[v] = t.parent(v);
  return RootedTree(std::move(parent));
}

std::vector<Label> RootedTree::children(Label v) const {
  std::vector<Label> out;
  for (Label c = 1; c <= static_cast<Label>(n()); ++c)
    if (parent_[c] == v) out.push_back(c);
  return out;
}

PlaneTree RootedTree::to_plane_tree() const {
  std::vector<std::vector<Label>> children(n() + 1);
  for (Label c = 1; c <= static_cast<Label>(n()); ++c)
    if (parent_[c] != 0) children[parent_[c]].push_back(c);
  return PlaneTree(root_, std::move(children));
}

}  // namespace dispo

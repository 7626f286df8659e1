#include "dispo/bijection.hpp"

#include <algorithm>
#include <queue>

#include <json.hpp>

#include "dispo/error.hpp"

namespace dispo {

MarkTable::MarkTable(std::vector<int> marks) : mark_(std::move(marks)), label_(mark_.size(), 0) {
  const auto n = static_cast<int>(mark_.size());
  for (int v = 1; v <= n; ++v) {
    const int mk = mark_[v - 1];
    if (mk < 0 || mk >= n) throw InvalidArgument("mark " + std::to_string(mk) + " outside {0..n-1}");
    if (label_[mk] != 0) throw InvalidArgument("mark " + std::to_string(mk) + " used twice");
    label_[mk] = v;
  }
}

int MarkTable::mark(Label v) const {
  if (v < 1 || static_cast<std::size_t>(v) > mark_.size()) throw InvalidArgument("unknown vertex label");
  return mark_[v - 1];
}

Label MarkTable::label_of(int mark) const {
  if (mark < 0 || static_cast<std::size_t>(mark) >= label_.size()) throw InvalidArgument("unknown mark");
  return label_[mark];
}

std::string MarkTable::to_text() const {
  std::string out;
  for (auto mk = static_cast<int>(label_.size()); mk-- > 0;) {
    if (!out.empty()) out += ' ';
    out += std::to_string(label_[mk]) + ':' + std::to_string(mk);
  }
  return out;
}

std::string MarkTable::to_json() const {
  nlohmann::ordered_json marks = nlohmann::ordered_json::object();
  for (std::size_t v = 1; v <= mark_.size(); ++v) marks[std::to_string(v)] = mark_[v - 1];
  nlohmann::ordered_json j;
  j["marks"] = std::move(marks);
  return j.dump();
}

// ---------------------------------------------------------------------------
// Tree side

namespace {

// parent[v] for v in [n], 0 at the root
MarkTable marks_from_parents(const std::vector<Label>& parent) {
  const auto n = static_cast<int>(parent.size() - 1);
  std::vector<int> remaining(parent.size(), 0);
  for (int v = 1; v <= n; ++v)
    if (parent[v] != 0) ++remaining[parent[v]];
  std::priority_queue<Label> leaves;
  for (int v = 1; v <= n; ++v)
    if (remaining[v] == 0) leaves.push(v);
  std::vector<int> marks(static_cast<std::size_t>(n), -1);
  for (int mk = n - 1; mk >= 0; --mk) {
    if (leaves.empty()) throw InvariantViolation("marking ran out of leaves");
    const Label leaf = leaves.top();
    leaves.pop();
    marks[leaf - 1] = mk;
    const Label p = parent[leaf];
    if (p != 0 && --remaining[p] == 0) leaves.push(p);
  }
  return MarkTable(std::move(marks));
}

}  // namespace

MarkTable prufer_marks(const PlaneTree& t) { return prufer_marks(RootedTree::forget_order(t)); }

MarkTable prufer_marks(const RootedTree& t) { return marks_from_parents(t.parents()); }

Disposition phi(const PlaneTree& t) {
  const auto marks = prufer_marks(t);
  std::vector<Segment> segments(t.n());
  for (Label v = 1; v <= static_cast<Label>(t.n()); ++v)
    for (Label c : t.children(v)) segments[v - 1].push_back(marks.mark(c));
  return Disposition(std::move(segments));
}

// ---------------------------------------------------------------------------
// Disposition side

MarkTable marks_from_disposition(const Disposition& d) {
  const auto n = d.n();
  if (d.m() + 1 != n) throw InvalidArgument("marks_from_disposition needs a disposition of [n-1] into n segments");
  std::vector<std::size_t> size(n);
  std::vector<std::size_t> home(n, 0);  // home[e] = 0-based segment holding element e
  for (std::size_t i = 0; i < n; ++i) {
    size[i] = d.segments()[i].size();
    for (Element e : d.segments()[i]) home[static_cast<std::size_t>(e)] = i;
  }
  std::vector<int> marks(n, -1);
  for (auto c = static_cast<int>(n) - 1; c >= 1; --c) {
    std::size_t pick = n;
    for (std::size_t i = n; i-- > 0;) {
      if (marks[i] == -1 && size[i] == 0) {
        pick = i;
        break;
      }
    }
    if (pick == n) throw InvariantViolation("no unmarked empty segment while marking " + std::to_string(c));
    marks[pick] = c;
    --size[home[static_cast<std::size_t>(c)]];
  }
  auto last = std::find(marks.begin(), marks.end(), -1);
  *last = 0;
  return MarkTable(std::move(marks));
}

PlaneTree phi_inverse(const Disposition& d) {
  const auto marks = marks_from_disposition(d);
  const auto n = d.n();
  const Label root = marks.label_of(0);
  std::vector<std::vector<Label>> children(n + 1);
  std::vector<Label> pending{root};
  std::size_t placed = 1;
  // top-down from the root; siblings are expanded left to right
  for (std::size_t head = 0; head < pending.size(); ++head) {
    const Label v = pending[head];
    for (Element a : d.segment(static_cast<std::size_t>(v))) {
      const Label b = marks.label_of(a);
      children[v].push_back(b);
      pending.push_back(b);
      if (++placed > n) throw InvariantViolation("phi_inverse revisited a vertex");
    }
  }
  if (placed != n) throw InvariantViolation("phi_inverse did not reach every vertex");
  return PlaneTree(root, std::move(children));
}

// ---------------------------------------------------------------------------
// Decompositions

Decomposition::Decomposition(std::vector<std::vector<Element>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  // validation shares the disposition rules
  m_ = Disposition(blocks_).m();
}

Disposition Decomposition::lift() const { return Disposition(blocks_); }

std::string Decomposition::to_json() const {
  nlohmann::ordered_json j;
  j["m"] = m_;
  j["n"] = blocks_.size();
  j["blocks"] = blocks_;
  return j.dump();
}

Decomposition parse_decomposition_json(std::string_view json) {
  try {
    auto j = nlohmann::json::parse(json);
    Decomposition dec(j.at("blocks").get<std::vector<std::vector<Element>>>());
    if (j.contains("m") && j["m"].get<std::size_t>() != dec.m()) throw ParseError("decomposition JSON: m mismatch");
    if (j.contains("n") && j["n"].get<std::size_t>() != dec.n()) throw ParseError("decomposition JSON: n mismatch");
    return dec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad decomposition JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Decomposition tree_to_decomposition(const RootedTree& t) {
  const auto marks = prufer_marks(t);
  std::vector<std::vector<Element>> blocks(t.n());
  for (Label v = 1; v <= static_cast<Label>(t.n()); ++v) {
    const Label p = t.parent(v);
    if (p != 0) blocks[p - 1].push_back(marks.mark(v));
  }
  return Decomposition(std::move(blocks));
}

RootedTree decomposition_to_tree(const Decomposition& dec) {
  return RootedTree::forget_order(phi_inverse(dec.lift()));
}

}  // namespace dispo

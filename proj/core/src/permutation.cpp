#include "dispo/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include <json.hpp>

#include "dispo/error.hpp"

namespace dispo {

Cycle standard_word(std::span<const Element> cycle) {
  if (cycle.empty()) throw InvalidArgument("standard_word of an empty cycle");
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  Cycle word(min_it + 1, cycle.end());
  word.insert(word.end(), cycle.begin(), min_it + 1);
  return word;
}

CycleDecomposition::CycleDecomposition(std::vector<Cycle> cycles) {
  std::vector<Element> all;
  for (auto& c : cycles) {
    c = standard_word(c);
    all.insert(all.end(), c.begin(), c.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw InvalidArgument("cycles are not disjoint");
  if (!all.empty() && all.front() < 1) throw InvalidArgument("cycle entries must be positive");
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) { return a.back() < b.back(); });
  m_ = all.size();
  cycles_ = std::move(cycles);
}

bool CycleDecomposition::covers_ground_set() const noexcept {
  std::vector<bool> seen(m_ + 1, false);
  for (const auto& c : cycles_)
    for (Element e : c) {
      if (static_cast<std::size_t>(e) > m_) return false;
      seen[e] = true;
    }
  return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

CycleDecomposition CycleDecomposition::from_one_line(std::span<const Element> image) {
  const auto m = image.size();
  std::vector<bool> seen(m + 1, false);
  for (Element e : image) {
    if (e < 1 || static_cast<std::size_t>(e) > m || seen[e]) throw InvalidArgument("not a permutation in one-line form");
    seen[e] = true;
  }
  std::vector<bool> used(m + 1, false);
  std::vector<Cycle> cycles;
  for (Element start = 1; start <= static_cast<Element>(m); ++start) {
    if (used[start]) continue;
    Cycle c;
    for (Element e = start; !used[e]; e = image[e - 1]) {
      used[e] = true;
      c.push_back(e);
    }
    cycles.push_back(std::move(c));
  }
  return CycleDecomposition(std::move(cycles));
}

std::vector<Element> fundamental_bijection(const CycleDecomposition& p) {
  std::vector<Element> word;
  for (const auto& c : p.cycles()) word.insert(word.end(), c.begin(), c.end());
  return word;
}

CycleDecomposition word_to_cycles(std::span<const Element> word) {
  const auto cuts = rl_min_positions(word);
  std::vector<Cycle> cycles;
  std::size_t begin = 0;
  for (std::size_t cut : cuts) {
    cycles.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(begin), word.begin() + static_cast<std::ptrdiff_t>(cut) + 1);
    begin = cut + 1;
  }
  return CycleDecomposition(std::move(cycles));
}

// ---------------------------------------------------------------------------
// ColoredCyclePermutation

ColoredCyclePermutation::ColoredCyclePermutation(CycleDecomposition base, std::vector<std::size_t> colors, std::size_t n)
    : base_(std::move(base)), colors_(std::move(colors)), n_(n) {
  if (n_ < 1) throw InvalidArgument("colored permutation needs n >= 1");
  if (!base_.covers_ground_set()) throw InvalidArgument("cycles must cover [m]");
  if (colors_.size() != base_.cycle_count()) throw InvalidArgument("one color per cycle required");
  for (auto c : colors_)
    if (c < 1 || c > n_) throw InvalidArgument("color " + std::to_string(c) + " outside [" + std::to_string(n_) + "]");
}

std::vector<std::size_t> ColoredCyclePermutation::color_counts() const {
  std::vector<std::size_t> counts(n_, 0);
  for (auto c : colors_) ++counts[c - 1];
  return counts;
}

std::string ColoredCyclePermutation::to_text() const {
  std::string out;
  for (std::size_t k = 0; k < base_.cycle_count(); ++k) {
    out += '(';
    const auto& c = base_.cycles()[k];
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(c[j]);
    }
    out += ")@" + std::to_string(colors_[k]);
  }
  return out;
}

std::string ColoredCyclePermutation::to_json() const {
  nlohmann::ordered_json j;
  j["m"] = m();
  j["n"] = n_;
  j["cycles"] = base_.cycles();
  j["colors"] = colors_;
  return j.dump();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  template <class T>
  T number() {
    skip_ws();
    T v{};
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc() || ptr == s.data() + pos) throw ParseError("cycle text: expected number at offset " + std::to_string(pos));
    pos = static_cast<std::size_t>(ptr - s.data());
    return v;
  }
};

}  // namespace

ColoredCyclePermutation parse_colored_text(std::string_view text, std::size_t n) {
  Cursor cur{text};
  std::vector<Cycle> cycles;
  std::vector<std::size_t> colors;
  std::size_t uncolored = 0;  // cycles waiting for the next @c
  cur.skip_ws();
  while (cur.pos < text.size()) {
    if (cur.at('(')) {
      ++cur.pos;
      Cycle c;
      while (!cur.at(')')) {
        if (cur.pos >= text.size()) throw ParseError("cycle text: unterminated cycle");
        c.push_back(cur.number<Element>());
      }
      ++cur.pos;
      if (c.empty()) throw ParseError("cycle text: empty cycle");
      cycles.push_back(std::move(c));
      ++uncolored;
    } else if (cur.at('@')) {
      ++cur.pos;
      if (uncolored == 0) throw ParseError("cycle text: color without a cycle");
      const auto color = cur.number<std::size_t>();
      colors.insert(colors.end(), uncolored, color);
      uncolored = 0;
    } else {
      throw ParseError("cycle text: unexpected character at offset " + std::to_string(cur.pos));
    }
    cur.skip_ws();
  }
  if (uncolored != 0) throw ParseError("cycle text: trailing cycles without a color");

  // pair colors with cycles before the decomposition reorders them by minima
  std::vector<std::pair<Element, std::size_t>> color_by_min;
  for (std::size_t k = 0; k < cycles.size(); ++k)
    color_by_min.emplace_back(*std::min_element(cycles[k].begin(), cycles[k].end()), colors[k]);
  std::sort(color_by_min.begin(), color_by_min.end());
  std::vector<std::size_t> sorted_colors;
  for (const auto& [mn, c] : color_by_min) sorted_colors.push_back(c);
  try {
    return ColoredCyclePermutation(CycleDecomposition(std::move(cycles)), std::move(sorted_colors), n);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

ColoredCyclePermutation parse_colored_json(std::string_view json) {
  try {
    auto j = nlohmann::json::parse(json);
    const auto n = j.at("n").get<std::size_t>();
    auto cycles = j.at("cycles").get<std::vector<Cycle>>();
    auto colors = j.at("colors").get<std::vector<std::size_t>>();
    if (cycles.size() != colors.size()) throw ParseError("colored JSON: cycles and colors differ in length");
    std::string text;
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      text += '(';
      for (Element e : cycles[k]) text += std::to_string(e) + ' ';
      text += ")@" + std::to_string(colors[k]);
    }
    auto p = parse_colored_text(text, n);
    if (j.contains("m") && j["m"].get<std::size_t>() != p.m()) throw ParseError("colored JSON: m disagrees with cycles");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad colored permutation JSON: ") + e.what());
  }
}

Disposition colored_to_disposition(const ColoredCyclePermutation& p, std::size_t n) {
  std::vector<Segment> segments(n);
  const auto& cycles = p.base().cycles();
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    const auto color = p.colors()[k];
    if (color < 1 || color > n) throw InvalidArgument("color " + std::to_string(color) + " outside [n]");
    // cycles are already sorted by minima, so appending keeps each segment a fundamental word
    segments[color - 1].insert(segments[color - 1].end(), cycles[k].begin(), cycles[k].end());
  }
  return Disposition(std::move(segments));
}

Disposition colored_to_disposition(const ColoredCyclePermutation& p) { return colored_to_disposition(p, p.n()); }

ColoredCyclePermutation disposition_to_colored(const Disposition& d) {
  std::vector<std::pair<Cycle, std::size_t>> colored;
  for (std::size_t i = 1; i <= d.n(); ++i) {
    const auto part = word_to_cycles(d.segment(i));
    for (const auto& c : part.cycles()) colored.emplace_back(c, i);
  }
  std::sort(colored.begin(), colored.end(), [](const auto& a, const auto& b) { return a.first.back() < b.first.back(); });
  std::vector<Cycle> cycles;
  std::vector<std::size_t> colors;
  for (auto& [c, color] : colored) {
    cycles.push_back(std::move(c));
    colors.push_back(color);
  }
  return ColoredCyclePermutation(CycleDecomposition(std::move(cycles)), std::move(colors), d.n());
}

void for_each_colored(std::size_t m, std::size_t n, const ColoredVisitor& visit) {
  if (n < 1) throw InvalidArgument("colored permutations need n >= 1");
  std::vector<Element> image(m);
  std::iota(image.begin(), image.end(), 1);
  do {
    const auto base = CycleDecomposition::from_one_line(image);
    std::vector<std::size_t> colors(base.cycle_count(), 1);
    while (true) {
      visit(ColoredCyclePermutation(base, colors, n));
      // mixed-radix increment, last cycle fastest
      std::size_t k = colors.size();
      while (k > 0 && colors[k - 1] == n) colors[--k] = 1;
      if (k == 0) break;
      ++colors[k - 1];
    }
  } while (std::next_permutation(image.begin(), image.end()));
}

std::vector<ColoredCyclePermutation> enumerate_colored(std::size_t m, std::size_t n) {
  std::vector<ColoredCyclePermutation> out;
  for_each_colored(m, n, [&](const ColoredCyclePermutation& p) { out.push_back(p); });
  return out;
}

Polynomial cycle_color_generating_function(std::size_t m, std::size_t n) {
  Polynomial sum(VariableContext::x_vars(n));
  Monomial mono = Monomial::one(n);
  for_each_colored(m, n, [&](const ColoredCyclePermutation& p) {
    const auto counts = p.color_counts();
    for (std::size_t i = 0; i < n; ++i) mono[i] = static_cast<std::uint32_t>(counts[i]);
    sum.add_term(mono, 1);
  });
  return sum;
}

}  // namespace dispo

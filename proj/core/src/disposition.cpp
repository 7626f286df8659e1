#include "dispo/disposition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "dispo/error.hpp"

namespace dispo {

Disposition::Disposition(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw InvalidArgument("a disposition needs at least one segment");
  for (const auto& s : segments_) m_ += s.size();
  std::vector<bool> seen(m_ + 1, false);
  for (const auto& s : segments_) {
    for (Element e : s) {
      if (e < 1 || static_cast<std::size_t>(e) > m_)
        throw InvalidArgument("disposition element " + std::to_string(e) + " outside [" + std::to_string(m_) + "]");
      if (seen[e]) throw InvalidArgument("disposition element " + std::to_string(e) + " repeated");
      seen[e] = true;
    }
  }
}

Disposition Disposition::empty(std::size_t n) { return Disposition(std::vector<Segment>(n)); }

const Segment& Disposition::segment(std::size_t i) const {
  if (i < 1 || i > segments_.size()) throw InvalidArgument("segment index out of range");
  return segments_[i - 1];
}

std::size_t Disposition::segment_of(Element e) const {
  for (std::size_t i = 0; i < segments_.size(); ++i)
    if (std::find(segments_[i].begin(), segments_[i].end(), e) != segments_[i].end()) return i + 1;
  throw InvalidArgument("element " + std::to_string(e) + " not in disposition");
}

std::string Disposition::to_text() const {
  std::string out = "[";
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i > 0) out += '|';
    for (std::size_t j = 0; j < segments_[i].size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(segments_[i][j]);
    }
  }
  out += ']';
  return out;
}

std::string Disposition::to_json() const {
  nlohmann::ordered_json j;
  j["m"] = m_;
  j["n"] = segments_.size();
  j["segments"] = segments_;
  return j.dump();
}

namespace {

std::vector<Element> parse_numbers(std::string_view s) {
  std::vector<Element> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    Element v{};
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc() || ptr == s.data() + i) throw ParseError("expected integer in '" + std::string(s) + "'");
    i = static_cast<std::size_t>(ptr - s.data());
    out.push_back(v);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Disposition parse_disposition_text(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("disposition text must be enclosed in [ ]");
  text = text.substr(1, text.size() - 2);
  std::vector<Segment> segments;
  for (;;) {
    auto bar = text.find('|');
    segments.push_back(parse_numbers(text.substr(0, bar)));
    if (bar == std::string_view::npos) break;
    text.remove_prefix(bar + 1);
  }
  try {
    return Disposition(std::move(segments));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Disposition parse_disposition_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad disposition JSON: ") + e.what());
  }
  const char* key = j.contains("segments") ? "segments" : "blocks";
  std::vector<Segment> segments;
  try {
    segments = j.at(key).get<std::vector<Segment>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad disposition JSON: ") + e.what());
  }
  Disposition d = [&] {
    try {
      return Disposition(std::move(segments));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }();
  if (j.contains("m") && j["m"].get<std::size_t>() != d.m()) throw ParseError("disposition JSON: m disagrees with segments");
  if (j.contains("n") && j["n"].get<std::size_t>() != d.n()) throw ParseError("disposition JSON: n disagrees with segments");
  return d;
}

Disposition parse_disposition(std::string_view text) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_disposition_json(t);
  return parse_disposition_text(t);
}

// ---------------------------------------------------------------------------
// Statistics

namespace {

void require_distinct(std::span<const Element> segment) {
  std::vector<Element> sorted(segment.begin(), segment.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("sequence has duplicate entries");
}

}  // namespace

std::vector<std::size_t> rl_min_positions(std::span<const Element> segment) {
  require_distinct(segment);
  std::vector<std::size_t> positions;
  Element running_min = 0;
  for (std::size_t i = segment.size(); i-- > 0;) {
    if (positions.empty() || segment[i] < running_min) {
      positions.push_back(i);
      running_min = segment[i];
    }
  }
  std::reverse(positions.begin(), positions.end());
  return positions;
}

std::size_t rl_min(std::span<const Element> segment) { return rl_min_positions(segment).size(); }

std::size_t gdes(const Disposition& d) {
  std::size_t count = 0;
  for (const auto& s : d.segments()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (s[i] > s[j]) {
          ++count;
          break;
        }
      }
    }
  }
  return count;
}

DispositionStats disposition_stats(const Disposition& d) {
  DispositionStats st;
  st.rlmin.reserve(d.n());
  for (const auto& s : d.segments()) st.rlmin.push_back(rl_min(s));
  st.gdes = gdes(d);
  return st;
}

Disposition insert_element(const Disposition& d, std::size_t segment, std::size_t position) {
  if (segment < 1 || segment > d.n()) throw InvalidArgument("insert_element: segment out of range");
  const auto& target = d.segment(segment);
  if (position > target.size()) throw InvalidArgument("insert_element: position out of range");
  auto segments = d.segments();
  auto& s = segments[segment - 1];
  s.insert(s.begin() + static_cast<std::ptrdiff_t>(position), static_cast<Element>(d.m() + 1));
  return Disposition(std::move(segments));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class InsertionWalk {
 public:
  InsertionWalk(std::size_t m, std::size_t n, const DispositionVisitor& visit)
      : m_(m), segments_(n), visit_(visit) {}

  void run(std::size_t next) {
    if (next > m_) {
      visit_(Disposition(segments_));
      return;
    }
    for (auto& s : segments_) {
      for (std::size_t pos = 0; pos <= s.size(); ++pos) {
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<Element>(next));
        run(next + 1);
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(pos));
      }
    }
  }

 private:
  std::size_t m_;
  std::vector<Segment> segments_;
  const DispositionVisitor& visit_;
};

}  // namespace

void for_each_disposition(std::size_t m, std::size_t n, const DispositionVisitor& visit) {
  if (n < 1) throw InvalidArgument("dispositions need n >= 1");
  InsertionWalk(m, n, visit).run(1);
}

std::vector<Disposition> enumerate_dispositions(std::size_t m, std::size_t n) {
  std::vector<Disposition> out;
  for_each_disposition(m, n, [&](const Disposition& d) { out.push_back(d); });
  return out;
}

std::uint64_t rising_factorial(std::uint64_t n, std::uint64_t m) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < m; ++k)
    if (__builtin_mul_overflow(r, n + k, &r)) throw OverflowError("rising factorial overflow");
  return r;
}

Polynomial disposition_generating_function(std::size_t m, std::size_t n) {
  Polynomial sum(VariableContext::x_vars_t(n));
  Monomial mono = Monomial::one(n + 1);
  for_each_disposition(m, n, [&](const Disposition& d) {
    const auto st = disposition_stats(d);
    for (std::size_t i = 0; i < n; ++i) mono[i] = static_cast<std::uint32_t>(st.rlmin[i]);
    mono[n] = static_cast<std::uint32_t>(st.gdes);
    sum.add_term(mono, 1);
  });
  return sum;
}

// ---------------------------------------------------------------------------
// Sampling

Disposition DispositionSampler::operator()(std::size_t m, std::size_t n) {
  if (n < 1) throw InvalidArgument("dispositions need n >= 1");
  std::vector<Segment> segments(n);
  for (std::size_t k = 1; k <= m; ++k) {
    // slots: |D_i| + 1 per segment, n + k - 1 in total
    std::uniform_int_distribution<std::size_t> pick(0, n + k - 2);
    std::size_t slot = pick(engine_);
    for (auto& s : segments) {
      if (slot <= s.size()) {
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(slot), static_cast<Element>(k));
        break;
      }
      slot -= s.size() + 1;
    }
  }
  return Disposition(std::move(segments));
}

Disposition sample_uniform(std::size_t m, std::size_t n, std::uint64_t seed) {
  DispositionSampler sampler(seed);
  return sampler(m, n);
}

}  // namespace dispo

#include "dispo/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dispo/bijection.hpp"
#include "dispo/disposition.hpp"
#include "dispo/error.hpp"
#include "dispo/permutation.hpp"
#include "dispo/plane_tree.hpp"

namespace dispo {

namespace {

constexpr std::pair<Identity, std::string_view> kIdentityNames[] = {
    {Identity::disposition_rlmin, "thm2.1"}, {Identity::homogeneous, "q"},     {Identity::colored_cycles, "thm2.2"},
    {Identity::plane_trees, "eq3"},            {Identity::rooted_plane_trees, "eq4"},           {Identity::transport, "transport"},
    {Identity::bijection, "thm3.1"},   {Identity::gessel_seo, "gessel-seo"},
};

constexpr std::pair<Mutation, std::string_view> kMutationNames[] = {
    {Mutation::none, "none"},
    {Mutation::swap_young_elder, "swap-young-elder"},
    {Mutation::rlmin_as_lrmin, "rlmin-as-lrmin"},
    {Mutation::gdes_as_descents, "gdes-as-descents"},
    {Mutation::beta_as_label, "beta-as-label"},
};

}  // namespace

std::string_view identity_name(Identity id) {
  for (const auto& [k, v] : kIdentityNames)
    if (k == id) return v;
  return "?";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (const auto& [k, v] : kIdentityNames)
    if (v == name) return k;
  return std::nullopt;
}

std::vector<Identity> all_identities() {
  std::vector<Identity> out;
  for (const auto& [k, v] : kIdentityNames) out.push_back(k);
  return out;
}

std::string_view mutation_name(Mutation m) {
  for (const auto& [k, v] : kMutationNames)
    if (k == m) return v;
  return "?";
}

std::optional<Mutation> parse_mutation(std::string_view name) {
  for (const auto& [k, v] : kMutationNames)
    if (v == name) return k;
  return std::nullopt;
}

void apply_cap(Caps& caps, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw InvalidArgument("cap must be key=value: " + std::string(assignment));
  const auto key = assignment.substr(0, eq);
  const auto value_text = assignment.substr(eq + 1);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
  if (ec != std::errc() || ptr != value_text.data() + value_text.size())
    throw InvalidArgument("cap value is not a count: " + std::string(assignment));
  if (key == "disp_m") caps.disposition_m = value;
  else if (key == "disp_n") caps.disposition_n = value;
  else if (key == "perm_m") caps.permutation_m = value;
  else if (key == "perm_n") caps.permutation_n = value;
  else if (key == "tree_n") caps.tree_n = value;
  else if (key == "gs_n") caps.gessel_seo_n = value;
  else throw InvalidArgument("unknown cap: " + std::string(key));
}

// ---------------------------------------------------------------------------
// Reports

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["objects_enumerated"] = objects_enumerated;
  j["objects_expected"] = objects_expected;
  j["result"] = passed ? "pass" : "fail";
  if (counterexample) {
    j["counterexample"] = {{"form", counterexample->form},
                           {"monomial", counterexample->monomial},
                           {"enumerated", counterexample->enumerated},
                           {"closed_form", counterexample->closed_form}};
  } else {
    j["counterexample"] = nullptr;
  }
  if (!detail.empty()) j["detail"] = detail;
  return j.dump();
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << (passed ? "PASS " : "FAIL ") << identity;
  for (const auto& [k, v] : parameters) out << ' ' << k << '=' << v;
  out << " objects=" << objects_enumerated;
  if (counterexample) {
    out << " [" << counterexample->form << "] first difference at " << counterexample->monomial
        << ": enumerated " << counterexample->enumerated << ", closed form " << counterexample->closed_form;
  }
  if (!detail.empty()) out << " (" << detail << ')';
  return out.str();
}

bool all_passed(std::span<const VerificationReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

// ---------------------------------------------------------------------------
// Statistics with optional corruption

namespace {

std::size_t lr_min(std::span<const Element> s) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (std::all_of(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i), [&](Element e) { return e > s[i]; })) ++count;
  return count;
}

DispositionStats disposition_statistics(const Disposition& d, Mutation mut) {
  auto st = disposition_stats(d);
  if (mut == Mutation::rlmin_as_lrmin) {
    for (std::size_t i = 0; i < d.n(); ++i) st.rlmin[i] = lr_min(d.segments()[i]);
  } else if (mut == Mutation::gdes_as_descents) {
    st.gdes = 0;
    for (const auto& s : d.segments())
      for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] > s[i + 1]) ++st.gdes;
  }
  return st;
}

TreeStats tree_statistics(const PlaneTree& t, Mutation mut) {
  auto st = tree_stats(t);
  if (mut == Mutation::swap_young_elder) {
    std::swap(st.young_children, st.eld_children);
    st.eld_total = 0;
    for (std::size_t v = 1; v <= t.n(); ++v) st.eld_total += st.eld_children[v];
    st.young_total = t.n() - st.eld_total;
  } else if (mut == Mutation::beta_as_label) {
    st.eld_total = 0;
    for (Label v = 1; v <= static_cast<Label>(t.n()); ++v) {
      const auto kids = t.children(v);
      st.young_children[v] = rl_min(kids);
      st.eld_children[v] = kids.size() - st.young_children[v];
      st.eld_total += st.eld_children[v];
    }
    st.young_total = t.n() - st.eld_total;
  }
  return st;
}

VerificationReport make_report(Identity id, std::vector<std::pair<std::string, std::size_t>> params) {
  VerificationReport r;
  r.identity = std::string(identity_name(id));
  r.parameters = std::move(params);
  return r;
}

// Compares and records the first failure; returns whether the forms agree.
bool compare(VerificationReport& report, const std::string& form, const Polynomial& enumerated,
             const Polynomial& closed_form) {
  const auto diff = first_difference(enumerated, closed_form);
  if (!diff) return true;
  if (!report.counterexample) {
    report.counterexample = Counterexample{form, monomial_text(enumerated.context(), diff->monomial), diff->left, diff->right};
  }
  return false;
}

void finish(VerificationReport& report, bool polynomials_agree) {
  const bool counts_agree = report.objects_enumerated == report.objects_expected;
  if (!counts_agree) {
    if (!report.detail.empty()) report.detail += "; ";
    report.detail += "enumerated " + std::to_string(report.objects_enumerated) + " objects, expected " +
                     std::to_string(report.objects_expected);
  }
  report.passed = polynomials_agree && counts_agree && report.detail.empty();
}

Polynomial disposition_side(std::size_t m, std::size_t n, bool graded, Mutation mut, std::uint64_t& count) {
  const auto ctx = graded ? VariableContext::x_vars_t(n) : VariableContext::x_vars(n);
  Polynomial sum(ctx);
  Monomial mono = Monomial::one(ctx.arity());
  for_each_disposition(m, n, [&](const Disposition& d) {
    ++count;
    const auto st = disposition_statistics(d, mut);
    for (std::size_t i = 0; i < n; ++i) mono[i] = static_cast<std::uint32_t>(st.rlmin[i]);
    if (graded) mono[n] = static_cast<std::uint32_t>(st.gdes);
    sum.add_term(mono, 1);
  });
  return sum;
}

Polynomial tree_side(std::size_t n, std::optional<Label> root, Mutation mut, std::uint64_t& count) {
  Polynomial sum(VariableContext::x_vars_t(n));
  Monomial mono = Monomial::one(n + 1);
  for_each_plane_tree(n, root, [&](const PlaneTree& t) {
    ++count;
    const auto st = tree_statistics(t, mut);
    for (std::size_t i = 1; i <= n; ++i) mono[i - 1] = static_cast<std::uint32_t>(st.young_children[i]);
    mono[n] = static_cast<std::uint32_t>(st.eld_total);
    sum.add_term(mono, 1);
  });
  return sum;
}

// prod_{k=lo}^{hi} (x1 + ... + xn + k t) over x1..xn,t; empty when lo > hi
Polynomial tree_product(std::size_t n, std::size_t lo, std::ptrdiff_t hi) {
  const auto ctx = VariableContext::x_vars_t(n);
  Polynomial result = Polynomial::constant(ctx, 1);
  for (auto k = static_cast<std::ptrdiff_t>(lo); k <= hi; ++k) {
    Polynomial factor(ctx);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial m = Monomial::one(n + 1);
      m[i] = 1;
      factor.add_term(m, 1);
    }
    Monomial t = Monomial::one(n + 1);
    t[n] = 1;
    factor.add_term(t, k);
    result *= factor;
  }
  return result;
}

void require_positive(std::size_t n, const char* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + " needs n >= 1");
}

}  // namespace

// ---------------------------------------------------------------------------
// Identities

VerificationReport verify_disposition_rlmin(std::size_t m, std::size_t n, const VerifyOptions& opt) {
  require_positive(n, "thm2.1");
  auto report = make_report(Identity::disposition_rlmin, {{"m", m}, {"n", n}});
  report.objects_expected = rising_factorial(n, m);
  const auto lhs = disposition_side(m, n, false, opt.mutation, report.objects_enumerated);
  finish(report, compare(report, "R_m", lhs, disposition_polynomial(m, n)));
  return report;
}

VerificationReport verify_homogeneous(std::size_t m, std::size_t n, const VerifyOptions& opt) {
  require_positive(n, "q");
  auto report = make_report(Identity::homogeneous, {{"m", m}, {"n", n}});
  report.objects_expected = rising_factorial(n, m);
  const auto lhs = disposition_side(m, n, true, opt.mutation, report.objects_enumerated);
  finish(report, compare(report, "Q_m", lhs, homogeneous_disposition_polynomial(m, n)));
  return report;
}

VerificationReport verify_colored_cycles(std::size_t m, std::size_t n, const VerifyOptions& opt) {
  require_positive(n, "thm2.2");
  (void)opt;  // no colored-cycle mutation is defined
  auto report = make_report(Identity::colored_cycles, {{"m", m}, {"n", n}});
  report.objects_expected = rising_factorial(n, m);
  Polynomial lhs(VariableContext::x_vars(n));
  Monomial mono = Monomial::one(n);
  for_each_colored(m, n, [&](const ColoredCyclePermutation& p) {
    ++report.objects_enumerated;
    const auto counts = p.color_counts();
    for (std::size_t i = 0; i < n; ++i) mono[i] = static_cast<std::uint32_t>(counts[i]);
    lhs.add_term(mono, 1);
  });
  finish(report, compare(report, "R_m", lhs, disposition_polynomial(m, n)));
  return report;
}

VerificationReport verify_plane_trees(std::size_t n, const VerifyOptions& opt) {
  require_positive(n, "eq3");
  auto report = make_report(Identity::plane_trees, {{"n", n}});
  report.objects_expected = plane_tree_count(n);
  const auto lhs = tree_side(n, std::nullopt, opt.mutation, report.objects_enumerated);
  const auto rhs = tree_product(n, 0, static_cast<std::ptrdiff_t>(n) - 2);
  finish(report, compare(report, "eq3", lhs, rhs));
  return report;
}

VerificationReport verify_rooted_plane_trees(std::size_t n, std::size_t r, const VerifyOptions& opt) {
  if (n < 2) throw InvalidArgument("rooted form needs n >= 2");
  if (r < 1 || r > n) throw InvalidArgument("rooted form needs 1 <= r <= n");
  auto report = make_report(Identity::rooted_plane_trees, {{"n", n}, {"r", r}});
  report.objects_expected = rooted_plane_tree_count(n);
  const auto lhs = tree_side(n, static_cast<Label>(r), opt.mutation, report.objects_enumerated);
  auto rhs = Polynomial::variable(VariableContext::x_vars_t(n), "x" + std::to_string(r));
  rhs *= tree_product(n, 1, static_cast<std::ptrdiff_t>(n) - 2);
  finish(report, compare(report, "eq4", lhs, rhs));
  return report;
}

VerificationReport verify_transport(std::size_t n, const VerifyOptions& opt) {
  require_positive(n, "transport");
  auto report = make_report(Identity::transport, {{"n", n}});
  report.objects_expected = plane_tree_count(n);
  const auto trees = tree_side(n, std::nullopt, opt.mutation, report.objects_enumerated);
  std::uint64_t dispositions = 0;
  const auto disps = disposition_side(n - 1, n, true, opt.mutation, dispositions);
  if (dispositions != report.objects_expected) {
    report.detail = "disposition side enumerated " + std::to_string(dispositions) + " objects";
  }
  finish(report, compare(report, "trees vs dispositions", trees, disps));
  return report;
}

VerificationReport verify_bijection(std::size_t n, const VerifyOptions& opt) {
  require_positive(n, "thm3.1");
  auto report = make_report(Identity::bijection, {{"n", n}});
  report.objects_expected = plane_tree_count(n);
  std::string failure;
  auto fail = [&](const std::string& what, const std::string& object) {
    if (failure.empty()) failure = what + " at " + object;
  };

  const auto ctx = VariableContext::x_vars(n);
  std::set<std::string> tree_texts;
  for_each_plane_tree(n, std::nullopt, [&](const PlaneTree& t) {
    ++report.objects_enumerated;
    const auto text = t.to_text();
    tree_texts.insert(text);
    const auto d = phi(t);
    if (d.m() + 1 != n || d.n() != n) return fail("phi left D_{n-1,n}", text);
    if (!(phi_inverse(d) == t)) fail("phi_inverse(phi(T)) != T", text);

    const auto ts = tree_statistics(t, opt.mutation);
    const auto ds = disposition_statistics(d, opt.mutation);
    const auto marks = prufer_marks(t);
    if (!report.counterexample) {
      // per-object comparison of x^young_T(i) against x^RLmin(D_i)
      Polynomial tree_term(ctx), disposition_term(ctx);
      Monomial a = Monomial::one(n), b = Monomial::one(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = static_cast<std::uint32_t>(ts.young_children[i + 1]);
        b[i] = static_cast<std::uint32_t>(ds.rlmin[i]);
      }
      tree_term.add_term(a, 1);
      disposition_term.add_term(b, 1);
      compare(report, "young_T(i) = RLmin(D_i) at " + text, tree_term, disposition_term);
    }
    for (Label v = 1; v <= static_cast<Label>(n); ++v) {
      const auto& seg = d.segment(static_cast<std::size_t>(v));
      if (ts.young_children[v] != ds.rlmin[v - 1]) fail("young_T(i) != RLmin(D_i)", text);
      if (t.children(v).size() != seg.size()) fail("degree != |D_i|", text);
      if (n >= 2 && (std::find(seg.begin(), seg.end(), 1) != seg.end()) != (v == t.root())) fail("root law", text);
      // mark is the minimum mark over the subtree
      int subtree_min = marks.mark(v);
      std::vector<Label> stack(t.children(v).begin(), t.children(v).end());
      while (!stack.empty()) {
        const Label u = stack.back();
        stack.pop_back();
        subtree_min = std::min(subtree_min, marks.mark(u));
        stack.insert(stack.end(), t.children(u).begin(), t.children(u).end());
      }
      if (subtree_min != marks.mark(v)) fail("mark is not the subtree minimum", text);
      const auto kids = t.children(v);
      for (std::size_t j = 0; j < kids.size(); ++j)
        for (std::size_t k = j + 1; k < kids.size(); ++k)
          if ((seg[j] < seg[k]) != (ts.beta[kids[j]] < ts.beta[kids[k]])) fail("mark order != beta order", text);
    }
  });

  std::uint64_t dispositions = 0;
  std::set<std::string> images;
  for_each_disposition(n - 1, n, [&](const Disposition& d) {
    ++dispositions;
    const auto t = phi_inverse(d);
    const auto text = t.to_text();
    if (!(phi(t) == d)) fail("phi(phi_inverse(D)) != D", d.to_text());
    if (!(prufer_marks(t) == marks_from_disposition(d))) fail("marking procedures disagree", d.to_text());
    if (!tree_texts.contains(text)) fail("phi_inverse left the enumerated tree set", d.to_text());
    images.insert(text);
  });
  if (dispositions != report.objects_expected) fail("wrong disposition count", std::to_string(dispositions));
  if (images.size() != tree_texts.size()) fail("phi_inverse is not onto the enumerated trees", std::to_string(images.size()));

  report.detail = failure;
  finish(report, true);
  return report;
}

VerificationReport verify_gessel_seo(std::size_t n, std::size_t r, const VerifyOptions& opt) {
  require_positive(n, "gessel-seo");
  if (r < 1 || r > n + 1) throw InvalidArgument("gessel-seo needs 1 <= r <= n+1");
  auto report = make_report(Identity::gessel_seo, {{"n", n}, {"r", r}});
  report.objects_expected = rooted_plane_tree_count(n + 1);

  // (young_T(r), eld(T)) -> number of trees
  std::map<std::pair<std::size_t, std::size_t>, Coefficient> classes;
  for_each_plane_tree(n + 1, static_cast<Label>(r), [&](const PlaneTree& t) {
    ++report.objects_enumerated;
    const auto st = tree_statistics(t, opt.mutation);
    ++classes[{st.young_children[r], st.eld_total}];
  });

  const auto ctx = VariableContext::xzt();
  const auto x = Polynomial::variable(ctx, "x");
  const auto z = Polynomial::variable(ctx, "z");
  const auto t = Polynomial::variable(ctx, "t");
  Polynomial with_t_minus_z(ctx);
  Polynomial with_t(ctx);
  for (const auto& [key, count] : classes) {
    const auto [young, eld] = key;
    if (young + eld > n) {
      report.detail = "young_T(r) + eld(T) exceeds n";
      continue;
    }
    const auto rest = static_cast<std::uint32_t>(n - young - eld);
    const auto base = x.pow(static_cast<std::uint32_t>(young)) * z.pow(rest) * Polynomial::constant(ctx, count);
    with_t_minus_z += base * (t - z).pow(static_cast<std::uint32_t>(eld));
    with_t += base * t.pow(static_cast<std::uint32_t>(eld));
  }
  const auto closed = gessel_seo_polynomial(n);
  const auto shifted = substitute(closed, "t", t + z);
  bool ok = compare(report, "(t-z) weights", with_t_minus_z, closed);
  ok = compare(report, "t -> t+z", with_t, shifted) && ok;
  ok = compare(report, "substituted enumeration", substitute(with_t_minus_z, "t", t + z), with_t) && ok;
  finish(report, ok);
  return report;
}

// ---------------------------------------------------------------------------
// Grids

VerificationReport run_cell(const Cell& cell, const VerifyOptions& opt) {
  switch (cell.identity) {
    case Identity::disposition_rlmin: return verify_disposition_rlmin(cell.a, cell.b, opt);
    case Identity::homogeneous: return verify_homogeneous(cell.a, cell.b, opt);
    case Identity::colored_cycles: return verify_colored_cycles(cell.a, cell.b, opt);
    case Identity::plane_trees: return verify_plane_trees(cell.a, opt);
    case Identity::rooted_plane_trees: return verify_rooted_plane_trees(cell.a, cell.b, opt);
    case Identity::transport: return verify_transport(cell.a, opt);
    case Identity::bijection: return verify_bijection(cell.a, opt);
    case Identity::gessel_seo: return verify_gessel_seo(cell.a, cell.b, opt);
  }
  throw InvalidArgument("unknown identity");
}

std::vector<Cell> cells_for(Identity id, const Caps& caps) {
  std::vector<Cell> cells;
  switch (id) {
    case Identity::disposition_rlmin:
    case Identity::homogeneous:
      for (std::size_t m = 0; m <= caps.disposition_m; ++m)
        for (std::size_t n = 1; n <= caps.disposition_n; ++n) cells.push_back({id, m, n});
      break;
    case Identity::colored_cycles:
      for (std::size_t m = 0; m <= caps.permutation_m; ++m)
        for (std::size_t n = 1; n <= caps.permutation_n; ++n) cells.push_back({id, m, n});
      break;
    case Identity::plane_trees:
    case Identity::transport:
    case Identity::bijection:
      for (std::size_t n = 1; n <= caps.tree_n; ++n) cells.push_back({id, n, 0});
      break;
    case Identity::rooted_plane_trees:
      for (std::size_t n = 2; n <= caps.tree_n; ++n)
        for (std::size_t r = 1; r <= n; ++r) cells.push_back({id, n, r});
      break;
    case Identity::gessel_seo:
      for (std::size_t n = 1; n <= caps.gessel_seo_n; ++n)
        for (std::size_t r = 1; r <= n + 1; ++r) cells.push_back({id, n, r});
      break;
  }
  return cells;
}

std::vector<VerificationReport> run_cells(std::span<const Cell> cells, const VerifyOptions& opt, bool parallel) {
  std::vector<VerificationReport> reports;
  reports.reserve(cells.size());
  if (!parallel || cells.size() < 2) {
    for (const auto& c : cells) reports.push_back(run_cell(c, opt));
    return reports;
  }
  // workers pull cells by index; slots keep the reports in cell order
  std::vector<std::optional<VerificationReport>> slots(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        slots[i] = run_cell(cells[i], opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(std::max(2u, std::thread::hardware_concurrency()), cells.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    reports.push_back(std::move(*slots[i]));
  }
  return reports;
}

std::vector<VerificationReport> verify_all(const Caps& caps, const VerifyOptions& opt, bool parallel) {
  std::vector<Cell> cells;
  for (auto id : all_identities()) {
    auto more = cells_for(id, caps);
    cells.insert(cells.end(), more.begin(), more.end());
  }
  return run_cells(cells, opt, parallel);
}

}  // namespace dispo

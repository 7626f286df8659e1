#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "dispo/bijection.hpp"
#include "dispo/disposition.hpp"
#include "dispo/error.hpp"
#include "dispo/permutation.hpp"
#include "dispo/plane_tree.hpp"
#include "dispo/verifier.hpp"

namespace dispo::cli {

namespace {

enum class Format { text, json };

struct CommandConfig {
  std::optional<std::size_t> m;
  std::optional<std::size_t> n;
  std::optional<std::size_t> r;
  std::optional<Label> root;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  Format format = Format::text;
  std::string input_kind = "tree";
  std::string identity = "all";
  std::vector<std::string> caps;
  std::string mutation = "none";
  bool parallel = false;
  std::string in_path;
  std::string out_path;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

// Calls `f` on every non-blank line that is not a `#` comment.
template <class F>
void for_each_line(std::istream& in, F&& f) {
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    f(line);
  }
}

template <class T>
std::string render(const T& obj, Format f) {
  return f == Format::json ? obj.to_json() : obj.to_text();
}

std::string join(const auto& values, std::size_t from) {
  std::string out = "[";
  for (std::size_t i = from; i < values.size(); ++i) {
    if (i > from) out += ' ';
    out += std::to_string(values[i]);
  }
  return out + ']';
}

void print_tree_stats(const PlaneTree& t, Format f, std::ostream& out) {
  const auto st = tree_stats(t);
  if (f == Format::json) {
    nlohmann::ordered_json j;
    j["n"] = t.n();
    j["beta"] = std::vector<Label>(st.beta.begin() + 1, st.beta.end());
    j["young_children"] = std::vector<std::size_t>(st.young_children.begin() + 1, st.young_children.end());
    j["eld_children"] = std::vector<std::size_t>(st.eld_children.begin() + 1, st.eld_children.end());
    j["eld_total"] = st.eld_total;
    j["young_total"] = st.young_total;
    out << j.dump() << '\n';
  } else {
    out << "beta=" << join(st.beta, 1) << " young=" << join(st.young_children, 1)
        << " elder=" << join(st.eld_children, 1) << " eld=" << st.eld_total << " young_total=" << st.young_total
        << '\n';
  }
}

void print_disposition_stats(const Disposition& d, Format f, std::ostream& out) {
  const auto st = disposition_stats(d);
  if (f == Format::json) {
    nlohmann::ordered_json j;
    j["m"] = d.m();
    j["n"] = d.n();
    j["rlmin"] = st.rlmin;
    j["gdes"] = st.gdes;
    out << j.dump() << '\n';
  } else {
    out << "rlmin=" << join(st.rlmin, 0) << " gdes=" << st.gdes << '\n';
  }
}

ColoredCyclePermutation parse_colored_line(const std::string& line, const CommandConfig& cfg) {
  if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] == '{')
    return parse_colored_json(line);
  if (!cfg.n) throw UsageError("map perm-to-disposition needs --n for text input");
  return parse_colored_text(line, *cfg.n);
}

int run_verify(const CommandConfig& cfg, std::ostream& out) {
  Caps caps;
  for (const auto& c : cfg.caps) apply_cap(caps, c);
  const auto mutation = parse_mutation(cfg.mutation);
  if (!mutation) throw UsageError("unknown mutation: " + cfg.mutation);

  std::vector<Cell> cells;
  if (cfg.identity == "all") {
    if (cfg.m || cfg.n || cfg.r) throw UsageError("--m/--n/--r select a single identity; use --caps with 'all'");
    for (auto id : all_identities()) {
      auto more = cells_for(id, caps);
      cells.insert(cells.end(), more.begin(), more.end());
    }
  } else {
    const auto id = parse_identity(cfg.identity);
    if (!id) throw UsageError("unknown identity: " + cfg.identity);
    const bool two_counts = *id == Identity::disposition_rlmin || *id == Identity::homogeneous || *id == Identity::colored_cycles;
    const bool rooted = *id == Identity::rooted_plane_trees || *id == Identity::gessel_seo;
    if (two_counts && cfg.r) throw UsageError("--r does not apply to " + cfg.identity);
    if (!two_counts && cfg.m) throw UsageError("--m does not apply to " + cfg.identity);
    if (!two_counts && !rooted && cfg.r) throw UsageError("--r does not apply to " + cfg.identity);
    // widen the caps so the requested point is inside the grid, then filter
    if (cfg.m) caps.disposition_m = caps.permutation_m = std::max(caps.disposition_m, *cfg.m);
    if (cfg.n) {
      if (two_counts) caps.disposition_n = caps.permutation_n = std::max(caps.disposition_n, *cfg.n);
      else if (*id == Identity::gessel_seo) caps.gessel_seo_n = std::max(caps.gessel_seo_n, *cfg.n);
      else caps.tree_n = std::max(caps.tree_n, *cfg.n);
    }
    for (const auto& c : cells_for(*id, caps)) {
      if (two_counts) {
        if (cfg.m && c.a != *cfg.m) continue;
        if (cfg.n && c.b != *cfg.n) continue;
      } else {
        if (cfg.n && c.a != *cfg.n) continue;
        if (rooted && cfg.r && c.b != *cfg.r) continue;
      }
      cells.push_back(c);
    }
    if (cells.empty()) throw UsageError("no verification cell matches the given parameters");
  }

  const auto reports = run_cells(cells, VerifyOptions{*mutation}, cfg.parallel);
  std::size_t passed = 0;
  for (const auto& r : reports) {
    out << render(r, cfg.format) << '\n';
    passed += r.passed ? 1 : 0;
  }
  if (cfg.format == Format::text) out << passed << '/' << reports.size() << " checks passed\n";
  return passed == reports.size() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in_default, std::ostream& out_default, std::ostream& err) {
  CLI::App app{"Plane trees, dispositions and the identities that connect them", "dispo"};
  app.require_subcommand(1);
  CommandConfig cfg;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};

  app.add_option("--in", cfg.in_path, "Read objects from this file instead of standard input");
  app.add_option("--out", cfg.out_path, "Write output to this file instead of standard output");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats))->option_text("text|json");
  };

  auto* trees = app.add_subcommand("trees", "Plane trees");
  trees->require_subcommand(1);
  auto* trees_enum = trees->add_subcommand("enumerate", "Stream every plane tree on [n]");
  trees_enum->add_option("--n", cfg.n, "Vertex count")->required()->check(CLI::Range(1, 20));
  trees_enum->add_option("--root", cfg.root, "Restrict to this root");
  add_format(trees_enum);

  auto* disps = app.add_subcommand("dispositions", "Dispositions");
  disps->require_subcommand(1);
  auto* disps_enum = disps->add_subcommand("enumerate", "Stream every disposition of [m] into n segments");
  disps_enum->add_option("--m", cfg.m, "Element count")->required();
  disps_enum->add_option("--n", cfg.n, "Segment count")->required()->check(CLI::PositiveNumber);
  add_format(disps_enum);

  auto* map = app.add_subcommand("map", "Apply a correspondence to objects read one per line");
  map->require_subcommand(1);
  auto* t2d = map->add_subcommand("tree-to-disposition", "Plane tree to disposition");
  auto* d2t = map->add_subcommand("disposition-to-tree", "Disposition of [n-1] into n segments to plane tree");
  auto* p2d = map->add_subcommand("perm-to-disposition", "Colored-cycle permutation to disposition");
  auto* d2p = map->add_subcommand("disposition-to-perm", "Disposition to colored-cycle permutation");
  p2d->add_option("--n", cfg.n, "Color count (required for text input)")->check(CLI::PositiveNumber);
  for (auto* s : {t2d, d2t, p2d, d2p}) add_format(s);

  auto* marks = app.add_subcommand("marks", "Print the Prufer mark table of each input object");
  marks->add_option("--input", cfg.input_kind, "Kind of input object")->check(CLI::IsMember({"tree", "disposition"}));
  add_format(marks);

  auto* stats = app.add_subcommand("stats", "Print statistics of each input object");
  stats->require_subcommand(1);
  auto* stats_tree = stats->add_subcommand("tree", "beta, younger/elder children, eld(T)");
  auto* stats_disp = stats->add_subcommand("disposition", "RLmin per segment and gdes");
  add_format(stats_tree);
  add_format(stats_disp);

  auto* sample = app.add_subcommand("sample", "Uniform random objects");
  sample->require_subcommand(1);
  auto* sample_tree = sample->add_subcommand("tree", "Uniform plane trees on [n]");
  sample_tree->add_option("--n", cfg.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  auto* sample_disp = sample->add_subcommand("disposition", "Uniform dispositions of [m] into n segments");
  sample_disp->add_option("--m", cfg.m, "Element count")->required();
  sample_disp->add_option("--n", cfg.n, "Segment count")->required()->check(CLI::PositiveNumber);
  for (auto* s : {sample_tree, sample_disp}) {
    s->add_option("--seed", cfg.seed, "Generator seed");
    s->add_option("--count", cfg.count, "Number of samples");
    add_format(s);
  }

  auto* verify = app.add_subcommand("verify", "Check identities by exhaustive enumeration");
  verify->add_option("--identity", cfg.identity, "thm2.1|q|thm2.2|eq3|eq4|transport|thm3.1|gessel-seo|all");
  verify->add_option("--m", cfg.m, "Single m");
  verify->add_option("--n", cfg.n, "Single n")->check(CLI::PositiveNumber);
  verify->add_option("--r", cfg.r, "Single root")->check(CLI::PositiveNumber);
  verify->add_option("--caps", cfg.caps, "key=value caps: disp_m disp_n perm_m perm_n tree_n gs_n");
  verify->add_option("--mutation", cfg.mutation, "Corrupt a statistic (for testing the checks)");
  verify->add_flag("--parallel", cfg.parallel, "Run verification cells concurrently");
  add_format(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_default, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ifstream in_file;
  std::ofstream out_file;
  if (!cfg.in_path.empty()) {
    in_file.open(cfg.in_path);
    if (!in_file) {
      err << "cannot open " << cfg.in_path << '\n';
      return kUsage;
    }
  }
  if (!cfg.out_path.empty()) {
    out_file.open(cfg.out_path);
    if (!out_file) {
      err << "cannot open " << cfg.out_path << '\n';
      return kUsage;
    }
  }
  std::istream& in = cfg.in_path.empty() ? in_default : in_file;
  std::ostream& out = cfg.out_path.empty() ? out_default : out_file;

  try {
    if (trees_enum->parsed()) {
      if (cfg.root && (*cfg.root < 1 || static_cast<std::size_t>(*cfg.root) > *cfg.n))
        throw UsageError("--root must lie in [n]");
      for_each_plane_tree(*cfg.n, cfg.root, [&](const PlaneTree& t) { out << render(t, cfg.format) << '\n'; });
    } else if (disps_enum->parsed()) {
      for_each_disposition(*cfg.m, *cfg.n, [&](const Disposition& d) { out << render(d, cfg.format) << '\n'; });
    } else if (t2d->parsed()) {
      for_each_line(in, [&](const std::string& l) { out << render(phi(parse_tree(l)), cfg.format) << '\n'; });
    } else if (d2t->parsed()) {
      for_each_line(in, [&](const std::string& l) { out << render(phi_inverse(parse_disposition(l)), cfg.format) << '\n'; });
    } else if (p2d->parsed()) {
      for_each_line(in, [&](const std::string& l) {
        out << render(colored_to_disposition(parse_colored_line(l, cfg)), cfg.format) << '\n';
      });
    } else if (d2p->parsed()) {
      for_each_line(in, [&](const std::string& l) { out << render(disposition_to_colored(parse_disposition(l)), cfg.format) << '\n'; });
    } else if (marks->parsed()) {
      for_each_line(in, [&](const std::string& l) {
        const auto table = cfg.input_kind == "tree" ? prufer_marks(parse_tree(l)) : marks_from_disposition(parse_disposition(l));
        out << render(table, cfg.format) << '\n';
      });
    } else if (stats_tree->parsed()) {
      for_each_line(in, [&](const std::string& l) { print_tree_stats(parse_tree(l), cfg.format, out); });
    } else if (stats_disp->parsed()) {
      for_each_line(in, [&](const std::string& l) { print_disposition_stats(parse_disposition(l), cfg.format, out); });
    } else if (sample_tree->parsed() || sample_disp->parsed()) {
      DispositionSampler sampler(cfg.seed);
      const bool tree = sample_tree->parsed();
      if (cfg.format == Format::text)
        err << "# sampler=" << DispositionSampler::kAlgorithm << " seed=" << cfg.seed << '\n';
      for (std::size_t i = 0; i < cfg.count; ++i) {
        const auto d = tree ? sampler(*cfg.n - 1, *cfg.n) : sampler(*cfg.m, *cfg.n);
        if (cfg.format == Format::text) {
          out << (tree ? phi_inverse(d).to_text() : d.to_text()) << '\n';
        } else {
          auto j = nlohmann::ordered_json::parse(tree ? phi_inverse(d).to_json() : d.to_json());
          j["rng"] = DispositionSampler::kAlgorithm;
          j["seed"] = cfg.seed;
          out << j.dump() << '\n';
        }
      }
    } else if (verify->parsed()) {
      return run_verify(cfg, out);
    }
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kOverflow;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace dispo::cli

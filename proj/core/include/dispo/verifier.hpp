#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dispo/polynomial.hpp"

namespace dispo {

/// Identities checked by exhaustive enumeration against a closed form.
enum class Identity {
  disposition_rlmin,   // dispositions by RLmin = R_m
  homogeneous,         // dispositions by RLmin and gdes = Q_m
  colored_cycles,      // colored cycles = R_m
  plane_trees,         // plane trees = prod_{k=0}^{n-2} (x1+...+xn + kt)
  rooted_plane_trees,  // plane trees with root r = x_r prod_{k=1}^{n-2} (...)
  transport,           // tree side = disposition side, both enumerated
  bijection,           // phi / phi_inverse round trips and statistic transport
  gessel_seo,          // rooted trees on [n+1] weighted by x, z, t-z
};

/// CLI names: thm2.1 q thm2.2 eq3 eq4 transport thm3.1 gessel-seo
std::string_view identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
std::vector<Identity> all_identities();

/// Deliberate statistic corruptions used to show the checks can fail.
enum class Mutation {
  none,
  swap_young_elder,   // tree side: younger and elder children trade places
  rlmin_as_lrmin,     // disposition side: left-to-right minima instead
  gdes_as_descents,   // disposition side: adjacent descents instead
  beta_as_label,      // tree side: compare children by label, not smallest descendant
};

std::string_view mutation_name(Mutation m);
std::optional<Mutation> parse_mutation(std::string_view name);

struct Counterexample {
  std::string form;  // which side-by-side comparison failed
  std::string monomial;
  Coefficient enumerated = 0;
  Coefficient closed_form = 0;
};

struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::size_t>> parameters;
  std::uint64_t objects_enumerated = 0;
  std::uint64_t objects_expected = 0;
  bool passed = false;
  std::optional<Counterexample> counterexample;
  std::string detail;

  std::string to_json() const;
  /// One human-readable line.
  std::string to_text() const;
};

struct Caps {
  std::size_t disposition_m = 5;  // RLmin and homogeneous disposition forms
  std::size_t disposition_n = 4;
  std::size_t permutation_m = 5;  // colored cycles
  std::size_t permutation_n = 4;
  std::size_t tree_n = 6;         // all plane-tree identities
  std::size_t gessel_seo_n = 4;   // trees on [n+1]
};

/// Applies `key=value` (keys: disp_m disp_n perm_m perm_n tree_n gs_n).
/// Throws InvalidArgument on unknown keys or bad values.
void apply_cap(Caps& caps, std::string_view assignment);

struct VerifyOptions {
  Mutation mutation = Mutation::none;
};

VerificationReport verify_disposition_rlmin(std::size_t m, std::size_t n, const VerifyOptions& opt = {});
VerificationReport verify_homogeneous(std::size_t m, std::size_t n, const VerifyOptions& opt = {});
VerificationReport verify_colored_cycles(std::size_t m, std::size_t n, const VerifyOptions& opt = {});
VerificationReport verify_plane_trees(std::size_t n, const VerifyOptions& opt = {});
VerificationReport verify_rooted_plane_trees(std::size_t n, std::size_t r, const VerifyOptions& opt = {});
VerificationReport verify_transport(std::size_t n, const VerifyOptions& opt = {});
VerificationReport verify_bijection(std::size_t n, const VerifyOptions& opt = {});
VerificationReport verify_gessel_seo(std::size_t n, std::size_t r, const VerifyOptions& opt = {});

/// One (identity, parameters) point. `a` and `b` are (m, n), (n, -), or (n, r).
struct Cell {
  Identity identity;
  std::size_t a = 0;
  std::size_t b = 0;
};

VerificationReport run_cell(const Cell& cell, const VerifyOptions& opt = {});
/// Every cell of `id` within the caps.
std::vector<Cell> cells_for(Identity id, const Caps& caps);

/// Runs the cells, optionally in parallel; reports come back in cell order.
std::vector<VerificationReport> run_cells(std::span<const Cell> cells, const VerifyOptions& opt = {}, bool parallel = false);
std::vector<VerificationReport> verify_all(const Caps& caps = {}, const VerifyOptions& opt = {}, bool parallel = false);

bool all_passed(std::span<const VerificationReport> reports);

}  // namespace dispo

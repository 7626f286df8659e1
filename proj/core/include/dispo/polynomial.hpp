#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dispo {

using Coefficient = std::int64_t;

/// Ordered list of distinct variable names. Polynomials can only be combined
/// when their contexts hold the same names in the same order.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names);

  /// x1, ..., xn
  static VariableContext x_vars(std::size_t n);
  /// x1, ..., xn, t
  static VariableContext x_vars_t(std::size_t n);
  /// x, z, t
  static VariableContext xzt();

  std::size_t arity() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VariableContext&, const VariableContext&) = default;

 private:
  std::vector<std::string> names_;
};

/// Dense exponent vector; its length is the arity of the owning context.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : exp_(std::move(exponents)) {}
  static Monomial one(std::size_t arity) { return Monomial(std::vector<std::uint32_t>(arity, 0)); }

  std::size_t arity() const noexcept { return exp_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exp_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exp_; }
  std::uint64_t degree() const noexcept;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exp_;
};

/// Canonical term order: higher total degree first, ties broken
/// lexicographically with the first variable most significant.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse polynomial over the integers. Coefficient arithmetic is checked;
/// leaving the int64 range throws OverflowError.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Coefficient, GradedLexGreater>;

  explicit Polynomial(VariableContext context);
  Polynomial(std::shared_ptr<const VariableContext> context, TermMap terms);

  static Polynomial constant(VariableContext context, Coefficient c);
  /// The polynomial consisting of the single variable `name`.
  static Polynomial variable(VariableContext context, std::string_view name);

  const VariableContext& context() const noexcept { return *ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(const Monomial& m) const;

  /// Adds c·m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, Coefficient c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  /// Throws ContextMismatch when the contexts differ.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(std::uint32_t e) const;

  /// Canonical text, e.g. `x1^2 + 2*x1*x2 + x2^2 + x1 + x2`.
  std::string to_text() const;
  /// {"vars": [...], "terms": [{"exp": [...], "coef": c}, ...]}
  std::string to_json() const;
  static Polynomial from_json(std::string_view json);

 private:
  std::shared_ptr<const VariableContext> ctx_;
  TermMap terms_;

  void require_same_context(const Polynomial& other, const char* op) const;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
bool equals(const Polynomial& p, const Polynomial& q);

/// Replaces every occurrence of `var` by `replacement` and re-expands.
Polynomial substitute(const Polynomial& p, std::string_view var, const Polynomial& replacement);

/// Exact value at an integer point; `assignment` follows the context order.
Coefficient evaluate(const Polynomial& p, std::span<const Coefficient> assignment);

/// First monomial, in canonical order, whose coefficients differ.
struct TermDifference {
  Monomial monomial;
  Coefficient left = 0;
  Coefficient right = 0;
};
std::optional<TermDifference> first_difference(const Polynomial& p, const Polynomial& q);

/// Renders a single monomial with the context's names (`1` for the unit).
std::string monomial_text(const VariableContext& ctx, const Monomial& m);

// Closed-form products.

/// R_m = prod_{k=0}^{m-1} (x1 + ... + xn + k), over x1..xn.
Polynomial disposition_polynomial(std::size_t m, std::size_t n);
/// Q_m = prod_{k=0}^{m-1} (x1 + ... + xn + k t), over x1..xn,t.
Polynomial homogeneous_disposition_polynomial(std::size_t m, std::size_t n);
/// x prod_{k=1}^{n-1} (x + (n-k) z + k t), over x,z,t.
Polynomial gessel_seo_polynomial(std::size_t n);

namespace checked {
Coefficient add(Coefficient a, Coefficient b);
Coefficient mul(Coefficient a, Coefficient b);
}  // namespace checked

}  // namespace dispo

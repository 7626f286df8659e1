#include "dispo/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dispo/error.hpp"

namespace dispo {

namespace checked {

Coefficient add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

Coefficient mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

}  // namespace checked

// ---------------------------------------------------------------------------
// VariableContext

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidArgument("variable context needs at least one variable");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(name).second) throw InvalidArgument("duplicate variable name: " + name);
  }
}

VariableContext VariableContext::x_vars(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VariableContext(std::move(names));
}

VariableContext VariableContext::x_vars_t(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  names.emplace_back("t");
  return VariableContext(std::move(names));
}

VariableContext VariableContext::xzt() { return VariableContext({"x", "z", "t"}); }

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------
// Monomial

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exp_.begin(), exp_.end(), std::uint64_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exp_);
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (__builtin_add_overflow(r.exp_[i], other.exp_[i], &r.exp_[i]))
      throw OverflowError("exponent overflow");
  }
  return r;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  auto ea = a.exponents();
  auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::string monomial_text(const VariableContext& ctx, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(VariableContext context)
    : ctx_(std::make_shared<const VariableContext>(std::move(context))) {}

Polynomial::Polynomial(std::shared_ptr<const VariableContext> context, TermMap terms)
    : ctx_(std::move(context)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.arity() != ctx_->arity()) throw InvalidArgument("monomial arity does not match context");
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

Polynomial Polynomial::constant(VariableContext context, Coefficient c) {
  Polynomial p(std::move(context));
  p.add_term(Monomial::one(p.context().arity()), c);
  return p;
}

Polynomial Polynomial::variable(VariableContext context, std::string_view name) {
  Polynomial p(std::move(context));
  auto idx = p.context().index_of(name);
  if (!idx) throw InvalidArgument("unknown variable: " + std::string(name));
  Monomial m = Monomial::one(p.context().arity());
  m[*idx] = 1;
  p.add_term(m, 1);
  return p;
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Coefficient c) {
  if (m.arity() != ctx_->arity()) throw InvalidArgument("monomial arity does not match context");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_same_context(const Polynomial& other, const char* op) const {
  if (ctx_ != other.ctx_ && *ctx_ != *other.ctx_)
    throw ContextMismatch(std::string("context mismatch in ") + op);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_context(other, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_context(other, "subtract");
  for (const auto& [m, c] : other.terms_) add_term(m, checked::mul(c, -1));
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_, {});
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, checked::mul(c, -1));
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_context(b, "mul");
  Polynomial r(a.ctx_, {});
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, checked::mul(ca, cb));
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.require_same_context(b, "equals");
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result(ctx_, {});
  result.add_term(Monomial::one(ctx_->arity()), 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool unit = m.degree() == 0;
    // magnitude via unsigned to survive INT64_MIN
    const std::uint64_t mag = c < 0 ? std::uint64_t(0) - std::uint64_t(c) : std::uint64_t(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (unit) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << monomial_text(*ctx_, m);
    }
  }
  return out.str();
}

std::string Polynomial::to_json() const {
  nlohmann::ordered_json j;
  j["vars"] = ctx_->names();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::ordered_json t;
    t["exp"] = std::vector<std::uint32_t>(m.exponents().begin(), m.exponents().end());
    t["coef"] = c;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

Polynomial Polynomial::from_json(std::string_view json) {
  try {
    auto j = nlohmann::json::parse(json);
    Polynomial p(VariableContext(j.at("vars").get<std::vector<std::string>>()));
    for (const auto& t : j.at("terms")) {
      auto exp = t.at("exp").get<std::vector<std::uint32_t>>();
      if (exp.size() != p.context().arity()) throw ParseError("exponent vector length mismatch");
      p.add_term(Monomial(std::move(exp)), t.at("coef").get<Coefficient>());
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
bool equals(const Polynomial& p, const Polynomial& q) { return p == q; }

Polynomial substitute(const Polynomial& p, std::string_view var, const Polynomial& replacement) {
  const auto idx = p.context().index_of(var);
  if (!idx) throw InvalidArgument("unknown variable: " + std::string(var));
  if (p.context() != replacement.context()) throw ContextMismatch("context mismatch in substitute");

  std::vector<Polynomial> powers;
  Polynomial result(p.context());
  for (const auto& [m, c] : p.terms()) {
    const auto e = m[*idx];
    while (powers.size() <= e) {
      powers.push_back(powers.empty() ? Polynomial::constant(p.context(), 1) : powers.back() * replacement);
    }
    Monomial rest = m;
    rest[*idx] = 0;
    Polynomial term(p.context());
    term.add_term(rest, c);
    result += term * powers[e];
  }
  return result;
}

Coefficient evaluate(const Polynomial& p, std::span<const Coefficient> assignment) {
  if (assignment.size() != p.context().arity())
    throw InvalidArgument("assignment length does not match context arity");
  Coefficient total = 0;
  for (const auto& [m, c] : p.terms()) {
    Coefficient v = c;
    for (std::size_t i = 0; i < m.arity(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) v = checked::mul(v, assignment[i]);
    total = checked::add(total, v);
  }
  return total;
}

std::optional<TermDifference> first_difference(const Polynomial& p, const Polynomial& q) {
  if (p.context() != q.context()) throw ContextMismatch("context mismatch in first_difference");
  std::set<Monomial, GradedLexGreater> keys;
  for (const auto& [m, c] : p.terms()) keys.insert(m);
  for (const auto& [m, c] : q.terms()) keys.insert(m);
  for (const auto& m : keys) {
    const auto a = p.coefficient(m);
    const auto b = q.coefficient(m);
    if (a != b) return TermDifference{m, a, b};
  }
  return std::nullopt;
}

namespace {

// sum of x1..xn in `ctx`, whose first n variables are the x's
Polynomial sum_of_x(const VariableContext& ctx, std::size_t n) {
  Polynomial s(ctx);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m = Monomial::one(ctx.arity());
    m[i] = 1;
    s.add_term(m, 1);
  }
  return s;
}

}  // namespace

Polynomial disposition_polynomial(std::size_t m, std::size_t n) {
  if (n < 1) throw InvalidArgument("disposition_polynomial needs n >= 1");
  const auto ctx = VariableContext::x_vars(n);
  const auto base = sum_of_x(ctx, n);
  Polynomial result = Polynomial::constant(ctx, 1);
  for (std::size_t k = 0; k < m; ++k)
    result *= base + Polynomial::constant(ctx, static_cast<Coefficient>(k));
  return result;
}

Polynomial homogeneous_disposition_polynomial(std::size_t m, std::size_t n) {
  if (n < 1) throw InvalidArgument("homogeneous_disposition_polynomial needs n >= 1");
  const auto ctx = VariableContext::x_vars_t(n);
  const auto base = sum_of_x(ctx, n);
  Monomial t = Monomial::one(ctx.arity());
  t[n] = 1;
  Polynomial result = Polynomial::constant(ctx, 1);
  for (std::size_t k = 0; k < m; ++k) {
    Polynomial factor = base;
    factor.add_term(t, static_cast<Coefficient>(k));
    result *= factor;
  }
  return result;
}

Polynomial gessel_seo_polynomial(std::size_t n) {
  if (n < 1) throw InvalidArgument("gessel_seo_polynomial needs n >= 1");
  const auto ctx = VariableContext::xzt();
  Polynomial result = Polynomial::variable(ctx, "x");
  for (std::size_t k = 1; k < n; ++k) {
    Polynomial factor(ctx);
    factor.add_term(Monomial({1, 0, 0}), 1);
    factor.add_term(Monomial({0, 1, 0}), static_cast<Coefficient>(n - k));
    factor.add_term(Monomial({0, 0, 1}), static_cast<Coefficient>(k));
    result *= factor;
  }
  return result;
}

}  // namespace dispo

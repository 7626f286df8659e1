#include <doctest.h>

#include <random>

#include "dispo/disposition.hpp"
#include "dispo/error.hpp"
#include "dispo/polynomial.hpp"

using namespace dispo;

namespace {

Polynomial make(const VariableContext& ctx, std::initializer_list<std::pair<std::vector<std::uint32_t>, Coefficient>> terms) {
  Polynomial p(ctx);
  for (const auto& [e, c] : terms) p.add_term(Monomial(e), c);
  return p;
}

Polynomial random_poly(const VariableContext& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), exp(0, 2), coef(-5, 5);
  Polynomial p(ctx);
  for (int k = nterms(rng); k > 0; --k) {
    std::vector<std::uint32_t> e(ctx.arity());
    for (auto& x : e) x = static_cast<std::uint32_t>(exp(rng));
    p.add_term(Monomial(e), coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("add") {
  const auto ctx = VariableContext::x_vars(2);
  const auto x1 = Polynomial::variable(ctx, "x1");
  const auto x2 = Polynomial::variable(ctx, "x2");
  CHECK((x1 + x2).to_text() == "x1 + x2");
  CHECK(x1 + Polynomial(ctx) == x1);
  const auto cancel = (x1 + x2) + (-x2);
  CHECK(cancel == x1);
  CHECK(cancel.terms().size() == 1);
}

TEST_CASE("mul") {
  const auto ctx = VariableContext::x_vars_t(2);
  const auto s = Polynomial::variable(ctx, "x1") + Polynomial::variable(ctx, "x2");
  CHECK(s * Polynomial::constant(ctx, 1) == s);
  CHECK(s * s == make(ctx, {{{2, 0, 0}, 1}, {{1, 1, 0}, 2}, {{0, 2, 0}, 1}}));
  // hand expansion of (x1+x2)(x1+x2+t)
  const auto t = Polynomial::variable(ctx, "t");
  CHECK(s * (s + t) == make(ctx, {{{2, 0, 0}, 1}, {{1, 1, 0}, 2}, {{0, 2, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}}));
}

TEST_CASE("context mismatch is an error") {
  const auto a = Polynomial::variable(VariableContext::x_vars(2), "x1");
  const auto b = Polynomial::variable(VariableContext::x_vars(3), "x1");
  CHECK_THROWS_AS(a + b, ContextMismatch);
  CHECK_THROWS_AS(a * b, ContextMismatch);
  CHECK_THROWS_AS((void)(a == b), ContextMismatch);
  CHECK_THROWS_AS(VariableContext({"x", "x"}), InvalidArgument);
  CHECK_THROWS_AS(VariableContext({}), InvalidArgument);
}

TEST_CASE("overflow is detected") {
  const auto ctx = VariableContext::x_vars(1);
  const auto big = Polynomial::constant(ctx, Coefficient{1} << 40);
  CHECK_THROWS_AS(big * big, OverflowError);
  auto p = Polynomial::constant(ctx, std::numeric_limits<Coefficient>::max());
  CHECK_THROWS_AS(p.add_term(Monomial::one(1), 1), OverflowError);
  const std::vector<Coefficient> at{std::numeric_limits<Coefficient>::max()};
  CHECK_THROWS_AS(evaluate(Polynomial::variable(ctx, "x1").pow(2), at), OverflowError);
}

TEST_CASE("canonical text uses graded lex order") {
  const auto ctx = VariableContext::x_vars(2);
  const auto p = make(ctx, {{{0, 1}, 1}, {{1, 1}, 2}, {{1, 0}, 1}});
  CHECK(p.to_text() == "2*x1*x2 + x1 + x2");
  CHECK(disposition_polynomial(2, 2).to_text() == "x1^2 + 2*x1*x2 + x2^2 + x1 + x2");
  CHECK(make(ctx, {{{0, 0}, -3}, {{1, 0}, -1}}).to_text() == "-x1 - 3");
  CHECK(Polynomial(ctx).to_text() == "0");
}

TEST_CASE("json round trip") {
  const auto p = homogeneous_disposition_polynomial(3, 2);
  const auto json = p.to_json();
  CHECK(json.rfind(R"({"vars":["x1","x2","t"],"terms":[{"exp":[3,0,0],"coef":1})", 0) == 0);
  CHECK(Polynomial::from_json(json) == p);
  CHECK_THROWS_AS(Polynomial::from_json("{\"vars\":[\"x\"],\"terms\":[{\"exp\":[1,2],\"coef\":1}]}"), ParseError);
}

TEST_CASE("disposition_polynomial") {
  CHECK(disposition_polynomial(0, 3) == Polynomial::constant(VariableContext::x_vars(3), 1));
  const auto ctx2 = VariableContext::x_vars(2);
  CHECK(disposition_polynomial(1, 2) == make(ctx2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(disposition_polynomial(2, 2) == make(ctx2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}));
}

TEST_CASE("homogeneous_disposition_polynomial") {
  CHECK(homogeneous_disposition_polynomial(1, 3).to_text() == "x1 + x2 + x3");
  const auto ctx = VariableContext::x_vars_t(2);
  CHECK(homogeneous_disposition_polynomial(2, 2) ==
        make(ctx, {{{2, 0, 0}, 1}, {{1, 1, 0}, 2}, {{0, 2, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}}));

  SUBCASE("t = 1 gives R_m") {
    for (std::size_t m = 0; m <= 4; ++m)
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto q = homogeneous_disposition_polynomial(m, n);
        const auto ones = substitute(q, "t", Polynomial::constant(q.context(), 1));
        // drop t from the context by re-keying
        Polynomial r(VariableContext::x_vars(n));
        for (const auto& [mono, c] : ones.terms()) {
          CHECK(mono[n] == 0);
          r.add_term(Monomial(std::vector<std::uint32_t>(mono.exponents().begin(), mono.exponents().end() - 1)), c);
        }
        CHECK(r == disposition_polynomial(m, n));
      }
  }

  SUBCASE("homogeneous of degree m") {
    for (std::size_t m = 1; m <= 5; ++m)
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto q = homogeneous_disposition_polynomial(m, n);
        for (const auto& [mono, c] : q.terms()) CHECK(mono.degree() == m);
      }
  }
}

TEST_CASE("gessel_seo_polynomial") {
  const auto ctx = VariableContext::xzt();
  CHECK(gessel_seo_polynomial(1) == Polynomial::variable(ctx, "x"));
  CHECK(gessel_seo_polynomial(2) == make(ctx, {{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{1, 0, 1}, 1}}));
  const std::vector<Coefficient> ones{1, 1, 1};
  CHECK(evaluate(gessel_seo_polynomial(3), ones) == 16);
}

TEST_CASE("substitute") {
  const auto ctx = VariableContext::xzt();
  const auto x = Polynomial::variable(ctx, "x");
  const auto z = Polynomial::variable(ctx, "z");
  const auto t = Polynomial::variable(ctx, "t");
  CHECK(substitute(x + t, "t", t + z) == x + t + z);
  CHECK(substitute((t - z) * z, "t", t + z) == t * z);
  CHECK_THROWS_AS(substitute(x, "w", t), InvalidArgument);

  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_poly(ctx, rng);
    CHECK(substitute(p, "t", t) == p);
  }
}

TEST_CASE("evaluate") {
  const std::vector<Coefficient> two_ones{1, 1};
  CHECK(evaluate(disposition_polynomial(2, 2), two_ones) == 6);
  CHECK(evaluate(Polynomial::constant(VariableContext::x_vars(2), 1), two_ones) == 1);
  const std::vector<Coefficient> five_ones(5, 1);
  CHECK(evaluate(disposition_polynomial(4, 5), five_ones) == 1680);
  CHECK_THROWS_AS(evaluate(disposition_polynomial(1, 2), five_ones), InvalidArgument);

  SUBCASE("rising factorial at all-ones") {
    for (std::size_t m = 0; m <= 6; ++m)
      for (std::size_t n = 1; n <= 5; ++n) {
        const std::vector<Coefficient> ones(n, 1);
        CHECK(static_cast<std::uint64_t>(evaluate(disposition_polynomial(m, n), ones)) == rising_factorial(n, m));
      }
  }
}

TEST_CASE("ring axioms and evaluation homomorphism on random polynomials") {
  const auto ctx = VariableContext::x_vars_t(2);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<Coefficient> point(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(ctx, rng);
    const auto b = random_poly(ctx, rng);
    const auto c = random_poly(ctx, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const std::vector<Coefficient> at{point(rng), point(rng), point(rng)};
    CHECK(evaluate(a * b, at) == evaluate(a, at) * evaluate(b, at));
    CHECK(evaluate(a + b, at) == evaluate(a, at) + evaluate(b, at));
    const auto product = a * b;
    for (const auto& [m, coef] : product.terms()) CHECK(coef != 0);
  }
}

TEST_CASE("first_difference reports the first monomial in canonical order") {
  const auto ctx = VariableContext::x_vars(2);
  const auto p = make(ctx, {{{2, 0}, 1}, {{1, 0}, 3}, {{0, 1}, 1}});
  const auto q = make(ctx, {{{2, 0}, 1}, {{1, 0}, 2}, {{0, 0}, 5}});
  const auto d = first_difference(p, q);
  REQUIRE(d.has_value());
  CHECK(monomial_text(ctx, d->monomial) == "x1");
  CHECK(d->left == 3);
  CHECK(d->right == 2);
  CHECK_FALSE(first_difference(p, p).has_value());
}

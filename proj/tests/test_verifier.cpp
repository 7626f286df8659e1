#include <doctest.h>

#include "dispo/error.hpp"
#include "dispo/plane_tree.hpp"
#include "dispo/verifier.hpp"
#include "oracles.hpp"

using namespace dispo;

TEST_CASE("identity and mutation names") {
  for (auto id : all_identities()) CHECK(parse_identity(identity_name(id)) == id);
  CHECK(identity_name(Identity::disposition_rlmin) == "thm2.1");
  CHECK(identity_name(Identity::colored_cycles) == "thm2.2");
  CHECK(identity_name(Identity::plane_trees) == "eq3");
  CHECK(identity_name(Identity::gessel_seo) == "gessel-seo");
  CHECK_FALSE(parse_identity("thm9").has_value());
  CHECK(parse_mutation("swap-young-elder") == Mutation::swap_young_elder);
  CHECK(parse_mutation("none") == Mutation::none);
  CHECK_FALSE(parse_mutation("nope").has_value());
}

TEST_CASE("disposition cells") {
  const auto a = verify_disposition_rlmin(1, 1);
  CHECK(a.passed);
  CHECK(a.objects_enumerated == 1);
  CHECK(verify_disposition_rlmin(2, 2).objects_enumerated == 6);
  const auto b = verify_disposition_rlmin(4, 3);
  CHECK(b.passed);
  CHECK(b.objects_enumerated == 360);
  CHECK(b.objects_expected == 360);
  CHECK_FALSE(b.counterexample.has_value());

  for (std::size_t n = 1; n <= 4; ++n) CHECK(verify_homogeneous(1, n).passed);
  CHECK(verify_homogeneous(2, 1).passed);
  CHECK(verify_homogeneous(5, 3).passed);
  CHECK_THROWS_AS(verify_homogeneous(2, 0), InvalidArgument);
}

TEST_CASE("colored cycle cells") {
  CHECK(verify_colored_cycles(1, 2).passed);
  const auto r = verify_colored_cycles(2, 2);
  CHECK(r.passed);
  CHECK(r.objects_enumerated == 6);
  const auto big = verify_colored_cycles(5, 3);
  CHECK(big.passed);
  CHECK(big.objects_enumerated == oracle::colored_permutation_count(5, 3));
}

TEST_CASE("tree cells") {
  CHECK(verify_plane_trees(1).passed);
  const auto three = verify_plane_trees(3);
  CHECK(three.passed);
  CHECK(three.objects_enumerated == 12);
  CHECK(verify_rooted_plane_trees(2, 1).passed);
  const auto rooted = verify_rooted_plane_trees(3, 2);
  CHECK(rooted.passed);
  CHECK(rooted.objects_enumerated == 4);
  for (std::size_t r = 1; r <= 5; ++r) CHECK(verify_rooted_plane_trees(5, r).passed);
  CHECK_THROWS_AS(verify_rooted_plane_trees(3, 4), InvalidArgument);
  CHECK_THROWS_AS(verify_rooted_plane_trees(1, 1), InvalidArgument);

  CHECK(verify_transport(2).passed);
  const auto t4 = verify_transport(4);
  CHECK(t4.passed);
  CHECK(t4.objects_enumerated == 120);

  for (std::size_t n = 1; n <= 5; ++n) {
    const auto b = verify_bijection(n);
    CHECK_MESSAGE(b.passed, b.to_text());
    CHECK(b.objects_enumerated == plane_tree_count(n));
  }
}

TEST_CASE("gessel-seo cells") {
  CHECK(verify_gessel_seo(1, 1).passed);
  const auto two = verify_gessel_seo(2, 1);
  CHECK(two.passed);
  CHECK(two.objects_enumerated == 4);
  for (std::size_t r = 1; r <= 5; ++r) CHECK(verify_gessel_seo(4, r).passed);
  CHECK_THROWS_AS(verify_gessel_seo(2, 4), InvalidArgument);
}

TEST_CASE("grids") {
  Caps caps;
  CHECK(cells_for(Identity::disposition_rlmin, caps).size() == 6 * 4);
  CHECK(cells_for(Identity::plane_trees, caps).size() == 6);
  CHECK(cells_for(Identity::rooted_plane_trees, caps).size() == 2 + 3 + 4 + 5 + 6);
  CHECK(cells_for(Identity::gessel_seo, caps).size() == 2 + 3 + 4 + 5);

  apply_cap(caps, "tree_n=3");
  CHECK(caps.tree_n == 3);
  CHECK_THROWS_AS(apply_cap(caps, "tree_n"), InvalidArgument);
  CHECK_THROWS_AS(apply_cap(caps, "bogus=1"), InvalidArgument);
  CHECK_THROWS_AS(apply_cap(caps, "tree_n=x"), InvalidArgument);

  SUBCASE("caps of 1 pass trivially") {
    Caps one;
    for (auto key : {"disp_m=1", "disp_n=1", "perm_m=1", "perm_n=1", "tree_n=1", "gs_n=1"}) apply_cap(one, key);
    const auto reports = verify_all(one);
    CHECK_FALSE(reports.empty());
    CHECK(all_passed(reports));
  }

  SUBCASE("default caps pass, every report counts what it should") {
    const auto reports = verify_all();
    for (const auto& r : reports) {
      CHECK_MESSAGE(r.passed, r.to_text());
      CHECK(r.objects_enumerated == r.objects_expected);
      CHECK_FALSE(r.counterexample.has_value());
    }
  }

  SUBCASE("parallel matches serial") {
    Caps small;
    apply_cap(small, "tree_n=4");
    apply_cap(small, "disp_m=3");
    const auto serial = verify_all(small);
    const auto parallel = verify_all(small, {}, true);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].to_json() == parallel[i].to_json());
  }
}

TEST_CASE("every mutation is caught with a counterexample") {
  for (auto mut : {Mutation::swap_young_elder, Mutation::rlmin_as_lrmin, Mutation::gdes_as_descents, Mutation::beta_as_label}) {
    CAPTURE(mutation_name(mut));
    const auto reports = verify_all({}, VerifyOptions{mut});
    bool caught = false;
    for (const auto& r : reports) {
      if (r.passed) continue;
      if (!r.counterexample) continue;
      caught = true;
      const auto& c = *r.counterexample;
      CHECK_FALSE(c.monomial.empty());
      CHECK(c.enumerated != c.closed_form);
    }
    CHECK(caught);
  }
}

TEST_CASE("report formats") {
  const auto pass = verify_plane_trees(2);
  CHECK(pass.to_text() == "PASS eq3 n=2 objects=2");
  CHECK(pass.to_json() ==
        R"({"identity":"eq3","parameters":{"n":2},"objects_enumerated":2,"objects_expected":2,"result":"pass","counterexample":null})");

  const auto fail = verify_plane_trees(3, VerifyOptions{Mutation::swap_young_elder});
  CHECK_FALSE(fail.passed);
  REQUIRE(fail.counterexample.has_value());
  CHECK(fail.to_text().rfind("FAIL eq3 n=3 objects=12 [eq3] first difference at ", 0) == 0);
  CHECK(fail.to_json().find(R"("result":"fail")") != std::string::npos);
}

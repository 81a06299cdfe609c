#include <affcell/based_algebra.hpp>
#include <affcell/table_io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace affcell;

TEST_CASE("rank-2 KL-style document loads and multiplies") {
  BasedAlgebra alg = ba_load_string(fixture_s2_hecke());
  REQUIRE(alg.rank() == 2);
  CHECK(alg.units == std::vector<int>{0});
  CHECK(alg.basis == std::vector<std::string>{"c_e", "cs"});

  int cs = alg.index_of("cs");
  Element sq = ba_multiply(alg, elt_basis(cs), elt_basis(cs));
  Element expected{{cs, LaurentPoly::parse("1*v^1 + 1*v^-1")}};
  CHECK(sq == expected);

  CHECK(ba_check_generalized_unit(alg).pass);
  CHECK(ba_check_sector_closure(alg).pass);
  CHECK(ba_check_involution(alg).pass);
  CHECK(ba_check_associativity(alg).pass);
}

TEST_CASE("group algebra of order two") {
  BasedAlgebra alg = ba_load_string(fixture_z2_group());
  int g = alg.index_of("g");
  CHECK(ba_multiply(alg, elt_basis(g), elt_basis(g)) == elt_basis(0));
  CHECK(ba_check_associativity(alg).pass);
  CHECK(ba_check_involution(alg).pass);
}

TEST_CASE("matrix units with two sector idempotents") {
  BasedAlgebra alg = ba_load_string(fixture_matrix_units());
  REQUIRE(alg.rank() == 4);
  CHECK(alg.units.size() == 2);

  CHECK(ba_check_generalized_unit(alg).pass);
  CHECK(ba_check_sector_closure(alg).pass);
  CHECK(ba_check_involution(alg).pass);
  CHECK(ba_check_associativity(alg).pass);

  // (E12 + E21)^2 = E11 + E22 = identity
  Element x;
  elt_add(x, elt_basis(alg.index_of("E12")));
  elt_add(x, elt_basis(alg.index_of("E21")));
  CHECK(ba_multiply(alg, x, x) == ba_unit_element(alg));
}

TEST_CASE("identity involution on matrix units is not an anti-automorphism") {
  BasedAlgebra alg = ba_load_string(fixture_matrix_units(
      R"({"E11": "E11", "E12": "E12", "E21": "E21", "E22": "E22"})"));
  Verdict v = ba_check_involution(alg);
  CHECK_FALSE(v.pass);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("associativity failure is reported with the offending triple") {
  BasedAlgebra alg = ba_load_string(fixture_nonassociative());
  CHECK(ba_check_generalized_unit(alg).pass);
  Verdict v = ba_check_associativity(alg);
  REQUIRE_FALSE(v.pass);
  CHECK(v.witness.find("(a, a, a)") != std::string::npos);
}

TEST_CASE("load errors carry the failing context") {
  CHECK_THROWS_AS(ba_load_string(fixture_unit_axiom_failure()), LoadError);
  CHECK_THROWS_WITH(ba_load_string(fixture_unit_axiom_failure()),
                    Catch::Matchers::ContainsSubstring("unit-axiom"));
  CHECK_THROWS_WITH(ba_load_string(fixture_sector_violation()),
                    Catch::Matchers::ContainsSubstring("sector"));
  CHECK_THROWS_WITH(
      ba_load_string(fixture_sector_violation()),
      Catch::Matchers::ContainsSubstring("(E12, E12, E21)"));
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(ba_load_string("not json at all"), LoadError);
  CHECK_THROWS_AS(ba_load_string("[1,2,3]"), LoadError);
  CHECK_THROWS_AS(ba_load_string(R"({"basis": []})"), LoadError);

  auto mangle = [](std::string doc, const std::string& from,
                   const std::string& to) {
    auto pos = doc.find(from);
    REQUIRE(pos != std::string::npos);
    return doc.replace(pos, from.size(), to);
  };

  // duplicate basis label
  CHECK_THROWS_WITH(
      ba_load_string(mangle(fixture_z2_group(), R"(["e", "g"])", R"(["e", "e"])")),
      Catch::Matchers::ContainsSubstring("duplicate basis label"));
  // unknown label in a product
  CHECK_THROWS_WITH(
      ba_load_string(mangle(fixture_z2_group(), R"("left": "g", "right": "g")",
                            R"("left": "g", "right": "h")")),
      Catch::Matchers::ContainsSubstring("unknown basis label"));
  // unparseable coefficient
  CHECK_THROWS_WITH(
      ba_load_string(mangle(fixture_z2_group(), R"({"basis": "e", "coeff": "1"})",
                            R"({"basis": "e", "coeff": "v^"})")),
      Catch::Matchers::ContainsSubstring("bad coefficient"));
  // involution that is not an involution
  CHECK_THROWS_WITH(
      ba_load_string(mangle(fixture_z2_group(), R"("involution": {"e": "e", "g": "g"})",
                            R"("involution": {"e": "e", "g": "e"})")),
      Catch::Matchers::ContainsSubstring("involution"));
  // duplicate product record
  CHECK_THROWS_WITH(
      ba_load_string(mangle(
          fixture_z2_group(), R"({"left": "g", "right": "g", "result": [{"basis": "e", "coeff": "1"}]})",
          R"({"left": "g", "right": "g", "result": [{"basis": "e", "coeff": "1"}]},
             {"left": "g", "right": "g", "result": [{"basis": "e", "coeff": "1"}]})")),
      Catch::Matchers::ContainsSubstring("duplicate product record"));
  // stray field
  CHECK_THROWS_WITH(
      ba_load_string(mangle(fixture_z2_group(), R"("units")", R"("unitz")")),
      Catch::Matchers::ContainsSubstring("unknown field"));
}

TEST_CASE("zero coefficients are dropped on load") {
  std::string doc = fixture_z2_group();
  auto pos = doc.find(R"({"left": "g", "right": "g", "result": [{"basis": "e", "coeff": "1"}]})");
  REQUIRE(pos != std::string::npos);
  doc.replace(pos, std::string(R"({"left": "g", "right": "g", "result": [{"basis": "e", "coeff": "1"}]})").size(),
              R"({"left": "g", "right": "g", "result": [{"basis": "e", "coeff": "1"}, {"basis": "g", "coeff": "0"}]})");
  BasedAlgebra alg = ba_load_string(doc);
  CHECK(alg.product(1, 1).size() == 1);
}

TEST_CASE("documents round-trip") {
  for (const std::string& doc : {fixture_s2_hecke(), fixture_z2_group(),
                                 fixture_matrix_units()}) {
    BasedAlgebra alg = ba_load_string(doc);
    nlohmann::ordered_json serialized = ba_to_json(alg);
    BasedAlgebra again = ba_from_json(serialized);
    CHECK(again == alg);
    CHECK(ba_to_json(again) == serialized);
  }
}

TEST_CASE("element helpers keep coefficients canonical") {
  Element e;
  elt_add_term(e, 3, LaurentPoly::v(1));
  elt_add_term(e, 3, -LaurentPoly::v(1));
  CHECK(e.empty());
  elt_add_term(e, 1, LaurentPoly(2));
  Element f;
  elt_add(f, e, LaurentPoly::v(-2));
  CHECK(f == Element{{1, LaurentPoly::parse("2*v^-2")}});
}

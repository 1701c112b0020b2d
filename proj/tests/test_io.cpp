#include <doctest.h>

#include "test_helpers.hpp"

using namespace sdres;
using sdres::testing::poly;

TEST_CASE("parse the worked systems")
{
  GenericSystem s0 = parse_system(sdres::testing::quad_pair);
  CHECK(s0.n() == 1);
  CHECK(s0.poly_count() == 2);
  CHECK(s0.poly(0) == poly(s0, "u00 + u01*y1^2"));
  CHECK(s0.poly(1) == poly(s0, "u10*y1@1 + u11*y1"));

  GenericSystem s2 = parse_system(sdres::testing::product_triplet);
  CHECK(s2.n() == 2);
  CHECK(s2.poly_count() == 3);
  CHECK(s2.block_size(2) == 2);
}

TEST_CASE("laurent polynomials parse")
{
  auto t = std::make_shared<VarTable>();
  t->add_main("y1");
  t->add_main("y2");
  DiffPoly p = parse_poly("y1^-1 + y2", *t);
  REQUIRE(p.term_count() == 2);
  CHECK(p.terms()[1].mon == LaurentMonomial::var(SVar{0, 0}, -1));
}

TEST_CASE("parse errors carry positions")
{
  CHECK_THROWS_AS(parse_system("u00 + u01*y1 $"), ParseError);
  try {
    parse_system("u00 + u01*y1;\nu10 + u11*y1 + $");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 10);
  }
  // Laurent exponent on a coefficient variable
  CHECK_THROWS_AS(parse_system("u00^-1 + u01*y1; u10 + u11*y1"), ParseError);
  // duplicate monomial in one support
  CHECK_THROWS_AS(parse_system("u00*y1 + u01*y1; u10 + u11*y1"), ParseError);
  // empty input
  CHECK_THROWS_AS(parse_system(""), ParseError);
}

TEST_CASE("round trip: parse after print is the identity")
{
  for (const char* text :
       {sdres::testing::quad_pair, sdres::testing::product_triplet, sdres::testing::chain_triplet,
        sdres::testing::linear_triplet_shift23, sdres::testing::pipeline_quad}) {
    GenericSystem sys = parse_system(text);
    GenericSystem again = parse_system(print_system(sys));
    CHECK(print_system(again) == print_system(sys));
    REQUIRE(again.poly_count() == sys.poly_count());
    for (int i = 0; i < sys.poly_count(); ++i)
      CHECK(again.poly(i) == sys.poly(i));
  }
}

TEST_CASE("certificates print and reparse")
{
  GenericSystem s2 = parse_system(sdres::testing::product_triplet);
  ResultantCertificate cert = search_resultant(s2);
  std::string text = certificate_to_text(cert, s2.table());
  CHECK(text.substr(0, text.find('\n')) == "u00@1*u11 - u01@1*u10");

  DiffPoly back = parse_poly(text.substr(0, text.find('\n')), s2.table());
  CHECK(back == cert.sr);

  // zero-order certificate round trip
  GenericSystem s1 = parse_system(sdres::testing::linear_triplet_shift23);
  ResultantCertificate c1 = search_resultant(s1);
  DiffPoly b1 = parse_poly(poly_to_text(c1.sr, s1.table()), s1.table());
  CHECK(b1 == c1.sr);
}

TEST_CASE("json certificates are byte-stable and carry orders and degree")
{
  GenericSystem s0 = parse_system(sdres::testing::quad_pair);
  ResultantCertificate cert = search_resultant(s0);
  std::string a = certificate_to_json(cert, s0.table());
  std::string b = certificate_to_json(cert, s0.table());
  CHECK(a == b);
  CHECK(a.find("\"orders\":[1,0]") != std::string::npos);
  CHECK(a.find("\"degree\":4") != std::string::npos);
  CHECK(a.find("\"vanishing\":true") != std::string::npos);
}

TEST_CASE("documents accept headers, comments and options")
{
  SystemDocument doc = parse_document(
      "# comment\nversion 1\nmain y1 y2\noption engine reduction\n"
      "u00 + u01*y1*y2;\nu10 + u11*y1@1*y2@1;\nu20 + u21*y2\n");
  CHECK(doc.version == 1);
  CHECK(doc.options.at("engine") == "reduction");
  REQUIRE(doc.system.has_value());
  CHECK(doc.system->n() == 2);
  // declared order fixes the variable order
  CHECK(doc.table->info(0).name == "y1");
  CHECK(doc.table->info(1).name == "y2");
}

TEST_CASE("coefficient names with wide indices")
{
  auto t = std::make_shared<VarTable>();
  t->add_main("y1");
  t->add_coeff("u0_11", 0, 11);
  DiffPoly p = parse_poly("u0_11*y1", *t);
  CHECK(p.term_count() == 1);
}

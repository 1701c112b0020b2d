#include <doctest.h>

#include "test_helpers.hpp"

using namespace sdres;
using sdres::testing::poly;

namespace {

std::shared_ptr<VarTable> small_table()
{
  auto t = std::make_shared<VarTable>();
  t->add_main("y1");
  t->add_main("y2");
  t->add_coeff("u00", 0, 0);
  t->add_coeff("u01", 0, 1);
  t->add_coeff("u10", 1, 0);
  t->add_coeff("u11", 1, 1);
  return t;
}

}  // namespace

TEST_CASE("transform shifts every variable and fixes Q")
{
  auto t = small_table();
  DiffPoly p = parse_poly("u00*y1", *t);
  DiffPoly q = parse_poly("u00@1*y1@1", *t);
  CHECK(p.transform(1) == q);
  CHECK(p.transform(0) == p);

  DiffPoly r = parse_poly("3/2*y1@1*y2^-1", *t);
  DiffPoly rs = parse_poly("3/2*y1@3*y2@2^-1", *t);
  CHECK(r.transform(2) == rs);
}

TEST_CASE("transform is a ring homomorphism")
{
  auto t = small_table();
  DiffPoly p = parse_poly("u00 + 2*y1*y2^-1", *t);
  DiffPoly q = parse_poly("y1@1 - 3*u01", *t);
  for (int k = 0; k <= 3; ++k) {
    CHECK((p * q).transform(k) == p.transform(k) * q.transform(k));
    CHECK((p + q).transform(k) == p.transform(k) + q.transform(k));
  }
}

TEST_CASE("norm form clears negative exponents and monomial content")
{
  auto t = small_table();

  NormForm a = norm_form(parse_poly("y1^-1 + y2", *t), *t);
  CHECK(a.clearing == LaurentMonomial::var(SVar{0, 0}));
  CHECK(a.poly == parse_poly("1 + y1*y2", *t));

  NormForm b = norm_form(parse_poly("y1 + y1*y2", *t), *t);
  CHECK(b.clearing == LaurentMonomial::var(SVar{0, 0}, -1));
  CHECK(b.poly == parse_poly("1 + y2", *t));

  NormForm c = norm_form(parse_poly("u00 + u01*y1@1*y1^-2", *t), *t);
  CHECK(c.clearing == LaurentMonomial::var(SVar{0, 0}, 2));
  CHECK(c.poly == parse_poly("u00*y1^2 + u01*y1@1", *t));

  CHECK_THROWS_AS(norm_form(DiffPoly::zero(), *t), std::domain_error);
}

TEST_CASE("norm form minimality by brute force over candidate clearings")
{
  // independent check of the divisibility condition: every monomial T with
  // T*F polynomial must satisfy N | T*F, i.e. T/M has no negative exponents
  auto t = small_table();
  DiffPoly f = parse_poly("u00 + u01*y1@1*y1^-2", *t);
  NormForm nf = norm_form(f, *t);
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      LaurentMonomial cand = LaurentMonomial::from_pairs({{SVar{0, 0}, a}, {SVar{0, 1}, b}});
      DiffPoly tf = f.mul_monomial(cand);
      bool tf_polynomial = true;
      for (const auto& term : tf.terms())
        for (const auto& [v, e] : term.mon.exponents())
          if (t->is_main(v.var) && e < 0)
            tf_polynomial = false;
      if (!tf_polynomial)
        continue;
      LaurentMonomial quot = cand.mul(nf.clearing.inverse());
      for (const auto& [v, e] : quot.exponents())
        CHECK(e >= 0);
    }
}

TEST_CASE("order statistics")
{
  auto t = small_table();
  DiffPoly p = parse_poly("y1@2 + y1", *t);
  OrderStats s = order_stats(p, 0);
  CHECK(s.ord == ExtInt(2));
  CHECK(s.lord == ExtInt(0));
  CHECK(s.eord == ExtInt(2));

  DiffPoly q = parse_poly("u00 + u01*y2@3", *t);
  OrderStats s2 = order_stats(q, 0);
  CHECK(!s2.ord.finite());
  CHECK(!s2.lord.finite());
  CHECK(!s2.eord.finite());

  GenericSystem sys = parse_system(sdres::testing::product_triplet);
  OrderStats s3 = order_stats(sys.poly(1), 1);  // P_1 in y2
  CHECK(s3.ord == ExtInt(1));
  CHECK(s3.lord == ExtInt(1));
  CHECK(s3.eord == ExtInt(0));
}

TEST_CASE("degrees")
{
  auto t = small_table();
  DiffPoly p = parse_poly("u00*y1^3*y2 + y1@1^2", *t);
  CHECK(p.total_degree() == 5);
  CHECK(p.degree_in_svar(SVar{0, 0}) == ExtInt(3));
  CHECK(p.degree_in_svar(SVar{0, 1}) == ExtInt(2));
  CHECK(!p.degree_in_svar(SVar{1, 1}).finite());
  CHECK(p.degree_in_var(0) == ExtInt(3));
}

TEST_CASE("evaluate")
{
  auto t = small_table();
  DiffPoly p = parse_poly("y1^2 - 4", *t);
  std::map<SVar, Rat> a{{SVar{0, 0}, Rat(2)}};
  CHECK(p.evaluate(a) == 0);

  DiffPoly inv = parse_poly("y1^-1", *t);
  std::map<SVar, Rat> b{{SVar{0, 0}, make_rat(2, 3)}};
  CHECK(inv.evaluate(b) == make_rat(3, 2));

  // consistent specialization built from a generic zero
  DiffPoly sr = parse_poly("u10^2*u01*u00@1 - u11^2*u00*u01@1", *t);
  std::map<SVar, Rat> c{{SVar{t->find("u10"), 0}, Rat(1)}, {SVar{t->find("u01"), 0}, Rat(1)},
                        {SVar{t->find("u00"), 1}, Rat(4)}, {SVar{t->find("u11"), 0}, Rat(1)},
                        {SVar{t->find("u00"), 0}, Rat(1)}, {SVar{t->find("u01"), 1}, Rat(4)}};
  CHECK(sr.evaluate(c) == 0);

  CHECK_THROWS_AS(p.evaluate(std::map<SVar, Rat>{}), std::invalid_argument);
  std::map<SVar, Rat> z{{SVar{0, 0}, Rat(0)}};
  CHECK_THROWS_AS(inv.evaluate(z), std::domain_error);
}

TEST_CASE("transformal homogeneity layers")
{
  auto t = std::make_shared<VarTable>();
  t->add_main("y0");
  t->add_main("y1");
  DiffPoly p = parse_poly("y0@1*y1 + y0*y1@1", *t);
  auto layers = transformally_homogeneous_layers(p, {0, 1});
  REQUIRE(layers.has_value());
  CHECK(*layers == std::vector<long>{1, 1});

  DiffPoly q = parse_poly("y0 + y0@1", *t);
  CHECK(!transformally_homogeneous_layers(q, {0}).has_value());

  auto t2 = small_table();
  DiffPoly sr = parse_poly("u00@1*u11 - u01@1*u10", *t2);
  auto l2 = transformally_homogeneous_layers(sr, {t2->find("u00"), t2->find("u01")});
  REQUIRE(l2.has_value());
  CHECK(*l2 == std::vector<long>{0, 1});
}

TEST_CASE("canonical form is unique")
{
  auto t = small_table();
  DiffPoly a = parse_poly("y1*y2 + u00 - y1*y2", *t);
  CHECK(a == parse_poly("u00", *t));
  DiffPoly b = parse_poly("2*y1 + 3*y1", *t);
  CHECK(b == parse_poly("5*y1", *t));
  CHECK(parse_poly("y1 - y1", *t).is_zero());
}

TEST_CASE("normalized certificates have coprime integer coefficients")
{
  auto t = small_table();
  DiffPoly p = parse_poly("2/3*u00 - 4/3*u01", *t).normalized();
  CHECK(p == parse_poly("u00 - 2*u01", *t));
  DiffPoly q = parse_poly("-1/2*u00*u11", *t).normalized();
  CHECK(q == parse_poly("u00*u11", *t));
}

#include <doctest.h>

#include "test_helpers.hpp"

using namespace sdres;
using sdres::testing::poly;

namespace {

Polytope pts(int dim, std::vector<std::vector<long>> coords)
{
  std::vector<Point> ps;
  for (const auto& c : coords) {
    Point p;
    for (long v : c)
      p.push_back(Rat(v));
    ps.push_back(std::move(p));
  }
  return make_polytope(dim, std::move(ps));
}

}  // namespace

TEST_CASE("mixed volume basics")
{
  // two orthogonal unit segments
  Polytope e1 = pts(2, {{0, 0}, {1, 0}});
  Polytope e2 = pts(2, {{0, 0}, {0, 1}});
  CHECK(mixed_volume({e1, e2}) == 1);

  // three copies of the unit simplex: 3! * vol = 1
  Polytope simplex = pts(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(mixed_volume({simplex, simplex, simplex}) == 1);

  // the quadratic dense pair: triangles in three coordinates
  Polytope q0 = pts(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}});
  Polytope q1 = pts(3, {{0, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(mixed_volume({q1, q1, q0}) == 8);
  CHECK(mixed_volume({q0, q1, q0}) == 8);
  CHECK(mixed_volume({q1, q1, q1}) == 0);  // flat in the third coordinate

  Polytope mismatch = pts(2, {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(mixed_volume({mismatch, mismatch, mismatch}), std::invalid_argument);
}

TEST_CASE("mixed volume symmetry and multilinearity")
{
  Rng rng(2024);
  auto random_poly2 = [&]() {
    std::vector<std::vector<long>> c;
    int k = 2 + static_cast<int>(rng.integer(0, 2));
    for (int i = 0; i < k; ++i)
      c.push_back({rng.integer(0, 3), rng.integer(0, 3)});
    return pts(2, std::move(c));
  };
  for (int trial = 0; trial < 20; ++trial) {
    Polytope a = random_poly2(), b = random_poly2(), c = random_poly2();
    CHECK(mixed_volume({a, b}) == mixed_volume({b, a}));
    // multilinearity under Minkowski sums: M(a+b, c) = M(a,c) + M(b,c)
    CHECK(mixed_volume({minkowski_sum(a, b), c}) ==
          mixed_volume({a, c}) + mixed_volume({b, c}));
  }
}

TEST_CASE("vertex reduction drops interior points")
{
  Polytope square = pts(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}});
  Polytope v = reduce_to_vertices(square);
  CHECK(v.points.size() == 4);
  CHECK(polytope_volume(v) == Rat(4));
  // flat inputs are returned unchanged
  Polytope flat = pts(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(reduce_to_vertices(flat).points.size() == 4);
}

TEST_CASE("mixed volume is schedule independent under the thread override")
{
  Polytope q0 = pts(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}});
  Polytope q1 = pts(3, {{0, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  setenv("SDRES_THREADS", "2", 1);
  Int threaded = mixed_volume({q1, q1, q0});
  unsetenv("SDRES_THREADS");
  Int serial = mixed_volume({q1, q1, q0});
  CHECK(threaded == serial);
  CHECK(serial == 8);
}

TEST_CASE("volume of hulls")
{
  CHECK(polytope_volume(pts(2, {{0, 0}, {1, 0}, {0, 1}})) == make_rat(1, 2));
  CHECK(polytope_volume(pts(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == Rat(1));
  // interior and duplicate points are harmless
  CHECK(polytope_volume(pts(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}, {0, 0}})) == Rat(2));
  // degenerate: all points on a line
  CHECK(polytope_volume(pts(2, {{0, 0}, {1, 1}, {2, 2}})) == Rat(0));
  CHECK(polytope_volume(pts(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == make_rat(1, 6));
}

TEST_CASE("algebraic sparse resultant on classical cases")
{
  // two generic affine-linear univariate polynomials: the 2x2 determinant
  GenericSystem lin1 = parse_system("u00 + u01*y1; u10 + u11*y1");
  Prolongation p = prolong(lin1, {ExtInt(0), ExtInt(0)});
  AlgPolySystem alg = algebraic_from_prolongation(lin1, p);
  DiffPoly r = algebraic_sparse_resultant(alg);
  CHECK(r == poly(lin1, "u00*u11 - u01*u10"));

  // three generic affine-linear forms in two variables: the 3x3 determinant,
  // cross-checked against a permanent-style expansion oracle
  GenericSystem lin2 =
      parse_system("u00 + u01*y1 + u02*y2; u10 + u11*y1 + u12*y2; u20 + u21*y1 + u22*y2");
  Prolongation p2 = prolong(lin2, {ExtInt(0), ExtInt(0), ExtInt(0)});
  AlgPolySystem alg2 = algebraic_from_prolongation(lin2, p2);
  DiffPoly r2 = algebraic_sparse_resultant(alg2);
  DiffPoly det = DiffPoly::zero();
  int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  for (int s = 0; s < 6; ++s) {
    DiffPoly term = DiffPoly::constant(Rat(s < 3 ? 1 : -1));
    for (int i = 0; i < 3; ++i)
      term = term * DiffPoly::variable(SVar{lin2.table().coeff_var(i, perms[s][i]), 0});
    det = det + term;
  }
  CHECK(r2 == det.normalized());
}

TEST_CASE("reduction pipeline stages on the four-polynomial example")
{
  GenericSystem sys = parse_system(sdres::testing::pipeline_quad);
  ReductionTrace trace;
  ResultantCertificate cert = resultant_via_reduction(sys, {}, &trace);

  CHECK(trace.super_essential == std::vector<int>{0, 1, 2});
  REQUIRE(trace.prolongation.size() == 4);
  CHECK(trace.prolongation[0] == ExtInt(3));
  CHECK(trace.prolongation[1] == ExtInt(2));
  CHECK(trace.prolongation[2] == ExtInt(3));
  CHECK(!trace.prolongation[3].finite());

  // minimal-ranking essential subset: sigma P_0, P_1, sigma P_2
  REQUIRE(trace.essential.size() == 3);
  CHECK(trace.essential[0] == std::pair<int, int>{0, 1});
  CHECK(trace.essential[1] == std::pair<int, int>{1, 0});
  CHECK(trace.essential[2] == std::pair<int, int>{2, 1});

  CHECK(trace.kept_vars == std::vector<std::string>{"y1@1", "y1@2"});

  // lattice transform z1 = y1@1^2, z2 = y1@2^2
  REQUIRE(trace.smith.basis.size() == 2);
  CHECK(trace.smith.basis[0] == std::vector<long>{2, 0});
  CHECK(trace.smith.basis[1] == std::vector<long>{0, 2});
  CHECK(!trace.smith.identity);

  CHECK(cert.degree == 5);
  CHECK(cert.orders == std::vector<ExtInt>{ExtInt(1), ExtInt(0), ExtInt(1), ExtInt::neg_inf()});
}

TEST_CASE("specialization and smith transform edge cases")
{
  // already variable-essential: identity specialization
  GenericSystem lin1 = parse_system("u00 + u01*y1; u10 + u11*y1");
  AlgPolySystem alg =
      algebraic_from_prolongation(lin1, prolong(lin1, {ExtInt(0), ExtInt(0)}));
  SpecializeResult spec = specialize_to_essential_vars(alg);
  CHECK(spec.kept_coords == std::vector<int>{0});
  CHECK(spec.sys.nvars == 1);

  // supports already spanning: identity transform
  SmithResult smith = smith_transform(spec.sys);
  CHECK(smith.identity);

  // one variable, all exponents even: z = y^2
  GenericSystem even = parse_system("u00 + u01*y1^2; u10 + u11*y1^4");
  AlgPolySystem alge =
      algebraic_from_prolongation(even, prolong(even, {ExtInt(0), ExtInt(0)}));
  SmithResult se = smith_transform(alge);
  REQUIRE(se.basis.size() == 1);
  CHECK(se.basis[0] == std::vector<long>{2});

  // a two-polynomial essential pair in three variables keeps one variable
  GenericSystem pair3 = parse_system("main y1 y2 y3\nu00 + u01*y1*y2*y3; u10 + u11*y1^2*y2^2*y3^2");
  AlgPolySystem algp =
      algebraic_from_prolongation(pair3, prolong(pair3, {ExtInt(0), ExtInt(0)}));
  std::vector<int> ess = essential_subset_minimal_ranking(algp);
  CHECK(ess == std::vector<int>{0, 1});
  SpecializeResult sp3 = specialize_to_essential_vars(restrict_to(algp, ess));
  CHECK(sp3.kept_coords.size() == 1);
  CHECK(sp3.sys.nvars == 1);
}

TEST_CASE("excluded polynomial stays out of the minimal essential subset")
{
  // prolong the product system by its subsystem bounds: P_0, sigma P_0, P_1;
  // the circuit is {sigma P_0, P_1} and P_0 is excluded
  GenericSystem s2 = parse_system(sdres::testing::product_triplet);
  Prolongation p = prolong(s2, {ExtInt(1), ExtInt(0), ExtInt::neg_inf()});
  AlgPolySystem alg = algebraic_from_prolongation(s2, p);
  std::vector<int> ess = essential_subset_minimal_ranking(alg);
  REQUIRE(ess.size() == 2);
  CHECK(alg.origin[static_cast<std::size_t>(ess[0])] == std::pair<int, int>{0, 1});
  CHECK(alg.origin[static_cast<std::size_t>(ess[1])] == std::pair<int, int>{1, 0});
}

TEST_CASE("cross-engine agreement")
{
  for (const char* text :
       {sdres::testing::quad_pair, sdres::testing::product_triplet, sdres::testing::chain_triplet,
        sdres::testing::linear_triplet_shift23, sdres::testing::mixed_product_triplet}) {
    GenericSystem sys = parse_system(text);
    ResultantCertificate a = search_resultant(sys);
    ResultantCertificate b = resultant_via_reduction(sys);
    CHECK(a.sr == b.sr);
    CHECK(a.orders == b.orders);
    CHECK(a.degree == b.degree);
  }
}

TEST_CASE("dense resultant: small case and the degree report")
{
  // orders (0,1), degrees (1,1): eliminate y and its transform from the
  // three prolonged affine forms; the oracle below substitutes the roots
  // of P_0 and sigma P_0 into P_1 and clears denominators
  DenseResultantReport rep = dense_resultant(1, {0, 1}, {1, 1});
  REQUIRE(rep.certificate.has_value());
  const GenericSystem& sys = *rep.system;
  // P_0 = u00 + u01*y1, P_1 = u10 + u11*y1@1 + u12*y1 (slots in monomial order)
  CHECK(sys.support(1).size() == 3);
  DiffPoly oracle = poly(sys, "u10*u01*u01@1") - poly(sys, "u11*u00@1*u01") -
                    poly(sys, "u12*u00*u01@1");
  CHECK(rep.certificate->sr == oracle.normalized());
  CHECK(rep.block_orders == std::vector<ExtInt>{ExtInt(1), ExtInt(0)});
  CHECK(rep.certificate->orders == std::vector<ExtInt>{ExtInt(1), ExtInt(0)});

  // the certificate's block degrees equal the reported mixed volumes
  for (int i = 0; i <= 1; ++i) {
    long bd = 0;
    for (const auto& term : rep.certificate->sr.terms()) {
      long d = 0;
      for (const auto& [v, e] : term.mon.exponents())
        if (sys.table().info(v.var).block == i)
          d += e;
      bd = std::max(bd, d);
    }
    CHECK(Int(bd) == rep.block_degrees[static_cast<std::size_t>(i)]);
  }

  // orders (1,1), degrees (2,2): exact block degrees by mixed volumes
  DenseResultantReport big = dense_resultant(1, {1, 1}, {2, 2});
  CHECK(big.degree_cap == 81);
  CHECK(big.degrees_available);
  CHECK(big.block_degrees == std::vector<Int>{Int(16), Int(16)});
  CHECK(big.total_degree == 32);
  CHECK(big.block_orders == std::vector<ExtInt>{ExtInt(1), ExtInt(1)});
  CHECK(big.guard_exceeded);
  CHECK(!big.certificate.has_value());
}

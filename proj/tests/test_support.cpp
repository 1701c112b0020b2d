#include <doctest.h>

#include "test_helpers.hpp"

using namespace sdres;

namespace {

std::shared_ptr<VarTable> two_main()
{
  auto t = std::make_shared<VarTable>();
  t->add_main("y1");
  t->add_main("y2");
  return t;
}

UPoly xp(int k, long c = 1) { return UPoly::x_power(k, Rat(c)); }

}  // namespace

TEST_CASE("support vectors of monomials")
{
  auto t = two_main();
  LaurentMonomial m = LaurentMonomial::from_pairs({{SVar{0, 0}, 1}, {SVar{1, 0}, 1}});
  SupportVector sv = support_vector(m, *t);
  CHECK(sv[0] == xp(0));
  CHECK(sv[1] == xp(0));

  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      LaurentMonomial ab = LaurentMonomial::from_pairs({{SVar{0, a}, 1}, {SVar{1, b}, 1}});
      SupportVector v = support_vector(ab, *t);
      CHECK(v[0] == xp(a));
      CHECK(v[1] == xp(b));
    }

  SupportVector one = support_vector(LaurentMonomial(), *t);
  CHECK(one[0].is_zero());
  CHECK(one[1].is_zero());

  auto tc = std::make_shared<VarTable>();
  tc->add_main("y1");
  tc->add_coeff("u00", 0, 0);
  CHECK_THROWS_AS(support_vector(LaurentMonomial::var(SVar{1, 0}), *tc), std::invalid_argument);
}

TEST_CASE("rank over Q[x] by elementary transformations")
{
  SymbolicSupportMatrix m;
  m.cols = 2;
  m.rows = {{xp(0), xp(0)}, {xp(1), xp(1)}};
  CHECK(rank_qx(m) == 1);

  SymbolicSupportMatrix m2;
  m2.cols = 2;
  m2.rows = {{xp(0), xp(0)}, {xp(0), xp(1)}};
  CHECK(rank_qx(m2) == 2);

  SymbolicSupportMatrix z;
  z.cols = 3;
  z.rows = {{UPoly(), UPoly(), UPoly()}, {UPoly(), UPoly(), UPoly()}};
  CHECK(rank_qx(z) == 0);
}

TEST_CASE("dtrdeg of monomial sets")
{
  auto t = two_main();
  LaurentMonomial y1y2 = LaurentMonomial::from_pairs({{SVar{0, 0}, 1}, {SVar{1, 0}, 1}});
  LaurentMonomial y2 = LaurentMonomial::var(SVar{1, 0});
  CHECK(dtrdeg_monomials({y1y2, y2}, *t) == 2);

  // single main var: rank of the 3x1 matrix over Q(x), cross-checked by
  // specializing x to distinct integers and taking the max numeric rank
  auto t1 = std::make_shared<VarTable>();
  t1->add_main("y1");
  std::vector<LaurentMonomial> chain{LaurentMonomial::var(SVar{0, 0}),
                                     LaurentMonomial::var(SVar{0, 1}),
                                     LaurentMonomial::var(SVar{0, 2})};
  CHECK(dtrdeg_monomials(chain, *t1) == 1);
  int best = 0;
  for (long x0 : {2L, 3L, 5L, 7L, 11L}) {
    SparseMatrixQ num(3, 1);
    for (int i = 0; i < 3; ++i)
      num.add(i, 0, rat_pow(Rat(x0), i));
    best = std::max(best, rank_q(num));
  }
  CHECK(best == 1);

  CHECK(dtrdeg_monomials({LaurentMonomial()}, *t) == 0);
}

TEST_CASE("generic rank: probabilistic and exact modes agree")
{
  GenericSystem sys = parse_system(sdres::testing::product_triplet);
  std::vector<int> all{0, 1, 2};
  GenericSupportMatrix m = system_support_matrix(sys, all);
  RankMode prob;
  prob.probabilistic = true;
  prob.trials = 3;
  RankMode exact;
  exact.probabilistic = false;
  CHECK(rank_generic(m, prob).rank == 2);
  CHECK(rank_generic(m, exact).rank == 2);

  GenericSupportMatrix single;
  single.cols = 2;
  GenericRow row;
  row.betas = {{xp(1), UPoly()}};
  single.rows.push_back(row);
  CHECK(rank_generic(single, exact).rank == 1);

  // random 4x3 generic matrices: exact mode is the oracle
  Rng rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    GenericSupportMatrix g;
    g.cols = 3;
    for (int i = 0; i < 4; ++i) {
      GenericRow r;
      int betas = 1 + static_cast<int>(rng.integer(0, 1));
      for (int b = 0; b < betas; ++b) {
        SupportVector sv;
        for (int j = 0; j < 3; ++j)
          sv.push_back(rng.integer(0, 2) ? xp(static_cast<int>(rng.integer(0, 2)),
                                              rng.integer(-2, 2))
                                         : UPoly());
        r.betas.push_back(std::move(sv));
      }
      g.rows.push_back(std::move(r));
    }
    RankResult a = rank_generic(g, prob);
    RankResult b = rank_generic(g, exact);
    CHECK(a.rank == b.rank);
  }
}

TEST_CASE("essentiality criterion")
{
  CHECK(is_laurent_transformally_essential(parse_system(sdres::testing::product_triplet)));
  CHECK(is_laurent_transformally_essential(parse_system(sdres::testing::linear_triplet_shift23)));
  // y2 occurs in no polynomial: all support vectors have zero second entry
  GenericSystem bad = parse_system("main y1 y2\nu00 + u01*y1; u10 + u11*y1@1; u20 + u21*y1^2");
  CHECK(!is_laurent_transformally_essential(bad));
}

TEST_CASE("super-essential subsets")
{
  GenericSystem s2 = parse_system(sdres::testing::product_triplet);
  CHECK(super_essential_subset(s2) == std::vector<int>{0, 1});

  GenericSystem s52 = parse_system(sdres::testing::pipeline_quad);
  CHECK(super_essential_subset(s52) == std::vector<int>{0, 1, 2});

  GenericSystem s1 = parse_system(sdres::testing::linear_triplet_shift23);
  CHECK(super_essential_subset(s1) == std::vector<int>{0, 1, 2});
  // every 2-subset of the three forms has full rank
  std::vector<int> ranks = all_subset_ranks(s1);
  for (std::uint32_t mask = 1; mask < 8; ++mask)
    if (__builtin_popcount(mask) == 2)
      CHECK(ranks[mask] == 2);

  GenericSystem notess = parse_system("main y1 y2\nu00 + u01*y1; u10 + u11*y1@1; u20 + u21*y1^2");
  CHECK_THROWS_AS(super_essential_subset(notess), std::invalid_argument);
}

TEST_CASE("proper subsets of the super-essential set have full rank")
{
  for (const char* text : {sdres::testing::product_triplet, sdres::testing::chain_triplet,
                           sdres::testing::pipeline_quad, sdres::testing::quad_pair}) {
    GenericSystem sys = parse_system(text);
    std::vector<int> t = super_essential_subset(sys);
    std::vector<int> ranks = all_subset_ranks(sys);
    std::uint32_t tmask = 0;
    for (int i : t)
      tmask |= 1u << i;
    for (std::uint32_t sub = tmask; sub; sub = (sub - 1) & tmask) {
      if (sub == tmask)
        continue;
      CHECK(ranks[sub] == __builtin_popcount(sub));
    }
    // deficiency exactly one on T, and uniqueness by full enumeration
    CHECK(static_cast<int>(t.size()) - ranks[tmask] == 1);
    int np1 = sys.poly_count();
    for (std::uint32_t mask = 1; mask < (1u << np1); ++mask) {
      if (mask == tmask)
        continue;
      if (__builtin_popcount(mask) - ranks[mask] == 1) {
        // any other deficiency-1 set must strictly contain T
        CHECK((mask & tmask) == tmask);
      }
    }
  }
}

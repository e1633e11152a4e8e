#include <catch2/catch_amalgamated.hpp>

#include "kplanar/bounds.hpp"
#include "kplanar/tables.hpp"

using namespace kplanar;

TEST_CASE("crossing lemma coefficient and threshold") {
  auto r = crossing_lemma_coefficient(Rational(2), Rational(65, 14));
  CHECK(r.coefficient == Rational(6272, 114075));
  CHECK(r.threshold == Rational(195, 56));

  r = crossing_lemma_coefficient(Rational(2), Rational(61, 15));
  CHECK(r.coefficient == Rational(800, 11163));
  CHECK(r.threshold == Rational(61, 20));

  r = crossing_lemma_coefficient(Rational(3), Rational(9));
  CHECK(r.coefficient == Rational(4, 81));
  CHECK(r.threshold == Rational(9, 2));

  CHECK_THROWS(crossing_lemma_coefficient(Rational(0), Rational(1)));
  CHECK_THROWS(crossing_lemma_coefficient(Rational(1), Rational(-1)));
}

TEST_CASE("naive crossing-number lower bound") {
  // k=2, C4-free list
  std::vector<MuBound> mu_c4 = {{Rational(15, 7), Rational(-30, 7)},
                                {Rational(5, 2), Rational(-5)}};
  Rational n(100), m(300);
  CHECK(naive_cr_lower(2, mu_c4, n, m) ==
        Rational(2) * m - Rational(65, 14) * n + Rational(65, 7));

  // k=2, girth-5 list (no intercepts)
  std::vector<MuBound> mu_g5 = {{Rational(5, 3), Rational(0)},
                                {Rational(12, 5), Rational(0)}};
  CHECK(naive_cr_lower(2, mu_g5, n, m) == Rational(2) * m - Rational(61, 15) * n);

  // k=3, C3-free list -> 3m - 9n
  std::vector<MuBound> mu_c3 = {{Rational(2), Rational(0)},
                                {Rational(3), Rational(0)},
                                {Rational(4), Rational(0)}};
  CHECK(naive_cr_lower(3, mu_c3, n, m) == Rational(3) * m - Rational(9) * n);

  CHECK_THROWS(naive_cr_lower(2, mu_c3, n, m));
}

TEST_CASE("crossing-number upper bounds") {
  CHECK(cr_upper(2, Rational(20)) == Rational(60));
  CHECK(cr_upper(3, Rational(2)) == Rational(0));
  CHECK(cr_upper(2, Rational(2)) == Rational(0));
  CHECK_THROWS_AS(cr_upper(1, Rational(10)), Unavailable);
  CHECK_THROWS_AS(cr_upper(4, Rational(10)), Unavailable);
}

TEST_CASE("cube-root radicand pipeline reproduces all five constants exactly") {
  const Rational u2 = cr_upper_slope(2), u3 = cr_upper_slope(3);
  auto c4 = cr_lower_coefficient(Setting::c4free);
  auto g5 = cr_lower_coefficient(Setting::girth5);
  auto c3 = cr_lower_coefficient(Setting::c3free);

  CHECK(derive_cubic_density(c4.coefficient, u2).radicand == Rational(190125, 3136));
  CHECK(derive_cubic_density(g5.coefficient, u2).radicand == Rational(11163, 240));
  CHECK(derive_cubic_density(c3.coefficient, u3).radicand == Rational(2673, 20));
  CHECK(derive_cubic_density(c4.coefficient, u3).radicand ==
        Rational(3764475, 31360));
  CHECK(derive_cubic_density(g5.coefficient, u3).radicand == Rational(368379, 4000));
}

TEST_CASE("sqrt(k) radicands match km/2 inversion") {
  CHECK(derive_sqrt_density(cr_lower_coefficient(Setting::c3free).coefficient)
            .radicand == Rational(81, 8));
  CHECK(derive_sqrt_density(cr_lower_coefficient(Setting::c4free).coefficient)
            .radicand == Rational(114075, 12544));
  CHECK(derive_sqrt_density(cr_lower_coefficient(Setting::girth5).coefficient)
            .radicand == Rational(11163, 1600));
}

TEST_CASE("root enclosures are certified and tight") {
  for (auto rc : {RootConstant{Rational(190125, 3136), 3},
                  RootConstant{Rational(11163, 240), 3},
                  RootConstant{Rational(2673, 20), 3},
                  RootConstant{Rational(3764475, 31360), 3},
                  RootConstant{Rational(368379, 4000), 3},
                  RootConstant{Rational(81, 8), 2},
                  RootConstant{Rational(114075, 12544), 2},
                  RootConstant{Rational(11163, 1600), 2}}) {
    auto e = enclose_root(rc);
    CHECK(e.lo.pow(rc.degree) <= rc.radicand);
    CHECK(rc.radicand <= e.hi.pow(rc.degree));
    CHECK(e.hi - e.lo <= Rational(1, 1000000));
  }
}

TEST_CASE("root comparisons by cross-powering") {
  RootConstant rc{Rational(190125, 3136), 3};
  CHECK(compare_root_to_rational(rc, Rational(3929, 1000)) < 0);   // < 3.929
  CHECK(compare_root_to_rational(rc, Rational(3928, 1000)) > 0);   // > 3.928
  RootConstant g5k1{Rational(11163, 1600), 2};
  // the sqrt(k) girth-5 constant at k=1 is weaker than the direct 12/5 bound
  CHECK(compare_root_to_rational(g5k1, Rational(12, 5)) > 0);
}

TEST_CASE("conservative decimal rendering of the table constants") {
  CHECK(render_root_decimal({Rational(190125, 3136), 3}, 3, true) == "3.929");
  CHECK(render_root_decimal({Rational(190125, 3136), 3}, 2, true) == "3.93");
  CHECK(render_root_decimal({Rational(11163, 240), 3}, 3, true) == "3.597");
  CHECK(render_root_decimal({Rational(2673, 20), 3}, 3, true) == "5.113");
  CHECK(render_root_decimal({Rational(2673, 20), 3}, 2, true) == "5.12");
  CHECK(render_root_decimal({Rational(3764475, 31360), 3}, 3, true) == "4.933");
  CHECK(render_root_decimal({Rational(368379, 4000), 3}, 3, true) == "4.516");
  CHECK(render_root_decimal({Rational(81, 8), 2}, 3, true) == "3.182");
  CHECK(render_root_decimal({Rational(81, 8), 2}, 2, true) == "3.19");
  CHECK(render_root_decimal({Rational(81, 8), 2}, 2, false) == "3.18");
  CHECK(render_root_decimal({Rational(114075, 12544), 2}, 3, true) == "3.016");
  CHECK(render_root_decimal({Rational(11163, 1600), 2}, 3, true) == "2.642");

  CHECK(render_rational_decimal(Rational(4, 81), 3, false) == "0.049");
  CHECK(render_rational_decimal(Rational(6272, 114075), 3, false) == "0.054");
  CHECK(render_rational_decimal(Rational(800, 11163), 3, false) == "0.071");
}

TEST_CASE("density_upper catalogue") {
  auto b = density_upper(Setting::c4free, 2);
  REQUIRE(b.root);
  CHECK(b.root->radicand == Rational(190125, 3136));
  CHECK(*b.validity_threshold == Rational(195, 56));

  b = density_upper(Setting::girth5, 1);
  CHECK(*b.slope == Rational(12, 5));
  CHECK(b.intercept == Rational(0));

  b = density_upper(Setting::c4free, 0);
  CHECK(*b.slope == Rational(15, 7));
  CHECK(b.evaluate(Rational(9)) == Rational(15));  // 15/7*(9-2)

  b = density_upper(Setting::c3free, 1);
  CHECK(b.evaluate(Rational(10)) == Rational(24));  // 3(n-2)

  CHECK_THROWS_AS(density_upper(Setting::girth5, 7), Unavailable);
}

TEST_CASE("general-k density bounds with preconditions") {
  auto b = density_upper_general_k(Setting::c4free, 4);
  REQUIRE(b.root);
  CHECK(b.root->radicand == Rational(114075, 12544) * Rational(4));
  CHECK(*b.validity_threshold == Rational(3483, 1000));

  b = density_upper_general_k(Setting::c3free, 4);
  CHECK(b.root->radicand == Rational(81, 2));  // 81*4/8 = sqrt(40.5)

  CHECK_THROWS_AS(density_upper_general_k(Setting::unrestricted, 2), Unavailable);
}

TEST_CASE("density_lower catalogue and the missing cell") {
  CHECK(*density_lower(Setting::c4free, 1).slope == Rational(12, 5));
  CHECK(*density_lower(Setting::girth5, 1).slope == Rational(13, 6));
  CHECK(*density_lower(Setting::c4free, 2).slope == Rational(5, 2));
  CHECK(*density_lower(Setting::girth5, 2).slope == Rational(16, 7));
  CHECK(*density_lower(Setting::girth5, 3).slope == Rational(5, 2));
  CHECK_THROWS_AS(density_lower(Setting::c4free, 3), Unavailable);
}

TEST_CASE("table reproduction") {
  auto dt = table_density();
  REQUIRE(dt.rows.size() == 5);
  // spot checks on printed decimals (conservative rounding)
  CHECK(dt.rows[2].upper[2].decimal3 == "3.929");
  CHECK(dt.rows[2].upper[2].decimal2 == "3.93");
  CHECK(dt.rows[2].upper[3].decimal3 == "3.597");
  CHECK(dt.rows[3].upper[1].decimal3 == "5.113");
  CHECK(dt.rows[3].upper[1].decimal2 == "5.12");
  CHECK(dt.rows[3].upper[2].decimal3 == "4.933");
  CHECK(dt.rows[3].upper[3].decimal3 == "4.516");
  CHECK(dt.rows[4].upper[1].decimal3 == "3.182");
  CHECK(dt.rows[4].upper[1].decimal2 == "3.19");
  CHECK(!dt.rows[4].upper[1].note.empty());  // discrepancy flagged
  CHECK(dt.rows[4].upper[2].decimal3 == "3.016");
  CHECK(dt.rows[4].upper[3].decimal3 == "2.642");
  // k=1 cells
  CHECK(dt.rows[1].lower[2].exact == "12n/5");
  CHECK(dt.rows[1].upper[3].exact == "12n/5");
  CHECK(dt.rows[1].lower[3].exact == "13n/6");
  // missing cell with carry-over note
  CHECK(dt.rows[3].lower[2].kind == "unavailable");
  CHECK(dt.rows[3].lower[2].note.find("trivially holds") != std::string::npos);

  auto ct = table_crossing();
  CHECK(ct.planar2_upper.exact == "10n/3");
  CHECK(ct.planar3_upper.exact == "33n/5");
  CHECK(ct.general_lower[1].decimal3 == "0.049");
  CHECK(ct.general_lower[2].decimal3 == "0.054");
  CHECK(ct.general_lower[3].decimal3 == "0.071");

  CHECK(!render_tables_text().empty());
}

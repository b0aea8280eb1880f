#include <vector>

#include "doctest.h"
#include "kleinrr/errors.hpp"
#include "kleinrr/rrcoeff.hpp"
#include "numeric_oracle.hpp"

using namespace kleinrr;

namespace {

std::vector<Rational> fractions(std::initializer_list<std::pair<long long, long long>> v) {
  std::vector<Rational> out;
  for (auto [p, q] : v) out.emplace_back(p, q);
  return out;
}

KClass k(std::vector<std::int64_t> m) { return KClass{std::move(m)}; }

// Numeric reference for every coefficient of a table, from matrix traces.
void check_against_numeric(const CharacterTable& t, const RRCoefficients& rr) {
  const auto approx = oracle::rr_numeric(t);
  REQUIRE(approx.size() == rr.size());
  for (std::size_t i = 0; i < rr.size(); ++i) {
    CHECK(oracle::evaluate(rr[i]) == doctest::Approx(approx[i]).epsilon(1e-12));
  }
}

}  // namespace

TEST_SUITE("rrcoeff") {
  TEST_CASE("binary dihedral n = 2") {
    const auto t = character_table(GroupSpec::binary_dihedral(2));
    const auto rr = rr_coefficients(t);
    CHECK(rr.values == fractions({{13, 32}, {-3, 32}, {-3, 32}, {-3, 32}, {-2, 32}}));
    CHECK(delta(rr, k({2, 0, 0, 0, -1})) == Rational(7, 8));
    CHECK(delta(rr, k({0, 0, 0, 0, 0})) == Rational(0));
    CHECK(delta(rr, k({-1, -1, -1, -1, 2})) == Rational(-1, 4));
    CHECK_THROWS_AS(delta(rr, k({1, 2})), InputError);
    CHECK(skyscraper_class(t, 0) == k({2, 0, 0, 0, -1}));
    CHECK(skyscraper_class(t, 4) == k({-1, -1, -1, -1, 2}));
    const auto sky = delta_skyscraper(t, rr, 0);
    CHECK(sky.value == Rational(7, 8));
    CHECK(sky.holds());
    check_against_numeric(t, rr);
  }

  TEST_CASE("exceptional tables") {
    const auto e6 = character_table(GroupSpec::binary_tetrahedral());
    const auto rr6 = rr_coefficients(e6);
    CHECK(rr6.values ==
          fractions({{167, 288}, {29, 144}, {-3, 32}, {-19, 144}, {-25, 288}, {-19, 144}, {-25, 288}}));
    CHECK(skyscraper_class(e6, 0) == k({2, -1, 0, 0, 0, 0, 0}));
    check_against_numeric(e6, rr6);

    const auto e8 = character_table(GroupSpec::binary_icosahedral());
    const auto rr8 = rr_coefficients(e8);
    CHECK(rr8.values == fractions({{1079, 1440}, {73, 144}, {9, 32}, {29, 360}, {-25, 288}, {-17, 80},
                                   {-61, 360}, {-67, 720}, {-19, 160}}));
    check_against_numeric(e8, rr8);
    // 1 − 1/120, checked numerically through the Koszul class
    const auto sky8 = delta_skyscraper(e8, rr8, 0);
    CHECK(sky8.value == Rational(119, 120));
    double numeric = 0.0;
    const auto approx = oracle::rr_numeric(e8);
    const auto cls = skyscraper_class(e8, 0);
    for (std::size_t i = 0; i < cls.size(); ++i) numeric += static_cast<double>(cls[i]) * approx[i];
    CHECK(numeric == doctest::Approx(119.0 / 120.0));

    const auto e7 = character_table(GroupSpec::binary_octahedral());
    const auto rr7 = rr_coefficients(e7);
    check_against_numeric(e7, rr7);
    CHECK(rr7[7] == Rational(-25, 288));  // 2/192 − 1/6 − 1/18 + 2/16
    CHECK(Rational(2, 192) - Rational(1, 6) - Rational(1, 18) + Rational(2, 16) == Rational(-25, 288));
    CHECK(rr7[0] == Rational(383, 576));
    for (std::size_t i = 0; i < e7.size(); ++i) {
      if (e7.irreps[i].dim != 2) continue;
      CHECK(delta_skyscraper(e7, rr7, i).value == Rational(-1, 24));
    }
  }

  TEST_CASE("cyclic groups") {
    const auto a2 = rr_coefficients(character_table(GroupSpec::cyclic(3)));
    CHECK(a2.values == fractions({{2, 9}, {-1, 9}, {-1, 9}}));
    CHECK(a2[0] == Rational(1, 9) + Rational(1, 9));
    CHECK(rr_coefficients(character_table(GroupSpec::cyclic(1))).values == fractions({{0, 1}}));
    const auto a1 = rr_coefficients(character_table(GroupSpec::cyclic(2)));
    CHECK(a1.values == fractions({{1, 8}, {-1, 8}}));
    const auto t6 = character_table(GroupSpec::cyclic(6));
    const auto a5 = rr_coefficients(t6);
    CHECK(a5[2] == Rational(-13, 72));
    check_against_numeric(t6, a5);
  }

  TEST_CASE("closed form A") {
    CHECK(closed_form_A(1, 0) == Rational(0));
    CHECK(closed_form_A(2, 0) == Rational(1, 8));
    CHECK(closed_form_A(2, 1) == Rational(-1, 8));
    CHECK(closed_form_A(6, 2) == Rational(-13, 72));
    CHECK(closed_form_A(3, 1) == Rational(-1, 9));
    CHECK_THROWS_AS(closed_form_A(3, 3), InputError);
    CHECK_THROWS_AS(closed_form_A(3, -1), InputError);
    CHECK_THROWS_AS(closed_form_A(0, 0), InputError);
    for (int n = 1; n <= 12; ++n) {
      const auto rr = rr_coefficients(character_table(GroupSpec::cyclic(n)));
      for (int j = 0; j < n; ++j) CHECK(closed_form_A(n, j) == rr[static_cast<std::size_t>(j)]);
    }
  }

  TEST_CASE("closed form D") {
    using K = DicIrrep::Kind;
    CHECK(closed_form_D(2, {K::Trivial, 0}) == Rational(13, 32));
    CHECK(closed_form_D(2, {K::Psi, 1}) == Rational(-1, 16));
    CHECK(closed_form_D(2, {K::SignA, 0}) == Rational(-3, 32));
    CHECK(closed_form_D(2, {K::SignA, 0}, ConstantVariant::Printed) == Rational(-5, 32));
    CHECK(closed_form_D(3, {K::Psi, 2}) == Rational(-13, 72));
    CHECK(Rational(2, 48) + Rational(-1, 6) + Rational(-1, 18) == Rational(-13, 72));
    CHECK(closed_form_D(3, {K::Psi, 2}, ConstantVariant::Printed) == Rational(-19, 72));
    CHECK(closed_form_D(3, {K::Psi, 1}, ConstantVariant::Printed) == closed_form_D(3, {K::Psi, 1}));
    CHECK_THROWS_AS(closed_form_D(3, {K::Psi, 3}), InputError);
    CHECK_THROWS_AS(closed_form_D(0, {K::Trivial, 0}), InputError);
    CHECK(DicIrrep::parse("psi_4(dihedral,l=2)").l == 4);
    CHECK(DicIrrep::parse("psi_4").dihedral());
    CHECK(DicIrrep::parse("rho_xa").kind == K::SignXA);
    CHECK_THROWS_AS(DicIrrep::parse("rho_q"), InputError);
    for (int n = 1; n <= 10; ++n) {
      const auto t = character_table(GroupSpec::binary_dihedral(n));
      const auto rr = rr_coefficients(t);
      for (std::size_t i = 0; i < t.size(); ++i) {
        CAPTURE(n);
        CAPTURE(t.irreps[i].name);
        CHECK(closed_form_D(n, DicIrrep::parse(t.irreps[i].name)) == rr[i]);
      }
    }
  }

  TEST_CASE("property: oracle, regular identity and skyscraper law") {
    std::vector<GroupSpec> specs{GroupSpec::cyclic(1), GroupSpec::cyclic(7), GroupSpec::binary_dihedral(1),
                                 GroupSpec::binary_dihedral(4), GroupSpec::binary_tetrahedral()};
    for (const auto& spec : specs) {
      const auto t = character_table(spec);
      const auto rr = rr_coefficients(t);
      CAPTURE(spec.label());
      CHECK(element_sum_coefficients(t).values == rr.values);
      Rational regular;
      for (std::size_t i = 0; i < t.size(); ++i) regular += Rational(t.irreps[i].dim) * rr[i];
      CHECK(regular == Rational(0));
      for (std::size_t i = 0; i < t.size(); ++i) {
        const auto sky = delta_skyscraper(t, rr, i);
        const Rational g(static_cast<long long>(t.order()));
        CHECK(sky.value == (i == 0 ? Rational(1) - Rational(1) / g : Rational(-t.irreps[i].dim) / g));
        CHECK(sky.holds());
      }
    }
  }

  TEST_CASE("Dynkin data and CT19") {
    const auto e6 = character_table(GroupSpec::binary_tetrahedral());
    const auto d = dynkin_data(e6);
    CHECK(d.type == "E6");
    CHECK(d.vertex_count == 6);
    CHECK(d.edges == 5);
    CHECK(d.tree);
    CHECK(d.euler_char_reduced_cycle == 7);
    CHECK(d.euler_char_reduced_cycle == static_cast<std::int64_t>(2 * d.vertex_count - d.edges));
    CHECK(d.multiplicities == std::vector<int>{2, 3, 2, 1, 2, 1});
    CHECK(ct19_delta_O(e6) == Rational(167, 288));
    CHECK(ct19_delta_O(GroupSpec::binary_icosahedral()) == Rational(1079, 1440));
    CHECK(ct19_delta_O(GroupSpec::binary_octahedral()) == Rational(383, 576));
    CHECK(ct19_delta_O(GroupSpec::binary_dihedral(2)) == Rational(13, 32));
    CHECK(dynkin_data(character_table(GroupSpec::binary_dihedral(3))).vertex_count == 5);
    for (int n = 1; n <= 9; ++n) {
      CHECK(ct19_delta_O(GroupSpec::cyclic(n)) == Rational(n * n - 1, 12 * n));
    }
    const auto trivial = dynkin_data(character_table(GroupSpec::cyclic(1)));
    CHECK(trivial.vertex_count == 0);
    CHECK(trivial.euler_char_reduced_cycle == 1);
  }

  TEST_CASE("McKay graphs are affine diagrams") {
    std::vector<GroupSpec> specs{GroupSpec::cyclic(1), GroupSpec::cyclic(2), GroupSpec::cyclic(9),
                                 GroupSpec::binary_dihedral(1), GroupSpec::binary_dihedral(2),
                                 GroupSpec::binary_dihedral(5), GroupSpec::binary_tetrahedral(),
                                 GroupSpec::binary_octahedral(), GroupSpec::binary_icosahedral()};
    for (const auto& spec : specs) {
      const auto check = mckay_affine_check(character_table(spec));
      CAPTURE(spec.label());
      CAPTURE(check.detail);
      CHECK(check.passed());
    }
    const auto e8 = character_table(GroupSpec::binary_icosahedral());
    CHECK(mckay_affine_check(e8).expected == "affine E8");
    // cutting the edge at the affine node breaks the diagram
    auto cut = mckay_graph(e8);
    cut[0][*e8.natural_index] = cut[*e8.natural_index][0] = 0;
    CHECK_FALSE(mckay_affine_check(e8, cut).passed());
    auto asym = mckay_graph(e8);
    asym[0][2] = 1;
    CHECK_FALSE(mckay_affine_check(e8, asym).symmetric);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "oracles.hpp"
#include "orbichow/errors.hpp"
#include "orbichow/stringy_ring.hpp"

#include <random>

using namespace orbichow;
using namespace orbichow::testing;

namespace {

StringyClass basis_class(const RingTable& table, std::size_t i) {
  StringyClass x;
  x.terms.emplace(i, table.coeff_ring.one());
  return x;
}

/// Table entries as plain integer constants keyed by class index.
std::map<std::size_t, Int> constants_of(const RingTable& table, std::size_t i, std::size_t j) {
  std::map<std::size_t, Int> out;
  for (const auto& [sector, coeff] : table.product(i, j).terms) {
    REQUIRE(coeff.terms.size() == 1);
    REQUIRE(monomial_degree(coeff.terms.begin()->first) == 0);
    out[table.inertia->sector(sector).class_index] = coeff.terms.begin()->second;
  }
  return out;
}

}  // namespace

TEST_CASE("bg_product basics") {
  auto z2 = make_zn(2);
  const auto sigma_class = z2->class_index_of(1);
  const auto p = bg_product(*z2, sigma_class, sigma_class);
  REQUIRE(p.size() == 1);
  CHECK(p.at(z2->class_index_of(0)) == 1);

  auto s3 = make_s3();
  const auto t = s3->class_index_of(*s3->find_element("(1 2)"));
  const auto r = s3->class_index_of(*s3->find_element("(1 2 3)"));
  const auto e = s3->class_index_of(s3->identity());
  const auto tt = bg_product(*s3, t, t);
  REQUIRE(tt.size() == 2);
  CHECK(tt.at(e) == 3);
  CHECK(tt.at(r) == 3);

  // the identity class is a left and right unit
  for (const auto& group : {make_s3(), make_q8(), make_zn(6)}) {
    const auto idc = group->class_index_of(group->identity());
    for (std::size_t c = 0; c < group->conjugacy_classes().size(); ++c) {
      const std::map<std::size_t, Int> expected{{c, 1}};
      CHECK(bg_product(*group, idc, c) == expected);
      CHECK(bg_product(*group, c, idc) == expected);
    }
  }
}

TEST_CASE("bg_product equals the class-sum convolution oracle") {
  for (const auto& group :
       {make_s3(), make_s4(), make_d4(), make_q8(), make_a4(), make_zn(8), make_trivial()}) {
    REQUIRE(group->order() <= 100);
    const auto oracle = class_sum_constants_oracle(*group);
    const auto nclasses = group->conjugacy_classes().size();
    for (std::size_t i = 0; i < nclasses; ++i)
      for (std::size_t j = 0; j < nclasses; ++j) {
        const auto p = bg_product(*group, i, j);
        CHECK(p == oracle.at({i, j}));
        for (const auto& [k, coeff] : p) CHECK(coeff > 0);
      }
  }
}

TEST_CASE("abelian quotient products") {
  // [C^2/Z2], exponents (1,1): 1_sigma u 1_sigma = t^2 1_e
  auto inertia = make_inertia(make_action({2}, {{1}, {1}}));
  BgRing ring = coefficient_ring(inertia->action());
  const auto sigma = inertia->sector_of_element(1);
  const auto p = sector_product(*inertia, ring, sigma, sigma);
  REQUIRE(p.terms.size() == 1);
  const auto t = ring.generator(0);
  CHECK(p.terms.at(inertia->untwisted_index()) == ring.mul(t, t));
  // nonzero 2-torsion that dies rationally
  CHECK(!ring.is_zero(p.terms.at(inertia->untwisted_index())));
  CHECK(ring.rational_part(p.terms.at(inertia->untwisted_index())) == 0);

  // [C^2/Z3], exponents (1,2): 1_g u 1_g = 2t 1_{g^2}
  auto z3 = make_inertia(make_action({3}, {{1}, {2}}));
  BgRing ring3 = coefficient_ring(z3->action());
  const auto g = z3->sector_of_element(1);
  const auto gg = sector_product(*z3, ring3, g, g);
  REQUIRE(gg.terms.size() == 1);
  CHECK(gg.terms.at(z3->sector_of_element(2)) == ring3.scale(2, ring3.generator(0)));
}

TEST_CASE("untwisted class is the identity for the bilinear product") {
  auto inertia = make_inertia(make_action({4}, {{1}, {3}}));
  BgRing ring = coefficient_ring(inertia->action());
  std::mt19937_64 rng(3);
  StringyClass unit = {{{inertia->untwisted_index(), ring.one()}}};
  for (int trial = 0; trial < 25; ++trial) {
    const auto x = random_stringy_class(*inertia, ring, rng);
    CHECK(stringy_product(*inertia, ring, unit, x) == x);
    CHECK(stringy_product(*inertia, ring, x, unit) == x);
  }
}

TEST_CASE("ring tables") {
  // [pt/Z2] is the group ring of Z/2
  auto bz2 = ring_table(make_inertia(make_point(make_zn(2))));
  CHECK(bz2.size() == 2);
  CHECK(constants_of(bz2, 1, 1) == std::map<std::size_t, Int>{{0, 1}});

  auto trivial = ring_table(make_inertia(make_point(make_trivial())));
  CHECK(trivial.size() == 1);
  CHECK(constants_of(trivial, 0, 0) == std::map<std::size_t, Int>{{0, 1}});

  auto c2z2 = ring_table(make_inertia(make_action({2}, {{1}, {1}})));
  const auto& ring = c2z2.coeff_ring;
  CHECK(c2z2.product(1, 1).terms.at(0) == ring.pow(ring.generator(0), 2));

  CHECK(bz2.instance_hash.size() == 16);
  CHECK(bz2.instance_hash != c2z2.instance_hash);
}

TEST_CASE("ring table bounds and rejections") {
  CHECK_THROWS_AS(ring_table(make_inertia(make_point(make_s4())), 3), BoundError);
  // non-abelian with dim > 0 has no product
  std::map<std::size_t, std::vector<EigenPair>> eigen{
      {0, {{0, 1}, {0, 1}}}, {1, {{1, 3}, {2, 3}}}, {2, {{0, 2}, {1, 2}}}};
  auto rep = std::make_shared<LinearAction>(LinearAction::class_eigen(make_s3(), 2, eigen));
  CHECK_THROWS_AS(ring_table(make_inertia(rep)), InputError);
  // but its inertia and ages are still available
  CHECK(InertiaDecomposition(rep).size() == 3);
}

TEST_CASE("verify_associativity") {
  auto bs3 = ring_table(make_inertia(make_point(make_s3())));
  auto report = verify_associativity(bs3);
  CHECK(report.ok);
  CHECK(report.triples_checked == 27);

  auto c2z4 = ring_table(make_inertia(make_action({4}, {{1}, {3}})));
  report = verify_associativity(c2z4);
  CHECK(report.ok);
  CHECK(report.triples_checked == 64);

  auto trivial = ring_table(make_inertia(make_point(make_trivial())));
  report = verify_associativity(trivial);
  CHECK(report.ok);
  CHECK(report.triples_checked == 1);

  SUBCASE("a corrupted table is caught") {
    // overwrite T*T (= 3E + 3R) with 1_E; then (T*T)*R = R but
    // T*(T*R) = 2E
    auto broken = bs3;
    broken.entries[1 * broken.size() + 1] = basis_class(broken, 0);
    const auto bad = verify_associativity(broken);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.counterexample.has_value());
    CHECK(*bad.counterexample == std::array<std::size_t, 3>{1, 1, 2});
  }
}

TEST_CASE("identity, commutativity, grading on mixed instances") {
  auto roster = abelian_roster();
  roster.push_back({"BS3", make_point(make_s3())});
  roster.push_back({"BQ8", make_point(make_q8())});
  roster.push_back({"BZ6", make_point(make_zn(6))});
  for (const auto& [name, action] : roster) {
    CAPTURE(name);
    auto table = ring_table(make_inertia(action));
    CHECK(check_identity(table));
    CHECK(check_commutativity(table));
    CHECK(check_graded_products(table));
    CHECK(verify_associativity(table).ok);
    CHECK(verify_associativity_random(table, 60, 17).ok);
  }
}

TEST_CASE("table product agrees with the direct bilinear product") {
  auto inertia = make_inertia(make_action({2, 2}, {{1, 0}, {0, 1}}));
  auto table = ring_table(inertia);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = random_stringy_class(*inertia, table.coeff_ring, rng);
    const auto y = random_stringy_class(*inertia, table.coeff_ring, rng);
    CHECK(table_product(table, x, y) == stringy_product(*inertia, table.coeff_ring, x, y));
  }
}

TEST_CASE("grade") {
  auto inertia = make_inertia(make_action({2}, {{1}, {1}}));
  BgRing ring = coefficient_ring(inertia->action());
  const auto sigma = inertia->sector_of_element(1);
  const auto e = inertia->untwisted_index();

  StringyClass one_sigma = {{{sigma, ring.one()}}};
  CHECK(grade(*inertia, one_sigma) == Rational(1));
  StringyClass one_e = {{{e, ring.one()}}};
  CHECK(grade(*inertia, one_e) == Rational(0));
  StringyClass mixed = {{{e, ring.one()}, {sigma, ring.one()}}};
  CHECK(grade(*inertia, mixed) == std::nullopt);
  // coefficient degree counts toward the total
  StringyClass shifted = {{{e, ring.generator(0)}}};
  CHECK(grade(*inertia, shifted) == Rational(1));
  CHECK(grade(*inertia, StringyClass{}) == Rational(0));

  // graded multiplicativity on homogeneous basis classes
  auto table = ring_table(inertia);
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      const auto& p = table.product(i, j);
      if (p.empty()) continue;
      CHECK(grade(*inertia, p) ==
            inertia->sector(i).age + inertia->sector(j).age);
    }
}

TEST_CASE("poincare polynomials") {
  for (std::int64_t n = 2; n <= 8; ++n) {
    auto inertia = make_inertia(make_action({static_cast<std::uint64_t>(n)}, {{1}, {n - 1}}));
    const auto poly = poincare_polynomial(*inertia);
    REQUIRE(poly.size() == 2);
    CHECK(poly.at(Rational(0)) == 1);
    CHECK(poly.at(Rational(1)) == static_cast<std::uint64_t>(n - 1));
  }

  for (const auto& group : {make_s3(), make_s4(), make_q8()}) {
    const auto poly = poincare_polynomial(*make_inertia(make_point(group)));
    REQUIRE(poly.size() == 1);
    CHECK(poly.at(Rational(0)) == group->conjugacy_classes().size());
  }

  auto line = make_inertia(make_action({3}, {{1}}));
  const auto poly = poincare_polynomial(*line);
  REQUIRE(poly.size() == 3);
  CHECK(poly.at(Rational(0)) == 1);
  CHECK(poly.at(Rational(1, 3)) == 1);
  CHECK(poly.at(Rational(2, 3)) == 1);
}

TEST_CASE("age additivity identity underlying the grading") {
  for (const auto& [name, action] : abelian_roster()) {
    CAPTURE(name);
    const auto& group = action->group();
    auto inertia = make_inertia(action);
    BgRing ring = coefficient_ring(*action);
    for (GroupElement g1 = 0; g1 < group.order(); ++g1)
      for (GroupElement g2 = 0; g2 < group.order(); ++g2) {
        // age(g1) + age(g2) - age(g1 g2) is the total degree shift; the
        // per-coordinate assertion lives inside sector_product, so just
        // drive it and compare the resulting coefficient degree.
        const auto p = sector_product(*inertia, ring, inertia->sector_of_element(g1),
                                      inertia->sector_of_element(g2));
        const Rational shift = action->age_total(g1) + action->age_total(g2) -
                               action->age_total(group.mul(g1, g2));
        REQUIRE(is_integer(shift));
        CHECK(shift >= 0);
        for (const auto& [sector, coeff] : p.terms)
          for (const auto& [mono, c] : coeff.terms)
            CHECK(Rational(monomial_degree(mono)) == shift);
      }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbichow/bg_ring.hpp"
#include "orbichow/errors.hpp"

#include <random>

using namespace orbichow;

namespace {

EquivariantClass random_class(const BgRing& ring, std::mt19937_64& rng) {
  EquivariantClass c;
  const std::size_t terms = rng() % 4;
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(ring.generator_count(), 0u);
    for (auto& e : m) e = static_cast<std::uint32_t>(rng() % 3);
    c.terms[m] += static_cast<std::int64_t>(rng() % 13) - 6;
  }
  ring.normalize(c);
  return c;
}

}  // namespace

TEST_CASE("c1 of characters") {
  BgRing z2({2});
  CHECK(z2.c1({1}) == z2.generator(0));
  CHECK(z2.is_zero(z2.c1({2})));
  CHECK(z2.c1({-1}) == z2.generator(0));

  BgRing z2z3({2, 3});
  auto c = z2z3.c1({1, 2});
  CHECK(c == z2z3.add(z2z3.generator(0), z2z3.scale(2, z2z3.generator(1))));
  // c1 is additive in characters
  CHECK(z2z3.add(z2z3.c1({1, 1}), z2z3.c1({1, 1})) == z2z3.c1({2, 2}));
}

TEST_CASE("per-monomial moduli") {
  BgRing z2({2});
  const auto t = z2.generator(0);
  CHECK(!z2.is_zero(z2.mul(t, t)));           // t^2 has coefficient 1 mod 2
  CHECK(z2.is_zero(z2.scale(2, z2.mul(t, t))));
  CHECK(z2.monomial_modulus({0}) == 0);       // constants live in Z
  CHECK(z2.monomial_modulus({3}) == 2);

  BgRing z2z3({2, 3});
  CHECK(z2z3.is_zero(z2z3.mul(z2z3.generator(0), z2z3.generator(1))));  // gcd(2,3) = 1
  CHECK(z2z3.monomial_modulus({1, 1}) == 1);
  CHECK(z2z3.monomial_modulus({0, 2}) == 3);

  BgRing with_trivial_factor({1, 2});
  CHECK(with_trivial_factor.is_zero(with_trivial_factor.generator(0)));
}

TEST_CASE("zero tests and degree parts") {
  BgRing z2({2});
  CHECK(z2.is_zero(z2.scale(2, z2.generator(0))));
  CHECK(!z2.is_zero(z2.mul(z2.generator(0), z2.generator(0))));
  CHECK(degree_parts(z2.zero()).empty());

  auto mixed = z2.add(z2.constant(5), z2.generator(0));
  const auto parts = degree_parts(mixed);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(0) == z2.constant(5));
  CHECK(parts.at(1) == z2.generator(0));
}

TEST_CASE("ring axioms on random classes") {
  std::mt19937_64 rng(23);
  for (const auto& factors :
       {std::vector<std::uint64_t>{2}, {4}, {2, 2}, {2, 3}, {6, 4}, {}}) {
    BgRing ring(factors);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_class(ring, rng);
      const auto b = random_class(ring, rng);
      const auto c = random_class(ring, rng);
      CHECK(ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c)));
      CHECK(ring.add(a, b) == ring.add(b, a));
      CHECK(ring.mul(a, b) == ring.mul(b, a));
      CHECK(ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c)));
      CHECK(ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c)));
      CHECK(ring.mul(a, ring.one()) == a);
      CHECK(ring.add(a, ring.zero()) == a);
      // canonical form is unique: a - b = 0 iff the forms coincide
      CHECK(ring.is_zero(ring.sub(a, b)) == (a == b));
      CHECK(ring.is_zero(ring.sub(a, a)));
    }
  }
}

TEST_CASE("rational degeneration kills positive degrees") {
  std::mt19937_64 rng(5);
  for (const auto& factors : {std::vector<std::uint64_t>{2}, {4}, {2, 2}, {12}}) {
    BgRing ring(factors);
    // every positive-degree monomial is torsion
    Monomial probe(factors.size(), 0u);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      probe[i] = 1;
      CHECK(ring.monomial_modulus(probe) > 0);
      probe[i] = 0;
    }
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_class(ring, rng);
      const auto parts = degree_parts(a);
      for (const auto& [degree, part] : parts)
        if (degree > 0) CHECK(ring.rational_part(part) == 0);
      CHECK(ring.rational_part(a) ==
            (parts.count(0) ? parts.at(0).terms.begin()->second : Int(0)));
    }
  }
}

TEST_CASE("shape errors") {
  BgRing z2({2});
  CHECK_THROWS_AS(z2.c1({1, 2}), InputError);
  CHECK_THROWS_AS(z2.generator(1), InputError);
  EquivariantClass bad;
  bad.terms[{1, 1}] = 1;
  CHECK_THROWS_AS(z2.normalize(bad), InputError);
  CHECK_THROWS_AS(BgRing({2, 0}), InputError);
}

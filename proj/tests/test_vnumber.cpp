#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "support/corpus.hpp"
#include "support/util.hpp"
#include "vfilt/vnumber.hpp"

using namespace vfilt;
using vfilt_test::corpus;
using vfilt_test::ideal_of;
using vfilt_test::mono;

TEST_CASE("local v-numbers of (x^2, x*y^4)") {
  auto ring = make_ring({"x", "y"});
  auto ideal = ideal_of(ring, {{2, 0}, {1, 4}});

  auto at_x = local_v(ideal, MonomialPrime(ring, {0}));
  CHECK(at_x.value == 4);
  CHECK(at_x.witness == mono({0, 4}));

  auto at_xy = local_v(ideal, MonomialPrime(ring, {0, 1}));
  CHECK(at_xy.value == 4);
  CHECK(at_xy.witness == mono({1, 3}));

  auto global = v(ideal);
  CHECK(global.value == 4);
  CHECK(global.prime == MonomialPrime(ring, {0}));  // tie goes to (x)
  CHECK(global.witness == mono({0, 4}));
}

TEST_CASE("local v-number of a prime at itself is zero") {
  auto ring = make_ring({"x", "y"});
  auto p = MonomialPrime(ring, {0, 1});
  auto r = local_v(p.as_ideal(), p);
  CHECK(r.value == 0);
  CHECK(r.witness.is_identity());
  CHECK(v(p.as_ideal()).value == 0);
}

TEST_CASE("local v-numbers of (xy, xz, xw, yz)") {
  auto ring = make_ring({"x", "y", "z", "w"});
  auto ideal = ideal_of(
      ring, {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}});

  auto at_xy = local_v(ideal, MonomialPrime(ring, {0, 1}));
  CHECK(at_xy.value == 1);
  CHECK(at_xy.witness == mono({0, 0, 1, 0}));  // witness z

  auto at_xz = local_v(ideal, MonomialPrime(ring, {0, 2}));
  CHECK(at_xz.value == 1);
  CHECK(at_xz.witness == mono({0, 1, 0, 0}));  // witness y

  auto at_yzw = local_v(ideal, MonomialPrime(ring, {1, 2, 3}));
  CHECK(at_yzw.value == 1);
  CHECK(at_yzw.witness == mono({1, 0, 0, 0}));  // witness x

  auto global = v(ideal);
  CHECK(global.value == 1);
  CHECK(global.prime == MonomialPrime(ring, {0, 1}));
}

TEST_CASE("v-number of the triangle cover ideal is one") {
  auto ring = make_ring_x(3);
  auto cover = ideal_of(ring, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  auto r = v(cover);
  CHECK(r.value == 1);
  CHECK(r.prime == MonomialPrime(ring, {0, 1}));
  CHECK(r.witness == mono({0, 0, 1}));
  for (const auto& local : local_v_all(cover)) CHECK(local.value == 1);
}

TEST_CASE("v-number of the pentagon cover ideal is two") {
  auto ring = make_ring_x(5);
  auto cover = ideal_of(ring, {{1, 1, 0, 1, 0},
                               {0, 1, 1, 0, 1},
                               {1, 0, 1, 1, 0},
                               {0, 1, 0, 1, 1},
                               {1, 0, 1, 0, 1}});

  auto at_34 = local_v(cover, MonomialPrime(ring, {2, 3}));
  CHECK(at_34.value == 2);
  CHECK(at_34.witness == mono({0, 1, 0, 0, 1}));  // witness x2*x5

  auto r = v(cover);
  CHECK(r.value == 2);
  CHECK(r.prime == MonomialPrime(ring, {0, 1}));
  for (const auto& local : local_v_all(cover)) CHECK(local.value == 2);
}

TEST_CASE("cover ideal of a triangle with two pendants per vertex") {
  // Core x1,x2,x3 pairwise joined; pendants xj_1, xj_2 hang off xj. The
  // minimal covers are the core itself and, for each j, the other two core
  // vertices plus both pendants of xj.
  auto ring = make_ring({"x1", "x2", "x3", "x1_1", "x1_2", "x2_1", "x2_2",
                         "x3_1", "x3_2"});
  auto cover = ideal_of(ring, {{1, 1, 1, 0, 0, 0, 0, 0, 0},
                               {0, 1, 1, 1, 1, 0, 0, 0, 0},
                               {1, 0, 1, 0, 0, 1, 1, 0, 0},
                               {1, 1, 0, 0, 0, 0, 0, 1, 1}});

  auto locals = local_v_all(cover);
  REQUIRE(locals.size() == 9);  // three core edges, six pendant edges
  int pendant_edges = 0, core_edges = 0;
  for (const auto& local : locals) {
    if (local.prime.support()[1] >= 3) {
      CHECK(local.value == 3);  // prime (xj, xj_l)
      ++pendant_edges;
    } else {
      CHECK(local.value == 5);  // prime (xi, xj), core edge
      ++core_edges;
    }
  }
  CHECK(pendant_edges == 6);
  CHECK(core_edges == 3);

  auto r = v(cover);
  CHECK(r.value == 3);
  CHECK(r.prime == MonomialPrime::from_names(ring, {"x1", "x1_1"}));
}

TEST_CASE("oracle scan agrees with the quotient method on fixed cases") {
  auto ring = make_ring_x(5);
  auto cover = ideal_of(ring, {{1, 1, 0, 1, 0},
                               {0, 1, 1, 0, 1},
                               {1, 0, 1, 1, 0},
                               {0, 1, 0, 1, 1},
                               {1, 0, 1, 0, 1}});
  auto p = MonomialPrime(ring, {2, 3});
  auto scanned = local_v_oracle(cover, p);
  REQUIRE(scanned.has_value());
  CHECK(scanned->value == 2);
  CHECK(scanned->witness == mono({0, 1, 0, 0, 1}));

  // Capping the scan strictly below the value finds nothing.
  CHECK_FALSE(local_v_oracle(cover, p, Int(1)).has_value());

  // A prime that is not associated yields no witness at any degree.
  CHECK_FALSE(
      local_v_oracle(cover, MonomialPrime(ring, {0, 2}), Int(4)).has_value());
}

TEST_CASE("v-number preconditions") {
  auto ring = make_ring({"x", "y"});
  auto ideal = ideal_of(ring, {{2, 0}, {1, 4}});

  CHECK_THROWS_AS(v(MonomialIdeal::zero(ring)), domain_error);
  CHECK_THROWS_AS(v(MonomialIdeal::unit(ring)), domain_error);
  CHECK_THROWS_AS(local_v(MonomialIdeal::unit(ring), MonomialPrime(ring, {0})),
                  domain_error);
  // (y) is not an associated prime of (x^2, x*y^4).
  CHECK_THROWS_AS(local_v(ideal, MonomialPrime(ring, {1})), domain_error);

  auto other = make_ring({"a", "b"});
  CHECK_THROWS_AS(local_v(ideal, MonomialPrime(other, {0})),
                  ring_mismatch_error);
}

TEST_CASE("quotient method versus oracle scan on a random corpus") {
  for (const auto& ideal : corpus(424242u, 35)) {
    const auto ass = associated_primes(ideal);
    const auto locals = local_v_all(ideal);
    REQUIRE(locals.size() == ass.size());

    Int alpha_bound = alpha(ideal) - 1;
    for (std::size_t i = 0; i < ass.size(); ++i) {
      const auto& r = locals[i];
      CHECK(r.prime == ass[i]);

      // The witness is genuine: degree matches and its colon is exactly p.
      CHECK(r.witness.degree() == r.value);
      CHECK(colon(ideal, r.witness) == ass[i].as_ideal());
      CHECK(r.value >= alpha_bound);

      // Independent brute-force scan: same value, nothing below it.
      auto scanned = local_v_oracle(ideal, ass[i]);
      REQUIRE(scanned.has_value());
      CHECK(scanned->value == r.value);
      if (r.value > 0)
        CHECK_FALSE(local_v_oracle(ideal, ass[i], r.value - 1).has_value());
    }

    auto global = v(ideal);
    for (const auto& r : locals) CHECK(global.value <= r.value);
    CHECK(std::any_of(locals.begin(), locals.end(), [&](const VResult& r) {
      return r.value == global.value && r.prime == global.prime;
    }));
  }
}

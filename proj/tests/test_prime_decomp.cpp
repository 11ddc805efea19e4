#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "support/corpus.hpp"
#include "support/util.hpp"
#include "vfilt/prime.hpp"

using namespace vfilt;
using vfilt_test::corpus;
using vfilt_test::ideal_of;

namespace {

MonomialIdeal reassemble(const std::vector<IrreducibleComponent>& comps,
                         const RingPtr& ring) {
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(comps.size());
  for (const auto& c : comps) ideals.push_back(c.as_ideal());
  return intersect(ideals, ring);
}

}  // namespace

TEST_CASE("monomial primes: construction, order, containment") {
  auto ring = make_ring({"x", "y", "z", "w"});

  MonomialPrime p = MonomialPrime::from_names(ring, {"y", "x"});
  CHECK(p.support() == std::vector<std::size_t>{0, 1});
  CHECK(p.height() == 2);
  CHECK(p.names() == std::vector<std::string>{"x", "y"});
  CHECK(to_string(p) == "(x,y)");
  CHECK(p.as_ideal() == ideal_of(ring, {{1, 0, 0, 0}, {0, 1, 0, 0}}));

  MonomialPrime q(ring, {1, 2, 3});
  CHECK(to_string(q) == "(y,z,w)");
  CHECK(q.contains(MonomialPrime(ring, {1, 3})));
  CHECK_FALSE(q.contains(p));
  CHECK(q.strictly_contains(MonomialPrime(ring, {2})));
  CHECK_FALSE(q.strictly_contains(q));

  // Canonical order compares support sequences lexicographically.
  CHECK(p < MonomialPrime(ring, {0, 2}));
  CHECK(MonomialPrime(ring, {0, 2}) < q);
  CHECK(p < MonomialPrime(ring, {0, 1, 2}));

  CHECK_THROWS_AS(MonomialPrime(ring, {}), domain_error);
  CHECK_THROWS_AS(MonomialPrime(ring, {4}), ring_mismatch_error);
}

TEST_CASE("irreducible components expose ideals and supports") {
  auto ring = make_ring({"x", "y"});
  IrreducibleComponent c{ring, {{0, Int(2)}, {1, Int(4)}}};
  CHECK(c.as_ideal() == ideal_of(ring, {{2, 0}, {0, 4}}));
  CHECK(c.support() == MonomialPrime(ring, {0, 1}));

  IrreducibleComponent d{ring, {{0, Int(1)}, {1, Int(2)}}};
  CHECK(component_contained_in(c, d));        // (x^2, y^4) subset of (x, y^2)
  CHECK_FALSE(component_contained_in(d, c));  // (x, y^2) not in (x^2, y^4)

  IrreducibleComponent e{ring, {{0, Int(1)}}};
  CHECK_FALSE(component_contained_in(c, e));  // y^4 is not in (x)
  CHECK_FALSE(component_contained_in(e, c));  // x is not in (x^2, y^4)
}

TEST_CASE("decomposition of a single squarefree product splits variables") {
  auto ring = make_ring({"x", "y"});
  auto comps = irreducible_decomposition(ideal_of(ring, {{1, 1}}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].as_ideal() == ideal_of(ring, {{1, 0}}));
  CHECK(comps[1].as_ideal() == ideal_of(ring, {{0, 1}}));
}

TEST_CASE("decomposition keeps embedded components") {
  auto ring = make_ring({"x", "y"});
  auto ideal = ideal_of(ring, {{2, 0}, {1, 1}});  // (x^2, x*y)
  auto comps = irreducible_decomposition(ideal);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].as_ideal() == ideal_of(ring, {{1, 0}}));
  CHECK(comps[1].as_ideal() == ideal_of(ring, {{2, 0}, {0, 1}}));
  CHECK(reassemble(comps, ring) == ideal);
}

TEST_CASE("associated primes of (x^2, x*y^4)") {
  auto ring = make_ring({"x", "y"});
  auto ideal = ideal_of(ring, {{2, 0}, {1, 4}});

  auto ass = associated_primes(ideal);
  REQUIRE(ass.size() == 2);
  CHECK(ass[0] == MonomialPrime(ring, {0}));
  CHECK(ass[1] == MonomialPrime(ring, {0, 1}));

  auto mins = minimal_primes(ideal);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0] == MonomialPrime(ring, {0}));

  CHECK(bight(ideal) == 2);
}

TEST_CASE("associated primes of a prime and of a triangle cover ideal") {
  auto ring2 = make_ring({"x", "y"});
  auto ass_max = associated_primes(ideal_of(ring2, {{1, 0}, {0, 1}}));
  REQUIRE(ass_max.size() == 1);
  CHECK(ass_max[0] == MonomialPrime(ring2, {0, 1}));

  auto ring3 = make_ring_x(3);
  auto triangle = ideal_of(ring3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  auto ass = associated_primes(triangle);
  REQUIRE(ass.size() == 3);
  CHECK(ass[0] == MonomialPrime(ring3, {0, 1}));
  CHECK(ass[1] == MonomialPrime(ring3, {0, 2}));
  CHECK(ass[2] == MonomialPrime(ring3, {1, 2}));
  CHECK(minimal_primes(triangle) == ass);
  CHECK(bight(triangle) == 2);
}

TEST_CASE("associated primes of (xy, xz, xw, yz)") {
  auto ring = make_ring({"x", "y", "z", "w"});
  auto ideal = ideal_of(
      ring, {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}});

  auto ass = associated_primes(ideal);
  REQUIRE(ass.size() == 3);
  CHECK(ass[0] == MonomialPrime(ring, {0, 1}));     // (x,y)
  CHECK(ass[1] == MonomialPrime(ring, {0, 2}));     // (x,z)
  CHECK(ass[2] == MonomialPrime(ring, {1, 2, 3}));  // (y,z,w)
  CHECK(minimal_primes(ideal) == ass);
  CHECK(bight(ideal) == 3);

  // Each associated prime contains the ideal.
  for (const auto& p : ass) CHECK(p.as_ideal().contains_ideal(ideal));
}

TEST_CASE("q_p multiplies the strictly larger associated primes") {
  auto ring = make_ring({"x", "y"});
  auto ideal = ideal_of(ring, {{2, 0}, {1, 4}});

  CHECK(q_p(ideal, MonomialPrime(ring, {0})) ==
        ideal_of(ring, {{1, 0}, {0, 1}}));
  CHECK(q_p(ideal, MonomialPrime(ring, {0, 1})).is_unit());

  CHECK_THROWS_AS(q_p(ideal, MonomialPrime(ring, {1})), domain_error);

  auto ring4 = make_ring({"x", "y", "z", "w"});
  auto flower = ideal_of(
      ring4, {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}});
  for (const auto& p : associated_primes(flower))
    CHECK(q_p(flower, p).is_unit());  // incomparable associated primes
}

TEST_CASE("bipartite double-cover ideal is unmixed of height four") {
  // Vertices x1..x4, y1..y4; edges x_iy_j for i,j <= 2 plus x_iy_s for
  // i in {3,4} and all s.
  auto ring = make_ring(
      {"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"});
  std::vector<std::vector<long>> gens;
  auto edge = [&](std::size_t i, std::size_t j) {
    std::vector<long> e(8, 0);
    e[i] = 1;
    e[4 + j] = 1;
    gens.push_back(e);
  };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) edge(i, j);
  for (std::size_t i = 2; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) edge(i, j);
  auto ideal = ideal_of(ring, gens);
  REQUIRE(ideal.generators().size() == 12);

  auto ass = associated_primes(ideal);
  REQUIRE(ass.size() == 3);
  for (const auto& p : ass) CHECK(p.height() == 4);
  CHECK(bight(ideal) == 4);
  CHECK(ass[0] == MonomialPrime::from_names(ring, {"x1", "x2", "x3", "x4"}));
  CHECK(ass[1] == MonomialPrime::from_names(ring, {"x3", "x4", "y1", "y2"}));
  CHECK(ass[2] == MonomialPrime::from_names(ring, {"y1", "y2", "y3", "y4"}));
}

TEST_CASE("decomposition rejects the zero and unit ideals") {
  auto ring = make_ring({"x", "y"});
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(ring)),
                  domain_error);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(ring)),
                  domain_error);
}

TEST_CASE("dual route agrees with the splitting recursion") {
  // Random small ideals.
  for (const auto& ideal : corpus(97531u, 25))
    CHECK(irreducible_decomposition(ideal) ==
          irreducible_decomposition_by_splitting(ideal));

  // An intersection of edge-prime cubes around a pentagon.
  auto ring5 = make_ring_x(5);
  std::vector<MonomialIdeal> cubes;
  for (auto [i, j] : std::vector<std::pair<std::size_t, std::size_t>>{
           {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})
    cubes.push_back(power(MonomialPrime(ring5, {i, j}).as_ideal(), 3));
  auto cube = intersect(cubes, ring5);
  CHECK(irreducible_decomposition(cube) ==
        irreducible_decomposition_by_splitting(cube));

  // A squared edge ideal with an embedded maximal prime.
  auto tri2 = power(
      ideal_of(make_ring_x(3), {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}), 2);
  CHECK(irreducible_decomposition(tri2) ==
        irreducible_decomposition_by_splitting(tri2));
}

TEST_CASE("decomposition properties on a random corpus") {
  for (const auto& ideal : corpus(20260814u, 40)) {
    auto comps = irreducible_decomposition(ideal);
    REQUIRE_FALSE(comps.empty());

    // The components intersect back to the ideal.
    CHECK(reassemble(comps, ideal.ring()) == ideal);

    // Irredundancy: dropping any component changes the intersection.
    for (std::size_t i = 0; i < comps.size() && comps.size() > 1; ++i) {
      std::vector<MonomialIdeal> others;
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (j != i) others.push_back(comps[j].as_ideal());
      CHECK_FALSE(intersect(others, ideal.ring()) == ideal);
    }

    // Determinism.
    CHECK(irreducible_decomposition(ideal) == comps);

    // Associated primes are sorted, distinct, and contain the ideal.
    auto ass = associated_primes(ideal);
    CHECK(std::is_sorted(ass.begin(), ass.end()));
    CHECK(std::adjacent_find(ass.begin(), ass.end()) == ass.end());
    for (const auto& p : ass) CHECK(p.as_ideal().contains_ideal(ideal));

    // Minimal primes agree with those of the radical, where every
    // associated prime is minimal.
    auto rad = radical(ideal);
    auto rad_ass = associated_primes(rad);
    CHECK(minimal_primes(ideal) == rad_ass);
    CHECK(minimal_primes(rad) == rad_ass);
  }
}

#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "splitorder/correspondence.hpp"
#include "splitorder/error.hpp"
#include "splitorder/random.hpp"

using namespace splitorder;

namespace {

const ExponentMatrix kExample({{0, 0, 1}, {3, 0, 1}, {3, 2, 0}});
const ExponentMatrix kExamplePrime({{0, 0, 2}, {3, 0, 1}, {3, 2, 0}});

std::vector<ApartmentVertex> vertices(std::initializer_list<std::vector<Exponent>> list) {
  std::vector<ApartmentVertex> out;
  for (const auto& v : list) out.emplace_back(v);
  return out;
}

std::vector<ApartmentVertex> random_vertices(Rng& rng, std::size_t n, std::size_t count) {
  std::vector<ApartmentVertex> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Exponent> m(n, 0);
    for (std::size_t i = 1; i < n; ++i) m[i] = rng.uniform(-4, 4);
    out.emplace_back(std::move(m));
  }
  return out;
}

// Containment: S(nu) lies in Lambda(m) iff m_i - m_j <= nu_ij.
bool contains_by_inequalities(const ApartmentVertex& m, const ExponentMatrix& nu) {
  for (std::size_t i = 0; i < nu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j)
      if (m[i] - m[j] > nu(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("maximal order exponents") {
  CHECK(maximal_order_exponents(ApartmentVertex({0, 0, -1})) ==
        ExponentMatrix({{0, 0, 1}, {0, 0, 1}, {-1, -1, 0}}));
  CHECK(maximal_order_exponents(ApartmentVertex({0, 3, 2})) ==
        ExponentMatrix({{0, -3, -2}, {3, 0, 1}, {2, -1, 0}}));
  CHECK(maximal_order_exponents(ApartmentVertex({0, 1, 3})) ==
        ExponentMatrix({{0, -1, -3}, {1, 0, -2}, {3, 2, 0}}));
  CHECK(maximal_order_exponents(ApartmentVertex({0, 0, 0})) == ExponentMatrix::zero(3));
  // Un-normalized input is the same homothety class.
  CHECK(maximal_order_exponents(ApartmentVertex({2, 2, 1})) == maximal_order_exponents(ApartmentVertex({0, 0, -1})));

  Rng rng(5);
  for (const auto& v : random_vertices(rng, 4, 200)) {
    const auto nu = maximal_order_exponents(v);
    CHECK(is_order(nu));
    CHECK(is_reduced(nu));
    CHECK(maximal_orders_containing(nu) == std::vector<ApartmentVertex>{v});
  }
}

TEST_CASE("intersections from the 3x3 example") {
  CHECK(intersect_maximal(vertices({{0, 0, -1}, {0, 3, 3}, {0, 0, 2}})) == kExample);
  CHECK(intersect_maximal(vertices({{0, 0, -1}, {0, 3, 2}, {0, 1, 3}})) == kExample);
  CHECK(intersect_maximal(vertices({{0, 0, -1}, {0, 3, 2}, {0, 3, 3}, {0, 1, 3}, {0, 0, 2}})) == kExample);
  CHECK(intersect_maximal(vertices({{0, 3, 2}})) == maximal_order_exponents(ApartmentVertex({0, 3, 2})));
  CHECK_THROWS_AS(intersect_maximal(std::vector<ApartmentVertex>{}), Error);
}

TEST_CASE("maximal orders containing") {
  CHECK(maximal_orders_containing(kExample).size() == 13);
  CHECK(maximal_orders_containing(ExponentMatrix::zero(3)) == vertices({{0, 0, 0}}));
  CHECK(maximal_orders_containing(ExponentMatrix({{0, 0}, {3, 0}})) == vertices({{0, 0}, {0, 1}, {0, 2}, {0, 3}}));
}

TEST_CASE("containment follows the inequality form, not entrywise exponent order") {
  // Lambda(0,0,-1) contains S but its exponent matrix is not >= nu entrywise.
  const ApartmentVertex v({0, 0, -1});
  CHECK(contains_by_inequalities(v, kExample));
  CHECK_FALSE(kExample.dominated_by(maximal_order_exponents(v)));
  CHECK(maximal_order_exponents(v).dominated_by(kExample));

  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    ExponentMatrixBuilder b(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) b.at(i, j) = rng.uniform(-3, 5);
    const auto nu = b.build();
    const auto found = maximal_orders_containing(nu);
    const std::set<ApartmentVertex> set(found.begin(), found.end());
    for (Exponent a = -6; a <= 6; ++a)
      for (Exponent c = -6; c <= 6; ++c) {
        const ApartmentVertex m({0, a, c});
        CHECK(set.contains(m) == contains_by_inequalities(m, nu));
        CHECK(set.contains(m) == maximal_order_exponents(m).dominated_by(nu));
      }
  }
}

TEST_CASE("roundtrip reports") {
  const auto r = verify_roundtrip(kExample);
  CHECK(r.ok());
  CHECK(r.input_reduced);
  CHECK(r.input_fixed);
  CHECK(r.vertices.size() == 13);

  const auto rp = verify_roundtrip(kExamplePrime);
  CHECK(rp.hull_recovered);
  CHECK(rp.reduced_is_fixed);
  CHECK_FALSE(rp.input_reduced);
  CHECK_FALSE(rp.input_fixed);
  CHECK(rp.hull == kExample);

  CHECK(verify_roundtrip(ExponentMatrix::zero(4)).input_fixed);
  CHECK_THROWS_AS(verify_roundtrip(ExponentMatrix({{0, -1}, {0, 0}})), Error);
}

TEST_CASE("bijection in both directions on random inputs") {
  Rng rng(2718);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    CAPTURE(trial);
    // Polytope -> order -> polytope.
    const auto vs = random_vertices(rng, n, static_cast<std::size_t>(rng.uniform(1, 6)));
    const auto mu = intersect_maximal(vs);
    std::vector<oracle::Point> raw;
    for (const auto& v : vs) raw.push_back(v.coords());
    CHECK(mu.rows() == oracle::entrywise_max_of_differences(raw));
    CHECK(is_order(mu));
    const auto containing = maximal_orders_containing(mu);
    const std::set<ApartmentVertex> set(containing.begin(), containing.end());
    for (const auto& v : vs) CHECK(set.contains(v));
    CHECK(intersect_maximal(containing) == mu);

    auto more = vs;
    more.push_back(random_vertices(rng, n, 1).front());
    CHECK(mu.dominated_by(intersect_maximal(more)));

    // Reduced exponents -> polytope -> exponents.
    ExponentMatrixBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) b.at(i, j) = rng.uniform(-3, 5);
    const auto nu = b.build();
    if (is_reduced(nu)) CHECK(intersect_maximal(maximal_orders_containing(nu)) == nu);
  }
}

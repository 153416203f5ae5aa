#include <doctest.h>

#include <random>

#include "bdm/exact.hpp"

#include "properties.hpp"

using namespace bdm;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows) {
  std::vector<IntVector> r;
  for (auto& row : rows) {
    IntVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return IntMatrix(r);
}

IntVector vec(std::vector<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto id = IntMatrix::identity(2);
  auto f = smith_normal_form(id);
  CHECK(f.S == id);
  CHECK(f.U * id * f.V == f.S);

  f = smith_normal_form(mat({{2, 0}, {0, 3}}));
  CHECK(f.S == mat({{1, 0}, {0, 6}}));

  f = smith_normal_form(mat({{2, 4}}));
  CHECK(f.S == mat({{2, 0}}));
  CHECK(f.U * mat({{2, 4}}) * f.V == f.S);
}

TEST_CASE("smith form property: U M V = S, unimodular transforms") {
  auto r = props::smith_identity();
  INFO(r.first_failure);
  CHECK(r.cases >= 100);
  CHECK(r.failures == 0);
}

TEST_CASE("lattice kernel") {
  auto k = lattice_kernel(mat({{1, 1, 1}, {0, 1, 2}}));
  REQUIRE(k.rank() == 1);
  auto b = k.basis()[0];
  CHECK((b == vec({1, -2, 1}) || b == vec({-1, 2, -1})));

  CHECK(lattice_kernel(IntMatrix::identity(3)).rank() == 0);

  k = lattice_kernel(mat({{1, 1}}));
  REQUIRE(k.rank() == 1);
  CHECK(k.contains(vec({1, -1})));
}

TEST_CASE("lattice kernel is saturated and exact") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t r = 1 + rng() % 3, c = 2 + rng() % 3;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % 9) - 4;
    auto k = lattice_kernel(m);
    CHECK(k.rank() == c - m.rank());
    for (const auto& z : k.basis())
      for (const auto& e : m.apply(z)) CHECK(e == 0);
    CHECK(k.is_saturated());
    // Any integer kernel vector, e.g. 3 * basis sum / 3, lies in the lattice.
    if (k.rank()) {
      IntVector w(c, Integer(0));
      for (const auto& z : k.basis())
        for (std::size_t i = 0; i < c; ++i) w[i] += z[i];
      CHECK(k.contains(w));
    }
  }
}

TEST_CASE("pointedness") {
  auto p = is_pointed(mat({{1, 1, 1}, {0, 1, 2}}));
  REQUIRE(p.pointed());
  auto q = is_pointed(mat({{1, -1}}));
  CHECK_FALSE(q.pointed());
  REQUIRE(q.infeasibility);
  p = is_pointed(IntMatrix::identity(2));
  REQUIRE(p.pointed());
  for (const auto& h : *p.certificate) CHECK(h > 0);
}

TEST_CASE("pointedness certificates verify by substitution") {
  std::mt19937 rng(3);
  int pointed = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t d = 1 + rng() % 3, n = 1 + rng() % 4;
    IntMatrix m(d, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 7) - 3;
    auto r = is_pointed(m);
    if (r.pointed()) {
      ++pointed;
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < d; ++i) s += (*r.certificate)[i] * m(i, j);
        CHECK(s > 0);
      }
    } else {
      REQUIRE(r.infeasibility);
      const auto& y = *r.infeasibility;
      bool nonzero = false;
      for (const auto& v : y) {
        CHECK(v >= 0);
        nonzero = nonzero || v != 0;
      }
      CHECK(nonzero);
      for (std::size_t i = 0; i < d; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += y[j] * m(i, j);
        CHECK(s == 0);
      }
    }
  }
  CHECK(pointed > 10);
}

TEST_CASE("spans lattice") {
  CHECK_FALSE(spans_lattice(mat({{2}})));
  CHECK(spans_lattice(mat({{1, 1, 1}, {0, 1, 2}})));
  CHECK(spans_lattice(mat({{1, 1}})));
  CHECK_THROWS_AS(PointedMatrix(mat({{1, -1}})), std::invalid_argument);
  CHECK_THROWS_AS(PointedMatrix(mat({{2}})), std::invalid_argument);
}

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-3")) == "-3");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

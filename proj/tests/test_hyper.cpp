#include <doctest.h>

#include <random>

#include "bdm/hyper.hpp"

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

const IntMatrix kA2 = mat({{1, 1, 1}, {0, 1, 2}});

PolyIdeal grI(const std::vector<std::string>& gens, std::size_t n) { return parse_ideal(gens, gr_ring(n)); }

IntMatrix random_pointed(std::mt19937& rng, std::size_t max_n) {
  for (;;) {
    std::size_t d = 1 + rng() % 2;
    std::size_t n = d + rng() % (max_n - d + 1);
    IntMatrix m(d, n);
    for (std::size_t j = 0; j < n; ++j) {
      m(0, j) = 1 + static_cast<long>(rng() % 2);
      for (std::size_t i = 1; i < d; ++i) m(i, j) = static_cast<long>(rng() % 4) - 1;
    }
    if (spans_lattice(m)) return m;
  }
}

}  // namespace

TEST_CASE("toric ideals") {
  auto I = toric_ideal(kA2);
  CHECK(ideals_equal(I, parse_ideal({"d1*d3-d2^2"}, d_ring(3))));
  CHECK(toric_ideal(mat({{1}})).is_zero());
  CHECK(ideals_equal(toric_ideal(mat({{1, 1, 1}})), parse_ideal({"d1-d2", "d2-d3"}, d_ring(3))));
  // Twisted cubic: three quadrics.
  auto C = toric_ideal(mat({{1, 1, 1, 1}, {0, 1, 2, 3}}));
  CHECK(ideals_equal(C, parse_ideal({"d1*d3-d2^2", "d2*d4-d3^2", "d1*d4-d2*d3"}, d_ring(4))));
}

TEST_CASE("Euler operators") {
  auto E = euler_operators(kA2, {0, 0});
  REQUIRE(E.size() == 2);
  CHECK(E[0] == parse_weyl("x1*d1+x2*d2+x3*d3", 3));
  CHECK(E[1] == parse_weyl("x2*d2+2*x3*d3", 3));
  CHECK(euler_operators(mat({{1}}), {5})[0] == parse_weyl("x1*d1-5", 1));
  CHECK(euler_operators(mat({{1, 1}}), {Rational(1, 2)})[0] == parse_weyl("x1*d1+x2*d2-1/2", 2));
  CHECK_THROWS_AS(euler_operators(kA2, {1}), std::invalid_argument);
}

TEST_CASE("conormal closure ideals") {
  PointedMatrix A2(kA2);
  auto c = conormal_closure_ideal(A2, make_face(kA2, {0, 1, 2}));
  auto plain = grI({"X1*X3-X2^2", "x1*X1+x2*X2+x3*X3", "x2*X2+2*x3*X3"}, 3);
  CHECK(dimension(plain) == 3);
  CHECK(contains(c.ideal, plain));
  CHECK(c.dimension == 3);
  CHECK(radical_membership(parse_poly("x1*X1+x2*X2+x3*X3", gr_ring(3)), c.ideal));
  c = conormal_closure_ideal(A2, make_face(kA2, {0}));
  CHECK(ideals_equal(c.ideal, grI({"X2", "X3", "x1"}, 3)));
  CHECK(c.dimension == 3);
  c = conormal_closure_ideal(A2, make_face(kA2, {}));
  CHECK(ideals_equal(c.ideal, grI({"X1", "X2", "X3"}, 3)));
  CHECK(c.dimension == 3);
}

TEST_CASE("char_variety_gkz examples") {
  PointedMatrix A2(kA2);
  auto comps = char_variety_gkz(A2, ProjectiveWeight::order_filtration(3));
  REQUIRE(comps.size() == 4);
  std::vector<std::string> faces;
  for (const auto& c : comps) {
    faces.push_back(c.face.to_string());
    CHECK(c.dimension == 3);
  }
  CHECK(faces == std::vector<std::string>{"{}", "{1}", "{1,2,3}", "{3}"});

  PointedMatrix one(mat({{1}}));
  comps = char_variety_gkz(one, ProjectiveWeight::order_filtration(1));
  REQUIRE(comps.size() == 2);
  CHECK(ideals_equal(comps[0].ideal, grI({"X1"}, 1)));
  CHECK(ideals_equal(comps[1].ideal, grI({"x1"}, 1)));

  comps = char_variety_gkz(A2, ProjectiveWeight({1, 0, 1}, {0, 1, 0}));
  REQUIRE(comps.size() == 4);
  CHECK(comps[2].face.to_string() == "{1,3}");
  CHECK(contains(comps[2].ideal, parse_poly("X2", gr_ring(3))));
}

TEST_CASE("conormal components have dimension n") {
  auto r = props::conormal_dimension();
  INFO(r.first_failure);
  CHECK(r.cases >= 100);
  CHECK(r.failures == 0);
}

TEST_CASE("pyramid core has the same toric ideal") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix A = random_pointed(rng, 4);
    const std::size_t n = A.cols();
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % 3) members.push_back(j);
    Face tau = make_face(A, members);
    Face core = pyramid_core(tau, A);
    auto ring = d_ring(n);
    auto I = toric_ideal_in(A, tau.members, ring, tau.members);
    auto J = toric_ideal_in(A, core.members, ring, core.members);
    CHECK(ideals_equal(I, J));
  }
}

TEST_CASE("A-discriminants") {
  CHECK(a_discriminant(kA2).poly.to_string() == "x2^2-4*x1*x3");
  auto single = a_discriminant(mat({{2}, {-1}}));
  CHECK(single.poly.to_string() == "x1");
  auto trivial = a_discriminant(mat({{1, 1}, {0, 1}}));
  CHECK(trivial.trivial);
  CHECK(trivial.poly.to_string() == "1");
}

TEST_CASE("discriminant is invariant under column shifts") {
  auto r = props::discriminant_shift();
  INFO(r.first_failure);
  CHECK(r.cases >= 100);
  CHECK(r.failures == 0);
}

TEST_CASE("GKZ singular loci") {
  CHECK(sing_locus_gkz(PointedMatrix(kA2)).to_string() == "x1*x3*(x2^2-4*x1*x3)");
  CHECK(sing_locus_gkz(PointedMatrix(mat({{1}}))).to_string() == "x1");
  CHECK(sing_locus_gkz(PointedMatrix(mat({{1, 0}, {0, 1}}))).to_string() == "x1*x2");
}

TEST_CASE("truncated systems") {
  TruncatedSystem T(kA2, 1, {0});
  CHECK(T.expected_dimension() == 4);
  auto F = ProjectiveWeight::order_filtration(3);
  auto c = truncated_char_component(T, make_face(kA2, {0, 1, 2}), F);
  CHECK(ideals_equal(c.ideal, grI({"X1*X3-X2^2", "x1*X1+x2*X2+x3*X3"}, 3)));
  CHECK(c.dimension == 4);
  TruncatedSystem T2(kA2, 1, {Rational(7, 3)});
  CHECK(ideals_equal(truncated_char_component(T2, make_face(kA2, {0, 1, 2}), F).ideal, c.ideal));
  CHECK_THROWS_AS(truncated_char_component(T, make_face(kA2, {0}), F), std::invalid_argument);

  ProjectiveWeight L({1, 0, 1}, {0, 1, 0});
  auto c2 = truncated_char_component(T, make_face(kA2, {0, 2}), L);
  CHECK(c2.dimension == 4);
  CHECK(contains(c2.ideal, parse_poly("X2", gr_ring(3))));

  auto w = torus_component_witness(T, F);
  CHECK(w.proper);
  CHECK(w.dimension == 4);
  CHECK(w.survives_full_saturation);
  auto w2 = torus_component_witness(T, L);
  CHECK(w2.proper);
  CHECK(w2.dimension == 4);

  CHECK_THROWS_AS(TruncatedSystem(kA2, 2, {0, 0}), std::invalid_argument);
}

TEST_CASE("char variety agrees with the Weyl Groebner oracle") {
  const RatVector beta{Rational(1, 2), Rational(1, 3)};
  for (const IntMatrix& M : {kA2, mat({{1, 1}, {0, 1}})}) {
    PointedMatrix A(M);
    const std::size_t n = A.n();
    for (const auto& L : {ProjectiveWeight::order_filtration(n),
                          ProjectiveWeight(RatVector(n, Rational(1)), RatVector(n, Rational(1)))}) {
      auto H = make_hypergeometric(A, beta);
      auto g = gr_ideal(H.ideal, L);
      std::vector<PolyIdeal> comps;
      for (const auto& c : char_variety_gkz(A, L)) comps.push_back(c.ideal);
      CHECK(same_radical(g, union_ideal(comps, gr_ring(n))));
    }
  }
}

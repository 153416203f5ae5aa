#include <doctest.h>

#include <random>

#include "bdm/ideal.hpp"

#include "properties.hpp"

using namespace bdm;

namespace {

PolyIdeal ideal(const RingPtr& r, std::vector<std::string> gens) { return parse_ideal(gens, r); }

Poly random_poly(const RingPtr& r, std::mt19937& rng, unsigned max_deg, unsigned terms) {
  Poly p(r);
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m;
    unsigned budget = rng() % (max_deg + 1);
    for (unsigned k = 0; k < budget; ++k) {
      std::size_t v = rng() % r->size();
      m.set(v, m[v] + 1);
    }
    p += Poly::term(r, m, Rational(static_cast<long>(rng() % 7) - 3));
  }
  return p;
}

}  // namespace

TEST_CASE("parse and print") {
  auto r = make_ring(indexed_names("x", 3));
  auto p = parse_poly("x2^2 - 4*x1*x3", r);
  CHECK(p.to_string() == "x2^2-4*x1*x3");
  CHECK(parse_poly("(x1+x2)^2", r).to_string() == "x1^2+2*x1*x2+x2^2");
  CHECK(parse_poly("x1/2 - 1/3", r).to_string() == "1/2*x1-1/3");
  CHECK_THROWS(parse_poly("x1 + y", r));
  CHECK_THROWS(parse_poly("x1 +", r));
}

TEST_CASE("groebner basis examples") {
  auto r = make_ring({"x", "y"});
  auto one = groebner_basis(ideal(r, {"1"}));
  REQUIRE(one.generators().size() == 1);
  CHECK(one.generators()[0] == Poly::constant(r, 1));

  // lex x > y realized as weight (1,0) refined by grevlex.
  auto gb = groebner_basis(ideal(r, {"x^2-y", "y^2"}), MonomialOrder::weighted({1, 0}));
  CHECK(gb.generators().size() == 2);
  CHECK(ideals_equal(gb, ideal(r, {"x^2-y", "y^2"})));

  auto d = make_ring(indexed_names("d", 3));
  gb = groebner_basis(ideal(d, {"d1*d3-d2^2"}));
  REQUIRE(gb.generators().size() == 1);
  CHECK(gb.generators()[0].to_string() == "d2^2-d1*d3");
}

TEST_CASE("saturation") {
  auto r = make_ring({"x", "y"});
  CHECK(ideals_equal(saturate(ideal(r, {"x^2*y"}), parse_poly("x", r)), ideal(r, {"y"})));
  CHECK(is_unit_ideal(saturate(ideal(r, {"x"}), parse_poly("x", r))));

  auto X = make_ring(indexed_names("X", 3));
  auto I = ideal(X, {"X1*X3-X2^2"});
  CHECK(ideals_equal(saturate(I, parse_poly("X1*X2*X3", X)), I));

  auto r4 = make_ring({"x1", "x2", "X1", "X2"});
  auto J = saturate_ideal(ideal(r4, {"x1*X1"}), ideal(r4, {"X1", "X2"}));
  // Both components x1 = 0 and X1 = 0 leave the locus X1 = X2 = 0.
  CHECK(ideals_equal(J, ideal(r4, {"x1*X1"})));
  CHECK(ideals_equal(saturate_ideal(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x"})));
  CHECK(is_unit_ideal(saturate_ideal(ideal(r, {"x", "y"}), ideal(r, {"x", "y"}))));
}

TEST_CASE("saturation is idempotent") {
  auto r = props::saturation_idempotence();
  INFO(r.first_failure);
  CHECK(r.cases >= 100);
  CHECK(r.failures == 0);
}

TEST_CASE("elimination") {
  auto r = make_ring({"x", "y", "t"});
  auto E = eliminate(ideal(r, {"x-t", "y-t^2"}), {2});
  CHECK(ideals_equal(E, ideal(r, {"y-x^2"})));
  CHECK(ideals_equal(eliminate(ideal(r, {"x"}), {1}), ideal(r, {"x"})));
  CHECK(eliminate(ideal(r, {"t"}), {2}).is_zero());
}

TEST_CASE("dimension") {
  auto r = make_ring({"x", "y"});
  CHECK(dimension(ideal(r, {"x*y"})) == 1);
  CHECK(dimension(ideal(r, {"1"})) == -1);
  CHECK(dimension(PolyIdeal(r)) == 2);
  auto g = make_ring({"x1", "x2", "x3", "X1", "X2", "X3"});
  CHECK(dimension(ideal(g, {"X1*X3-X2^2", "x1*X1+x2*X2+x3*X3", "x2*X2+2*x3*X3"})) == 3);
}

TEST_CASE("initial ideals") {
  auto r = make_ring({"x", "y"});
  CHECK(ideals_equal(initial_ideal(ideal(r, {"x+y"}), {1, 0}), ideal(r, {"x"})));
  CHECK(ideals_equal(initial_ideal(ideal(r, {"x+y"}), {1, 1}), ideal(r, {"x+y"})));
  // Maximal-weight convention: d2^2 carries weight 2 under (0,1,0).
  auto d = make_ring(indexed_names("d", 3));
  CHECK(ideals_equal(initial_ideal(ideal(d, {"d1*d3-d2^2"}), {0, 1, 0}), ideal(d, {"d2^2"})));
}

TEST_CASE("Groebner deformation preserves dimension") {
  auto r = props::deformation_dimension();
  INFO(r.first_failure);
  CHECK(r.cases >= 100);
  CHECK(r.failures == 0);
}

TEST_CASE("divisorial part") {
  auto r = make_ring({"x", "y", "z"});
  CHECK(divisorial_part(ideal(r, {"x^2*y", "x^2*z"})).to_string() == "x");
  CHECK(divisorial_part(ideal(r, {"x", "y"})).to_string() == "1");
  auto r2 = make_ring({"x1", "x2"});
  CHECK(divisorial_part(ideal(r2, {"x1"})).to_string() == "x1");
  CHECK_THROWS_AS(divisorial_part(PolyIdeal(r2)), std::invalid_argument);
}

TEST_CASE("divisorial part vanishes on height-one components") {
  // I = <f*g, f*h> with g,h coprime has divisorial part sqfree(f).
  std::mt19937 rng(23);
  auto r = make_ring({"x", "y", "z"});
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Poly f = random_poly(r, rng, 2, 2);
    if (f.is_constant()) continue;
    Poly a = Poly::variable(r, 0) + Poly::constant(r, static_cast<long>(rng() % 3));
    Poly b = Poly::variable(r, 1) - Poly::constant(r, static_cast<long>(rng() % 3));
    PolyIdeal I(r, {f * a, f * f * b});
    Poly p = divisorial_part(I);
    CHECK(radical_membership(p, PolyIdeal(r, {f})));
    CHECK(radical_membership(f, PolyIdeal(r, {p})));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("radical membership") {
  auto r = make_ring({"x", "y"});
  CHECK(radical_membership(parse_poly("x", r), ideal(r, {"x^2"})));
  CHECK_FALSE(radical_membership(parse_poly("y", r), ideal(r, {"x"})));
  auto g = make_ring({"x1", "x2", "x3", "X1", "X2", "X3"});
  auto C = ideal(g, {"X1*X3-X2^2", "x1*X1+x2*X2+x3*X3", "x2*X2+2*x3*X3"});
  CHECK(radical_membership(parse_poly("x1*X1+x2*X2+x3*X3", g), C));
}

TEST_CASE("gcd") {
  auto r = make_ring({"x", "y", "z"});
  CHECK(multivariate_gcd(parse_poly("x^2*y", r), parse_poly("x^2*z", r)).to_string() == "x^2");
  auto f = parse_poly("x^2+3*y", r);
  CHECK(multivariate_gcd(f, Poly(r)) == f);
  CHECK(multivariate_gcd(parse_poly("x^2-y^2", r), parse_poly("x^2+2*x*y+y^2", r)).to_string() == "x+y");
}

TEST_CASE("gcd against planted common factor") {
  std::mt19937 rng(29);
  auto r = make_ring({"x", "y"});
  for (int trial = 0; trial < 100; ++trial) {
    Poly c = random_poly(r, rng, 2, 2);
    Poly a = random_poly(r, rng, 2, 2);
    Poly b = random_poly(r, rng, 2, 2);
    if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
    Poly g = multivariate_gcd(c * a, c * b);
    CHECK(exact_divide(c * a, g).has_value());
    CHECK(exact_divide(c * b, g).has_value());
    CHECK(exact_divide(g, c.primitive()).has_value());
  }
}

TEST_CASE("intersection") {
  auto r = make_ring({"x", "y"});
  auto I = intersect(ideal(r, {"x"}), ideal(r, {"y"}));
  CHECK(ideals_equal(I, ideal(r, {"x*y"})));
}

#include <doctest.h>

#include <random>

#include "bdm/weyl.hpp"
#include "fixtures.hpp"

using namespace bdm;

namespace {

WeylElement W(const std::string& s, std::size_t n) { return parse_weyl(s, n); }

WeylElement random_weyl(std::size_t n, std::mt19937& rng, unsigned max_len = 3) {
  WeylElement e(n);
  unsigned terms = 1 + rng() % 3;
  for (unsigned t = 0; t < terms; ++t) {
    WeylElement m = WeylElement::constant(n, Rational(static_cast<long>(rng() % 5) - 2));
    unsigned len = rng() % (max_len + 1);
    for (unsigned k = 0; k < len; ++k) {
      std::size_t i = rng() % n;
      m = m * (rng() % 2 ? WeylElement::x(n, i) : WeylElement::d(n, i));
    }
    e += m;
  }
  return e;
}

PolyIdeal gr(const std::vector<std::string>& gens, std::size_t n) {
  return parse_ideal(gens, gr_ring(n));
}

}  // namespace

TEST_CASE("Weyl multiplication") {
  CHECK(W("d1", 1) * W("x1", 1) == W("x1*d1 + 1", 1));
  CHECK((W("d1", 1) * W("x1", 1)).to_string() == "x1*d1+1");
  CHECK(W("x1", 2) * W("x2", 2) == W("x1*x2", 2));
  CHECK((W("d1^2", 1) * W("x1", 1)).to_string() == "x1*d1^2+2*d1");
  // d_j x_i - x_i d_j = delta_ij
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto c = WeylElement::d(3, j) * WeylElement::x(3, i) - WeylElement::x(3, i) * WeylElement::d(3, j);
      CHECK(c == WeylElement::constant(3, i == j ? 1 : 0));
    }
}

TEST_CASE("Weyl multiplication is associative") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 1 + rng() % 3;
    auto a = random_weyl(n, rng), b = random_weyl(n, rng), c = random_weyl(n, rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("theta sugar is opt-in") {
  CHECK_THROWS(parse_weyl("t1", 1));
  CHECK(parse_weyl("t1", 1, {true}) == W("x1*d1", 1));
}

TEST_CASE("projective weights") {
  CHECK_THROWS(ProjectiveWeight({0, 0}, {1, 2}));
  CHECK_THROWS(ProjectiveWeight({1}, {-1}));
  ProjectiveWeight L({1, 0, 1}, {0, 1, 0});
  CHECK(L.c() == 1);
}

TEST_CASE("initial forms") {
  auto F1 = ProjectiveWeight::order_filtration(1);
  CHECK(initial_form(W("x1*d1 - 3", 1), F1).to_string() == "x1*X1");
  auto F3 = ProjectiveWeight::order_filtration(3);
  CHECK(initial_form(W("d1*d3 - d2^2", 3), F3).to_string() == "-X2^2+X1*X3");
  // Maximal L-degree convention: d2^2 has weight 2, d1*d3 weight 0.
  ProjectiveWeight L({1, 0, 1}, {0, 1, 0});
  CHECK(initial_form(W("d1*d3 - d2^2", 3), L).to_string() == "-X2^2");
  CHECK_THROWS(initial_form(WeylElement(3), L));
}

TEST_CASE("left Groebner bases") {
  auto F1 = ProjectiveWeight::order_filtration(1);
  auto gb = left_groebner(parse_weyl_ideal({"d1", "x1*d1 - 1"}, 1), F1);
  REQUIRE(gb.generators().size() == 1);
  CHECK(gb.generators()[0] == WeylElement::constant(1, 1));
  gb = left_groebner(parse_weyl_ideal({"x1"}, 1), F1);
  REQUIRE(gb.generators().size() == 1);
  CHECK(gb.generators()[0] == W("x1", 1));
}

TEST_CASE("left Groebner: in_L of every basis element lies in gr^L") {
  std::mt19937 rng(43);
  int proper = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 2;
    std::vector<WeylElement> gens;
    const int count = 1 + trial % 2;
    for (int k = 0; k < count; ++k) gens.push_back(random_weyl(n, rng, 2));
    WeylIdeal I(n, gens);
    RatVector lx, ld;
    for (std::size_t i = 0; i < n; ++i) {
      lx.push_back(static_cast<long>(rng() % 5) - 2);
      ld.push_back(2 - lx.back());
    }
    ProjectiveWeight L(lx, ld);
    auto gb = left_groebner(I, L);
    auto g = gr_ideal(I, L);
    for (const auto& e : gb.generators()) CHECK(contains(g, initial_form(e, L)));
    // Input generators reduce into the ideal spanned by the basis: their
    // initial forms lie in gr^L(I).
    for (const auto& e : I.generators()) CHECK(contains(g, initial_form(e, L)));
    if (!is_unit_ideal(g)) ++proper;
  }
  CHECK(proper >= 30);
}

TEST_CASE("homogenized and plain bases agree for nonnegative weights") {
  std::mt19937 rng(47);
  int proper = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 2;
    std::vector<WeylElement> gens;
    for (int k = 0; k < 1 + trial % 2; ++k) {
      WeylElement e(n);
      unsigned terms = 1 + rng() % 3;
      for (unsigned t = 0; t < terms; ++t) {
        WeylElement m = WeylElement::constant(n, Rational(static_cast<long>(rng() % 5) - 2));
        unsigned len = rng() % 3;
        for (unsigned j = 0; j < len; ++j) m = m * WeylElement::d(n, rng() % n);
        e += m;
      }
      gens.push_back(e);
    }
    WeylIdeal I(n, gens);
    // On C[d]-ideals the x-weights are invisible, so (0,1) and (-1,2) give
    // the same weight up to scaling on every element.
    ProjectiveWeight F = ProjectiveWeight::order_filtration(n);
    ProjectiveWeight G(RatVector(n, Rational(-1)), RatVector(n, Rational(2)));
    auto a = gr_ideal(I, F);
    auto b = gr_ideal(I, G);
    CHECK(ideals_equal(a, b));
    if (!is_unit_ideal(a)) ++proper;
  }
  CHECK(proper >= 30);
}

TEST_CASE("gr and characteristic varieties") {
  auto F2 = ProjectiveWeight::order_filtration(2);
  auto g = gr_ideal(parse_weyl_ideal({"x1"}, 2), F2);
  CHECK(ideals_equal(g, gr({"x1"}, 2)));
  CHECK(dimension(g) == 3);
  auto h = char_variety(parse_weyl_ideal({"d1", "d2"}, 2), F2);
  CHECK(ideals_equal(h, gr({"X1", "X2"}, 2)));
  CHECK(dimension(h) == 2);
  CHECK(is_L_holonomic(parse_weyl_ideal({"d1", "d2"}, 2), F2).holonomic);
  auto r = is_L_holonomic(parse_weyl_ideal({"x1"}, 2), F2);
  CHECK_FALSE(r.holonomic);
  CHECK(r.dimension == 3);
}

TEST_CASE("singular locus") {
  auto s = singular_locus(parse_weyl_ideal({"x1"}, 2));
  CHECK(ideals_equal(s, parse_ideal({"x1"}, x_ring(2))));
  CHECK(has_finite_rank(parse_weyl_ideal({"x1"}, 2)));
  // Zero module: empty locus, finite rank.
  CHECK(is_unit_ideal(singular_locus(parse_weyl_ideal({"1"}, 2))));
  // D/D*d1 in two variables: x2-direction is free, infinite rank.
  auto z = singular_locus(parse_weyl_ideal({"d1"}, 2));
  CHECK(z.is_zero());
  CHECK_FALSE(has_finite_rank(parse_weyl_ideal({"d1"}, 2)));
}

TEST_CASE("Horn example") {
  auto I = parse_weyl_ideal(fixtures::kHorn, 3, {true});
  auto F = ProjectiveWeight::order_filtration(3);
  auto g = gr_ideal(I, F);
  // The third operator has symbol x1*X1+2*x2*X2+x3*X3+x3^2*X3, so the
  // four-dimensional component over x3 = 0 is cut out by x1*X1+2*x2*X2.
  CHECK(contains(gr({"x3", "x1*X1+2*x2*X2"}, 3), g));
  CHECK_FALSE(contains(gr({"x3", "x1*X1+x2*X2"}, 3), g));
  CHECK(dimension(sum(g, gr({"x3", "x1*X1+x2*X2"}, 3))) == 3);
  CHECK(dimension(g) == 4);
  CHECK_FALSE(singular_locus_from_gr(g, 3).is_zero());
}

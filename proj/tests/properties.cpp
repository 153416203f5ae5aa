#include "properties.hpp"

#include <functional>
#include <random>

#include "bdm/binom.hpp"

using namespace bdm;

namespace props {

namespace {

std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ";" : "";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).get_str();
  }
  return s + "]";
}

// Runs body on `cases` instances; body returns "" on success or a
// description of the failing instance.
Report suite(const std::string& name, int cases, const std::function<std::string(std::mt19937&)>& body,
             unsigned seed) {
  Report r;
  r.name = name;
  std::mt19937 rng(seed);
  while (r.cases < cases) {
    std::string bad;
    try {
      bad = body(rng);
    } catch (const std::exception& e) {
      bad = std::string("threw: ") + e.what();
    }
    if (bad == "skip") continue;
    ++r.cases;
    if (!bad.empty()) {
      if (r.failures++ == 0) r.first_failure = bad;
    }
  }
  return r;
}

bool is_smith_diagonal(const IntMatrix& s) {
  Integer prev = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (i != j && s(i, j) != 0) return false;
      if (i != j) continue;
      if (s(i, i) < 0) return false;
      if (s(i, i) == 0) {
        seen_zero = true;
      } else {
        if (seen_zero || s(i, i) % prev != 0) return false;
        prev = s(i, i);
      }
    }
  return true;
}

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

IntMatrix random_pointed(std::mt19937& rng, std::size_t max_d, std::size_t extra, long lo, long hi) {
  for (;;) {
    std::size_t d = 1 + rng() % max_d;
    std::size_t n = d + rng() % (extra + 1);
    IntMatrix m(d, n);
    for (std::size_t j = 0; j < n; ++j) {
      m(0, j) = 1 + static_cast<long>(rng() % 2);
      for (std::size_t i = 1; i < d; ++i) m(i, j) = lo + static_cast<long>(rng() % (hi - lo + 1));
    }
    if (spans_lattice(m)) return m;
  }
}

}  // namespace

Report smith_identity(int cases) {
  return suite("Smith form U*M*V = S with unimodular U, V", cases, [](std::mt19937& rng) -> std::string {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % 13) - 6;
    auto f = smith_normal_form(m);
    bool ok = f.U * m * f.V == f.S && abs(f.U.determinant()) == 1 && abs(f.V.determinant()) == 1 &&
              is_smith_diagonal(f.S);
    return ok ? "" : matrix_text(m);
  }, 7);
}

Report saturation_idempotence(int cases) {
  auto r = make_ring({"x", "y", "z"});
  return suite("saturation idempotence", cases, [r](std::mt19937& rng) -> std::string {
    std::vector<Poly> gens;
    unsigned k = 1 + rng() % 2;
    for (unsigned i = 0; i < k; ++i) gens.push_back(random_poly(r, rng, 3, 3));
    Poly f = random_poly(r, rng, 2, 2);
    if (f.is_zero()) f = Poly::variable(r, rng() % 3);
    PolyIdeal I(r, gens);
    auto s1 = saturate(I, f);
    auto s2 = saturate(s1, f);
    return ideals_equal(s1, s2) && contains(s1, I) ? "" : I.to_string() + " by " + f.to_string();
  }, 5);
}

Report umbrella_chart_independence(int cases) {
  return suite("umbrella chart independence", cases, [](std::mt19937& rng) -> std::string {
    PointedMatrix A(random_pointed(rng, 3, 2, -2, 2));
    const std::size_t n = A.n();
    RatVector lx, ld;
    for (std::size_t i = 0; i < n; ++i) {
      lx.push_back(static_cast<long>(rng() % 5) - 2);
      ld.push_back(Rational(2) - lx.back());
    }
    ProjectiveWeight L(lx, ld);
    auto U1 = l_umbrella(A, L);
    RatVector h2 = A.certificate();
    for (auto& q : h2) q *= 3;
    // The first row is positive on every column, so h2 stays a certificate.
    h2[0] += 1;
    auto c2 = make_chart(A.matrix(), L, h2);
    c2.epsilon /= 4;
    auto U2 = l_umbrella(A, L, c2);
    return U1.faces == U2.faces && U1.facet == U2.facet ? "" : matrix_text(A.matrix()) + " L=" + L.to_string();
  }, 53);
}

Report conormal_dimension(int cases) {
  return suite("conormal components have dimension n", cases, [](std::mt19937& rng) -> std::string {
    PointedMatrix A(random_pointed(rng, 2, 2, -1, 2));
    const std::size_t n = A.n();
    RatVector lx, ld;
    for (std::size_t i = 0; i < n; ++i) {
      lx.push_back(static_cast<long>(rng() % 3) - 1);
      ld.push_back(Rational(1) - lx.back());
    }
    ProjectiveWeight L(lx, ld);
    for (const auto& c : char_variety_gkz(A, L))
      if (c.dimension != static_cast<int>(n))
        return matrix_text(A.matrix()) + " L=" + L.to_string() + " face " + c.face.to_string();
    return "";
  }, 67);
}

Report discriminant_shift(int cases) {
  return suite("discriminant column-shift invariance", cases, [](std::mt19937& rng) -> std::string {
    const std::size_t d = 1 + rng() % 2;
    const std::size_t k = 1 + rng() % 3;
    IntMatrix M(d, k);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < k; ++j) M(i, j) = static_cast<long>(rng() % 3);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (M.column(a) == M.column(b)) return "skip";
    IntMatrix S = M;
    for (std::size_t i = 0; i < d; ++i) {
      long m = static_cast<long>(rng() % 5) - 2;
      for (std::size_t j = 0; j < k; ++j) S(i, j) += m;
    }
    return a_discriminant(M).poly == a_discriminant(S).poly ? "" : matrix_text(M) + " vs " + matrix_text(S);
  }, 73);
}

Report deformation_dimension(int cases) {
  auto r = make_ring({"x", "y", "z"});
  return suite("Groebner deformation dimension invariance", cases, [r](std::mt19937& rng) -> std::string {
    std::vector<Poly> gens;
    unsigned k = 1 + rng() % 3;
    for (unsigned i = 0; i < k; ++i) gens.push_back(random_poly(r, rng, 3, 3));
    PolyIdeal I(r, gens);
    RatVector w{Rational(rng() % 4), Rational(rng() % 4), Rational(static_cast<long>(rng() % 5), 2)};
    return dimension(initial_ideal(I, w)) == dimension(I) ? "" : I.to_string();
  }, 17);
}

Report quasidegree_containment(int cases) {
  return suite("quasidegree truncated Hilbert containment (degree <= 20)", cases, [](std::mt19937& rng) -> std::string {
    const std::size_t n = 2 + rng() % 2;
    IntMatrix A(1 + rng() % 2, n);
    for (std::size_t j = 0; j < n; ++j) {
      A(0, j) = 1;
      for (std::size_t i = 1; i < A.rows(); ++i) A(i, j) = static_cast<long>(rng() % 3);
    }
    // A monomial in d1 and, sometimes, a toric binomial on the rest.
    std::vector<std::string> gens{"d1^" + std::to_string(1 + rng() % 3)};
    if (n == 3 && rng() % 2 && A.rows() == 1) gens.push_back("d2-d3");
    if (rng() % 3 == 0) gens.push_back("d1*d2");
    auto I = parse_ideal(gens, d_ring(n));
    if (!is_A_graded(I, A)) return "skip";
    for (const auto& c : cellular_decomposition(I, A)) {
      auto Q = quasidegrees(c, A);
      const auto& ring = c.ideal.ring();
      std::vector<unsigned> e(n, 0);
      std::size_t standard = 0;
      for (;;) {
        unsigned deg = 0;
        for (auto x : e) deg += x;
        if (deg <= 20) {
          Monomial m;
          for (std::size_t j = 0; j < n; ++j) m.set(j, e[j]);
          if (!contains(c.ideal, Poly::term(ring, m, 1))) {
            ++standard;
            RatVector q(A.rows(), Rational(0));
            for (std::size_t i = 0; i < A.rows(); ++i)
              for (std::size_t j = 0; j < n; ++j) q[i] -= Rational(A(i, j)) * e[j];
            if (!Q.contains(q)) return matrix_text(A) + " " + c.ideal.to_string() + " misses a degree";
          }
        }
        std::size_t k = 0;
        while (k < n && ++e[k] > 20) e[k++] = 0;
        if (k == n) break;
      }
      if (standard == 0) return "no standard monomials for " + c.ideal.to_string();
    }
    return "";
  }, 97);
}

}  // namespace props

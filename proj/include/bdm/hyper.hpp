#pragma once

// A-hypergeometric systems: toric ideals, Euler operators, conormal
// components, discriminants, and truncated systems.

#include <optional>
#include <string>
#include <vector>

#include "bdm/geom.hpp"
#include "bdm/ideal.hpp"
#include "bdm/weyl.hpp"

namespace bdm {

// I_A in d_ring(n).
PolyIdeal toric_ideal(const IntMatrix& A);
// Toric ideal of the columns `cols` of A, written in the given variables of
// `ring` (var[k] carries column cols[k]).
PolyIdeal toric_ideal_in(const IntMatrix& A, const std::vector<std::size_t>& cols, const RingPtr& ring,
                         const std::vector<std::size_t>& vars);

std::vector<WeylElement> euler_operators(const IntMatrix& A, const RatVector& beta);

struct HypergeometricSystem {
  IntMatrix A;
  RatVector beta;
  WeylIdeal ideal;
};
HypergeometricSystem make_hypergeometric(const PointedMatrix& A, const RatVector& beta);

struct ConormalComponent {
  Face face;
  PolyIdeal ideal;  // in gr_ring(n)
  int dimension = 0;
};

ConormalComponent conormal_closure_ideal(const PointedMatrix& A, const Face& tau);
std::vector<ConormalComponent> char_variety_gkz(const PointedMatrix& A, const ProjectiveWeight& L);

struct Discriminant {
  IntMatrix matrix;
  Poly poly;  // in x1..xk for the k columns of `matrix`
  bool trivial = false;
};
Discriminant a_discriminant(const IntMatrix& M);

// A squarefree polynomial kept with its distinct factors for display.
struct FactoredPoly {
  Poly poly;
  std::vector<Poly> factors;  // sorted by (degree, term count, text)
  // e.g. "x1*x3*(x2^2-4*x1*x3)"
  std::string to_string() const;
};
FactoredPoly make_factored(const RingPtr& ring, std::vector<Poly> factors);

FactoredPoly sing_locus_gkz(const PointedMatrix& A);

class TruncatedSystem {
 public:
  // breve_A is k x n of rank k; A is its first d rows with d < k < n.
  TruncatedSystem(IntMatrix breve_A, std::size_t d, RatVector beta);

  const PointedMatrix& breve_A() const { return breve_; }
  const PointedMatrix& A() const { return A_; }
  const RatVector& beta() const { return beta_; }
  std::size_t n() const { return breve_.n(); }
  std::size_t k() const { return breve_.d(); }
  std::size_t d() const { return A_.d(); }
  // D * (I_breveA, E_A - beta)
  const WeylIdeal& ideal() const { return ideal_; }
  std::size_t expected_dimension() const { return n() + k() - d(); }

 private:
  PointedMatrix breve_;
  PointedMatrix A_;
  RatVector beta_;
  WeylIdeal ideal_;
};

struct TruncatedComponent {
  Face face;
  PolyIdeal ideal;
  int dimension = 0;
};
TruncatedComponent truncated_char_component(const TruncatedSystem& T, const Face& tau,
                                            const ProjectiveWeight& L);

struct TorusWitness {
  Face face;             // facet that produced the witness
  PolyIdeal ideal;       // saturated by x1...xn
  int dimension = -1;
  bool proper = false;
  // Also proper after saturating by every x_i and xi_i.
  bool survives_full_saturation = false;
  std::vector<std::string> tried;  // facets examined, in order
};
// Throws VerificationMismatch when no facet yields a proper component of
// dimension n+k-d meeting T*(C*)^n.
TorusWitness torus_component_witness(const TruncatedSystem& T, const ProjectiveWeight& L);

// Union of component ideals as one ideal (their intersection).
PolyIdeal union_ideal(const std::vector<PolyIdeal>& components, const RingPtr& ring);

}  // namespace bdm

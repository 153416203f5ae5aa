#pragma once

// A-graded binomial ideals in C[d] and the D-modules D/(I, E_A - beta).

#include <optional>
#include <string>
#include <vector>

#include "bdm/geom.hpp"
#include "bdm/hyper.hpp"
#include "bdm/ideal.hpp"
#include "bdm/weyl.hpp"

namespace bdm {

struct BinomialModuleSpec {
  PointedMatrix A;
  PolyIdeal I;  // in d_ring(n)
  RatVector beta;
};

// Checks shapes and the A-grading; throws std::invalid_argument.
BinomialModuleSpec make_binomial_spec(const PointedMatrix& A, const PolyIdeal& I, const RatVector& beta);

// D * (I, E_A - beta).
WeylIdeal binomial_weyl_ideal(const BinomialModuleSpec& S);

enum class LatticeClass { toral, andean };
std::string to_string(LatticeClass c);

// One associated prime of a cellular component: cell, saturated lattice,
// and the rescaling d_i -> lambda_i d_i that makes its character trivial.
struct AssociatedPrime {
  Face cell;
  Lattice lattice;      // in Z^cell, coordinates ordered as cell.members
  RatVector rescaling;  // length n, 1 off the cell
  LatticeClass kind = LatticeClass::toral;
};

struct QuasidegreeSet {
  struct Piece {
    RatVector offset;
    std::vector<RatVector> directions;
  };
  std::vector<Piece> pieces;

  bool empty() const { return pieces.empty(); }
  bool contains(const RatVector& point) const;
  std::string to_string() const;
};

struct CellularComponent {
  Face cell;
  PolyIdeal ideal;
  std::vector<AssociatedPrime> primes;
  // More than one associated lattice; the Andean arrangement then uses the
  // quasidegrees of the whole component.
  bool flagged = false;

  bool toral() const;
};

bool is_A_graded(const PolyIdeal& I, const IntMatrix& A);

// Irredundant cellular components whose intersection is I. The lattice
// data needs A; pass it to fill `primes`.
std::vector<CellularComponent> cellular_decomposition(const PolyIdeal& I);
std::vector<CellularComponent> cellular_decomposition(const PolyIdeal& I, const IntMatrix& A);

std::vector<AssociatedPrime> associated_lattice(const CellularComponent& C, const IntMatrix& A);
LatticeClass classify_toral_andean(const Face& sigma, const Lattice& L, const IntMatrix& A);
QuasidegreeSet quasidegrees(const CellularComponent& C, const IntMatrix& A);

struct HolonomicVerdict {
  bool holonomic = false;
  QuasidegreeSet andean_arrangement;
  std::vector<CellularComponent> components;
  bool flagged = false;
};
HolonomicVerdict is_holonomic(const BinomialModuleSpec& S);

// Toral associated primes whose component has -beta among its quasidegrees.
std::vector<AssociatedPrime> contributing_primes(const BinomialModuleSpec& S);

std::vector<ConormalComponent> char_variety_binomial(const BinomialModuleSpec& S, const ProjectiveWeight& L);
FactoredPoly sing_locus_binomial(const BinomialModuleSpec& S);

struct LHolonomicReport {
  bool holonomic = false;
  bool verified = false;
  int weyl_dimension = -1;  // dimension of gr^L when verified
};
// With verify, a disagreement with the Weyl computation throws
// VerificationMismatch.
LHolonomicReport is_L_holonomic_binomial(const BinomialModuleSpec& S, const ProjectiveWeight& L,
                                         bool verify = false);

}  // namespace bdm

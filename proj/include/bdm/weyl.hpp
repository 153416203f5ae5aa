#pragma once

// The Weyl algebra D = Q<x_1..x_n, d_1..d_n>, left Groebner bases for
// projective weights, gr^L, characteristic varieties and singular loci.

#include <string>
#include <vector>

#include "bdm/ideal.hpp"

namespace bdm {

// x1..xn, d1..dn: storage ring of normally ordered operators.
RingPtr weyl_ring(std::size_t n);
// x1..xn, X1..Xn: the associated graded ring, X_i standing for xi_i.
RingPtr gr_ring(std::size_t n);
RingPtr x_ring(std::size_t n);
RingPtr d_ring(std::size_t n);

// sum c_{uv} x^u d^v with all x to the left.
class WeylElement {
 public:
  explicit WeylElement(std::size_t n);
  // p must live in weyl_ring(n) (or a ring whose names embed there).
  WeylElement(std::size_t n, const Poly& normal_ordered);

  static WeylElement constant(std::size_t n, const Rational& c);
  static WeylElement x(std::size_t n, std::size_t i);
  static WeylElement d(std::size_t n, std::size_t i);

  std::size_t n() const { return n_; }
  const Poly& normal_form() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  std::string to_string() const { return p_.to_string(); }

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.n_ == b.n_ && a.p_ == b.p_;
  }

 private:
  std::size_t n_;
  Poly p_;
};

WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b);

struct WeylParseOptions {
  // Accept ti as shorthand for xi*di.
  bool theta_sugar = false;
};

// Products are read as operator compositions: "d1*x1" is x1*d1 + 1.
WeylElement parse_weyl(const std::string& text, std::size_t n, WeylParseOptions opts = {});

// L = (L_x, L_d) with L_x + L_d = c * (1,...,1), c > 0.
class ProjectiveWeight {
 public:
  ProjectiveWeight(RatVector lx, RatVector ld);
  // The order filtration (0, 1).
  static ProjectiveWeight order_filtration(std::size_t n);

  std::size_t n() const { return lx_.size(); }
  const RatVector& lx() const { return lx_; }
  const RatVector& ld() const { return ld_; }
  const Rational& c() const { return c_; }
  // (L_x, L_d) concatenated.
  RatVector full() const;
  bool has_negative() const;
  std::string to_string() const;

  friend bool operator==(const ProjectiveWeight&, const ProjectiveWeight&) = default;

 private:
  RatVector lx_, ld_;
  Rational c_;
};

class WeylIdeal {
 public:
  explicit WeylIdeal(std::size_t n, std::vector<WeylElement> generators = {});
  std::size_t n() const { return n_; }
  const std::vector<WeylElement>& generators() const { return gens_; }
  std::vector<std::string> to_strings() const;

 private:
  std::size_t n_;
  std::vector<WeylElement> gens_;
};

WeylIdeal parse_weyl_ideal(const std::vector<std::string>& generators, std::size_t n,
                           WeylParseOptions opts = {});

// Maximal L-degree part of P as a polynomial in gr_ring(n).
Poly initial_form(const WeylElement& p, const ProjectiveWeight& L);
Rational l_degree(const WeylElement& p, const ProjectiveWeight& L);

// Left Groebner basis for L refined by grevlex. Weights with negative
// entries go through the homogenized Weyl algebra.
WeylIdeal left_groebner(const WeylIdeal& I, const ProjectiveWeight& L);
PolyIdeal gr_ideal(const WeylIdeal& I, const ProjectiveWeight& L);
PolyIdeal char_variety(const WeylIdeal& I, const ProjectiveWeight& L);

struct HolonomicityReport {
  bool holonomic = false;
  int dimension = -1;  // of Char^L; -1 when empty
};
HolonomicityReport is_L_holonomic(const WeylIdeal& I, const ProjectiveWeight& L);

// Ideal of the closure of the projection of Char(D/I) minus the zero
// section, in x_ring(n). The zero ideal means Sing = X.
PolyIdeal singular_locus(const WeylIdeal& I);
PolyIdeal singular_locus_from_gr(const PolyIdeal& grF, std::size_t n);
bool has_finite_rank(const WeylIdeal& I);

}  // namespace bdm

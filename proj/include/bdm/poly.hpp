#pragma once

// Multivariate polynomials over Q.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bdm/exact.hpp"
#include "bdm/monomial.hpp"

namespace bdm {

class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
// Names prefix1..prefixN.
std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mon;
  Rational coef;
};

// Terms are kept sorted by decreasing grevlex with no zero coefficients.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t i);
  static Poly term(RingPtr ring, const Monomial& m, const Rational& c);
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;
  // Leading term under grevlex.
  const Term& leading() const { return terms_.front(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly pow(unsigned k) const;
  Poly derivative(std::size_t var) const;

  // Rewrites into `target`, sending variable i to target variable map[i].
  Poly map_to(const RingPtr& target, const std::vector<std::size_t>& map) const;
  // Same as map_to, matching variables by name.
  Poly embed(const RingPtr& target) const;
  // Substitutes x_i -> factors[i] * x_i.
  Poly scale_variables(const RatVector& factors) const;
  Poly substitute(std::size_t var, const Poly& value) const;

  // Integer coefficients with content 1 and positive leading coefficient.
  Poly primitive() const;
  Poly monic() const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Grammar: sums of products of numbers, variable names and parenthesized
// subexpressions, with ^ for nonnegative integer powers.
Poly parse_poly(const std::string& text, const RingPtr& ring);

std::string monomial_to_string(const Monomial& m, const Ring& ring);

}  // namespace bdm

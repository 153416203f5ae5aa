#pragma once

// Ideals in Q[x_1..x_k]: Groebner bases and the operations built on them.

#include <optional>
#include <string>
#include <vector>

#include "bdm/poly.hpp"

namespace bdm {

// A nonnegative rational weight refined by graded reverse lexicographic
// order. An empty weight is plain grevlex.
struct MonomialOrder {
  RatVector weight;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder weighted(RatVector w) { return {std::move(w)}; }
  // Weight 1 on the listed variables and 0 elsewhere.
  static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& vars);

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);
};

class PolyIdeal {
 public:
  explicit PolyIdeal(RingPtr ring, std::vector<Poly> generators = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  // Set when the generators are the reduced Groebner basis for this order.
  const std::optional<MonomialOrder>& gb_order() const { return gb_order_; }

  bool is_zero() const { return gens_.empty(); }
  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  static PolyIdeal from_groebner(RingPtr ring, std::vector<Poly> basis, MonomialOrder order);

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::optional<MonomialOrder> gb_order_;
};

PolyIdeal parse_ideal(const std::vector<std::string>& generators, const RingPtr& ring);

// Reduced, monic, sorted by increasing leading monomial.
PolyIdeal groebner_basis(const PolyIdeal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

// Remainder modulo a Groebner basis, determined up to a nonzero scalar.
Poly normal_form(const Poly& f, const PolyIdeal& ideal);
bool contains(const PolyIdeal& ideal, const Poly& f);
// sub is contained in ideal.
bool contains(const PolyIdeal& ideal, const PolyIdeal& sub);
bool ideals_equal(const PolyIdeal& a, const PolyIdeal& b);
bool is_unit_ideal(const PolyIdeal& ideal);

PolyIdeal sum(const PolyIdeal& a, const PolyIdeal& b);
PolyIdeal intersect(const PolyIdeal& a, const PolyIdeal& b);
PolyIdeal intersect(const std::vector<PolyIdeal>& ideals);
// I : f^inf
PolyIdeal saturate(const PolyIdeal& ideal, const Poly& f);
// I : J^inf
PolyIdeal saturate_ideal(const PolyIdeal& ideal, const PolyIdeal& by);
// I : f
PolyIdeal colon(const PolyIdeal& ideal, const Poly& f);
// I intersected with the subring avoiding `vars`; stays in the same ring.
PolyIdeal eliminate(const PolyIdeal& ideal, const std::vector<std::size_t>& vars);
// Moves an ideal whose generators only use variables of `target` there.
PolyIdeal restrict_to(const PolyIdeal& ideal, const RingPtr& target);
PolyIdeal embed(const PolyIdeal& ideal, const RingPtr& target);

// Krull dimension of ring/I; -1 for the unit ideal.
int dimension(const PolyIdeal& ideal);
PolyIdeal initial_ideal(const PolyIdeal& ideal, const RatVector& weight);

// Squarefree polynomial cutting out the codimension <= 1 part of Var(I).
// Throws std::invalid_argument for the zero ideal.
Poly divisorial_part(const PolyIdeal& ideal);
bool radical_membership(const Poly& f, const PolyIdeal& ideal);
// Both radicals agree (each generator of one lies in the radical of the other).
bool same_radical(const PolyIdeal& a, const PolyIdeal& b);

Poly multivariate_gcd(const Poly& f, const Poly& g);
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);
Poly squarefree_part(const Poly& f);
// Primitive squarefree polynomial with the same zero set as the product.
Poly squarefree_product(const std::vector<Poly>& factors);

// Degree-wise initial form: terms of maximal weight.
Poly weight_initial_form(const Poly& f, const RatVector& weight);

}  // namespace bdm

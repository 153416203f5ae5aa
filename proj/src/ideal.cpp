#include "bdm/ideal.hpp"

#include <algorithm>

#include "conversions.hpp"
#include "groebner_engine.hpp"

namespace bdm {

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& vars) {
  RatVector w(nvars, Rational(0));
  for (auto v : vars) w.at(v) = 1;
  return {w};
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  auto nonzero = [](const RatVector& w) {
    return std::any_of(w.begin(), w.end(), [](const Rational& q) { return q != 0; });
  };
  if (!nonzero(a.weight) && !nonzero(b.weight)) return true;
  return a.weight == b.weight;
}

PolyIdeal::PolyIdeal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("generator lives in a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

PolyIdeal PolyIdeal::from_groebner(RingPtr ring, std::vector<Poly> basis, MonomialOrder order) {
  PolyIdeal I(std::move(ring), std::move(basis));
  I.gb_order_ = std::move(order);
  return I;
}

std::vector<std::string> PolyIdeal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

std::string PolyIdeal::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ">";
}

PolyIdeal parse_ideal(const std::vector<std::string>& generators, const RingPtr& ring) {
  std::vector<Poly> gens;
  for (const auto& g : generators) gens.push_back(parse_poly(g, ring));
  return PolyIdeal(ring, std::move(gens));
}

namespace detail {

TermOrder make_term_order(const MonomialOrder& order, std::size_t nvars, bool allow_negative) {
  TermOrder t;
  t.nvars = nvars;
  if (order.weight.empty()) return t;
  if (order.weight.size() != nvars) throw std::invalid_argument("weight vector has wrong length");
  Integer den = 1;
  for (const auto& q : order.weight) {
    if (!allow_negative && q < 0)
      throw std::invalid_argument("negative weights are not a well-ordering here");
    den = lcm(den, Integer(q.get_den()));
  }
  for (const auto& q : order.weight) {
    Integer v = q.get_num() * (den / q.get_den());
    if (!v.fits_slong_p()) throw std::overflow_error("weight too large");
    t.weight.push_back(v.get_si());
  }
  return t;
}

GPoly to_gpoly(const Poly& p, const TermOrder& ord) {
  GPoly g;
  Integer den = 1;
  for (const auto& t : p.terms()) den = lcm(den, Integer(t.coef.get_den()));
  for (const auto& t : p.terms())
    g.push(t.mon, ord.key(t.mon), Integer(t.coef.get_num() * (den / t.coef.get_den())));
  g.sugar = p.total_degree();
  sort_and_combine(g, ord);
  make_primitive(g);
  return g;
}

Poly from_gpoly(const GPoly& g, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) terms.push_back({g.mon[i], Rational(g.coef[i])});
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace detail

using detail::from_gpoly;
using detail::to_gpoly;

PolyIdeal groebner_basis(const PolyIdeal& ideal, const MonomialOrder& order) {
  if (ideal.gb_order() && *ideal.gb_order() == order) return ideal;
  const auto& ring = ideal.ring();
  detail::CommutativeAlgebra alg{detail::make_term_order(order, ring->size(), false)};
  std::vector<detail::GPoly> input;
  for (const auto& g : ideal.generators()) input.push_back(to_gpoly(g, alg.order));
  auto gb = detail::groebner(std::move(input), alg);
  std::vector<Poly> out;
  for (const auto& g : gb) out.push_back(from_gpoly(g, ring).monic());
  // Keep the leading-monomial order of the engine.
  return PolyIdeal::from_groebner(ring, std::move(out), order);
}

namespace {

Poly reduce_by(const Poly& f, const PolyIdeal& gb) {
  const auto& ring = gb.ring();
  detail::CommutativeAlgebra alg{detail::make_term_order(*gb.gb_order(), ring->size(), false)};
  std::vector<detail::GPoly> basis;
  for (const auto& g : gb.generators()) basis.push_back(to_gpoly(g, alg.order));
  std::vector<const detail::GPoly*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  detail::GPoly r = detail::reduce(to_gpoly(f, alg.order), ptrs, alg, true);
  return from_gpoly(r, ring);
}

PolyIdeal ensure_gb(const PolyIdeal& ideal) {
  if (ideal.gb_order()) return ideal;
  return groebner_basis(ideal);
}

RingPtr extend_ring(const RingPtr& ring, const std::string& extra) {
  auto names = ring->names();
  std::string name = extra;
  while (ring->index(name)) name += "_";
  names.push_back(name);
  return make_ring(std::move(names));
}

std::vector<Poly> embed_all(const std::vector<Poly>& ps, const RingPtr& target) {
  std::vector<Poly> out;
  for (const auto& p : ps) out.push_back(p.embed(target));
  return out;
}

}  // namespace

Poly normal_form(const Poly& f, const PolyIdeal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw std::invalid_argument("ring mismatch in normal_form");
  PolyIdeal gb = ensure_gb(ideal);
  return reduce_by(f, gb);
}

bool contains(const PolyIdeal& ideal, const Poly& f) {
  if (f.is_zero()) return true;
  return normal_form(f, ideal).is_zero();
}

bool contains(const PolyIdeal& ideal, const PolyIdeal& sub) {
  PolyIdeal gb = ensure_gb(ideal);
  for (const auto& g : sub.generators())
    if (!contains(gb, g)) return false;
  return true;
}

bool ideals_equal(const PolyIdeal& a, const PolyIdeal& b) { return contains(a, b) && contains(b, a); }

bool is_unit_ideal(const PolyIdeal& ideal) {
  for (const auto& g : ideal.generators())
    if (g.is_constant() && !g.is_zero()) return true;
  PolyIdeal gb = ensure_gb(ideal);
  return gb.generators().size() == 1 && gb.generators()[0].is_constant();
}

PolyIdeal sum(const PolyIdeal& a, const PolyIdeal& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("ring mismatch in sum");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PolyIdeal(a.ring(), std::move(gens));
}

PolyIdeal eliminate(const PolyIdeal& ideal, const std::vector<std::size_t>& vars) {
  const auto& ring = ideal.ring();
  PolyIdeal gb = groebner_basis(ideal, MonomialOrder::elimination(ring->size(), vars));
  std::vector<Poly> keep;
  for (const auto& g : gb.generators()) {
    bool uses = false;
    for (auto v : vars) uses = uses || g.involves(v);
    if (!uses) keep.push_back(g);
  }
  return PolyIdeal(ring, std::move(keep));
}

PolyIdeal restrict_to(const PolyIdeal& ideal, const RingPtr& target) {
  return PolyIdeal(target, embed_all(ideal.generators(), target));
}

PolyIdeal embed(const PolyIdeal& ideal, const RingPtr& target) { return restrict_to(ideal, target); }

PolyIdeal saturate(const PolyIdeal& ideal, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  const auto& ring = ideal.ring();
  if (f.is_constant() || ideal.is_zero()) return ideal;
  RingPtr big = extend_ring(ring, "_sat");
  const std::size_t s = big->size() - 1;
  auto gens = embed_all(ideal.generators(), big);
  gens.push_back(Poly::constant(big, 1) - Poly::variable(big, s) * f.embed(big));
  PolyIdeal elim = eliminate(PolyIdeal(big, std::move(gens)), {s});
  return groebner_basis(restrict_to(elim, ring));
}

PolyIdeal saturate_ideal(const PolyIdeal& ideal, const PolyIdeal& by) {
  if (by.is_zero()) return ideal;
  std::vector<PolyIdeal> parts;
  for (const auto& g : by.generators()) parts.push_back(saturate(ideal, g));
  return intersect(parts);
}

PolyIdeal intersect(const PolyIdeal& a, const PolyIdeal& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("ring mismatch in intersect");
  if (a.is_zero() || b.is_zero()) return PolyIdeal(a.ring());
  if (is_unit_ideal(a)) return b;
  if (is_unit_ideal(b)) return a;
  RingPtr big = extend_ring(a.ring(), "_int");
  const std::size_t t = big->size() - 1;
  Poly tv = Poly::variable(big, t);
  Poly one_minus = Poly::constant(big, 1) - tv;
  std::vector<Poly> gens;
  for (const auto& g : a.generators()) gens.push_back(tv * g.embed(big));
  for (const auto& g : b.generators()) gens.push_back(one_minus * g.embed(big));
  PolyIdeal elim = eliminate(PolyIdeal(big, std::move(gens)), {t});
  return groebner_basis(restrict_to(elim, a.ring()));
}

PolyIdeal intersect(const std::vector<PolyIdeal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  PolyIdeal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

PolyIdeal colon(const PolyIdeal& ideal, const Poly& f) {
  if (f.is_zero()) return PolyIdeal(ideal.ring(), {Poly::constant(ideal.ring(), 1)});
  // I : f = (I cap <f>) / f
  PolyIdeal inter = intersect(ideal, PolyIdeal(ideal.ring(), {f}));
  std::vector<Poly> gens;
  for (const auto& g : inter.generators()) {
    auto q = exact_divide(g, f);
    if (!q) throw std::logic_error("colon: intersection generator not divisible");
    gens.push_back(*q);
  }
  return groebner_basis(PolyIdeal(ideal.ring(), std::move(gens)));
}

int dimension(const PolyIdeal& ideal) {
  const std::size_t nv = ideal.ring()->size();
  PolyIdeal gb = ensure_gb(ideal);
  if (gb.is_zero()) return static_cast<int>(nv);
  std::vector<Monomial> lms;
  for (const auto& g : gb.generators()) {
    if (g.is_constant()) return -1;
    // Leading monomial under the basis order.
    lms.push_back(g.leading().mon);
  }
  if (gb.gb_order() && !(*gb.gb_order() == MonomialOrder::grevlex())) {
    detail::TermOrder ord = detail::make_term_order(*gb.gb_order(), nv, false);
    lms.clear();
    for (const auto& g : gb.generators()) lms.push_back(to_gpoly(g, ord).mon[0]);
  }
  // Largest variable set S such that no leading monomial is supported in S.
  int best = 0;
  const std::size_t total = std::size_t{1} << nv;
  for (std::size_t mask = 0; mask < total; ++mask) {
    int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lms) {
      bool inside = true;
      for (std::size_t v = 0; v < nv && inside; ++v)
        if (m[v] && !(mask >> v & 1)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

Poly weight_initial_form(const Poly& f, const RatVector& weight) {
  if (f.is_zero()) return f;
  std::optional<Rational> top;
  for (const auto& t : f.terms()) {
    Rational w = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) w += weight[i] * t.mon[i];
    if (!top || w > *top) top = w;
  }
  std::vector<Term> keep;
  for (const auto& t : f.terms()) {
    Rational w = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) w += weight[i] * t.mon[i];
    if (w == *top) keep.push_back(t);
  }
  return Poly::from_terms(f.ring(), std::move(keep));
}

PolyIdeal initial_ideal(const PolyIdeal& ideal, const RatVector& weight) {
  PolyIdeal gb = groebner_basis(ideal, MonomialOrder::weighted(weight));
  std::vector<Poly> forms;
  for (const auto& g : gb.generators()) forms.push_back(weight_initial_form(g, weight));
  return groebner_basis(PolyIdeal(ideal.ring(), std::move(forms)));
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const auto& ring = f.ring();
  Poly q(ring), r = f;
  const Term& lg = g.leading();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lg.mon.divides(lr.mon)) return std::nullopt;
    Poly t = Poly::term(ring, lr.mon / lg.mon, lr.coef / lg.coef);
    q += t;
    r -= t * g;
  }
  return q;
}

Poly multivariate_gcd(const Poly& f, const Poly& g) {
  if (!same_ring(f.ring(), g.ring())) throw std::invalid_argument("ring mismatch in gcd");
  const auto& ring = f.ring();
  if (f.is_zero()) return g.primitive();
  if (g.is_zero()) return f.primitive();
  if (f.is_constant() || g.is_constant()) return Poly::constant(ring, 1);

  // Monomial content of each side splits off cheaply.
  auto monomial_content = [](const Poly& p) {
    Monomial m = p.terms().front().mon;
    for (const auto& t : p.terms()) m = gcd(m, t.mon);
    return m;
  };
  if (f.is_monomial() || g.is_monomial()) {
    Monomial m = gcd(monomial_content(f), monomial_content(g));
    return Poly::term(ring, m, 1);
  }
  if (auto q = exact_divide(f, g)) return g.primitive();
  if (auto q = exact_divide(g, f)) return f.primitive();
  PolyIdeal inter = intersect(PolyIdeal(ring, {f}), PolyIdeal(ring, {g}));
  if (inter.generators().size() != 1) throw std::logic_error("intersection of principal ideals is not principal");
  auto d = exact_divide(f * g, inter.generators()[0]);
  if (!d) throw std::logic_error("gcd: lcm does not divide the product");
  return d->primitive();
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) return f;
  if (f.is_constant()) return Poly::constant(f.ring(), 1);
  Poly g = f;
  for (std::size_t v = 0; v < f.ring()->size(); ++v) {
    if (!f.involves(v)) continue;
    g = multivariate_gcd(g, f.derivative(v));
    if (g.is_constant()) break;
  }
  auto q = exact_divide(f, g);
  if (!q) throw std::logic_error("squarefree_part: gcd does not divide");
  return q->primitive();
}

Poly squarefree_product(const std::vector<Poly>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  Poly prod = Poly::constant(factors.front().ring(), 1);
  for (const auto& f : factors) prod = prod * f;
  return squarefree_part(prod);
}

Poly divisorial_part(const PolyIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("divisorial part of the zero ideal");
  PolyIdeal gb = groebner_basis(ideal);
  Poly g(ideal.ring());
  for (const auto& p : gb.generators()) {
    g = multivariate_gcd(g, p);
    if (g.is_constant()) return Poly::constant(ideal.ring(), 1);
  }
  return squarefree_part(g);
}

bool radical_membership(const Poly& f, const PolyIdeal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw std::invalid_argument("ring mismatch in radical membership");
  if (f.is_zero()) return true;
  if (contains(ideal, f)) return true;
  RingPtr big = extend_ring(ideal.ring(), "_rad");
  const std::size_t y = big->size() - 1;
  auto gens = embed_all(ideal.generators(), big);
  gens.push_back(Poly::constant(big, 1) - Poly::variable(big, y) * f.embed(big));
  return is_unit_ideal(PolyIdeal(big, std::move(gens)));
}

bool same_radical(const PolyIdeal& a, const PolyIdeal& b) {
  PolyIdeal ga = groebner_basis(a), gb = groebner_basis(b);
  for (const auto& g : a.generators())
    if (!radical_membership(g, gb)) return false;
  for (const auto& g : b.generators())
    if (!radical_membership(g, ga)) return false;
  return true;
}

}  // namespace bdm

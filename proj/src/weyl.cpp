#include "bdm/weyl.hpp"

#include <algorithm>

#include "conversions.hpp"
#include "expr_parser.hpp"
#include "groebner_engine.hpp"

namespace bdm {

RingPtr weyl_ring(std::size_t n) {
  auto names = indexed_names("x", n);
  auto d = indexed_names("d", n);
  names.insert(names.end(), d.begin(), d.end());
  return make_ring(std::move(names));
}

RingPtr gr_ring(std::size_t n) {
  auto names = indexed_names("x", n);
  auto X = indexed_names("X", n);
  names.insert(names.end(), X.begin(), X.end());
  return make_ring(std::move(names));
}

RingPtr x_ring(std::size_t n) { return make_ring(indexed_names("x", n)); }
RingPtr d_ring(std::size_t n) { return make_ring(indexed_names("d", n)); }

WeylElement::WeylElement(std::size_t n) : n_(n), p_(weyl_ring(n)) {}

WeylElement::WeylElement(std::size_t n, const Poly& normal_ordered)
    : n_(n), p_(normal_ordered.embed(weyl_ring(n))) {}

WeylElement WeylElement::constant(std::size_t n, const Rational& c) {
  return WeylElement(n, Poly::constant(weyl_ring(n), c));
}

WeylElement WeylElement::x(std::size_t n, std::size_t i) {
  return WeylElement(n, Poly::variable(weyl_ring(n), i));
}

WeylElement WeylElement::d(std::size_t n, std::size_t i) {
  return WeylElement(n, Poly::variable(weyl_ring(n), n + i));
}

WeylElement WeylElement::operator-() const {
  WeylElement r = *this;
  r.p_ = -r.p_;
  return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("Weyl elements in different algebras");
  p_ += o.p_;
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("Weyl elements in different algebras");
  p_ -= o.p_;
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Weyl elements in different algebras");
  const std::size_t n = a.n_;
  std::vector<Term> out;
  std::vector<unsigned> k(n), kmax(n);
  for (const auto& s : a.p_.terms()) {
    for (const auto& t : b.p_.terms()) {
      // x^u1 d^v1 x^u2 d^v2 = sum_k prod C(v1,k)(u2)_k x^(u1+u2-k) d^(v1+v2-k)
      for (std::size_t i = 0; i < n; ++i) kmax[i] = std::min<unsigned>(s.mon[n + i], t.mon[i]);
      std::fill(k.begin(), k.end(), 0u);
      for (;;) {
        Rational c = s.coef * t.coef;
        Monomial m;
        for (std::size_t i = 0; i < n; ++i) {
          const unsigned v1 = s.mon[n + i], u2 = t.mon[i];
          if (k[i]) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), v1, k[i]);
            c *= binom;
            for (unsigned f = 0; f < k[i]; ++f) c *= (u2 - f);
          }
          m.set(i, s.mon[i] + u2 - k[i]);
          m.set(n + i, v1 - k[i] + t.mon[n + i]);
        }
        out.push_back({m, c});
        std::size_t i = 0;
        while (i < n) {
          if (k[i] < kmax[i]) {
            ++k[i];
            break;
          }
          k[i] = 0;
          ++i;
        }
        if (i == n) break;
      }
    }
  }
  return WeylElement(n, Poly::from_terms(a.p_.ring(), std::move(out)));
}

WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b) { return a * b; }

namespace {

struct WeylCtx {
  using Elem = WeylElement;
  std::size_t n;
  WeylParseOptions opts;

  WeylElement constant(const Rational& c) const { return WeylElement::constant(n, c); }
  std::optional<WeylElement> variable(const std::string& name) const {
    if (name.size() < 2) return std::nullopt;
    const char kind = name[0];
    const std::string digits = name.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        digits[0] == '0')
      return std::nullopt;
    const std::size_t i = std::stoul(digits);
    if (i < 1 || i > n) return std::nullopt;
    if (kind == 'x') return WeylElement::x(n, i - 1);
    if (kind == 'd') return WeylElement::d(n, i - 1);
    if (kind == 't' && opts.theta_sugar) return WeylElement::x(n, i - 1) * WeylElement::d(n, i - 1);
    return std::nullopt;
  }
  WeylElement add(const WeylElement& a, const WeylElement& b) const { return a + b; }
  WeylElement neg(const WeylElement& a) const { return -a; }
  WeylElement mul(const WeylElement& a, const WeylElement& b) const { return a * b; }
  WeylElement pow(const WeylElement& a, unsigned k) const {
    WeylElement r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
  }
};

}  // namespace

WeylElement parse_weyl(const std::string& text, std::size_t n, WeylParseOptions opts) {
  WeylCtx ctx{n, opts};
  return detail::ExprParser<WeylCtx>(text, ctx).parse();
}

ProjectiveWeight::ProjectiveWeight(RatVector lx, RatVector ld) : lx_(std::move(lx)), ld_(std::move(ld)) {
  if (lx_.size() != ld_.size() || lx_.empty())
    throw std::invalid_argument("weight halves must have the same positive length");
  c_ = lx_[0] + ld_[0];
  for (std::size_t i = 0; i < lx_.size(); ++i)
    if (lx_[i] + ld_[i] != c_) throw std::invalid_argument("L_x + L_d is not a constant vector");
  if (c_ <= 0) throw std::invalid_argument("L_x + L_d must be positive");
}

ProjectiveWeight ProjectiveWeight::order_filtration(std::size_t n) {
  return ProjectiveWeight(RatVector(n, Rational(0)), RatVector(n, Rational(1)));
}

RatVector ProjectiveWeight::full() const {
  RatVector w = lx_;
  w.insert(w.end(), ld_.begin(), ld_.end());
  return w;
}

bool ProjectiveWeight::has_negative() const {
  for (const auto& q : full())
    if (q < 0) return true;
  return false;
}

std::string ProjectiveWeight::to_string() const {
  std::string s = "(";
  auto w = full();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += i == lx_.size() ? "; " : ",";
    s += bdm::to_string(w[i]);
  }
  return s + ")";
}

WeylIdeal::WeylIdeal(std::size_t n, std::vector<WeylElement> generators) : n_(n) {
  for (auto& g : generators) {
    if (g.n() != n) throw std::invalid_argument("generator has the wrong number of variables");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

std::vector<std::string> WeylIdeal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

WeylIdeal parse_weyl_ideal(const std::vector<std::string>& generators, std::size_t n,
                           WeylParseOptions opts) {
  std::vector<WeylElement> gens;
  for (const auto& g : generators) gens.push_back(parse_weyl(g, n, opts));
  return WeylIdeal(n, std::move(gens));
}

namespace {

Rational term_weight(const Monomial& m, const RatVector& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (m[i]) s += w[i] * m[i];
  return s;
}

}  // namespace

Rational l_degree(const WeylElement& p, const ProjectiveWeight& L) {
  if (p.is_zero()) throw std::invalid_argument("L-degree of zero");
  const RatVector w = L.full();
  std::optional<Rational> top;
  for (const auto& t : p.normal_form().terms()) {
    Rational v = term_weight(t.mon, w);
    if (!top || v > *top) top = v;
  }
  return *top;
}

Poly initial_form(const WeylElement& p, const ProjectiveWeight& L) {
  if (p.n() != L.n()) throw std::invalid_argument("weight has the wrong length");
  const Rational top = l_degree(p, L);
  const RatVector w = L.full();
  std::vector<Term> keep;
  for (const auto& t : p.normal_form().terms())
    if (term_weight(t.mon, w) == top) keep.push_back(t);
  // Slots coincide: x_i -> x_i, d_i -> X_i.
  return Poly::from_terms(gr_ring(p.n()), std::move(keep));
}

WeylIdeal left_groebner(const WeylIdeal& I, const ProjectiveWeight& L) {
  const std::size_t n = I.n();
  if (L.n() != n) throw std::invalid_argument("weight has the wrong length");
  const RingPtr ring = weyl_ring(n);
  const bool homog = L.has_negative();
  RatVector w = L.full();
  std::size_t nvars = 2 * n;
  if (homog) {
    w.push_back(0);
    ++nvars;
  }
  detail::WeylAlgebra alg{detail::make_term_order(MonomialOrder::weighted(w), nvars, true), n, homog};

  std::vector<detail::GPoly> input;
  for (const auto& g : I.generators()) {
    Poly p = g.normal_form();
    std::vector<Term> terms = p.terms();
    if (homog) {
      const unsigned deg = p.total_degree();
      for (auto& t : terms) t.mon.set(2 * n, deg - t.mon.degree());
    }
    detail::GPoly gp;
    Integer den = 1;
    for (const auto& t : terms) den = lcm(den, Integer(t.coef.get_den()));
    for (const auto& t : terms)
      gp.push(t.mon, alg.order.key(t.mon), Integer(t.coef.get_num() * (den / t.coef.get_den())));
    gp.sugar = p.total_degree();
    detail::sort_and_combine(gp, alg.order);
    detail::make_primitive(gp);
    input.push_back(std::move(gp));
  }
  auto gb = detail::groebner(std::move(input), alg);

  std::vector<WeylElement> out;
  for (auto& g : gb) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < g.size(); ++i) {
      Monomial m = g.mon[i];
      if (homog) m.set(2 * n, 0);
      terms.push_back({m, Rational(g.coef[i])});
    }
    Poly p = Poly::from_terms(ring, std::move(terms));
    if (!p.is_zero()) out.emplace_back(n, p.primitive());
  }
  return WeylIdeal(n, std::move(out));
}

PolyIdeal gr_ideal(const WeylIdeal& I, const ProjectiveWeight& L) {
  WeylIdeal gb = left_groebner(I, L);
  std::vector<Poly> forms;
  for (const auto& g : gb.generators()) forms.push_back(initial_form(g, L));
  return groebner_basis(PolyIdeal(gr_ring(I.n()), std::move(forms)));
}

PolyIdeal char_variety(const WeylIdeal& I, const ProjectiveWeight& L) { return gr_ideal(I, L); }

HolonomicityReport is_L_holonomic(const WeylIdeal& I, const ProjectiveWeight& L) {
  HolonomicityReport r;
  r.dimension = dimension(gr_ideal(I, L));
  r.holonomic = r.dimension == -1 || r.dimension == static_cast<int>(I.n());
  return r;
}

PolyIdeal singular_locus_from_gr(const PolyIdeal& grF, std::size_t n) {
  // (gr : <X>^inf) cap C[x] = intersection over i of (gr : X_i^inf) cap C[x].
  auto names = grF.ring()->names();
  names.push_back("_y");
  RingPtr big = make_ring(names);
  const std::size_t y = 2 * n;
  std::vector<std::size_t> elim;
  for (std::size_t i = n; i <= 2 * n; ++i) elim.push_back(i);
  std::vector<Poly> base;
  for (const auto& g : grF.generators()) base.push_back(g.embed(big));

  const RingPtr xr = x_ring(n);
  std::optional<PolyIdeal> acc;
  for (std::size_t i = 0; i < n; ++i) {
    auto gens = base;
    gens.push_back(Poly::constant(big, 1) - Poly::variable(big, y) * Poly::variable(big, n + i));
    PolyIdeal part = restrict_to(eliminate(PolyIdeal(big, std::move(gens)), elim), xr);
    if (part.is_zero()) return PolyIdeal(xr);
    acc = acc ? intersect(*acc, part) : groebner_basis(part);
  }
  if (!acc) return PolyIdeal(xr, {Poly::constant(xr, 1)});
  return groebner_basis(*acc);
}

PolyIdeal singular_locus(const WeylIdeal& I) {
  return singular_locus_from_gr(gr_ideal(I, ProjectiveWeight::order_filtration(I.n())), I.n());
}

bool has_finite_rank(const WeylIdeal& I) { return !singular_locus(I).is_zero(); }

}  // namespace bdm

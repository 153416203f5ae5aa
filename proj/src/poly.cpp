#include "bdm/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "expr_parser.hpp"

namespace bdm {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
}

std::optional<std::size_t> Ring::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

namespace {

bool term_greater(const Term& a, const Term& b, std::size_t nvars) {
  return grevlex_compare(a.mon, b.mon, nvars) > 0;
}

void check_ring(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

void Poly::normalize() {
  const std::size_t nv = ring_->size();
  std::sort(terms_.begin(), terms_.end(),
            [nv](const Term& a, const Term& b) { return term_greater(a, b, nv); });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mon == t.mon) out.back().coef += t.coef;
    else out.push_back(std::move(t));
    if (!out.empty() && out.back().coef == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial(), c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->size()) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.set(i, 1);
  return term(std::move(ring), m, 1);
}

Poly Poly::term(RingPtr ring, const Monomial& m, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mon[var]);
  return d;
}

bool Poly::involves(std::size_t var) const { return degree_in(var) > 0; }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(*this, o);
  const std::size_t nv = ring_->size();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && term_greater(terms_[i], o.terms_[j], nv))) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || term_greater(o.terms_[j], terms_[i], nv)) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coef + o.terms_[j].coef;
      if (c != 0) out.push_back({terms_[i].mon, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_ring(a, b);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.mon * t.mon, s.coef * t.coef});
  return Poly::from_terms(a.ring_, std::move(out));
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mon[var];
    if (e == 0) continue;
    Monomial m = t.mon;
    m.set(var, e - 1);
    out.push_back({m, t.coef * e});
  }
  return from_terms(ring_, std::move(out));
}

Poly Poly::map_to(const RingPtr& target, const std::vector<std::size_t>& map) const {
  if (map.size() != ring_->size()) throw std::invalid_argument("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (!t.mon[i]) continue;
      if (map[i] >= target->size()) throw std::invalid_argument("variable map out of range");
      m.set(map[i], m[map[i]] + t.mon[i]);
    }
    out.push_back({m, t.coef});
  }
  return from_terms(target, std::move(out));
}

Poly Poly::embed(const RingPtr& target) const {
  std::vector<std::size_t> map(ring_->size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    auto j = target->index(ring_->name(i));
    if (!j) {
      if (involves(i))
        throw std::invalid_argument("variable '" + ring_->name(i) + "' missing from target ring");
      map[i] = 0;
    } else {
      map[i] = *j;
    }
  }
  return map_to(target, map);
}

Poly Poly::scale_variables(const RatVector& factors) const {
  std::vector<Term> out = terms_;
  for (auto& t : out)
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (unsigned k = 0; k < t.mon[i]; ++k) t.coef *= factors[i];
  return from_terms(ring_, std::move(out));
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  check_ring(*this, value);
  Poly result(ring_);
  std::map<unsigned, Poly> powers;
  for (const auto& t : terms_) {
    unsigned e = t.mon[var];
    Monomial m = t.mon;
    m.set(var, 0);
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
    result += term(ring_, m, t.coef) * it->second;
  }
  return result;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  Integer den = 1, num = 0;
  for (const auto& t : terms_) {
    den = lcm(den, Integer(t.coef.get_den()));
    num = gcd(num, Integer(t.coef.get_num()));
  }
  Rational f(den, num);
  f.canonicalize();
  if (terms_.front().coef < 0) f = -f;
  Poly p = *this;
  return p *= f;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Poly p = *this;
  return p *= 1 / terms_.front().coef;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (c < 0) {
      s += "-";
      c = -c;
    } else if (!first) {
      s += "+";
    }
    first = false;
    if (t.mon.is_one()) {
      s += bdm::to_string(c);
    } else {
      if (c != 1) s += bdm::to_string(c) + "*";
      s += monomial_to_string(t.mon, *ring_);
    }
  }
  return s;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mon == b.terms_[i].mon) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

namespace {

struct PolyCtx {
  using Elem = Poly;
  RingPtr ring;
  Poly constant(const Rational& c) const { return Poly::constant(ring, c); }
  std::optional<Poly> variable(const std::string& name) const {
    auto i = ring->index(name);
    if (!i) return std::nullopt;
    return Poly::variable(ring, *i);
  }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly neg(const Poly& a) const { return -a; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly pow(const Poly& a, unsigned k) const { return a.pow(k); }
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  PolyCtx ctx{ring};
  return detail::ExprParser<PolyCtx>(text, ctx).parse();
}

}  // namespace bdm

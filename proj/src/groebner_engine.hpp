#pragma once

// Buchberger engine over Q with integer (fraction-free) coefficients.
// Parameterized by an algebra policy supplying the monomial order and left
// multiplication of an element by a monomial; the same code drives
// commutative polynomial rings and the (homogenized) Weyl algebra.

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bdm/exact.hpp"
#include "bdm/monomial.hpp"

namespace bdm::detail {

// Integer weight refined by grevlex over the first nvars variables.
struct TermOrder {
  std::vector<std::int64_t> weight;
  std::size_t nvars = 0;

  std::int64_t key(const Monomial& m) const {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) k += weight[i] * m[i];
    return k;
  }
  int compare(const Monomial& a, std::int64_t ka, const Monomial& b, std::int64_t kb) const {
    if (ka != kb) return ka < kb ? -1 : 1;
    return grevlex_compare(a, b, nvars);
  }
  int compare(const Monomial& a, const Monomial& b) const { return compare(a, key(a), b, key(b)); }
};

// Terms sorted decreasingly; coefficients nonzero integers.
struct GPoly {
  std::vector<Monomial> mon;
  std::vector<std::int64_t> key;
  std::vector<Integer> coef;
  unsigned sugar = 0;

  bool empty() const { return mon.empty(); }
  std::size_t size() const { return mon.size(); }
  void push(const Monomial& m, std::int64_t k, Integer c) {
    mon.push_back(m);
    key.push_back(k);
    coef.push_back(std::move(c));
  }
  bool is_constant() const { return mon.size() == 1 && mon[0].is_one(); }
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& m : mon) d = std::max(d, m.degree());
    return d;
  }
};

inline void sort_and_combine(GPoly& p, const TermOrder& ord) {
  std::vector<std::size_t> idx(p.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ord.compare(p.mon[a], p.key[a], p.mon[b], p.key[b]) > 0;
  });
  GPoly out;
  out.sugar = p.sugar;
  for (std::size_t i : idx) {
    if (!out.empty() && out.mon.back() == p.mon[i]) {
      out.coef.back() += p.coef[i];
      if (out.coef.back() == 0) {
        out.mon.pop_back();
        out.key.pop_back();
        out.coef.pop_back();
      }
    } else if (p.coef[i] != 0) {
      out.push(p.mon[i], p.key[i], std::move(p.coef[i]));
    }
  }
  p = std::move(out);
}

inline Integer content(const GPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coef) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

inline void make_primitive(GPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.coef[0] < 0) g = -g;
  if (g != 1)
    for (auto& c : p.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// a*p - b*q for sorted inputs.
inline GPoly combine(const Integer& a, const GPoly& p, const Integer& b, const GPoly& q,
                     const TermOrder& ord) {
  GPoly out;
  out.mon.reserve(p.size() + q.size());
  out.key.reserve(p.size() + q.size());
  out.coef.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  const bool a_one = a == 1;
  while (i < p.size() || j < q.size()) {
    int c;
    if (i == p.size()) c = -1;
    else if (j == q.size()) c = 1;
    else c = ord.compare(p.mon[i], p.key[i], q.mon[j], q.key[j]);
    if (c > 0) {
      out.push(p.mon[i], p.key[i], a_one ? p.coef[i] : Integer(a * p.coef[i]));
      ++i;
    } else if (c < 0) {
      out.push(q.mon[j], q.key[j], Integer(-b * q.coef[j]));
      ++j;
    } else {
      Integer v = a * p.coef[i] - b * q.coef[j];
      if (v != 0) out.push(p.mon[i], p.key[i], std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

struct CommutativeAlgebra {
  static constexpr bool commutative = true;
  TermOrder order;

  GPoly left_mul(const Monomial& m, const GPoly& g) const {
    GPoly out;
    const std::int64_t km = order.key(m);
    out.mon.reserve(g.size());
    out.key.reserve(g.size());
    out.coef = g.coef;
    for (std::size_t i = 0; i < g.size(); ++i) {
      out.mon.push_back(m * g.mon[i]);
      out.key.push_back(km + g.key[i]);
    }
    out.sugar = g.sugar + m.degree();
    return out;
  }
};

// Weyl algebra in variables x_1..x_n, d_1..d_n (monomial slots 0..2n-1),
// optionally homogenized with a central h in slot 2n and d_i x_i = x_i d_i + h^2.
struct WeylAlgebra {
  static constexpr bool commutative = false;
  TermOrder order;
  std::size_t n = 0;
  bool homogenized = false;

  GPoly left_mul(const Monomial& m, const GPoly& g) const {
    bool needs_expansion = false;
    for (std::size_t i = 0; i < n && !needs_expansion; ++i) {
      if (!m[n + i]) continue;
      for (const auto& t : g.mon)
        if (t[i]) {
          needs_expansion = true;
          break;
        }
    }
    if (!needs_expansion) {
      GPoly out;
      const std::int64_t km = order.key(m);
      out.coef = g.coef;
      for (std::size_t i = 0; i < g.size(); ++i) {
        out.mon.push_back(m * g.mon[i]);
        out.key.push_back(km + g.key[i]);
      }
      out.sugar = g.sugar + m.degree();
      return out;
    }

    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    std::vector<unsigned> k(n);
    for (std::size_t t = 0; t < g.size(); ++t) {
      const Monomial& u = g.mon[t];
      std::vector<unsigned> kmax(n);
      for (std::size_t i = 0; i < n; ++i) kmax[i] = std::min<unsigned>(m[n + i], u[i]);
      std::fill(k.begin(), k.end(), 0u);
      for (;;) {
        // d^beta x^u = sum_k prod_i C(beta_i,k_i) (u_i)_(k_i) x^(u-k) d^(beta-k) [h^(2|k|)]
        Integer c = g.coef[t];
        Monomial r;
        unsigned ksum = 0;
        for (std::size_t i = 0; i < n; ++i) {
          const unsigned b = m[n + i], e = u[i];
          if (k[i]) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), b, k[i]);
            c *= binom;
            for (unsigned f = 0; f < k[i]; ++f) c *= (e - f);
          }
          r.set(i, m[i] + e - k[i]);
          r.set(n + i, b - k[i] + u[n + i]);
          ksum += k[i];
        }
        if (homogenized) r.set(2 * n, m[2 * n] + u[2 * n] + 2 * ksum);
        auto [it, inserted] = acc.try_emplace(r, c);
        if (!inserted) it->second += c;
        // next k
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
    GPoly out;
    for (auto& [mon, c] : acc)
      if (c != 0) out.push(mon, order.key(mon), std::move(c));
    out.sugar = g.sugar + m.degree();
    sort_and_combine(out, order);
    return out;
  }
};

// Divides p and r by the gcd of all their coefficients.
inline void remove_common_content(GPoly& p, GPoly& r) {
  Integer h = gcd(content(p), content(r));
  if (h > 1) {
    for (auto& c : p.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), h.get_mpz_t());
    for (auto& c : r.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), h.get_mpz_t());
  }
}

template <class Alg>
const GPoly* find_reducer(const Monomial& m, const std::vector<const GPoly*>& basis) {
  for (const GPoly* g : basis)
    if (g->mon[0].divides(m)) return g;
  return nullptr;
}

// Normal form of p. With full == false only the leading term is reduced.
template <class Alg>
GPoly reduce(GPoly p, const std::vector<const GPoly*>& basis, const Alg& alg, bool full) {
  GPoly r;
  r.sugar = p.sugar;
  unsigned steps = 0;
  while (!p.empty()) {
    const GPoly* g = find_reducer<Alg>(p.mon[0], basis);
    if (!g) {
      if (!full) {
        for (std::size_t i = 0; i < p.size(); ++i) r.push(p.mon[i], p.key[i], std::move(p.coef[i]));
        break;
      }
      r.push(p.mon[0], p.key[0], std::move(p.coef[0]));
      p.mon.erase(p.mon.begin());
      p.key.erase(p.key.begin());
      p.coef.erase(p.coef.begin());
      continue;
    }
    const Monomial mult = p.mon[0] / g->mon[0];
    Integer gg = gcd(p.coef[0], g->coef[0]);
    Integer a = g->coef[0] / gg;
    Integer b = p.coef[0] / gg;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    GPoly q = alg.left_mul(mult, *g);
    unsigned sugar = std::max(p.sugar, q.sugar);
    p = combine(a, p, b, q, alg.order);
    p.sugar = sugar;
    r.sugar = std::max(r.sugar, sugar);
    if (a != 1) {
      for (auto& c : r.coef) c *= a;
      if (++steps % 4 == 0 || r.empty()) remove_common_content(p, r);
    }
  }
  make_primitive(r);
  return r;
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  std::int64_t key;
  unsigned sugar;
};

template <class Alg>
class Buchberger {
 public:
  explicit Buchberger(const Alg& alg) : alg_(alg) {}

  std::vector<GPoly> run(std::vector<GPoly> input) {
    for (auto& f : input) {
      if (f.empty()) continue;
      if (f.sugar == 0) f.sugar = f.degree();
      std::vector<const GPoly*> cur = active();
      GPoly r = reduce(std::move(f), cur, alg_, true);
      if (r.empty()) continue;
      if (r.is_constant()) return unit(r);
      add(std::move(r));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t t = 1; t < pairs_.size(); ++t) {
        const auto& a = pairs_[t];
        const auto& b = pairs_[best];
        if (a.sugar < b.sugar ||
            (a.sugar == b.sugar && alg_.order.compare(a.lcm, a.key, b.lcm, b.key) < 0))
          best = t;
      }
      CriticalPair cp = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      pending_.erase({cp.i, cp.j});
      if (chain_criterion(cp)) continue;

      GPoly s = spoly(cp);
      std::vector<const GPoly*> cur = active();
      GPoly r = reduce(std::move(s), cur, alg_, true);
      if (r.empty()) continue;
      if (r.is_constant()) return unit(r);
      add(std::move(r));
    }
    return minimal_reduced();
  }

 private:
  std::vector<GPoly> unit(const GPoly& c) {
    GPoly one;
    one.push(Monomial(), 0, Integer(1));
    (void)c;
    return {one};
  }

  std::vector<const GPoly*> active() const {
    std::vector<const GPoly*> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!redundant_[i]) out.push_back(&basis_[i]);
    return out;
  }

  void add(GPoly g) {
    const std::size_t idx = basis_.size();
    basis_.push_back(std::move(g));
    redundant_.push_back(false);
    const Monomial& lm = basis_[idx].mon[0];
    for (std::size_t i = 0; i < idx; ++i) {
      const Monomial& li = basis_[i].mon[0];
      if (Alg::commutative && li.coprime(lm)) continue;  // product criterion
      Monomial l = lcm(li, lm);
      unsigned sugar = std::max(basis_[i].sugar + (l / li).degree(),
                                basis_[idx].sugar + (l / lm).degree());
      pairs_.push_back({i, idx, l, alg_.order.key(l), sugar});
      pending_.insert({i, idx});
    }
    // Older elements whose leading monomial is a multiple stop acting as
    // reducers; their pairs stay queued.
    for (std::size_t i = 0; i < idx; ++i)
      if (!redundant_[i] && lm.divides(basis_[i].mon[0])) redundant_[i] = true;
    // Keep the active reducers tail-reduced; this curbs coefficient growth.
    for (std::size_t i = 0; i < idx; ++i) {
      if (redundant_[i]) continue;
      const GPoly& gi = basis_[i];
      bool hit = false;
      for (std::size_t t = 1; t < gi.size() && !hit; ++t) hit = lm.divides(gi.mon[t]);
      if (!hit) continue;
      std::vector<const GPoly*> others;
      for (std::size_t j = 0; j <= idx; ++j)
        if (j != i && !redundant_[j]) others.push_back(&basis_[j]);
      GPoly r = reduce_tail(gi, others);
      r.sugar = gi.sugar;
      basis_[i] = std::move(r);
    }
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return pending_.count({a, b}) > 0;
  }

  bool chain_criterion(const CriticalPair& cp) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == cp.i || k == cp.j) continue;
      if (!basis_[k].mon[0].divides(cp.lcm)) continue;
      if (!is_pending(cp.i, k) && !is_pending(cp.j, k)) return true;
    }
    return false;
  }

  GPoly spoly(const CriticalPair& cp) const {
    const GPoly& f = basis_[cp.i];
    const GPoly& g = basis_[cp.j];
    GPoly pf = alg_.left_mul(cp.lcm / f.mon[0], f);
    GPoly pg = alg_.left_mul(cp.lcm / g.mon[0], g);
    Integer gg = gcd(f.coef[0], g.coef[0]);
    Integer a = g.coef[0] / gg;
    Integer b = f.coef[0] / gg;
    GPoly s = combine(a, pf, b, pg, alg_.order);
    s.sugar = cp.sugar;
    make_primitive(s);
    return s;
  }

  std::vector<GPoly> minimal_reduced() const {
    std::vector<const GPoly*> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool drop = false;
      for (std::size_t j = 0; j < basis_.size() && !drop; ++j) {
        if (i == j) continue;
        if (basis_[j].mon[0].divides(basis_[i].mon[0]) &&
            (!(basis_[j].mon[0] == basis_[i].mon[0]) || j < i))
          drop = true;
      }
      if (!drop) keep.push_back(&basis_[i]);
    }
    std::vector<GPoly> out;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      std::vector<const GPoly*> others;
      for (std::size_t j = 0; j < keep.size(); ++j)
        if (j != i) others.push_back(keep[j]);
      out.push_back(reduce_tail(*keep[i], others));
    }
    std::sort(out.begin(), out.end(), [&](const GPoly& a, const GPoly& b) {
      return alg_.order.compare(a.mon[0], a.key[0], b.mon[0], b.key[0]) < 0;
    });
    return out;
  }

  // Reduces every non-leading term of g; the leading term is irreducible.
  GPoly reduce_tail(const GPoly& g, const std::vector<const GPoly*>& others) const {
    GPoly r;
    r.push(g.mon[0], g.key[0], g.coef[0]);
    GPoly rest;
    for (std::size_t t = 1; t < g.size(); ++t) rest.push(g.mon[t], g.key[t], g.coef[t]);
    while (!rest.empty()) {
      const GPoly* h = find_reducer<Alg>(rest.mon[0], others);
      if (!h) {
        r.push(rest.mon[0], rest.key[0], rest.coef[0]);
        rest.mon.erase(rest.mon.begin());
        rest.key.erase(rest.key.begin());
        rest.coef.erase(rest.coef.begin());
        continue;
      }
      const Monomial mult = rest.mon[0] / h->mon[0];
      Integer gg = gcd(rest.coef[0], h->coef[0]);
      Integer a = h->coef[0] / gg;
      Integer b = rest.coef[0] / gg;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      GPoly q = alg_.left_mul(mult, *h);
      rest = combine(a, rest, b, q, alg_.order);
      if (a != 1) {
        for (auto& c : r.coef) c *= a;
        remove_common_content(rest, r);
      }
    }
    make_primitive(r);
    return r;
  }

  const Alg& alg_;
  std::vector<GPoly> basis_;
  std::vector<bool> redundant_;
  std::vector<CriticalPair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

template <class Alg>
std::vector<GPoly> groebner(std::vector<GPoly> input, const Alg& alg) {
  return Buchberger<Alg>(alg).run(std::move(input));
}

}  // namespace bdm::detail

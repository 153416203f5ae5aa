#include "bdm/binom.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bdm {

namespace {

IntVector exponents(const Monomial& m, const std::vector<std::size_t>& vars) {
  IntVector v;
  for (auto i : vars) v.emplace_back(static_cast<unsigned long>(m[i]));
  return v;
}

std::vector<std::size_t> all_vars(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

Poly monomial(const RingPtr& ring, const Monomial& m) { return Poly::term(ring, m, 1); }

Poly product_of(const RingPtr& ring, const std::vector<std::size_t>& vars) {
  Monomial m;
  for (auto v : vars) m.set(v, m[v] + 1);
  return monomial(ring, m);
}

Rational rpow(const Rational& base, const Integer& e) {
  if (!e.fits_slong_p()) throw std::overflow_error("character exponent too large");
  long k = e.get_si();
  Rational b = base;
  if (k < 0) {
    b = 1 / b;
    k = -k;
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(k));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Lattice spanned by exponent differences of binomials d^u - c d^v, with
// the character c carried along.
struct CharRow {
  IntVector v;
  Rational value;
};

std::vector<CharRow> echelon(std::vector<CharRow> rows, std::size_t dim) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t k = r; k < rows.size(); ++k)
        if (rows[k].v[c] != 0 && (best == rows.size() || abs(rows[k].v[c]) < abs(rows[best].v[c]))) best = k;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t k = r + 1; k < rows.size(); ++k) {
        if (rows[k].v[c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[k].v[c].get_mpz_t(), rows[r].v[c].get_mpz_t());
        for (std::size_t j = 0; j < dim; ++j) rows[k].v[j] -= q * rows[r].v[j];
        rows[k].value *= rpow(rows[r].value, -q);
        if (rows[k].v[c] != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  for (std::size_t k = r; k < rows.size(); ++k)
    if (rows[k].value != 1) throw std::logic_error("inconsistent partial character");
  rows.resize(r);
  return rows;
}

// Standard monomials of C in the variables `vars` (finitely many when all
// of them are nilpotent modulo C).
std::vector<Monomial> standard_monomials(const PolyIdeal& C, const std::vector<std::size_t>& vars) {
  std::vector<Monomial> out;
  if (is_unit_ideal(C)) return out;
  std::set<std::vector<unsigned>> seen;
  std::vector<Monomial> queue{Monomial()};
  auto key = [&](const Monomial& m) {
    std::vector<unsigned> k;
    for (auto v : vars) k.push_back(m[v]);
    return k;
  };
  seen.insert(key(Monomial()));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Monomial m = queue[head];
    if (contains(C, monomial(C.ring(), m))) continue;
    out.push_back(m);
    if (out.size() > 100000) throw std::invalid_argument("cell variables are not nilpotent");
    for (auto v : vars) {
      Monomial next = m;
      next.set(v, m[v] + 1);
      if (seen.insert(key(next)).second) queue.push_back(next);
    }
  }
  return out;
}

// Prime of (C : d^m) intersected with C[d_sigma].
AssociatedPrime prime_of(const PolyIdeal& C, const Face& cell, const Monomial& m, const IntMatrix& A) {
  const std::size_t n = C.ring()->size();
  const auto& sigma = cell.members;
  PolyIdeal J = eliminate(colon(C, monomial(C.ring(), m)), complement(sigma, n));
  std::vector<CharRow> rows;
  for (const auto& g : J.generators()) {
    if (g.size() != 2) throw std::logic_error("lattice ideal generator is not a binomial");
    const auto& t = g.terms();
    IntVector u = exponents(t[0].mon, sigma), v = exponents(t[1].mon, sigma);
    for (std::size_t k = 0; k < u.size(); ++k) u[k] -= v[k];
    rows.push_back({u, -t[1].coef / t[0].coef});
  }
  rows = echelon(std::move(rows), sigma.size());
  std::vector<IntVector> basis;
  bool trivial = true;
  for (const auto& r : rows) {
    basis.push_back(r.v);
    trivial = trivial && r.value == 1;
  }
  Lattice L(sigma.size(), basis);
  if (!L.is_saturated())
    throw UnsupportedInput("cell " + cell.to_string() +
                           " carries a non-saturated lattice; its primes need non-rational characters");
  AssociatedPrime p{cell, L, RatVector(n, Rational(1)), LatticeClass::toral};
  if (!trivial) {
    // lambda^{b_j} = rho(b_j) for the basis rows b_j, via W with B W = I.
    IntMatrix B(rows.size(), sigma.size());
    for (std::size_t j = 0; j < rows.size(); ++j)
      for (std::size_t k = 0; k < sigma.size(); ++k) B(j, k) = rows[j].v[k];
    SmithForm sf = smith_normal_form(B);
    IntMatrix W = sf.V * sf.S.transpose() * sf.U;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      Rational lam = 1;
      for (std::size_t j = 0; j < rows.size(); ++j) lam *= rpow(rows[j].value, W(k, j));
      p.rescaling[sigma[k]] = lam;
    }
  }
  p.kind = classify_toral_andean(cell, L, A);
  return p;
}

bool same_prime(const AssociatedPrime& a, const AssociatedPrime& b) {
  return a.cell == b.cell && same_lattice(a.lattice, b.lattice) && a.rescaling == b.rescaling;
}

// Pointed matrix with the same kernel as the columns sigma of A whose
// columns span the integer lattice.
IntMatrix block_matrix(const IntMatrix& A, const std::vector<std::size_t>& sigma) {
  Lattice K = lattice_kernel(A.columns(sigma));
  if (K.rank() == 0) return IntMatrix::identity(sigma.size());
  Lattice rows = lattice_kernel(IntMatrix(K.basis()));
  return IntMatrix(rows.basis());
}

// gr_ring(s) -> gr_ring(n) along sigma, with the rescaling applied.
Poly lift_gr(const Poly& p, const std::vector<std::size_t>& sigma, std::size_t n, const RatVector& lambda) {
  const std::size_t s = sigma.size();
  std::vector<std::size_t> map(2 * s);
  for (std::size_t k = 0; k < s; ++k) {
    map[k] = sigma[k];
    map[s + k] = n + sigma[k];
  }
  Poly q = p.map_to(gr_ring(n), map);
  RatVector f(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = lambda[i];
    f[n + i] = 1 / lambda[i];
  }
  return q.scale_variables(f);
}

void require_holonomic(const BinomialModuleSpec& S) {
  if (!is_holonomic(S).holonomic) throw std::invalid_argument("the binomial module is not holonomic");
}

}  // namespace

std::string to_string(LatticeClass c) { return c == LatticeClass::toral ? "toral" : "Andean"; }

bool is_A_graded(const PolyIdeal& I, const IntMatrix& A) {
  const std::size_t n = A.cols();
  if (I.ring()->size() != n) throw std::invalid_argument("ideal ring does not match the columns of A");
  const auto vars = all_vars(n);
  bool graded = true;
  for (const auto& g : I.generators()) {
    if (g.size() > 2) throw std::invalid_argument("generator " + g.to_string() + " is not a binomial");
    if (g.size() == 2)
      graded = graded && A.apply(exponents(g.terms()[0].mon, vars)) == A.apply(exponents(g.terms()[1].mon, vars));
  }
  return graded;
}

BinomialModuleSpec make_binomial_spec(const PointedMatrix& A, const PolyIdeal& I, const RatVector& beta) {
  if (beta.size() != A.d()) throw std::invalid_argument("beta must have one entry per row of A");
  if (!same_ring(I.ring(), d_ring(A.n()))) throw std::invalid_argument("binomial ideal must live in d1..dn");
  if (!is_A_graded(I, A.matrix())) throw std::invalid_argument("ideal is not A-graded");
  return {A, I, beta};
}

WeylIdeal binomial_weyl_ideal(const BinomialModuleSpec& S) {
  const std::size_t n = S.A.n();
  std::vector<WeylElement> gens;
  for (const auto& g : S.I.generators()) gens.emplace_back(n, g.embed(weyl_ring(n)));
  for (auto& e : euler_operators(S.A.matrix(), S.beta)) gens.push_back(e);
  return WeylIdeal(n, std::move(gens));
}

bool QuasidegreeSet::contains(const RatVector& point) const {
  for (const auto& p : pieces)
    if (in_affine_span(point, p.offset, p.directions)) return true;
  return false;
}

std::string QuasidegreeSet::to_string() const {
  if (pieces.empty()) return "empty";
  auto vec = [](const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + bdm::to_string(v[i]);
    return s + ")";
  };
  std::string out;
  for (const auto& p : pieces) {
    if (!out.empty()) out += " | ";
    out += vec(p.offset) + "+span{";
    for (std::size_t k = 0; k < p.directions.size(); ++k) out += (k ? "," : "") + vec(p.directions[k]);
    out += "}";
  }
  return out;
}

bool CellularComponent::toral() const {
  return std::all_of(primes.begin(), primes.end(),
                     [](const AssociatedPrime& p) { return p.kind == LatticeClass::toral; });
}

std::vector<CellularComponent> cellular_decomposition(const PolyIdeal& I) {
  const auto& ring = I.ring();
  const std::size_t n = ring->size();
  for (const auto& g : I.generators())
    if (g.size() > 2) throw std::invalid_argument("generator " + g.to_string() + " is not a binomial");
  if (is_unit_ideal(I)) return {};
  if (n > 12) throw UnsupportedInput("too many variables for cellular decomposition");

  unsigned N = 1;
  for (const auto& g : I.generators())
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < n; ++i) N = std::max<unsigned>(N, t.mon[i] + 1);

  std::vector<CellularComponent> cand;
  for (;; N *= 2) {
    if (N > 256) throw std::logic_error("cellular decomposition did not stabilize");
    cand.clear();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> sigma, rest;
      for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? sigma : rest).push_back(i);
      std::vector<Poly> gens = I.generators();
      for (auto i : rest) {
        Monomial m;
        m.set(i, N);
        gens.push_back(monomial(ring, m));
      }
      PolyIdeal C = groebner_basis(saturate(PolyIdeal(ring, std::move(gens)), product_of(ring, sigma)));
      if (is_unit_ideal(C)) continue;
      Face f;
      f.members = sigma;
      cand.push_back({f, C, {}, false});
    }
    std::vector<PolyIdeal> ideals;
    for (const auto& c : cand) ideals.push_back(c.ideal);
    if (ideals_equal(intersect(ideals), I)) break;
  }

  // Drop redundant components, smallest cells first.
  std::stable_sort(cand.begin(), cand.end(), [](const CellularComponent& a, const CellularComponent& b) {
    return a.cell.members.size() < b.cell.members.size();
  });
  std::vector<bool> keep(cand.size(), true);
  for (std::size_t k = 0; k < cand.size(); ++k) {
    std::vector<PolyIdeal> others;
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (j != k && keep[j]) others.push_back(cand[j].ideal);
    if (!others.empty() && ideals_equal(intersect(others), I)) keep[k] = false;
  }
  std::vector<CellularComponent> out;
  for (std::size_t k = 0; k < cand.size(); ++k)
    if (keep[k]) out.push_back(cand[k]);
  std::sort(out.begin(), out.end(),
            [](const CellularComponent& a, const CellularComponent& b) { return a.cell < b.cell; });
  return out;
}

std::vector<CellularComponent> cellular_decomposition(const PolyIdeal& I, const IntMatrix& A) {
  auto comps = cellular_decomposition(I);
  for (auto& c : comps) {
    c.cell = make_face(A, c.cell.members);
    c.primes = associated_lattice(c, A);
    c.flagged = c.primes.size() > 1;
  }
  return comps;
}

std::vector<AssociatedPrime> associated_lattice(const CellularComponent& C, const IntMatrix& A) {
  const std::size_t n = C.ideal.ring()->size();
  const Face cell = make_face(A, C.cell.members);
  std::vector<AssociatedPrime> out;
  for (const auto& m : standard_monomials(C.ideal, complement(cell.members, n))) {
    AssociatedPrime p = prime_of(C.ideal, cell, m, A);
    bool dup = false;
    for (const auto& q : out) dup = dup || same_prime(p, q);
    if (!dup) out.push_back(p);
  }
  return out;
}

LatticeClass classify_toral_andean(const Face& sigma, const Lattice& L, const IntMatrix& A) {
  if (sigma.empty()) return LatticeClass::toral;
  if (L.ambient() != sigma.members.size()) throw std::invalid_argument("lattice does not live in Z^sigma");
  const Lattice K = lattice_kernel(A.columns(sigma.members));
  for (const auto& z : K.basis())
    if (!L.in_rational_span(z)) return LatticeClass::andean;
  return LatticeClass::toral;
}

QuasidegreeSet quasidegrees(const CellularComponent& C, const IntMatrix& A) {
  const std::size_t n = C.ideal.ring()->size(), d = A.rows();
  const auto& sigma = C.cell.members;
  std::vector<RatVector> dirs;
  RatMatrix chosen;
  for (auto j : sigma) {
    RatVector col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = A(i, j);
    chosen.push_back(col);
    if (rank(chosen) == chosen.size()) dirs.push_back(col);
    else chosen.pop_back();
  }
  const auto bar = complement(sigma, n);
  QuasidegreeSet Q;
  for (const auto& m : standard_monomials(C.ideal, bar)) {
    // (C : d^m) meets C[d_sigma] in a proper lattice ideal whenever d^m is
    // standard, so each such m contributes -A m + span(A_sigma).
    RatVector off(d, Rational(0));
    for (auto j : bar)
      for (std::size_t i = 0; i < d; ++i) off[i] -= Rational(A(i, j)) * m[j];
    bool dup = false;
    for (const auto& p : Q.pieces) dup = dup || in_affine_span(off, p.offset, p.directions);
    if (!dup) Q.pieces.push_back({off, dirs});
  }
  return Q;
}

HolonomicVerdict is_holonomic(const BinomialModuleSpec& S) {
  HolonomicVerdict v;
  v.components = cellular_decomposition(S.I, S.A.matrix());
  for (const auto& c : v.components) {
    v.flagged = v.flagged || c.flagged;
    if (c.toral()) continue;
    for (auto& p : quasidegrees(c, S.A.matrix()).pieces) v.andean_arrangement.pieces.push_back(p);
  }
  RatVector minus_beta;
  for (const auto& b : S.beta) minus_beta.push_back(-b);
  v.holonomic = !v.andean_arrangement.contains(minus_beta);
  return v;
}

std::vector<AssociatedPrime> contributing_primes(const BinomialModuleSpec& S) {
  RatVector minus_beta;
  for (const auto& b : S.beta) minus_beta.push_back(-b);
  std::vector<AssociatedPrime> out;
  for (const auto& c : cellular_decomposition(S.I, S.A.matrix())) {
    if (!quasidegrees(c, S.A.matrix()).contains(minus_beta)) continue;
    for (const auto& p : c.primes)
      if (p.kind == LatticeClass::toral) out.push_back(p);
  }
  return out;
}

std::vector<ConormalComponent> char_variety_binomial(const BinomialModuleSpec& S, const ProjectiveWeight& L) {
  require_holonomic(S);
  const std::size_t n = S.A.n();
  if (L.n() != n) throw std::invalid_argument("weight length differs from the number of columns");
  const RingPtr ring = gr_ring(n);
  std::vector<ConormalComponent> out;
  auto add = [&](ConormalComponent c) {
    for (const auto& o : out)
      if (o.face == c.face && ideals_equal(o.ideal, c.ideal)) return;
    out.push_back(std::move(c));
  };
  for (const auto& p : contributing_primes(S)) {
    const auto& sigma = p.cell.members;
    std::vector<Poly> fixed;
    for (auto i : complement(sigma, n)) fixed.push_back(Poly::variable(ring, n + i));
    if (sigma.empty()) {
      PolyIdeal I = groebner_basis(PolyIdeal(ring, fixed));
      add({Face{}, I, dimension(I)});
      continue;
    }
    PointedMatrix Ap(block_matrix(S.A.matrix(), sigma));
    RatVector lx, ld;
    for (auto i : sigma) {
      lx.push_back(L.lx()[i]);
      ld.push_back(L.ld()[i]);
    }
    for (const auto& c : char_variety_gkz(Ap, ProjectiveWeight(lx, ld))) {
      std::vector<Poly> gens = fixed;
      for (const auto& g : c.ideal.generators()) gens.push_back(lift_gr(g, sigma, n, p.rescaling));
      PolyIdeal I = groebner_basis(PolyIdeal(ring, std::move(gens)));
      std::vector<std::size_t> members;
      for (auto k : c.face.members) members.push_back(sigma[k]);
      add({make_face(S.A.matrix(), members), I, dimension(I)});
    }
  }
  std::sort(out.begin(), out.end(), [](const ConormalComponent& a, const ConormalComponent& b) {
    if (!(a.face == b.face)) return a.face < b.face;
    return a.ideal.to_string() < b.ideal.to_string();
  });
  return out;
}

FactoredPoly sing_locus_binomial(const BinomialModuleSpec& S) {
  require_holonomic(S);
  const std::size_t n = S.A.n();
  const RingPtr xr = x_ring(n);
  std::vector<Poly> factors;
  for (const auto& p : contributing_primes(S)) {
    const auto& sigma = p.cell.members;
    if (sigma.empty()) continue;
    IntMatrix B = block_matrix(S.A.matrix(), sigma);
    for (const auto& face : l_umbrella(PointedMatrix(B), ProjectiveWeight::order_filtration(sigma.size())).faces) {
      if (face.empty()) continue;
      Discriminant D = a_discriminant(B.columns(face.members));
      if (D.trivial) continue;
      std::vector<std::size_t> map;
      for (auto k : face.members) map.push_back(sigma[k]);
      RatVector f(n);
      for (std::size_t i = 0; i < n; ++i) f[i] = p.rescaling[i];
      factors.push_back(D.poly.map_to(xr, map).scale_variables(f));
    }
  }
  return make_factored(xr, std::move(factors));
}

LHolonomicReport is_L_holonomic_binomial(const BinomialModuleSpec& S, const ProjectiveWeight& L, bool verify) {
  LHolonomicReport r;
  r.holonomic = is_holonomic(S).holonomic;
  if (!verify) return r;
  auto w = is_L_holonomic(binomial_weyl_ideal(S), L);
  r.verified = true;
  r.weyl_dimension = w.dimension;
  if (w.holonomic != r.holonomic)
    throw VerificationMismatch("binomial holonomicity verdict " + std::string(r.holonomic ? "true" : "false") +
                               " disagrees with gr^L of dimension " + std::to_string(w.dimension) + " for L = " +
                               L.to_string());
  return r;
}

}  // namespace bdm

#include "bdm/hyper.hpp"

#include <algorithm>

namespace bdm {

namespace {

Poly monomial_poly(const RingPtr& ring, const std::vector<std::size_t>& vars, const IntVector& exps) {
  Monomial m;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (exps[k] < 0 || !exps[k].fits_uint_p()) throw std::invalid_argument("bad exponent");
    m.set(vars[k], m[vars[k]] + static_cast<unsigned>(exps[k].get_ui()));
  }
  return Poly::term(ring, m, 1);
}

Poly product_of(const RingPtr& ring, const std::vector<std::size_t>& vars) {
  Poly p = Poly::constant(ring, 1);
  for (auto v : vars) p = p * Poly::variable(ring, v);
  return p;
}

}  // namespace

PolyIdeal toric_ideal_in(const IntMatrix& A, const std::vector<std::size_t>& cols, const RingPtr& ring,
                         const std::vector<std::size_t>& vars) {
  if (cols.size() != vars.size()) throw std::invalid_argument("column and variable lists differ in length");
  if (cols.empty()) return PolyIdeal(ring);
  Lattice ker = lattice_kernel(A.columns(cols));
  if (ker.rank() == 0) return PolyIdeal(ring);
  std::vector<Poly> gens;
  for (const auto& z : ker.basis()) {
    IntVector plus(z.size()), minus(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
      plus[k] = z[k] > 0 ? z[k] : Integer(0);
      minus[k] = z[k] < 0 ? Integer(-z[k]) : Integer(0);
    }
    gens.push_back(monomial_poly(ring, vars, plus) - monomial_poly(ring, vars, minus));
  }
  return saturate(PolyIdeal(ring, std::move(gens)), product_of(ring, vars));
}

PolyIdeal toric_ideal(const IntMatrix& A) {
  std::vector<std::size_t> idx(A.cols());
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
  return toric_ideal_in(A, idx, d_ring(A.cols()), idx);
}

std::vector<WeylElement> euler_operators(const IntMatrix& A, const RatVector& beta) {
  if (beta.size() != A.rows()) throw std::invalid_argument("beta must have one entry per row of A");
  const std::size_t n = A.cols();
  std::vector<WeylElement> out;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    WeylElement e = WeylElement::constant(n, -beta[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (A(i, j) != 0)
        e += WeylElement::constant(n, Rational(A(i, j))) * WeylElement::x(n, j) * WeylElement::d(n, j);
    out.push_back(e);
  }
  return out;
}

namespace {

std::vector<WeylElement> as_weyl(const PolyIdeal& I, std::size_t n) {
  std::vector<WeylElement> out;
  for (const auto& g : I.generators()) out.emplace_back(n, g);
  return out;
}

}  // namespace

HypergeometricSystem make_hypergeometric(const PointedMatrix& A, const RatVector& beta) {
  const std::size_t n = A.n();
  auto gens = as_weyl(toric_ideal(A.matrix()), n);
  auto euler = euler_operators(A.matrix(), beta);
  gens.insert(gens.end(), euler.begin(), euler.end());
  return {A.matrix(), beta, WeylIdeal(n, std::move(gens))};
}

ConormalComponent conormal_closure_ideal(const PointedMatrix& Ap, const Face& tau) {
  const IntMatrix& A = Ap.matrix();
  const std::size_t n = A.cols();
  const RingPtr ring = gr_ring(n);
  std::vector<Poly> gens;
  std::vector<std::size_t> xi_tau;
  for (std::size_t i = 0; i < n; ++i) {
    if (tau.contains(i)) xi_tau.push_back(n + i);
    else gens.push_back(Poly::variable(ring, n + i));
  }
  const PolyIdeal toric = toric_ideal_in(A, tau.members, ring, xi_tau);
  for (const auto& g : toric.generators()) gens.push_back(g);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Poly row(ring);
    for (auto j : tau.members)
      row += Poly::variable(ring, j) * Poly::variable(ring, n + j) * Rational(A(i, j));
    gens.push_back(row);
  }
  PolyIdeal I(ring, std::move(gens));
  if (!tau.empty()) I = saturate(I, product_of(ring, xi_tau));
  I = groebner_basis(I);
  ConormalComponent c{tau, I, 0};
  c.dimension = dimension(I);
  return c;
}

std::vector<ConormalComponent> char_variety_gkz(const PointedMatrix& A, const ProjectiveWeight& L) {
  std::vector<ConormalComponent> out;
  for (const auto& f : l_umbrella(A, L).faces) out.push_back(conormal_closure_ideal(A, f));
  return out;
}

Discriminant a_discriminant(const IntMatrix& M) {
  const std::size_t d = M.rows(), k = M.cols();
  auto names = indexed_names("x", k);
  auto tn = indexed_names("t", d);
  names.insert(names.end(), tn.begin(), tn.end());
  const RingPtr ring = make_ring(names);
  const RingPtr xr = x_ring(k);

  // Column-wise shift clearing negative exponents.
  IntVector shift(d, Integer(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < k; ++j) shift[i] = std::max(shift[i], Integer(-M(i, j)));

  std::vector<std::size_t> tvars;
  for (std::size_t i = 0; i < d; ++i) tvars.push_back(k + i);
  Poly f(ring);
  std::vector<Poly> partials(d, Poly(ring));
  for (std::size_t j = 0; j < k; ++j) {
    IntVector e(d);
    for (std::size_t i = 0; i < d; ++i) e[i] = M(i, j) + shift[i];
    Poly term = Poly::variable(ring, j) * monomial_poly(ring, tvars, e);
    f += term;
    for (std::size_t i = 0; i < d; ++i)
      if (M(i, j) != 0) partials[i] += term * Rational(M(i, j));
  }
  std::vector<Poly> gens{f};
  gens.insert(gens.end(), partials.begin(), partials.end());
  PolyIdeal sat = saturate(PolyIdeal(ring, std::move(gens)), product_of(ring, tvars));
  PolyIdeal elim = restrict_to(eliminate(sat, tvars), xr);
  if (elim.is_zero()) throw UnsupportedInput("discriminantal variety is the whole coefficient space");

  Discriminant D{M, divisorial_part(elim), false};
  D.trivial = D.poly.is_constant();
  return D;
}

std::string FactoredPoly::to_string() const {
  if (factors.empty()) return poly.to_string();
  if (factors.size() == 1) return factors[0].to_string();
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "*";
    if (f.terms().size() > 1) s += "(" + f.to_string() + ")";
    else s += f.to_string();
  }
  return s;
}

FactoredPoly make_factored(const RingPtr& ring, std::vector<Poly> factors) {
  std::vector<Poly> distinct;
  for (auto& f : factors) {
    if (f.is_constant()) continue;
    Poly p = f.primitive();
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  }
  std::sort(distinct.begin(), distinct.end(), [](const Poly& a, const Poly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    if (a.size() != b.size()) return a.size() < b.size();
    return a.to_string() < b.to_string();
  });
  FactoredPoly out{Poly::constant(ring, 1), {}};
  if (distinct.empty()) return out;
  out.poly = squarefree_product(distinct);
  Poly plain = Poly::constant(ring, 1);
  for (const auto& f : distinct) plain = plain * f;
  if (plain.primitive() == out.poly) out.factors = distinct;
  else out.factors = {out.poly};
  return out;
}

FactoredPoly sing_locus_gkz(const PointedMatrix& A) {
  const std::size_t n = A.n();
  const RingPtr xr = x_ring(n);
  std::vector<Poly> factors;
  for (const auto& face : l_umbrella(A, ProjectiveWeight::order_filtration(n)).faces) {
    if (face.empty()) continue;
    Discriminant D = a_discriminant(A.matrix().columns(face.members));
    if (D.trivial) continue;
    factors.push_back(D.poly.map_to(xr, face.members));
  }
  return make_factored(xr, std::move(factors));
}

TruncatedSystem::TruncatedSystem(IntMatrix breve_A, std::size_t d, RatVector beta)
    : breve_(breve_A, false), A_(breve_A.top_rows(d)), beta_(std::move(beta)), ideal_(breve_A.cols()) {
  const std::size_t k = breve_A.rows(), n = breve_A.cols();
  if (!(d < k && k < n)) throw std::invalid_argument("truncated system needs d < k < n");
  if (breve_A.rank() != k) throw std::invalid_argument("breve_A must have full row rank");
  auto gens = as_weyl(toric_ideal(breve_A), n);
  auto euler = euler_operators(A_.matrix(), beta_);
  gens.insert(gens.end(), euler.begin(), euler.end());
  ideal_ = WeylIdeal(n, std::move(gens));
}

TruncatedComponent truncated_char_component(const TruncatedSystem& T, const Face& tau,
                                            const ProjectiveWeight& L) {
  const std::size_t n = T.n();
  auto fs = facets(l_umbrella(T.breve_A(), L));
  if (std::find(fs.begin(), fs.end(), tau) == fs.end())
    throw std::invalid_argument("face " + tau.to_string() + " is not a facet of the umbrella");
  const RingPtr ring = gr_ring(n);
  std::vector<Poly> gens;
  std::vector<std::size_t> xi_tau;
  for (std::size_t i = 0; i < n; ++i) {
    if (tau.contains(i)) xi_tau.push_back(n + i);
    else gens.push_back(Poly::variable(ring, n + i));
  }
  WeylIdeal toric(n, as_weyl(toric_ideal(T.breve_A().matrix()), n));
  const PolyIdeal gr_toric = gr_ideal(toric, L);
  for (const auto& g : gr_toric.generators()) gens.push_back(g);
  for (const auto& e : euler_operators(T.A().matrix(), T.beta())) gens.push_back(initial_form(e, L));
  PolyIdeal I(ring, std::move(gens));
  if (!xi_tau.empty()) I = saturate(I, product_of(ring, xi_tau));
  I = groebner_basis(I);
  TruncatedComponent c{make_face(T.breve_A().matrix(), tau.members), I, 0};
  c.dimension = dimension(I);
  return c;
}

TorusWitness torus_component_witness(const TruncatedSystem& T, const ProjectiveWeight& L) {
  const std::size_t n = T.n();
  const RingPtr ring = gr_ring(n);
  std::vector<std::size_t> xs, all;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(i);
  for (std::size_t i = 0; i < 2 * n; ++i) all.push_back(i);
  TorusWitness w{Face{}, PolyIdeal(ring), -1, false, false, {}};
  for (const auto& tau : facets(l_umbrella(T.breve_A(), L))) {
    w.tried.push_back(tau.to_string());
    auto comp = truncated_char_component(T, tau, L);
    PolyIdeal W = saturate(comp.ideal, product_of(ring, xs));
    if (is_unit_ideal(W)) continue;
    const int dim = dimension(W);
    if (dim != static_cast<int>(T.expected_dimension())) continue;
    w.face = tau;
    w.ideal = W;
    w.dimension = dim;
    w.proper = true;
    w.survives_full_saturation = !is_unit_ideal(saturate(W, product_of(ring, all)));
    return w;
  }
  std::string tried;
  for (const auto& t : w.tried) tried += " " + t;
  throw VerificationMismatch("no facet yields a torus component of dimension " +
                             std::to_string(T.expected_dimension()) + "; tried:" + tried);
}

PolyIdeal union_ideal(const std::vector<PolyIdeal>& components, const RingPtr& ring) {
  if (components.empty()) return PolyIdeal(ring, {Poly::constant(ring, 1)});
  return intersect(components);
}

}  // namespace bdm

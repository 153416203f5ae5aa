#include "bdm/exact.hpp"

#include <algorithm>
#include <utility>

namespace bdm {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0 || s.find_first_not_of("-0123456789/") != std::string::npos)
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(const std::vector<IntVector>& rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& which) const {
  IntMatrix m(rows_, which.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < which.size(); ++k) m(i, k) = (*this)(i, which[k]);
  return m;
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RatMatrix m) {
  if (m.empty()) return 0;
  std::size_t cols = m.front().size();
  return echelon(m, cols).size();
}

std::vector<RatVector> nullspace(const RatMatrix& m, std::size_t cols) {
  RatMatrix e = m;
  auto pivots = echelon(e, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_affine_span(const RatVector& target, const RatVector& offset,
                    const std::vector<RatVector>& directions) {
  const std::size_t dim = target.size();
  RatVector diff(dim);
  for (std::size_t i = 0; i < dim; ++i) diff[i] = target[i] - offset[i];
  RatMatrix m = directions;
  std::size_t before = rank(m);
  m.push_back(diff);
  if (dim == 0) return true;
  return rank(m) == before;
}

IntVector primitive_integer(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Integer(v[i].get_num() * (l / v[i].get_den()));
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

std::size_t IntMatrix::rank() const { return bdm::rank(to_rational(*this)); }

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix m = to_rational(*this);
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && m[p][c] == 0) ++p;
    if (p == rows_) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < cols_; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return Integer(det.get_num());
}

// Smith form by alternating row and column gcd elimination.
SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  IntMatrix S = m, U = IntMatrix::identity(R), V = IntMatrix::identity(C);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < C; ++j) std::swap(S(a, j), S(b, j));
    for (std::size_t j = 0; j < R; ++j) std::swap(U(a, j), U(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < R; ++i) std::swap(S(i, a), S(i, b));
    for (std::size_t i = 0; i < C; ++i) std::swap(V(i, a), V(i, b));
  };
  // row_b -= q * row_a
  auto add_row = [&](std::size_t b, std::size_t a, const Integer& q) {
    for (std::size_t j = 0; j < C; ++j) S(b, j) -= q * S(a, j);
    for (std::size_t j = 0; j < R; ++j) U(b, j) -= q * U(a, j);
  };
  auto add_col = [&](std::size_t b, std::size_t a, const Integer& q) {
    for (std::size_t i = 0; i < R; ++i) S(i, b) -= q * S(i, a);
    for (std::size_t i = 0; i < C; ++i) V(i, b) -= q * V(i, a);
  };

  const std::size_t diag = std::min(R, C);
  for (std::size_t t = 0; t < diag; ++t) {
    // Pick the smallest nonzero entry in the remaining block as pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (S(i, j) != 0 && (!found || abs(S(i, j)) < abs(S(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (S(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
        add_row(i, t, q);
        if (S(i, t) != 0) {
          swap_rows(t, i);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (S(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
        add_col(j, t, q);
        if (S(t, j) != 0) {
          swap_cols(t, j);
          changed = true;
        }
      }
      if (changed) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < R && !fixed; ++i)
        for (std::size_t j = t + 1; j < C && !fixed; ++j)
          if (S(i, j) % S(t, t) != 0) {
            add_row(t, i, Integer(-1));
            fixed = true;
          }
      if (!fixed) break;
    }
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < C; ++j) S(t, j) = -S(t, j);
      for (std::size_t j = 0; j < R; ++j) U(t, j) = -U(t, j);
    }
  }

  SmithForm out{std::move(U), std::move(S), std::move(V), {}};
  for (std::size_t t = 0; t < diag; ++t)
    if (out.S(t, t) != 0) out.invariant_factors.push_back(out.S(t, t));
  return out;
}

Lattice::Lattice(std::size_t ambient, std::vector<IntVector> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.size() != ambient_) throw std::invalid_argument("lattice vector has wrong length");
  RatMatrix m;
  for (const auto& b : basis_) m.emplace_back(b.begin(), b.end());
  if (bdm::rank(m) != basis_.size())
    throw std::invalid_argument("lattice basis is not linearly independent");
}

bool Lattice::in_rational_span(const IntVector& v) const {
  RatMatrix m;
  for (const auto& b : basis_) m.emplace_back(b.begin(), b.end());
  std::size_t r = bdm::rank(m);
  m.emplace_back(v.begin(), v.end());
  return bdm::rank(m) == r;
}

bool Lattice::contains(const IntVector& v) const {
  if (basis_.empty()) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
  }
  // Solve B^T c = v over Z using the Smith form of B^T.
  IntMatrix bt(ambient_, basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t i = 0; i < ambient_; ++i) bt(i, k) = basis_[k][i];
  SmithForm sf = smith_normal_form(bt);
  IntVector w = sf.U.apply(v);
  for (std::size_t i = 0; i < w.size(); ++i) {
    Integer d = i < basis_.size() ? sf.S(i, i) : Integer(0);
    if (d == 0) {
      if (w[i] != 0) return false;
    } else if (w[i] % d != 0) {
      return false;
    }
  }
  return true;
}

Lattice Lattice::saturation() const {
  if (basis_.empty()) return *this;
  IntMatrix b(basis_.size(), ambient_);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t i = 0; i < ambient_; ++i) b(k, i) = basis_[k][i];
  // Orthogonal complement, then its kernel.
  Lattice perp = lattice_kernel(b);
  IntMatrix n(perp.rank(), ambient_);
  for (std::size_t k = 0; k < perp.rank(); ++k)
    for (std::size_t i = 0; i < ambient_; ++i) n(k, i) = perp.basis()[k][i];
  if (perp.rank() == 0) {
    std::vector<IntVector> unit;
    for (std::size_t i = 0; i < ambient_; ++i) {
      IntVector e(ambient_, Integer(0));
      e[i] = 1;
      unit.push_back(std::move(e));
    }
    return Lattice(ambient_, std::move(unit));
  }
  return lattice_kernel(n);
}

Integer Lattice::saturation_index() const {
  if (basis_.empty()) return 1;
  IntMatrix b(basis_.size(), ambient_);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t i = 0; i < ambient_; ++i) b(k, i) = basis_[k][i];
  Integer idx = 1;
  for (const auto& d : smith_normal_form(b).invariant_factors) idx *= d;
  return idx;
}

bool Lattice::is_saturated() const { return saturation_index() == 1; }

bool same_lattice(const Lattice& a, const Lattice& b) {
  if (a.ambient_ != b.ambient_ || a.rank() != b.rank()) return false;
  for (const auto& v : a.basis_)
    if (!b.contains(v)) return false;
  for (const auto& v : b.basis_)
    if (!a.contains(v)) return false;
  return true;
}

Lattice lattice_kernel(const IntMatrix& m) {
  SmithForm sf = smith_normal_form(m);
  const std::size_t r = sf.invariant_factors.size();
  std::vector<IntVector> basis;
  for (std::size_t j = r; j < m.cols(); ++j) basis.push_back(sf.V.column(j));
  return Lattice(m.cols(), std::move(basis));
}

bool spans_lattice(const IntMatrix& m) {
  if (m.rows() == 0) return true;
  SmithForm sf = smith_normal_form(m);
  if (sf.invariant_factors.size() != m.rows()) return false;
  return std::all_of(sf.invariant_factors.begin(), sf.invariant_factors.end(),
                     [](const Integer& d) { return d == 1; });
}

namespace {

// c . h >= rhs, with multipliers expressing it as a nonnegative
// combination of the original constraints.
struct Inequality {
  RatVector c;
  Rational rhs;
  RatVector mult;
};

}  // namespace

// Fourier-Motzkin on a_i . h >= 1, eliminating the last coordinate first.
PointednessResult is_pointed(const IntMatrix& m) {
  const std::size_t d = m.rows(), n = m.cols();
  std::vector<Inequality> sys;
  for (std::size_t i = 0; i < n; ++i) {
    Inequality q;
    q.c.resize(d);
    for (std::size_t r = 0; r < d; ++r) q.c[r] = m(r, i);
    q.rhs = 1;
    q.mult.assign(n, Rational(0));
    q.mult[i] = 1;
    sys.push_back(std::move(q));
  }

  std::vector<std::vector<Inequality>> stages;
  stages.push_back(sys);
  for (std::size_t k = d; k-- > 0;) {
    std::vector<Inequality> lower, upper, rest;
    for (auto& q : stages.back()) {
      if (q.c[k] > 0) lower.push_back(q);
      else if (q.c[k] < 0) upper.push_back(q);
      else rest.push_back(q);
    }
    std::vector<Inequality> next = rest;
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        Rational a = -up.c[k], b = lo.c[k];
        Inequality q;
        q.c.resize(d);
        for (std::size_t r = 0; r < d; ++r) q.c[r] = a * lo.c[r] + b * up.c[r];
        q.rhs = a * lo.rhs + b * up.rhs;
        q.mult.resize(n);
        for (std::size_t r = 0; r < n; ++r) q.mult[r] = a * lo.mult[r] + b * up.mult[r];
        next.push_back(std::move(q));
      }
    stages.push_back(std::move(next));
  }

  PointednessResult result;
  for (const auto& q : stages.back()) {
    if (q.rhs > 0) {
      result.infeasibility = q.mult;
      return result;
    }
  }

  // Back substitution; prefer the integer closest to zero in range.
  RatVector h(d, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    const auto& stage = stages[d - 1 - k];
    std::optional<Rational> lo, hi;
    for (const auto& q : stage) {
      if (q.c[k] == 0) continue;
      Rational rest = q.rhs;
      for (std::size_t r = 0; r < k; ++r) rest -= q.c[r] * h[r];
      Rational bound = rest / q.c[k];
      if (q.c[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    Rational v = 0;
    if (lo && *lo > v) {
      Integer ceil_lo;
      mpz_cdiv_q(ceil_lo.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      v = ceil_lo;
      if (hi && v > *hi) v = *lo;
    } else if (hi && *hi < v) {
      Integer floor_hi;
      mpz_fdiv_q(floor_hi.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
      v = floor_hi;
      if (lo && v < *lo) v = *hi;
    }
    h[k] = v;
  }
  result.certificate = h;
  return result;
}

PointedMatrix::PointedMatrix(IntMatrix m, bool require_spanning) : matrix_(std::move(m)) {
  if (matrix_.rows() == 0 || matrix_.cols() == 0)
    throw std::invalid_argument("matrix must have positive dimensions");
  auto res = is_pointed(matrix_);
  if (!res.pointed()) throw std::invalid_argument("matrix is not pointed");
  if (require_spanning && !spans_lattice(matrix_))
    throw std::invalid_argument("columns do not span the integer lattice");
  h_ = *res.certificate;
}

}  // namespace bdm

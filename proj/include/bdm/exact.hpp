#pragma once

// Exact integer and rational linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdm {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Thrown for inputs outside the supported class (CLI exit code 2).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an oracle cross-check disagrees with a closed-form route
// (CLI exit code 3).
class VerificationMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  // Throws std::invalid_argument on ragged input.
  explicit IntMatrix(const std::vector<IntVector>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix columns(const std::vector<std::size_t>& which) const;
  IntMatrix top_rows(std::size_t count) const;
  IntMatrix transpose() const;
  IntVector apply(const IntVector& v) const;

  std::size_t rank() const;
  Integer determinant() const;  // square only

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix S;  // rows x cols, diagonal with d_1 | d_2 | ...
  IntMatrix V;  // cols x cols, unimodular
  std::vector<Integer> invariant_factors;  // nonzero diagonal of S
};

// U * M * V == S.
SmithForm smith_normal_form(const IntMatrix& m);

// A subgroup of Z^ambient given by a basis (Q-linearly independent).
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t ambient, std::vector<IntVector> basis);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  bool in_rational_span(const IntVector& v) const;
  // (Q (x) L) intersected with Z^ambient.
  Lattice saturation() const;
  bool is_saturated() const;
  // Index of L in its saturation.
  Integer saturation_index() const;

  friend bool same_lattice(const Lattice& a, const Lattice& b);

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVector> basis_;
};

// Saturated kernel {z in Z^cols : M z = 0}.
Lattice lattice_kernel(const IntMatrix& m);

// Either a certificate h with h . a_i > 0 for every column a_i, or
// nonnegative multipliers y (not all zero) with sum_i y_i a_i = 0.
struct PointednessResult {
  std::optional<RatVector> certificate;
  std::optional<RatVector> infeasibility;
  bool pointed() const { return certificate.has_value(); }
};

PointednessResult is_pointed(const IntMatrix& m);

bool spans_lattice(const IntMatrix& m);

// Column matrix together with its pointedness certificate.
class PointedMatrix {
 public:
  // Throws std::invalid_argument if m is not pointed, or (when
  // require_spanning) if its columns do not span Z^rows.
  explicit PointedMatrix(IntMatrix m, bool require_spanning = true);

  const IntMatrix& matrix() const { return matrix_; }
  const RatVector& certificate() const { return h_; }
  std::size_t d() const { return matrix_.rows(); }
  std::size_t n() const { return matrix_.cols(); }

 private:
  IntMatrix matrix_;
  RatVector h_;
};

// Rational helpers. Matrices are row-major lists of rows.
using RatMatrix = std::vector<RatVector>;

std::size_t rank(RatMatrix m);
// Basis of {v : M v = 0}.
std::vector<RatVector> nullspace(const RatMatrix& m, std::size_t cols);
// True iff target lies in offset + span(directions).
bool in_affine_span(const RatVector& target, const RatVector& offset,
                    const std::vector<RatVector>& directions);
// Clears denominators and divides by the content.
IntVector primitive_integer(const RatVector& v);

}  // namespace bdm

#pragma once

// The L-umbrella of a pointed matrix and pyramid combinatorics.

#include <optional>
#include <string>
#include <vector>

#include "bdm/exact.hpp"
#include "bdm/weyl.hpp"

namespace bdm {

// A subset of column indices (0-based, sorted) with its rank.
struct Face {
  std::vector<std::size_t> members;
  std::size_t rank = 0;

  bool contains(std::size_t i) const;
  bool empty() const { return members.empty(); }
  // 1-based, e.g. "{1,3}".
  std::string to_string() const;
  friend bool operator==(const Face& a, const Face& b) { return a.members == b.members; }
  friend bool operator<(const Face& a, const Face& b) { return a.members < b.members; }
};

Face make_face(const IntMatrix& A, std::vector<std::size_t> members);

// Affine chart eps*y0 + h.y = 1 of the projective space holding the lifts.
struct UmbrellaChart {
  RatVector h;
  Rational epsilon;
};

// Largest power of 1/2 with h.a_i + eps L_{d,i} > 0; requires h.a_i > 0.
UmbrellaChart make_chart(const IntMatrix& A, const ProjectiveWeight& L, const RatVector& h);

struct Umbrella {
  UmbrellaChart chart;
  std::vector<Face> faces;  // sorted, the empty face first
  std::vector<bool> facet;  // parallel to faces
};

Umbrella l_umbrella(const PointedMatrix& A, const ProjectiveWeight& L);
Umbrella l_umbrella(const PointedMatrix& A, const ProjectiveWeight& L, const UmbrellaChart& chart);

std::vector<Face> facets(const Umbrella& U);
bool is_pyramid(const Face& tau, const IntMatrix& A);
Face pyramid_core(const Face& tau, const IntMatrix& A);

}  // namespace bdm

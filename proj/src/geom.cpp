#include "bdm/geom.hpp"

#include <algorithm>
#include <set>

namespace bdm {

bool Face::contains(std::size_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

std::string Face::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(members[k] + 1);
  }
  return s + "}";
}

Face make_face(const IntMatrix& A, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (auto i : members)
    if (i >= A.cols()) throw std::out_of_range("face index out of range");
  Face f;
  f.rank = members.empty() ? 0 : A.columns(members).rank();
  f.members = std::move(members);
  return f;
}

UmbrellaChart make_chart(const IntMatrix& A, const ProjectiveWeight& L, const RatVector& h) {
  if (L.n() != A.cols()) throw std::invalid_argument("weight length differs from the number of columns");
  if (h.size() != A.rows()) throw std::invalid_argument("chart vector has wrong length");
  RatVector ha(A.cols(), Rational(0));
  for (std::size_t j = 0; j < A.cols(); ++j) {
    for (std::size_t i = 0; i < A.rows(); ++i) ha[j] += h[i] * A(i, j);
    if (ha[j] <= 0) throw std::invalid_argument("h is not positive on the columns");
  }
  Rational eps = 1;
  for (;;) {
    bool ok = true;
    for (std::size_t j = 0; j < A.cols() && ok; ++j) ok = ha[j] + eps * L.ld()[j] > 0;
    if (ok) break;
    eps /= 2;
  }
  return {h, eps};
}

namespace {

// Rank-D chart coordinates for the affine hull of the points.
std::vector<RatVector> affine_coordinates(const std::vector<RatVector>& pts) {
  const std::size_t dim = pts[0].size();
  RatMatrix diffs;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    RatVector v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = pts[k][c] - pts[0][c];
    diffs.push_back(v);
  }
  // Greedily pick coordinates on which the differences keep full rank.
  const std::size_t D = diffs.empty() ? 0 : rank(diffs);
  std::vector<std::size_t> chosen;
  for (std::size_t c = 0; c < dim && chosen.size() < D; ++c) {
    auto trial = chosen;
    trial.push_back(c);
    RatMatrix sub;
    for (const auto& v : diffs) {
      RatVector r;
      for (auto t : trial) r.push_back(v[t]);
      sub.push_back(r);
    }
    if (rank(sub) == trial.size()) chosen = trial;
  }
  std::vector<RatVector> out;
  for (const auto& p : pts) {
    RatVector q;
    for (auto c : chosen) q.push_back(p[c]);
    out.push_back(q);
  }
  return out;
}

// Point-index sets of all facets of conv(pts); pts live in Q^D with full
// dimensional hull.
std::set<std::vector<std::size_t>> facet_sets(const std::vector<RatVector>& pts) {
  const std::size_t N = pts.size();
  const std::size_t D = pts[0].size();
  std::set<std::vector<std::size_t>> out;
  if (D == 0) return out;
  std::vector<std::size_t> pick(D);
  std::vector<bool> mask(N, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(D), true);
  do {
    pick.clear();
    for (std::size_t k = 0; k < N; ++k)
      if (mask[k]) pick.push_back(k);
    RatMatrix rows;
    for (std::size_t k = 1; k < pick.size(); ++k) {
      RatVector v(D);
      for (std::size_t c = 0; c < D; ++c) v[c] = pts[pick[k]][c] - pts[pick[0]][c];
      rows.push_back(v);
    }
    std::vector<RatVector> normal;
    if (rows.empty()) {
      normal = {RatVector{Rational(1)}};
    } else {
      normal = nullspace(rows, D);
    }
    if (normal.size() != 1) continue;
    const RatVector& nv = normal[0];
    Rational c0 = 0;
    for (std::size_t c = 0; c < D; ++c) c0 += nv[c] * pts[pick[0]][c];
    bool pos = false, neg = false;
    std::vector<std::size_t> on;
    for (std::size_t k = 0; k < N; ++k) {
      Rational s = -c0;
      for (std::size_t c = 0; c < D; ++c) s += nv[c] * pts[k][c];
      if (s > 0) pos = true;
      else if (s < 0) neg = true;
      else on.push_back(k);
    }
    if (pos && neg) continue;
    out.insert(on);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

}  // namespace

Umbrella l_umbrella(const PointedMatrix& A, const ProjectiveWeight& L) {
  return l_umbrella(A, L, make_chart(A.matrix(), L, A.certificate()));
}

Umbrella l_umbrella(const PointedMatrix& Ap, const ProjectiveWeight& L, const UmbrellaChart& chart) {
  const IntMatrix& A = Ap.matrix();
  const std::size_t d = A.rows(), n = A.cols();
  if (L.n() != n) throw std::invalid_argument("weight length differs from the number of columns");
  if (chart.epsilon <= 0) throw std::invalid_argument("chart epsilon must be positive");

  // Normalized lifts: p0 for (1:0), p_i for (L_{d,i} : a_i).
  std::vector<RatVector> pts;
  RatVector p0(d + 1, Rational(0));
  p0[0] = 1 / chart.epsilon;
  pts.push_back(p0);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = chart.epsilon * L.ld()[j];
    for (std::size_t i = 0; i < d; ++i) s += chart.h[i] * A(i, j);
    if (s <= 0) throw std::invalid_argument("chart condition fails");
    RatVector p(d + 1);
    p[0] = L.ld()[j] / s;
    for (std::size_t i = 0; i < d; ++i) p[i + 1] = Rational(A(i, j)) / s;
    pts.push_back(p);
  }

  auto coords = affine_coordinates(pts);
  auto fsets = facet_sets(coords);

  // Face lattice: the polytope, its facets, and all their intersections.
  std::set<std::vector<std::size_t>> faces;
  std::vector<std::size_t> all(n + 1);
  for (std::size_t k = 0; k <= n; ++k) all[k] = k;
  faces.insert(all);
  std::vector<std::vector<std::size_t>> frontier(fsets.begin(), fsets.end());
  for (const auto& f : frontier) faces.insert(f);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& f : frontier)
      for (const auto& g : fsets) {
        std::vector<std::size_t> meet;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(meet));
        if (faces.insert(meet).second) next.push_back(meet);
      }
    frontier = std::move(next);
  }
  faces.insert({});

  Umbrella U;
  U.chart = chart;
  for (const auto& f : faces) {
    if (!f.empty() && f[0] == 0) continue;  // contains the lifted origin
    std::vector<std::size_t> cols;
    for (auto k : f) cols.push_back(k - 1);
    U.faces.push_back(make_face(A, cols));
  }
  std::sort(U.faces.begin(), U.faces.end());
  std::size_t top = 0;
  for (const auto& f : U.faces) top = std::max(top, f.rank);
  for (const auto& f : U.faces) U.facet.push_back(!f.empty() && f.rank == top);
  if (U.faces.size() == 1) U.facet[0] = true;
  return U;
}

std::vector<Face> facets(const Umbrella& U) {
  std::vector<Face> out;
  for (std::size_t k = 0; k < U.faces.size(); ++k)
    if (U.facet[k]) out.push_back(U.faces[k]);
  return out;
}

namespace {

std::vector<std::size_t> coloops(const std::vector<std::size_t>& members, const IntMatrix& A) {
  std::vector<std::size_t> out;
  if (members.empty()) return out;
  const std::size_t r = A.columns(members).rank();
  for (std::size_t k = 0; k < members.size(); ++k) {
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < members.size(); ++j)
      if (j != k) rest.push_back(members[j]);
    const std::size_t rr = rest.empty() ? 0 : A.columns(rest).rank();
    if (rr < r) out.push_back(members[k]);
  }
  return out;
}

}  // namespace

bool is_pyramid(const Face& tau, const IntMatrix& A) { return !coloops(tau.members, A).empty(); }

Face pyramid_core(const Face& tau, const IntMatrix& A) {
  // Coloops of a deletion are the remaining coloops, so one pass suffices.
  auto drop = coloops(tau.members, A);
  std::vector<std::size_t> keep;
  for (auto i : tau.members)
    if (!std::binary_search(drop.begin(), drop.end(), i)) keep.push_back(i);
  return make_face(A, keep);
}

}  // namespace bdm

#include "amoeba/newton_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace amoeba {

namespace {

long long cross(MonomialExponent o, MonomialExponent a, MonomialExponent b) {
  return (long long)(a.j - o.j) * (b.k - o.k) - (long long)(a.k - o.k) * (b.j - o.j);
}

// Andrew monotone chain; returns extreme points in CCW order (collinear
// points dropped). Input points are deduplicated.
std::vector<MonomialExponent> convex_hull(std::vector<MonomialExponent> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<MonomialExponent> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower hull
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

int NewtonPolygon::edge_length_sum() const {
  int s = 0;
  for (const auto& e : edges_) s += e.length;
  return s;
}

bool NewtonPolygon::contains(double px, double py, double tol) const {
  if (vertices_.empty()) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % vertices_.size()];
    double c = (b.j - a.j) * (py - a.k) - (b.k - a.k) * (px - a.j);
    if (c < -tol) return false;
  }
  return true;
}

std::vector<MonomialExponent> NewtonPolygon::lattice_points() const {
  std::vector<MonomialExponent> out;
  if (vertices_.empty()) return out;
  int jmin = vertices_[0].j, jmax = vertices_[0].j;
  int kmin = vertices_[0].k, kmax = vertices_[0].k;
  for (const auto& v : vertices_) {
    jmin = std::min(jmin, v.j); jmax = std::max(jmax, v.j);
    kmin = std::min(kmin, v.k); kmax = std::max(kmax, v.k);
  }
  for (int j = jmin; j <= jmax; ++j) {
    for (int k = kmin; k <= kmax; ++k) {
      if (degenerate_) {
        // point or segment: membership along the segment
        if (vertices_.size() == 1) {
          if (vertices_[0].j == j && vertices_[0].k == k) out.push_back({j, k});
          continue;
        }
        const auto& a = vertices_.front();
        const auto& b = vertices_.back();
        long long cr = (long long)(b.j - a.j) * (k - a.k) - (long long)(b.k - a.k) * (j - a.j);
        if (cr != 0) continue;
        long long dot = (long long)(j - a.j) * (b.j - a.j) + (long long)(k - a.k) * (b.k - a.k);
        long long len2 = (long long)(b.j - a.j) * (b.j - a.j) + (long long)(b.k - a.k) * (b.k - a.k);
        if (dot >= 0 && dot <= len2) out.push_back({j, k});
        continue;
      }
      if (contains(j, k)) out.push_back({j, k});
    }
  }
  return out;
}

NewtonPolygon polygon_from_points(std::vector<MonomialExponent> points) {
  std::vector<MonomialExponent> hull = convex_hull(std::move(points));
  const std::size_t n = hull.size();

  bool degenerate = n < 3;
  std::vector<PolygonEdge> edges;
  long long twice_area = 0;
  int boundary = 0;

  auto make_edge = [](MonomialExponent a, MonomialExponent b) {
    int dj = b.j - a.j, dk = b.k - a.k;
    int g = std::gcd(std::abs(dj), std::abs(dk));
    PolygonEdge e;
    e.start = a;
    e.primitive = {dj / g, dk / g};
    e.length = g;
    return e;
  };

  if (!degenerate) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = hull[i];
      const auto& b = hull[(i + 1) % n];
      twice_area += (long long)a.j * b.k - (long long)a.k * b.j;
      edges.push_back(make_edge(a, b));
      boundary += edges.back().length;
    }
  } else if (n == 2) {
    // Segment: both directed edges, so the edge-closure invariant holds and
    // edge polynomials remain well-defined for the two orientations.
    edges.push_back(make_edge(hull[0], hull[1]));
    edges.push_back(make_edge(hull[1], hull[0]));
    boundary = edges[0].length + 1;
  } else if (n == 1) {
    boundary = 1;
  }

  NewtonPolygon poly(hull, edges, twice_area, 0, boundary, degenerate);

  if (!degenerate) {
    // interior lattice count by direct enumeration (supports are small)
    int interior = 0;
    int jmin = hull[0].j, jmax = hull[0].j, kmin = hull[0].k, kmax = hull[0].k;
    for (const auto& v : hull) {
      jmin = std::min(jmin, v.j); jmax = std::max(jmax, v.j);
      kmin = std::min(kmin, v.k); kmax = std::max(kmax, v.k);
    }
    for (int j = jmin + 1; j < jmax; ++j) {
      for (int k = kmin + 1; k < kmax; ++k) {
        bool strict = true;
        for (std::size_t i = 0; i < n && strict; ++i) {
          if (cross(hull[i], hull[(i + 1) % n], {j, k}) <= 0) strict = false;
        }
        if (strict) ++interior;
      }
    }
    poly = NewtonPolygon(hull, edges, twice_area, interior, boundary, false);
  }
  return poly;
}

NewtonPolygon newton_polygon(const LaurentPolynomial& f) {
  if (f.empty()) {
    throw Error(ErrorCode::EmptyPolynomial, "newton_polygon: empty polynomial");
  }
  std::vector<MonomialExponent> pts;
  pts.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) pts.push_back(e);
  return polygon_from_points(std::move(pts));
}

std::vector<Complex> edge_polynomial(const LaurentPolynomial& f, const NewtonPolygon& polygon,
                                     std::size_t edge_index) {
  if (edge_index >= polygon.edges().size()) {
    throw Error(ErrorCode::InvalidArgument, "edge_polynomial: edge index out of range");
  }
  const PolygonEdge& e = polygon.edges()[edge_index];
  std::vector<Complex> coeffs(e.length + 1, Complex(0.0));
  for (int t = 0; t <= e.length; ++t) {
    MonomialExponent p{e.start.j + t * e.primitive.first, e.start.k + t * e.primitive.second};
    coeffs[t] = f.coefficient(p);
  }
  return coeffs;
}

}  // namespace amoeba

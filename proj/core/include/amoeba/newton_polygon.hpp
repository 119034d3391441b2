#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "amoeba/laurent.hpp"

namespace amoeba {

struct PolygonEdge {
  MonomialExponent start;           // start vertex, CCW orientation
  std::pair<int, int> primitive;    // primitive direction along the edge
  int length = 0;                   // integer length d_k (lattice points inside + 1)

  // Primitive outward normal: the edge direction rotated -90 degrees, which
  // points away from a counterclockwise polygon.
  std::pair<int, int> outward_normal() const {
    return {primitive.second, -primitive.first};
  }
};

// Convex hull of the exponent support of f, with the lattice data the rest of
// the library consumes: integer edge lengths d_k, interior lattice count g,
// and the (rational) lattice area held exactly as twice_area.
class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  NewtonPolygon(std::vector<MonomialExponent> vertices, std::vector<PolygonEdge> edges,
                long long twice_area, int interior_count, int boundary_count, bool degenerate)
      : vertices_(std::move(vertices)),
        edges_(std::move(edges)),
        twice_area_(twice_area),
        interior_count_(interior_count),
        boundary_count_(boundary_count),
        degenerate_(degenerate) {}

  const std::vector<MonomialExponent>& vertices() const { return vertices_; }
  const std::vector<PolygonEdge>& edges() const { return edges_; }
  long long twice_area() const { return twice_area_; }
  double area() const { return 0.5 * double(twice_area_); }
  int interior_count() const { return interior_count_; }   // g
  int boundary_count() const { return boundary_count_; }
  bool degenerate() const { return degenerate_; }          // point or segment

  int edge_length_sum() const;                              // sum of d_k
  bool contains(double px, double py, double tol = 0.0) const;

  // All lattice points of the closed polygon (interior + boundary).
  std::vector<MonomialExponent> lattice_points() const;

 private:
  std::vector<MonomialExponent> vertices_;  // CCW, extreme points only
  std::vector<PolygonEdge> edges_;
  long long twice_area_ = 0;
  int interior_count_ = 0;
  int boundary_count_ = 0;
  bool degenerate_ = true;
};

NewtonPolygon newton_polygon(const LaurentPolynomial& f);
NewtonPolygon polygon_from_points(std::vector<MonomialExponent> points);

// Truncation of f to edge k, rewritten along the primitive coordinate of the
// edge: coefficient t is the coefficient of f at start + t*primitive, so the
// result has degree d_k with nonzero constant and leading coefficients.
std::vector<Complex> edge_polynomial(const LaurentPolynomial& f, const NewtonPolygon& polygon,
                                     std::size_t edge_index);

}  // namespace amoeba

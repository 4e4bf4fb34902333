#pragma once

#include <random>
#include <utility>
#include <vector>

#include "zolo/errors.hpp"
#include "zolo/quadrature.hpp"

namespace zolo {

enum class RegionKind { disk, rectangle, polygon, curve };

// One term c * exp(2 pi i k t) of a periodic boundary parameterisation, t in [0, 1).
struct FourierTerm {
  int k;
  cplx c;
};

// A closed set bounded by a simple Jordan curve. The base shape is always bounded; a
// complement region is the closed exterior of that shape (used for the case where F is
// unbounded around E). Boundary parameterisations are positively oriented with respect
// to the region: counterclockwise for shapes, clockwise for complements.
class Region {
 public:
  static Region disk(cplx center, double radius);
  static Region rectangle(double re_lo, double re_hi, double im_lo, double im_hi);
  static Region polygon(std::vector<cplx> vertices);
  static Region curve(std::vector<FourierTerm> terms);
  static Region curve_from_samples(const std::vector<cplx>& samples);

  // z -> scale * z + shift applied to the base shape.
  Region transformed(cplx scale, cplx shift) const;
  Region negated() const { return transformed(-1.0, 0.0); }
  Region complement() const;

  RegionKind kind() const { return kind_; }
  bool is_complement() const { return complement_; }
  bool has_corners() const { return kind_ == RegionKind::rectangle || kind_ == RegionKind::polygon; }

  cplx center() const { return center_; }  // disk only
  double radius() const { return radius_; }  // disk only
  // Vertices of the base shape, counterclockwise.
  const std::vector<cplx>& vertices() const { return vertices_; }
  // Vertices in the orientation of the region (reversed for complements).
  std::vector<cplx> oriented_vertices() const;
  const std::vector<FourierTerm>& terms() const { return terms_; }

  cplx point_at(double t) const;
  cplx tangent_at(double t) const;  // d/dt of point_at
  cplx second_at(double t) const;   // d2/dt2 of point_at (zero on polygon edges)
  double perimeter() const;
  double diameter() const;  // bounding-box diagonal of the boundary
  std::pair<cplx, cplx> bbox() const;
  // Interior point of the base shape: disk centre or vertex/coefficient centroid.
  cplx anchor() const;

  double distance_to_boundary(cplx z) const;
  // Throws InvalidInput("boundary point") within 1e-12 * diameter of the boundary.
  bool contains(cplx z) const;

 private:
  Region() = default;
  void finish();
  cplx base_point(double s) const;
  cplx base_tangent(double s) const;
  bool inside_base(cplx z) const;

  RegionKind kind_ = RegionKind::disk;
  bool complement_ = false;
  cplx center_ = 0;
  double radius_ = 0;
  std::vector<cplx> vertices_;
  std::vector<double> cumlen_;  // polygon: cumulative edge length fractions, size n+1
  std::vector<FourierTerm> terms_;
  std::vector<cplx> dense_;  // curve: dense polyline used for containment and distances
  double perimeter_ = 0;
};

double rotation(const Region& r);
bool is_convex(const Region& r);
bool contains(const Region& r, cplx z);

// Quadrature for the boundary oriented positively with respect to the region.
// Disks and curves: periodic trapezoid with n_points nodes. Polygons: composite 8-point
// Gauss-Legendre panels per edge, graded geometrically towards both corners; the node
// count is at least n_points and usually larger.
BoundaryQuadrature boundary_samples(const Region& r, int n_points);

// Quadrature of the curve obtained by pushing the boundary a distance d away from the
// region (to the right of its positive orientation), with panels no longer than
// max_panel. Throws InvalidInput when the offset curve would not be simple.
BoundaryQuadrature offset_boundary(const Region& r, double d, double max_panel);

// Points uniformly distributed in the interior of a bounded region, by rejection from its
// bounding box.
std::vector<cplx> random_points(const Region& r, int count, std::mt19937_64& rng);

// Minimum distance between the two boundaries.
double boundary_gap(const Region& a, const Region& b);

// Case A1: two disjoint bounded sets. Case A2: b is a complement region whose bounded
// hole contains a. Throws InvalidInput("not disjoint") otherwise.
void check_disjoint(const Region& a, const Region& b);

}  // namespace zolo

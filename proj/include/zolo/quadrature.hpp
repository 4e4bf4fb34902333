#pragma once

#include <cstddef>
#include <vector>

#include "zolo/errors.hpp"

namespace zolo {

// Discretised closed contour: sum_j f(nodes[j]) * weights[j] ~ contour integral of f dz.
struct BoundaryQuadrature {
  std::vector<cplx> nodes;
  std::vector<cplx> weights;
  std::vector<double> params;  // position along the contour in [0, 1), same order as nodes

  std::size_t size() const { return nodes.size(); }
  double length() const;    // sum |w_j|
  double diameter() const;  // bounding-box diagonal of the nodes
  double distance(cplx z) const;  // distance from z to the nearest node
  std::size_t nearest(cplx z) const;
  // Crossing-number test against the node polyline; robust right up to the contour.
  bool encloses(cplx z) const;
};

enum class Side { interior, exterior };

// Plain transforms (1/2 pi i) sum f_j w_j / (z_j - z). They throw InvalidInput when the
// computed winding number shows z on the wrong side of the contour.
cplx cauchy_plus(const std::vector<cplx>& values, const BoundaryQuadrature& q, cplx z);
cplx cauchy_minus(const std::vector<cplx>& values, const BoundaryQuadrature& q, cplx z);

// Singularity subtraction: p interpolates f at up to five nodes around the nearest one and
// g = f - p goes through the plain rule. Interior adds p(z); exterior adds nothing.
cplx cauchy_stabilized(const std::vector<cplx>& values, const BoundaryQuadrature& q, cplx z,
                       Side side);

// Plain form when z is farther than 0.05 * diameter from the contour, stabilized otherwise.
cplx cauchy_auto(const std::vector<cplx>& values, const BoundaryQuadrature& q, cplx z,
                 Side side);

int winding_number(const BoundaryQuadrature& q, cplx z);

// Winding number of a closed sampled curve about a point, by phase tracking.
// Throws NumericalFailure when consecutive samples turn by more than maxstep radians.
int phase_winding(const std::vector<cplx>& curve, cplx about, double maxstep = 1.0);

// Gauss-Legendre rule on [0, 1] with 8 or 16 points.
struct UnitRule {
  std::vector<double> x, w;
};
const UnitRule& gauss_legendre(int order);

}  // namespace zolo

#ifndef SDRES_POLYTOPE_HPP
#define SDRES_POLYTOPE_HPP

#include <sdres/rat.hpp>

#include <vector>

namespace sdres {

using Point = std::vector<Rat>;

// Convex polytope given by a generating point set in Q^dim (the stored
// points are deduplicated; interior points are harmless).
struct Polytope {
  int dim = 0;
  std::vector<Point> points;
};

Polytope make_polytope(int dim, std::vector<Point> points);

// drop points that are not vertices of the hull (full-dimensional input;
// lower-dimensional polytopes are returned deduplicated only)
Polytope reduce_to_vertices(const Polytope& p);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);

// exact dim-dimensional volume of the convex hull
Rat polytope_volume(const Polytope& p);

// inclusion-exclusion mixed volume of dim polytopes in Q^dim; integer for
// lattice inputs
Int mixed_volume(const std::vector<Polytope>& qs);

}  // namespace sdres

#endif

#include "nsvlab/grid.hpp"

#include "nsvlab/errors.hpp"

namespace nsv {

Grid::Grid(int dimension, int points_per_dim, double box_length)
    : dim_(dimension), npts_(points_per_dim), length_(box_length) {
  if (dimension != 3)
    throw ValidationError("Grid: only dimension 3 is supported on the grid path");
  if (points_per_dim < 4 || points_per_dim % 2 != 0)
    throw ValidationError("Grid: points_per_dim must be even and >= 4");
  if (!(box_length > 0.0))
    throw ValidationError("Grid: box_length must be positive");
}

}  // namespace nsv

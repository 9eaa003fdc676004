#pragma once

// Data-parallel scans over sample grids. Each OpenMP kernel has a serial
// twin with identical semantics that the tests compare against.

#include "ncg/alg_element.hpp"

#include <span>
#include <vector>

namespace ncg {

using Point = std::vector<double>;

/// Uniform grid 2 pi j / per_axis on each of the d axes, row-major.
std::vector<Point> sample_grid(int d, int per_axis);

/// Largest entry modulus of any element over all grid points.
double grid_sup_norm(std::span<AlgElement const> elems, int per_axis = 16);
double grid_sup_norm_serial(std::span<AlgElement const> elems, int per_axis = 16);

inline double grid_sup_norm(AlgElement const &e, int per_axis = 16)
{
	return grid_sup_norm(std::span<AlgElement const>(&e, 1), per_axis);
}

} // namespace ncg

#pragma once

#include <random>
#include <vector>

#include "skeleta/complex.hpp"

namespace skeleta {

/// Uniformly chosen interior point of a stratum whose coordinates share a
/// denominator q with dim+1 <= q <= max_denominator (q is raised to dim+1 if
/// needed).
SkeletonPoint random_interior_point(const DualComplex& dc, const std::string& stratum,
                                    std::mt19937_64& rng, long max_denominator = 12);

/// Every interior point of the stratum whose coordinates have a common
/// denominator q <= max_denominator.
std::vector<SkeletonPoint> interior_grid(const DualComplex& dc, const std::string& stratum,
                                         long max_denominator);

}  // namespace skeleta

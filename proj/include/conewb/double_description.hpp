#pragma once

#include "conewb/linalg.hpp"

#include <vector>

namespace conewb {

/// Generator description of {x : <a_i, x> >= 0 for all rows a_i}.
struct RayDescription {
    /// Extreme rays of the cone intersected with the orthogonal complement
    /// of the lineality space; primitive integer vectors, sorted.
    std::vector<RatVector> rays;
    /// HNF basis of the saturated lattice of the lineality space.
    std::vector<RatVector> lineality;
};

/// Double description method with exact arithmetic. The lineality space is
/// split off first; the pointed remainder is built row by row starting from
/// a simplicial cone, combining only adjacent ray pairs (algebraic rank test).
RayDescription extreme_rays(std::span<const RatVector> inequalities, std::size_t dim);

} // namespace conewb

#pragma once

#include "conewb/cone.hpp"
#include "conewb/group.hpp"

#include <cstdint>
#include <vector>

namespace conewb {

struct SampleOptions {
    /// Coefficient numerators and denominators are drawn from [1, max_denominator].
    std::uint64_t max_denominator = 16;
    /// Lorentzian cones: the interior basis is closed under words of this length.
    std::size_t orbit_depth = 2;
};

/// Reproducible rational points of the open cone C: positive combinations
/// of a fixed interior basis (plus free multiples of the lineality space
/// for polyhedral cones). Same (cone, group, count, seed, options) gives the
/// same list on every platform.
std::vector<RatVector> sample_cone(const ConeRef& cone, const GroupSpec& group, std::size_t count, std::uint64_t seed,
                                   const SampleOptions& options = {});

} // namespace conewb

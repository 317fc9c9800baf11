#pragma once

#include "conewb/linalg.hpp"

#include <optional>
#include <vector>

namespace conewb {

/// A system of linear constraints over rational variables:
///   ge_rows[i] . x >= ge_rhs[i],   eq_rows[j] . x = eq_rhs[j],
/// with x_k >= 0 for every k flagged in `nonnegative` (free otherwise).
struct FeasibilityProblem {
    std::size_t num_vars = 0;
    std::vector<RatVector> ge_rows;
    RatVector ge_rhs;
    std::vector<RatVector> eq_rows;
    RatVector eq_rhs;
    std::vector<bool> nonnegative; // empty means all free
};

/// Exact phase-one simplex with Bland's rule. Returns a feasible point or
/// nothing when the system is infeasible.
std::optional<RatVector> find_feasible_point(const FeasibilityProblem& problem);

/// Whether the homogeneous inequality <candidate, x> >= 0 is implied by
/// <row, x> >= 0 for all rows, i.e. {rows >= 0, candidate <= -1} is empty.
bool inequality_implied(std::span<const RatVector> rows, std::span<const Rational> candidate);

/// Nonnegative coefficients lambda and free coefficients mu with
///   x = sum lambda_i generators_i + sum mu_j lineality_j,
/// or nothing when x is outside the cone.
struct ConeCombination {
    RatVector generator_coefficients;
    RatVector lineality_coefficients;
};
std::optional<ConeCombination> cone_combination(std::span<const RatVector> generators,
                                                std::span<const RatVector> lineality,
                                                std::span<const Rational> x);

} // namespace conewb

#pragma once

#include "conewb/linalg.hpp"

#include <vector>

namespace conewb {

/// Row-style Hermite normal form of the lattice spanned by integer vectors.
/// Zero rows are dropped; pivots are positive and entries above each pivot
/// are reduced into [0, pivot). The result depends only on the lattice.
std::vector<RatVector> hermite_normal_form(std::vector<RatVector> rows, std::size_t dim);

/// HNF basis of {y in Z^dim : <v, y> = 0 for every v in vectors}.
/// Vectors may be rational; they are scaled to integers first.
std::vector<RatVector> integer_kernel(std::span<const RatVector> vectors, std::size_t dim);

/// HNF basis of the saturated lattice span(vectors) ∩ Z^dim.
std::vector<RatVector> saturated_basis(std::span<const RatVector> vectors, std::size_t dim);

/// Integer matrix P whose kernel is span(subspace) and which maps Z^dim onto
/// Z^(dim-k). Rows are the HNF basis of the integer functionals vanishing
/// on the subspace, so the quotient coordinates are deterministic.
RatMatrix quotient_map(std::span<const RatVector> subspace, std::size_t dim);

} // namespace conewb

#include "conewb/double_description.hpp"

#include "conewb/errors.hpp"
#include "conewb/lattice.hpp"

#include <algorithm>

namespace conewb {

namespace {

void sort_unique(std::vector<RatVector>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

RayDescription extreme_rays(std::span<const RatVector> inequalities, std::size_t dim) {
    std::vector<RatVector> rows;
    for (const auto& a : inequalities) {
        if (a.size() != dim) {
            throw DimensionError("extreme_rays: inequality of length " + std::to_string(a.size()) +
                                 " in dimension " + std::to_string(dim));
        }
        if (!is_zero(a)) {
            rows.push_back(a);
        }
    }

    RayDescription out;
    if (dim == 0) {
        return out;
    }
    if (rows.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            out.lineality.push_back(unit_vector(dim, i));
        }
        return out;
    }

    const auto a = RatMatrix::from_rows(rows, dim);
    const auto kernel = kernel_basis(a);
    if (!kernel.empty()) {
        out.lineality = saturated_basis(kernel, dim);
    }

    // Coordinates on the row space: x = sum_i z_i basis_i.
    const auto ech = row_reduce(a);
    const std::size_t k = ech.pivots.size();
    std::vector<RatVector> basis;
    for (std::size_t i = 0; i < k; ++i) {
        basis.push_back(ech.reduced.row(i));
    }
    std::vector<RatVector> reduced_rows;
    reduced_rows.reserve(rows.size());
    for (const auto& r : rows) {
        RatVector rr(k);
        for (std::size_t i = 0; i < k; ++i) {
            rr[i] = dot(r, basis[i]);
        }
        reduced_rows.push_back(std::move(rr));
    }

    // Simplicial start from k independent rows.
    std::vector<std::size_t> processed;
    std::vector<RatVector> chosen;
    for (std::size_t i = 0; i < reduced_rows.size() && chosen.size() < k; ++i) {
        chosen.push_back(reduced_rows[i]);
        if (rank(chosen, k) == chosen.size()) {
            processed.push_back(i);
        } else {
            chosen.pop_back();
        }
    }
    const auto start_inv = inverse(RatMatrix::from_rows(chosen, k));
    if (!start_inv) {
        throw Error("extreme_rays: initial simplicial cone is singular");
    }
    std::vector<RatVector> cone_rays;
    for (std::size_t j = 0; j < k; ++j) {
        cone_rays.push_back(primitive_integer_ray(start_inv->column(j)));
    }

    std::vector<bool> is_processed(reduced_rows.size(), false);
    for (auto i : processed) {
        is_processed[i] = true;
    }

    for (std::size_t idx = 0; idx < reduced_rows.size(); ++idx) {
        if (is_processed[idx]) {
            continue;
        }
        const auto& row = reduced_rows[idx];
        std::vector<Rational> values(cone_rays.size());
        bool any_negative = false;
        for (std::size_t r = 0; r < cone_rays.size(); ++r) {
            values[r] = dot(row, cone_rays[r]);
            any_negative = any_negative || values[r].sign() < 0;
        }
        if (any_negative) {
            std::vector<std::vector<std::size_t>> tight(cone_rays.size());
            for (std::size_t r = 0; r < cone_rays.size(); ++r) {
                for (auto p : processed) {
                    if (dot(reduced_rows[p], cone_rays[r]).is_zero()) {
                        tight[r].push_back(p);
                    }
                }
            }
            std::vector<RatVector> next;
            for (std::size_t r = 0; r < cone_rays.size(); ++r) {
                if (values[r].sign() >= 0) {
                    next.push_back(cone_rays[r]);
                }
            }
            if (k >= 2) {
                for (std::size_t p = 0; p < cone_rays.size(); ++p) {
                    if (values[p].sign() <= 0) {
                        continue;
                    }
                    for (std::size_t n = 0; n < cone_rays.size(); ++n) {
                        if (values[n].sign() >= 0) {
                            continue;
                        }
                        std::vector<std::size_t> common;
                        std::set_intersection(tight[p].begin(), tight[p].end(), tight[n].begin(), tight[n].end(),
                                              std::back_inserter(common));
                        if (common.size() + 2 < k) {
                            continue;
                        }
                        std::vector<RatVector> common_rows;
                        for (auto c : common) {
                            common_rows.push_back(reduced_rows[c]);
                        }
                        if (rank(common_rows, k) != k - 2) {
                            continue;
                        }
                        auto combo = sub(scale(values[p], cone_rays[n]), scale(values[n], cone_rays[p]));
                        next.push_back(primitive_integer_ray(combo));
                    }
                }
            }
            sort_unique(next);
            cone_rays = std::move(next);
        }
        processed.push_back(idx);
        std::sort(processed.begin(), processed.end());
        is_processed[idx] = true;
    }

    for (const auto& z : cone_rays) {
        RatVector x(dim);
        for (std::size_t i = 0; i < k; ++i) {
            if (!z[i].is_zero()) {
                x = add(x, scale(z[i], basis[i]));
            }
        }
        out.rays.push_back(primitive_integer_ray(x));
    }
    sort_unique(out.rays);
    return out;
}

} // namespace conewb

#pragma once

// Random cone generators and the two-route quotient check shared by the
// unit and acceptance suites.

#include "conewb/cone.hpp"
#include "conewb/linalg.hpp"

#include "oracles.hpp"

namespace testgen {

using namespace conewb;

/// 1 to 2d+1 small integer vectors, at least one nonzero.
inline std::vector<RatVector> random_generators(oracle::Gen& gen, std::size_t d) {
    while (true) {
        const auto n = static_cast<std::size_t>(gen.integer(1, static_cast<long>(2 * d + 1)));
        std::vector<RatVector> out;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(gen.int_vector(d, 3));
        }
        if (std::any_of(out.begin(), out.end(), [](const RatVector& v) { return !is_zero(v); })) {
            return out;
        }
    }
}

inline std::vector<RatVector> full_dimensional_generators(oracle::Gen& gen, std::size_t d) {
    while (true) {
        const auto n = static_cast<std::size_t>(gen.integer(static_cast<long>(d), static_cast<long>(2 * d + 2)));
        std::vector<RatVector> out;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(gen.int_vector(d, 3));
        }
        if (rank(out, d) == d) {
            return out;
        }
    }
}

/// Cone(G) + W with W of dimension 1 or 2 in dimension 2..5.
inline PolyCone random_degenerate_cone(oracle::Gen& gen) {
    while (true) {
        const auto d = static_cast<std::size_t>(gen.integer(2, 5));
        const auto k = static_cast<std::size_t>(gen.integer(1, std::min<long>(2, static_cast<long>(d) - 1)));
        std::vector<RatVector> rays;
        for (std::size_t i = 0; i < k; ++i) {
            auto w = gen.int_vector(d, 2);
            rays.push_back(w);
            rays.push_back(negate(w));
        }
        const auto extra = static_cast<std::size_t>(gen.integer(1, static_cast<long>(d) + 1));
        for (std::size_t i = 0; i < extra; ++i) {
            rays.push_back(gen.int_vector(d, 3));
        }
        if (std::all_of(rays.begin(), rays.end(), [](const RatVector& v) { return is_zero(v); })) {
            continue;
        }
        auto c = PolyCone::from_rays(d, rays);
        if (!c.is_pointed()) {
            return c;
        }
    }
}

/// Closure commutes with projection and (C~)+ = (C+)~, compared through two
/// independent descriptions of the image: projected generators, and the
/// cone's facets factored through P (each facet vanishes on W, so n = P^T m).
inline bool quotient_lemma_holds(const PolyCone& c, const Quotient& q) {
    const std::size_t qd = q.projection.rows();
    const auto& by_generators = std::get<PolyCone>(q.cone);
    std::vector<RatVector> factored;
    const auto pt = q.projection.transpose();
    for (const auto& n : c.facets()) {
        const auto s = solve_linear(pt, n);
        if (!s.particular) {
            return false;
        }
        factored.push_back(*s.particular);
    }
    const auto by_facets = PolyCone::from_inequalities(qd, factored);
    if (!same_set(by_generators, by_facets)) {
        return false;
    }
    // (C+)~ inside (C~)+: projections of rational points of the closure
    for (const auto& g : c.spanning_set()) {
        if (!cplus_membership(ConeRef{by_generators}, q.projection * g)) {
            return false;
        }
    }
    // (C~)+ inside (C+)~: every generator of the image lifts into the closure
    for (const auto& g : by_generators.spanning_set()) {
        const auto lift = q.section * g;
        if (!cplus_membership(ConeRef{c}, lift) || q.projection * lift != g) {
            return false;
        }
    }
    return true;
}

} // namespace testgen

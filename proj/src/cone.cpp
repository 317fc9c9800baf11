#include "conewb/cone.hpp"

#include "conewb/double_description.hpp"
#include "conewb/errors.hpp"
#include "conewb/lattice.hpp"

#include <algorithm>

namespace conewb {

namespace {

void check_lengths(std::span<const RatVector> vs, std::size_t dim, const char* what) {
    for (const auto& v : vs) {
        if (v.size() != dim) {
            throw DimensionError(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                                 " in dimension " + std::to_string(dim));
        }
    }
}

// Irredundant facet normals of Cone(spanning): extreme rays of the dual
// plus a +/- pair per equation.
std::vector<RatVector> facets_of(std::span<const RatVector> spanning, std::size_t dim) {
    const auto dual = extreme_rays(spanning, dim);
    std::vector<RatVector> facets = dual.rays;
    for (const auto& b : dual.lineality) {
        facets.push_back(b);
        facets.push_back(negate(b));
    }
    std::sort(facets.begin(), facets.end());
    return facets;
}

} // namespace

PolyCone PolyCone::from_rays(std::size_t dim, std::span<const RatVector> rays) {
    check_lengths(rays, dim, "PolyCone::from_rays");
    PolyCone c;
    c.dim_ = dim;
    c.facets_ = facets_of(rays, dim);
    auto desc = extreme_rays(c.facets_, dim);
    c.generators_ = std::move(desc.rays);
    c.lineality_ = std::move(desc.lineality);
    return c;
}

PolyCone PolyCone::from_inequalities(std::size_t dim, std::span<const RatVector> normals) {
    check_lengths(normals, dim, "PolyCone::from_inequalities");
    PolyCone c;
    c.dim_ = dim;
    auto desc = extreme_rays(normals, dim);
    c.generators_ = std::move(desc.rays);
    c.lineality_ = std::move(desc.lineality);
    c.facets_ = facets_of(c.spanning_set(), dim);
    return c;
}

std::size_t PolyCone::span_dimension() const {
    return rank(spanning_set(), dim_);
}

std::vector<RatVector> PolyCone::spanning_set() const {
    std::vector<RatVector> out = generators_;
    for (const auto& l : lineality_) {
        out.push_back(l);
        out.push_back(negate(l));
    }
    return out;
}

bool PolyCone::contains(std::span<const Rational> x) const {
    if (x.size() != dim_) {
        throw DimensionError("PolyCone::contains: dimension mismatch");
    }
    return std::all_of(facets_.begin(), facets_.end(), [&](const RatVector& n) { return dot(n, x).sign() >= 0; });
}

bool PolyCone::contains_in_interior(std::span<const Rational> x) const {
    if (x.size() != dim_) {
        throw DimensionError("PolyCone::contains_in_interior: dimension mismatch");
    }
    return std::all_of(facets_.begin(), facets_.end(), [&](const RatVector& n) { return dot(n, x).sign() > 0; });
}

bool PolyCone::contains(const PolyCone& other) const {
    if (other.dim_ != dim_) {
        throw DimensionError("PolyCone::contains: dimension mismatch");
    }
    const auto span = other.spanning_set();
    return std::all_of(span.begin(), span.end(), [&](const RatVector& g) { return contains(g); });
}

PolyCone PolyCone::transformed(const RatMatrix& m) const {
    if (m.rows() != dim_ || m.cols() != dim_) {
        throw DimensionError("PolyCone::transformed: matrix shape mismatch");
    }
    std::vector<RatVector> images;
    for (const auto& g : spanning_set()) {
        images.push_back(m * g);
    }
    return from_rays(dim_, images);
}

bool same_set(const PolyCone& a, const PolyCone& b) { return a.contains(b) && b.contains(a); }

PolyCone cone_from_generators(std::span<const RatVector> gens) {
    if (gens.empty()) {
        throw InvalidInput("cone_from_generators: empty generator list");
    }
    const std::size_t dim = gens.front().size();
    check_lengths(gens, dim, "cone_from_generators");
    if (std::all_of(gens.begin(), gens.end(), [](const RatVector& g) { return is_zero(g); })) {
        throw InvalidInput("cone_from_generators: all generators are zero");
    }
    return PolyCone::from_rays(dim, gens);
}

PolyCone cone_from_facets(std::span<const RatVector> normals) {
    if (normals.empty()) {
        throw InvalidInput("cone_from_facets: empty list needs an explicit dimension");
    }
    return PolyCone::from_inequalities(normals.front().size(), normals);
}

PolyCone cone_from_facets(std::span<const RatVector> normals, std::size_t dim) {
    return PolyCone::from_inequalities(dim, normals);
}

PolyCone dual_cone(const PolyCone& c) { return PolyCone::from_rays(c.dim(), c.facets()); }

Signature signature(const RatMatrix& symmetric) {
    if (!symmetric.is_symmetric()) {
        throw InvalidInput("signature: matrix is not symmetric");
    }
    RatMatrix a = symmetric;
    const std::size_t n = a.rows();
    Signature s;
    // Congruence a -> E a E^T, one pivot at a time.
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t pivot = n;
        for (std::size_t i = p; i < n; ++i) {
            if (!a(i, i).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) {
            // No usable diagonal entry: e_p <- e_p + e_j turns a(p, j) != 0
            // into the diagonal entry 2 a(p, j).
            std::size_t row = n;
            std::size_t col = n;
            for (std::size_t i = p; i < n && row == n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!a(i, j).is_zero()) {
                        row = i;
                        col = j;
                        break;
                    }
                }
            }
            if (row == n) {
                s.zero += n - p;
                return s;
            }
            for (std::size_t k = 0; k < n; ++k) {
                a(row, k) += a(col, k);
            }
            for (std::size_t k = 0; k < n; ++k) {
                a(k, row) += a(k, col);
            }
            pivot = row;
        }
        if (pivot != p) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a(p, k), a(pivot, k));
            }
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a(k, p), a(k, pivot));
            }
        }
        const Rational d = a(p, p);
        for (std::size_t i = p + 1; i < n; ++i) {
            if (a(i, p).is_zero()) {
                continue;
            }
            const Rational f = a(i, p) / d;
            for (std::size_t k = p; k < n; ++k) {
                a(i, k) -= f * a(p, k);
            }
            for (std::size_t k = p; k < n; ++k) {
                a(k, i) = a(i, k);
            }
        }
        if (d.sign() > 0) {
            ++s.positive;
        } else {
            ++s.negative;
        }
    }
    return s;
}

QuadCone QuadCone::make(RatMatrix form, RatVector selector) {
    if (form.rows() != form.cols() || form.rows() != selector.size()) {
        throw DimensionError("QuadCone: form is " + std::to_string(form.rows()) + "x" + std::to_string(form.cols()) +
                             " but selector has length " + std::to_string(selector.size()));
    }
    if (selector.empty()) {
        throw InvalidInput("QuadCone: dimension must be positive");
    }
    if (!form.is_symmetric()) {
        throw InvalidInput("QuadCone: form is not symmetric");
    }
    const auto sig = signature(form);
    if (sig.positive != 1 || sig.zero != 0) {
        throw InvalidInput("QuadCone: form has signature (" + std::to_string(sig.positive) + ", " +
                           std::to_string(sig.negative) + ", " + std::to_string(sig.zero) +
                           "), expected (1, " + std::to_string(selector.size() - 1) + ")");
    }
    QuadCone c;
    c.form_ = std::move(form);
    c.selector_ = std::move(selector);
    if (c.quadratic(c.selector_).sign() <= 0) {
        throw InvalidInput("QuadCone: selector h must satisfy q(h) > 0");
    }
    return c;
}

Rational QuadCone::quadratic(std::span<const Rational> x) const { return pairing(x, x); }

Rational QuadCone::pairing(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != dim() || y.size() != dim()) {
        throw DimensionError("QuadCone::pairing: dimension mismatch");
    }
    return dot(x, form_ * y);
}

bool QuadCone::in_closure(std::span<const Rational> x) const {
    return quadratic(x).sign() >= 0 && pairing(x, selector_).sign() >= 0;
}

bool QuadCone::in_open_cone(std::span<const Rational> x) const {
    return quadratic(x).sign() > 0 && pairing(x, selector_).sign() > 0;
}

std::size_t cone_dim(const ConeRef& c) {
    return std::visit([](const auto& v) { return v.dim(); }, c);
}

std::vector<RatVector> lineality_space(const ConeRef& c) {
    if (const auto* p = std::get_if<PolyCone>(&c)) {
        return p->lineality_basis();
    }
    return {};
}

bool cplus_membership(const ConeRef& c, std::span<const Rational> x) {
    if (x.size() != cone_dim(c)) {
        throw DimensionError("cplus_membership: point of length " + std::to_string(x.size()) + " in dimension " +
                             std::to_string(cone_dim(c)));
    }
    if (is_zero(x)) {
        return true;
    }
    if (const auto* p = std::get_if<PolyCone>(&c)) {
        return p->contains(x);
    }
    // A rational point of the closure spans a rational ray, so C+ and the
    // closure agree on representable inputs.
    const auto& q = std::get<QuadCone>(c);
    return q.quadratic(x).sign() >= 0 && q.pairing(x, q.selector()).sign() > 0;
}

bool open_membership(const ConeRef& c, std::span<const Rational> x) {
    if (x.size() != cone_dim(c)) {
        throw DimensionError("open_membership: dimension mismatch");
    }
    if (const auto* p = std::get_if<PolyCone>(&c)) {
        return p->contains_in_interior(x);
    }
    return std::get<QuadCone>(c).in_open_cone(x);
}

Quotient project_quotient(const ConeRef& c, std::span<const RatVector> subspace) {
    const std::size_t dim = cone_dim(c);
    check_lengths(subspace, dim, "project_quotient");
    std::vector<RatVector> w;
    for (const auto& v : subspace) {
        if (!is_zero(v)) {
            w.push_back(v);
        }
    }
    if (w.empty()) {
        return Quotient{c, RatMatrix::identity(dim), RatMatrix::identity(dim), {}};
    }
    const auto* poly = std::get_if<PolyCone>(&c);
    if (poly == nullptr) {
        throw PreconditionFailed("project_quotient: W is not contained in the lineality space of the closed cone "
                                 "(a Lorentzian cone has none)");
    }
    for (const auto& v : w) {
        for (const auto& n : poly->facets()) {
            if (!dot(n, v).is_zero()) {
                throw PreconditionFailed("project_quotient: W is not contained in the lineality space of the "
                                         "closed cone; " + to_string(v) + " leaves it");
            }
        }
    }
    Quotient out{c, quotient_map(w, dim), RatMatrix(), saturated_basis(w, dim)};
    const std::size_t qdim = out.projection.rows();
    out.section = RatMatrix(dim, qdim);
    for (std::size_t j = 0; j < qdim; ++j) {
        const auto sol = solve_linear(out.projection, unit_vector(qdim, j));
        for (std::size_t i = 0; i < dim; ++i) {
            out.section(i, j) = sol.particular->at(i);
        }
    }
    std::vector<RatVector> images;
    for (const auto& g : poly->spanning_set()) {
        images.push_back(out.projection * g);
    }
    out.cone = PolyCone::from_rays(qdim, images);
    return out;
}

} // namespace conewb

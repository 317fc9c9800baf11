#pragma once

#include "conewb/linalg.hpp"

#include <variant>
#include <vector>

namespace conewb {

/// Closed rational polyhedral cone held in double description:
///   cone = Cone(generators) + span(lineality)
///        = {x : <x, n> >= 0 for every facet normal n}.
/// Both lists are canonical (primitive integer vectors, sorted), so two
/// PolyCones built from the same set compare equal. Lower-dimensional
/// cones carry their defining equations as facet pairs {n, -n}.
class PolyCone {
public:
    /// Cone generated by the given vectors; zero vectors are ignored and an
    /// empty list gives the zero cone {0}.
    static PolyCone from_rays(std::size_t dim, std::span<const RatVector> rays);

    /// {x : <x, n> >= 0 for all n}; an empty list gives the whole space.
    static PolyCone from_inequalities(std::size_t dim, std::span<const RatVector> normals);

    /// The zero cone in the zero space.
    PolyCone() = default;

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<RatVector>& generators() const { return generators_; }
    [[nodiscard]] const std::vector<RatVector>& facets() const { return facets_; }
    [[nodiscard]] const std::vector<RatVector>& lineality_basis() const { return lineality_; }

    [[nodiscard]] bool is_pointed() const { return lineality_.empty(); }
    /// Dimension of the linear span of the cone.
    [[nodiscard]] std::size_t span_dimension() const;
    [[nodiscard]] bool is_full_dimensional() const { return span_dimension() == dim_; }

    /// Generators followed by +/- each lineality vector: a plain generating
    /// set of the cone.
    [[nodiscard]] std::vector<RatVector> spanning_set() const;

    [[nodiscard]] bool contains(std::span<const Rational> x) const;
    /// Strict inequality on every facet; false for lower-dimensional cones.
    [[nodiscard]] bool contains_in_interior(std::span<const Rational> x) const;
    [[nodiscard]] bool contains(const PolyCone& other) const;

    /// Image under an invertible linear map.
    [[nodiscard]] PolyCone transformed(const RatMatrix& m) const;

    /// Set equality by mutual containment.
    friend bool same_set(const PolyCone& a, const PolyCone& b);

private:
    std::size_t dim_ = 0;
    std::vector<RatVector> generators_;
    std::vector<RatVector> facets_;
    std::vector<RatVector> lineality_;
};

/// Cone(gens) in double description. Throws InvalidInput for an empty or
/// all-zero list and DimensionError for mixed lengths.
PolyCone cone_from_generators(std::span<const RatVector> gens);

/// {x : <x, n> >= 0}. The dimension comes from the normals; an empty list
/// needs the explicit overload.
PolyCone cone_from_facets(std::span<const RatVector> normals);
PolyCone cone_from_facets(std::span<const RatVector> normals, std::size_t dim);

/// C* = {y : <x, y> >= 0 for all x in C} under the standard pairing.
PolyCone dual_cone(const PolyCone& c);

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric rational matrix by exact congruence
/// diagonalization (Sylvester's law).
Signature signature(const RatMatrix& symmetric);

/// Lorentzian cone {x : q(x) >= 0, <x, h>_Q >= 0} of an integral-or-rational
/// symmetric form of signature (1, dim-1), where q(x) = x^T Q x and the
/// selector h (q(h) > 0) picks one of the two nappes.
class QuadCone {
public:
    /// Throws InvalidInput when Q is not symmetric, has the wrong signature,
    /// or q(h) <= 0; DimensionError on shape mismatch.
    static QuadCone make(RatMatrix form, RatVector selector);

    [[nodiscard]] std::size_t dim() const { return selector_.size(); }
    [[nodiscard]] const RatMatrix& form() const { return form_; }
    [[nodiscard]] const RatVector& selector() const { return selector_; }

    [[nodiscard]] Rational quadratic(std::span<const Rational> x) const;
    [[nodiscard]] Rational pairing(std::span<const Rational> x, std::span<const Rational> y) const;

    [[nodiscard]] bool in_closure(std::span<const Rational> x) const;
    [[nodiscard]] bool in_open_cone(std::span<const Rational> x) const;

private:
    QuadCone() = default;
    RatMatrix form_;
    RatVector selector_;
};

using ConeRef = std::variant<PolyCone, QuadCone>;

std::size_t cone_dim(const ConeRef& c);

/// Basis of the maximal linear subspace of the closed cone; always empty
/// for a Lorentzian cone.
std::vector<RatVector> lineality_space(const ConeRef& c);

/// Membership in C+ = Conv(closure(C) ∩ V(Q)) for a rational point. The
/// origin belongs to every cone.
bool cplus_membership(const ConeRef& c, std::span<const Rational> x);

/// Membership in the open cone C (interior of the closure).
bool open_membership(const ConeRef& c, std::span<const Rational> x);

/// Image of a cone under p : V -> V/W in lattice coordinates.
struct Quotient {
    ConeRef cone;
    RatMatrix projection;           // P, (dim - k) x dim integer, ker P = W
    RatMatrix section;              // S, dim x (dim - k) with P S = I
    std::vector<RatVector> subspace; // HNF basis of W ∩ Z^dim
};

/// Throws PreconditionFailed when W is not inside the lineality space of
/// the closed cone.
Quotient project_quotient(const ConeRef& c, std::span<const RatVector> subspace);

} // namespace conewb

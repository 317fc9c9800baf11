#pragma once

#include "conewb/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace conewb {

using RatVector = std::vector<Rational>;

RatVector zero_vector(std::size_t dim);
RatVector unit_vector(std::size_t dim, std::size_t i);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RatVector add(std::span<const Rational> a, std::span<const Rational> b);
RatVector sub(std::span<const Rational> a, std::span<const Rational> b);
RatVector scale(const Rational& s, std::span<const Rational> v);
RatVector negate(std::span<const Rational> v);
bool is_zero(std::span<const Rational> v);

/// The unique integer vector with coprime entries on the ray R_{>0} * v.
/// Throws InvalidInput for the zero vector.
RatVector primitive_integer_ray(std::span<const Rational> v);

/// "(a, b, c)"
std::string to_string(std::span<const Rational> v);

/// Dense row-major rational matrix. Zero-row and zero-column shapes are
/// allowed so that quotients by the whole space stay representable.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    /// Throws DimensionError on ragged input.
    static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);
    static RatMatrix from_columns(std::span<const RatVector> cols, std::size_t rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] RatVector row(std::size_t r) const;
    [[nodiscard]] RatVector column(std::size_t c) const;
    [[nodiscard]] RatMatrix transpose() const;
    [[nodiscard]] bool is_integral() const;
    [[nodiscard]] bool is_symmetric() const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
    friend std::strong_ordering operator<=>(const RatMatrix& a, const RatMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, std::span<const Rational> x);
std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

struct RowEchelon {
    RatMatrix reduced;               // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

RowEchelon row_reduce(RatMatrix m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(std::span<const RatVector> vectors, std::size_t dim);

/// Basis of {x : A x = 0}, one vector per free column of the echelon form.
std::vector<RatVector> kernel_basis(const RatMatrix& a);

struct LinearSolution {
    std::optional<RatVector> particular; // absent when A x = b is inconsistent
    std::vector<RatVector> kernel;
};

/// One exact solution of A x = b together with a basis of ker A.
/// Throws DimensionError when A.rows() != b.size().
LinearSolution solve_linear(const RatMatrix& a, std::span<const Rational> b);

std::optional<RatMatrix> inverse(const RatMatrix& a);
Rational determinant(const RatMatrix& a);

/// Basis of the orthogonal complement of span(vectors) under the standard
/// dot product.
std::vector<RatVector> orthogonal_complement(std::span<const RatVector> vectors, std::size_t dim);

/// Whether v lies in the linear span of basis.
bool in_span(std::span<const RatVector> basis, std::span<const Rational> v);

} // namespace conewb

#include "conewb/linalg.hpp"

#include "conewb/errors.hpp"

#include <algorithm>
#include <sstream>

namespace conewb {

RatVector zero_vector(std::size_t dim) { return RatVector(dim); }

RatVector unit_vector(std::size_t dim, std::size_t i) {
    RatVector v(dim);
    v.at(i) = 1;
    return v;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw DimensionError("dot: length mismatch");
    }
    mpq_class acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) {
            acc += a[i].raw() * b[i].raw();
        }
    }
    return Rational(acc.get_num(), acc.get_den());
}

RatVector add(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw DimensionError("add: length mismatch");
    }
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

RatVector sub(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw DimensionError("sub: length mismatch");
    }
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

RatVector scale(const Rational& s, std::span<const Rational> v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = s * v[i];
    }
    return out;
}

RatVector negate(std::span<const Rational> v) { return scale(Rational(-1), v); }

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

RatVector primitive_integer_ray(std::span<const Rational> v) {
    if (is_zero(v)) {
        throw InvalidInput("primitive_integer_ray: zero vector has no ray");
    }
    Integer den = 1;
    for (const auto& x : v) {
        den = lcm(den, x.denominator());
    }
    std::vector<Integer> ints(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].numerator() * (den / v[i].denominator());
        g = gcd(g, ints[i]);
    }
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = Rational(Integer(ints[i] / g));
    }
    return out;
}

std::string to_string(std::span<const Rational> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            os << ", ";
        }
        os << v[i];
    }
    os << ')';
    return os.str();
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("RatMatrix: ragged initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionError("RatMatrix::from_rows: row " + std::to_string(r) + " has wrong length");
        }
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RatVector> cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
}

RatVector RatMatrix::row(std::size_t r) const {
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return RatVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool RatMatrix::is_integral() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_integer(); });
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) {
                return false;
            }
        }
    }
    return true;
}

std::strong_ordering operator<=>(const RatMatrix& a, const RatMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) {
        return c;
    }
    if (auto c = a.cols_ <=> b.cols_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: inner dimensions differ");
    }
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            mpq_class acc;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (!a(i, k).is_zero() && !b(k, j).is_zero()) {
                    acc += a(i, k).raw() * b(k, j).raw();
                }
            }
            out(i, j) = Rational(acc.get_num(), acc.get_den());
        }
    }
    return out;
}

RatVector operator*(const RatMatrix& a, std::span<const Rational> x) {
    if (a.cols() != x.size()) {
        throw DimensionError("matrix-vector product: length mismatch");
    }
    RatVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpq_class acc;
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a(i, k).is_zero() && !x[k].is_zero()) {
                acc += a(i, k).raw() * x[k].raw();
            }
        }
        out[i] = Rational(acc.get_num(), acc.get_den());
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) {
            os << ", ";
        }
        os << to_string(m.row(r));
    }
    return os << ']';
}

RowEchelon row_reduce(RatMatrix m) {
    RowEchelon out;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, c).is_zero()) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != lead_row) {
            for (std::size_t k = 0; k < m.cols(); ++k) {
                std::swap(m(pivot, k), m(lead_row, k));
            }
        }
        const Rational inv = Rational(1) / m(lead_row, c);
        for (std::size_t k = c; k < m.cols(); ++k) {
            m(lead_row, k) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c).is_zero()) {
                continue;
            }
            const Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) {
                if (!m(lead_row, k).is_zero()) {
                    m(r, k) -= f * m(lead_row, k);
                }
            }
        }
        out.pivots.push_back(c);
        ++lead_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

std::size_t rank(std::span<const RatVector> vectors, std::size_t dim) {
    if (vectors.empty() || dim == 0) {
        return 0;
    }
    return rank(RatMatrix::from_rows(vectors, dim));
}

std::vector<RatVector> kernel_basis(const RatMatrix& a) {
    const auto ech = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : ech.pivots) {
        is_pivot[p] = true;
    }
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        RatVector k(a.cols());
        k[f] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
            k[ech.pivots[i]] = -ech.reduced(i, f);
        }
        basis.push_back(std::move(k));
    }
    return basis;
}

LinearSolution solve_linear(const RatMatrix& a, std::span<const Rational> b) {
    if (a.rows() != b.size()) {
        throw DimensionError("solve_linear: A has " + std::to_string(a.rows()) + " rows but b has length " +
                             std::to_string(b.size()));
    }
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, a.cols()) = b[r];
    }
    const auto ech = row_reduce(aug);
    LinearSolution out;
    out.kernel = kernel_basis(a);
    if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) {
        return out;
    }
    RatVector x(a.cols());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
        x[ech.pivots[i]] = ech.reduced(i, a.cols());
    }
    out.particular = std::move(x);
    return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("inverse: matrix not square");
    }
    const std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, n + r) = 1;
    }
    const auto ech = row_reduce(aug);
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) {
        return std::nullopt;
    }
    RatMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = ech.reduced(r, n + c);
        }
    }
    return inv;
}

Rational determinant(const RatMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("determinant: matrix not square");
    }
    RatMatrix m = a;
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != c) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(m(pivot, k), m(c, k));
            }
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) {
                continue;
            }
            const Rational f = m(r, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) {
                m(r, k) -= f * m(c, k);
            }
        }
    }
    return det;
}

std::vector<RatVector> orthogonal_complement(std::span<const RatVector> vectors, std::size_t dim) {
    if (vectors.empty()) {
        std::vector<RatVector> basis;
        for (std::size_t i = 0; i < dim; ++i) {
            basis.push_back(unit_vector(dim, i));
        }
        return basis;
    }
    return kernel_basis(RatMatrix::from_rows(vectors, dim));
}

bool in_span(std::span<const RatVector> basis, std::span<const Rational> v) {
    if (is_zero(v)) {
        return true;
    }
    if (basis.empty()) {
        return false;
    }
    const auto cols = RatMatrix::from_columns(basis, v.size());
    return solve_linear(cols, v).particular.has_value();
}

} // namespace conewb

#include "conewb/lattice.hpp"

#include "conewb/errors.hpp"

#include <algorithm>

namespace conewb {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

struct ExtGcd {
    Integer g, s, t; // s*a + t*b = g >= 0
};

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::vector<Integer> to_integer_row(const RatVector& v) {
    if (is_zero(v)) {
        return std::vector<Integer>(v.size(), 0);
    }
    const auto p = primitive_integer_ray(v);
    std::vector<Integer> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = p[i].numerator();
    }
    return out;
}

RatVector to_rational_row(const std::vector<Integer>& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = Rational(v[i]);
    }
    return out;
}

// Unimodular column operations turning A into lower echelon form [H | 0].
// Returns U with A U = [H | 0] and the number of nonzero columns.
std::pair<IntMatrix, std::size_t> column_echelon(IntMatrix a, std::size_t dim) {
    IntMatrix u(dim, std::vector<Integer>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) {
        u[i][i] = 1;
    }
    auto combine = [&](IntMatrix& m, std::size_t i, std::size_t j, const Integer& s, const Integer& t,
                       const Integer& p, const Integer& q) {
        // col_i <- s col_i + t col_j ; col_j <- p col_i + q col_j
        for (auto& row : m) {
            const Integer ci = row[i];
            const Integer cj = row[j];
            row[i] = s * ci + t * cj;
            row[j] = p * ci + q * cj;
        }
    };
    std::size_t col = 0;
    for (std::size_t r = 0; r < a.size() && col < dim; ++r) {
        for (std::size_t c = col + 1; c < dim; ++c) {
            if (a[r][c] == 0) {
                continue;
            }
            const Integer x = a[r][col];
            const Integer y = a[r][c];
            const auto e = ext_gcd(x, y);
            const Integer p = -y / e.g;
            const Integer q = x / e.g;
            combine(a, col, c, e.s, e.t, p, q);
            combine(u, col, c, e.s, e.t, p, q);
        }
        if (a[r][col] != 0) {
            ++col;
        }
    }
    return {u, col};
}

} // namespace

std::vector<RatVector> hermite_normal_form(std::vector<RatVector> rows, std::size_t dim) {
    IntMatrix m;
    for (const auto& r : rows) {
        if (r.size() != dim) {
            throw DimensionError("hermite_normal_form: row length mismatch");
        }
        for (const auto& x : r) {
            if (!x.is_integer()) {
                throw InvalidInput("hermite_normal_form: non-integer entry");
            }
        }
        std::vector<Integer> ir(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            ir[i] = r[i].numerator();
        }
        m.push_back(std::move(ir));
    }

    std::size_t lead = 0;
    for (std::size_t c = 0; c < dim && lead < m.size(); ++c) {
        for (std::size_t r = lead + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) {
                continue;
            }
            const Integer x = m[lead][c];
            const Integer y = m[r][c];
            const auto e = ext_gcd(x, y);
            const Integer p = -y / e.g;
            const Integer q = x / e.g;
            for (std::size_t k = 0; k < dim; ++k) {
                const Integer a = m[lead][k];
                const Integer b = m[r][k];
                m[lead][k] = e.s * a + e.t * b;
                m[r][k] = p * a + q * b;
            }
        }
        if (m[lead][c] == 0) {
            continue;
        }
        if (m[lead][c] < 0) {
            for (auto& x : m[lead]) {
                x = -x;
            }
        }
        for (std::size_t r = 0; r < lead; ++r) {
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), m[r][c].get_mpz_t(), m[lead][c].get_mpz_t());
            if (f != 0) {
                for (std::size_t k = 0; k < dim; ++k) {
                    m[r][k] -= f * m[lead][k];
                }
            }
        }
        ++lead;
    }
    std::vector<RatVector> out;
    for (std::size_t r = 0; r < lead; ++r) {
        out.push_back(to_rational_row(m[r]));
    }
    return out;
}

std::vector<RatVector> integer_kernel(std::span<const RatVector> vectors, std::size_t dim) {
    IntMatrix a;
    for (const auto& v : vectors) {
        if (v.size() != dim) {
            throw DimensionError("integer_kernel: vector length mismatch");
        }
        a.push_back(to_integer_row(v));
    }
    auto [u, used] = column_echelon(std::move(a), dim);
    std::vector<RatVector> basis;
    for (std::size_t c = used; c < dim; ++c) {
        std::vector<Integer> col(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            col[r] = u[r][c];
        }
        basis.push_back(to_rational_row(col));
    }
    return hermite_normal_form(std::move(basis), dim);
}

std::vector<RatVector> saturated_basis(std::span<const RatVector> vectors, std::size_t dim) {
    const auto complement = integer_kernel(vectors, dim);
    return integer_kernel(complement, dim);
}

RatMatrix quotient_map(std::span<const RatVector> subspace, std::size_t dim) {
    const auto rows = integer_kernel(subspace, dim);
    return RatMatrix::from_rows(rows, dim);
}

} // namespace conewb

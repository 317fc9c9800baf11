#include "conewb/sampling.hpp"

#include "conewb/errors.hpp"

#include <algorithm>
#include <random>

namespace conewb {

namespace {

// std::uniform_int_distribution is implementation-defined; plain modulo of
// the engine output keeps samples identical across standard libraries.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    Rational positive(std::uint64_t max_den) {
        const auto num = static_cast<long>(1 + below(max_den));
        const auto den = static_cast<long>(1 + below(max_den));
        return Rational(Integer(num), Integer(den));
    }

    Rational signed_value(std::uint64_t max_den) {
        const auto num = static_cast<long>(below(2 * max_den + 1)) - static_cast<long>(max_den);
        const auto den = static_cast<long>(1 + below(max_den));
        return Rational(Integer(num), Integer(den));
    }

private:
    std::mt19937_64 engine_;
};

std::vector<RatVector> lorentzian_interior_basis(const QuadCone& q, const GroupSpec& group, std::size_t orbit_depth) {
    const auto& h = q.selector();
    const std::size_t dim = q.dim();
    Rational delta = 1;
    auto perturbed = [&](const Rational& d) {
        std::vector<RatVector> out{h};
        for (std::size_t i = 0; i < dim; ++i) {
            for (int s : {1, -1}) {
                RatVector v = h;
                v[i] += Rational(s) * d;
                out.push_back(std::move(v));
            }
        }
        return out;
    };
    auto base = perturbed(delta);
    while (!std::all_of(base.begin(), base.end(), [&](const RatVector& v) { return q.in_open_cone(v); })) {
        delta /= 2;
        base = perturbed(delta);
    }
    std::vector<RatVector> basis;
    const auto orbit = word_bfs(group, orbit_depth);
    for (const auto& w : orbit.elements) {
        for (const auto& b : base) {
            basis.push_back(primitive_integer_ray(w.matrix() * b));
        }
    }
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return basis;
}

} // namespace

std::vector<RatVector> sample_cone(const ConeRef& cone, const GroupSpec& group, std::size_t count, std::uint64_t seed,
                                   const SampleOptions& options) {
    if (options.max_denominator == 0) {
        throw InvalidInput("sample_cone: max_denominator must be positive");
    }
    const std::size_t dim = cone_dim(cone);
    Draw draw(seed);
    std::vector<RatVector> samples;
    samples.reserve(count);

    if (const auto* p = std::get_if<PolyCone>(&cone)) {
        for (std::size_t s = 0; s < count; ++s) {
            RatVector x(dim);
            for (const auto& g : p->generators()) {
                x = add(x, scale(draw.positive(options.max_denominator), g));
            }
            for (const auto& l : p->lineality_basis()) {
                x = add(x, scale(draw.signed_value(options.max_denominator), l));
            }
            samples.push_back(std::move(x));
        }
        return samples;
    }

    const auto& q = std::get<QuadCone>(cone);
    const auto basis = lorentzian_interior_basis(q, group, options.orbit_depth);
    for (std::size_t s = 0; s < count; ++s) {
        RatVector x(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            const auto& b = basis[draw.below(basis.size())];
            x = add(x, scale(draw.positive(options.max_denominator), b));
        }
        samples.push_back(std::move(x));
    }
    return samples;
}

} // namespace conewb

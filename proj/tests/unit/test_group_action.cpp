#include "conewb/errors.hpp"
#include "conewb/group.hpp"

#include "../support/oracles.hpp"

#include "doctest.h"

using namespace conewb;

namespace {

const RatMatrix fib_m{{2, 1}, {1, 1}};
const RatMatrix shear{{1, 1}, {0, 1}};
const RatMatrix minus_id{{-1, 0}, {0, -1}};

QuadCone fibonacci_cone() {
    return QuadCone::make(RatMatrix{{1, Rational(Integer(-1), Integer(2))}, {Rational(Integer(-1), Integer(2)), -1}},
                          RatVector{1, 0});
}

oracle::Mat to_mat(const RatMatrix& m) {
    oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = m(i, j);
        }
    }
    return out;
}

std::vector<std::string> formatted(const GroupSpec& g, const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) {
        out.push_back(format_word(g, w));
    }
    return out;
}

Word random_word(const GroupSpec& g, oracle::Gen& gen, std::size_t max_len) {
    std::vector<Letter> letters;
    const auto n = static_cast<std::size_t>(gen.integer(0, static_cast<long>(max_len)));
    for (std::size_t i = 0; i < n; ++i) {
        letters.push_back(Letter{static_cast<std::size_t>(gen.integer(0, static_cast<long>(g.size()) - 1)),
                                 gen.integer(0, 1) ? 1 : -1});
    }
    return Word::from_letters(g, letters);
}

} // namespace

TEST_CASE("GroupSpec validation") {
    CHECK_THROWS_AS(GroupSpec::make(2, {RatMatrix{{2, 0}, {0, 1}}}), InvalidInput);
    CHECK_THROWS_AS(GroupSpec::make(2, {RatMatrix{{Rational(Integer(1), Integer(2)), 0}, {0, 2}}}), InvalidInput);
    CHECK_THROWS_AS(GroupSpec::make(2, {RatMatrix{{1, 0, 0}}}), DimensionError);
    CHECK_THROWS_AS(GroupSpec::make(2, {fib_m, shear}, {"a", "a"}), InvalidInput);
    CHECK_THROWS_AS(GroupSpec::make(2, {fib_m}, {"a b"}), InvalidInput);
    const auto g = GroupSpec::make(2, {fib_m, shear});
    CHECK(g.names() == std::vector<std::string>{"g0", "g1"});
    CHECK(g.inverses()[0] == RatMatrix{{1, -1}, {-1, 2}});
}

TEST_CASE("word formatting round trip") {
    const auto g = GroupSpec::make(3, {RatMatrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}, RatMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}},
                                   {"r", "s"});
    const auto w = parse_word(g, "r^2 s^-1 r");
    CHECK(w.length() == 4);
    CHECK(format_word(g, w) == "r^2 s^-1 r");
    CHECK(format_word(g, Word::identity(3)) == "id");
    CHECK(parse_word(g, "id").is_empty());
    CHECK(parse_word(g, "r r^-1").is_empty());
    CHECK_THROWS_AS(parse_word(g, "t"), InvalidInput);
}

TEST_CASE("word_bfs examples") {
    const auto fib = GroupSpec::make(2, {fib_m}, {"M"});
    const auto r = word_bfs(fib, 2);
    CHECK(formatted(fib, r.elements) == std::vector<std::string>{"id", "M", "M^-1", "M^2", "M^-2"});
    CHECK(r.truncated);

    CHECK(word_bfs(fib, 0).elements.size() == 1);

    const auto neg = GroupSpec::make(2, {minus_id}, {"n"});
    const auto r2 = word_bfs(neg, 3);
    CHECK(r2.elements.size() == 2);
    CHECK_FALSE(r2.truncated);
}

TEST_CASE("word_bfs agrees with brute-force enumeration") {
    const std::vector<GroupSpec> groups{
        GroupSpec::make(2, {fib_m}, {"M"}),
        GroupSpec::make(2, {minus_id, shear}, {"n", "T"}),
        GroupSpec::make(3, {RatMatrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}, RatMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}},
                        {"r", "s"}),
        GroupSpec::make(2, {RatMatrix{{1, -1}, {0, -1}}, RatMatrix{{1, 0}, {-1, -1}}}, {"r1", "r2"}),
    };
    for (const auto& g : groups) {
        std::vector<oracle::Mat> letters;
        for (std::size_t i = 0; i < g.size(); ++i) {
            letters.push_back(to_mat(g.generators()[i]));
            letters.push_back(to_mat(g.inverses()[i]));
        }
        for (std::size_t depth = 0; depth <= 6; ++depth) {
            const auto expected = oracle::all_products(letters, depth);
            const auto r = word_bfs(g, depth);
            REQUIRE(r.elements.size() == expected.size());
            for (const auto& w : r.elements) {
                const auto it = expected.find(to_mat(w.matrix()));
                REQUIRE(it != expected.end());
                CHECK(it->second == w.length());
            }
            for (std::size_t i = 1; i < r.elements.size(); ++i) {
                CHECK(canonical_compare(r.elements[i - 1], r.elements[i]) < 0);
            }
        }
    }
}

TEST_CASE("word_bfs is deterministic") {
    const auto g = GroupSpec::make(2, {fib_m, shear}, {"M", "T"});
    const auto a = word_bfs(g, 4);
    const auto b = word_bfs(g, 4);
    CHECK(formatted(g, a.elements) == formatted(g, b.elements));
}

TEST_CASE("homomorphism property") {
    const auto g = GroupSpec::make(2, {fib_m, shear, minus_id}, {"M", "T", "n"});
    oracle::Gen gen(21);
    for (int t = 0; t < 300; ++t) {
        const auto u = random_word(g, gen, 6);
        const auto v = random_word(g, gen, 6);
        CHECK(u.times(g, v).matrix() == u.matrix() * v.matrix());
        CHECK(u.inverse(g).matrix() * u.matrix() == RatMatrix::identity(2));
        CHECK(parse_word(g, format_word(g, u)).matrix() == u.matrix());
    }
}

TEST_CASE("preserves_cone examples") {
    const ConeRef fib{fibonacci_cone()};
    CHECK(preserves_cone(fib_m, fib));
    const auto q = fibonacci_cone().form();
    CHECK(fib_m.transpose() * q * fib_m == q);

    const ConeRef half{cone_from_generators(std::vector<RatVector>{{1, 0}, {-1, 0}, {0, 1}})};
    CHECK(preserves_cone(shear, half));

    const ConeRef quadrant{cone_from_generators(std::vector<RatVector>{{1, 0}, {0, 1}})};
    CHECK_FALSE(preserves_cone(shear, quadrant));
    // swaps the nappes
    CHECK_FALSE(preserves_cone(minus_id, fib));
}

TEST_CASE("invariance propagates to words") {
    const auto g = GroupSpec::make(3, {RatMatrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}, RatMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}},
                                   {"r", "s"});
    const ConeRef square{cone_from_generators(std::vector<RatVector>{{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}})};
    for (const auto& w : word_bfs(g, 3).elements) {
        CHECK(preserves_cone(w, square));
    }
    const auto fib = GroupSpec::make(2, {fib_m}, {"M"});
    for (const auto& w : word_bfs(fib, 3).elements) {
        CHECK(preserves_cone(w, ConeRef{fibonacci_cone()}));
    }
}

TEST_CASE("dual_action examples and pairing identity") {
    const auto g = GroupSpec::make(2, {fib_m, shear}, {"M", "T"});
    CHECK(dual_action(Word::identity(2)) == RatMatrix::identity(2));
    CHECK(dual_action(Word::generator(g, 0)) == RatMatrix{{2, 1}, {1, 1}});
    CHECK(dual_action(Word::generator(g, 1)) == RatMatrix{{1, 0}, {1, 1}});
    oracle::Gen gen(33);
    for (int t = 0; t < 200; ++t) {
        const auto w = random_word(g, gen, 5);
        const auto x = gen.rat_vector(2, 9, 5);
        const auto y = gen.rat_vector(2, 9, 5);
        CHECK(dot(x, dual_action(w) * y) == dot(w.matrix() * x, y));
    }
}

TEST_CASE("stabilizer_search examples") {
    const auto fib = GroupSpec::make(2, {fib_m}, {"M"});
    const auto s1 = stabilizer_search(fib, RatVector{1, 0}, 4);
    CHECK(s1.words.empty());
    CHECK(s1.verified_depth == 4);

    const auto neg = GroupSpec::make(2, {minus_id}, {"n"});
    CHECK(formatted(neg, stabilizer_search(neg, RatVector{0, 0}, 1).words) == std::vector<std::string>{"n"});

    const auto sh = GroupSpec::make(2, {shear}, {"T"});
    CHECK(formatted(sh, stabilizer_search(sh, RatVector{1, 0}, 3).words) ==
          std::vector<std::string>{"T", "T^-1", "T^2", "T^-2", "T^3", "T^-3"});
}

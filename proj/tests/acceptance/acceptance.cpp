// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "conewb/cli.hpp"
#include "conewb/domain.hpp"

#include "../support/cone_generators.hpp"
#include "../support/oracles.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace conewb;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

const Rational half(Integer(1), Integer(2));
const RatMatrix fib_m{{2, 1}, {1, 1}};

ConeRef fibonacci_cone() { return QuadCone::make(RatMatrix{{1, -half}, {-half, -1}}, RatVector{1, 0}); }
GroupSpec fibonacci_group() { return GroupSpec::make(2, {fib_m}, {"M"}); }

std::set<RatVector> as_set(const std::vector<RatVector>& v) { return {v.begin(), v.end()}; }

// Independent oracle for the Fibonacci Dirichlet cone: half-spaces over
// M^k, |k| <= depth, built from explicit powers and intersected in the plane.
std::set<RatVector> fibonacci_oracle(std::size_t depth) {
    const oracle::Vec f{1, -half};
    oracle::Mat normals{f};
    oracle::Mat up = oracle::identity(2);
    oracle::Mat down = oracle::identity(2);
    const oracle::Mat m{{2, 1}, {1, 1}};
    const oracle::Mat minv{{1, -1}, {-1, 2}};
    for (std::size_t k = 1; k <= depth; ++k) {
        up = oracle::mat_mul(up, m);
        down = oracle::mat_mul(down, minv);
        for (const auto& g : {up, down}) {
            // g symmetric, so g^T f = g f
            auto n = oracle::apply(g, f);
            n[0] -= f[0];
            n[1] -= f[1];
            normals.push_back(n);
        }
    }
    return oracle::planar_rays(normals);
}

Outcome criterion1() {
    Outcome o;
    const auto cand = dirichlet_domain(fibonacci_cone(), fibonacci_group(), RatVector{1, 0}, 2);
    const std::set<RatVector> expected{{3, 1}, {2, -1}};
    o.require(as_set(cand.pi.generators()) == expected, "Pi(L=2) is not Cone((3,1),(2,-1))");
    o.require(as_set(cand.pi.generators()) == fibonacci_oracle(6), "half-space oracle at depth 6 disagrees");
    const auto cert = verify_weak_domain(cand, VerifyOptions{.depth = 4, .samples = 500, .seed = 42});
    o.require(cert.state == Certificate::State::verified,
              "verify_weak_domain: " + (cert.counterexample ? cert.counterexample->detail : to_string(cert.state)));
    o.require(stabilizer_of_domain(cand, 4).empty(), "stabilizer of Pi is not trivial");
    if (o.pass) {
        o.detail = "Pi = Cone((2,-1),(3,1)), verified at depth 4 with 500 samples, seed 42, Gamma_Pi = {id}";
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto cand = dirichlet_domain(fibonacci_cone(), fibonacci_group(), RatVector{1, 0}, 2);
    const auto samples = sample_cone(cand.cone, cand.group, 1000, 42);
    std::size_t longest = 0;
    for (const auto& x : samples) {
        const auto t = reduce_point(cand, x);
        o.require(!t.exhausted, "sample " + to_string(x) + " not reduced");
        o.require(cand.pi.contains(t.output), "output outside Pi");
        o.require(t.word.matrix() * t.output == x, "tile witness broken");
        o.require(t.word.length() <= 25, "word longer than 25 for " + to_string(x));
        longest = std::max(longest, t.word.length());
        const auto again = reduce_point(cand, t.output);
        o.require(again.word.is_empty() && again.output == t.output, "reduction not idempotent");
    }
    if (o.pass) {
        o.detail = "1000 samples reduced, longest word " + std::to_string(longest) + ", idempotent";
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    const ConeRef half_plane = PolyCone::from_rays(2, std::vector<RatVector>{{1, 0}, {-1, 0}, {0, 1}});
    const auto g = GroupSpec::make(2, {RatMatrix{{1, 1}, {0, 1}}}, {"T"});
    const auto lifted = lift_degenerate(half_plane, g, RatVector{1}, 3);
    o.require(same_set(lifted.pi, std::get<PolyCone>(half_plane)), "Pi is not the upper half-plane");
    o.require(lifted.quotient.has_value(), "no quotient data");
    if (!o.pass) {
        return o;
    }
    const auto& q = *lifted.quotient;
    std::vector<RatVector> projected;
    for (const auto& v : lifted.pi.spanning_set()) {
        projected.push_back(q.projection * v);
    }
    o.require(same_set(PolyCone::from_rays(q.projection.rows(), projected), q.pi), "p(Pi) != Pi~");
    std::set<RatMatrix> all;
    const auto orbit = word_bfs(g, 3);
    for (std::size_t i = 1; i < orbit.elements.size(); ++i) {
        all.insert(orbit.elements[i].matrix());
    }
    std::set<RatMatrix> stab;
    for (const auto& w : stabilizer_of_domain(lifted, 3)) {
        stab.insert(w.matrix());
    }
    std::set<RatMatrix> triv;
    for (const auto& w : trivial_on_quotient(lifted, 3)) {
        triv.insert(w.matrix());
    }
    o.require(stab == all, "stabilizer is not every enumerated word");
    o.require(stab == triv, "{gamma Pi = Pi} != {gamma trivial on V/W}");
    if (o.pass) {
        o.detail = "Pi = upper half-plane, p(Pi) = Pi~, " + std::to_string(stab.size()) +
                   " words in both {gamma Pi = Pi} and {gamma trivial on V/W}";
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    oracle::Gen gen(2024);
    const int count = 120;
    for (int t = 0; t < count; ++t) {
        const auto c = testgen::random_degenerate_cone(gen);
        const auto q = project_quotient(ConeRef{c}, c.lineality_basis());
        o.require(testgen::quotient_lemma_holds(c, q), "quotient lemma fails for a cone in dim " + std::to_string(c.dim()));
    }
    if (o.pass) {
        o.detail = std::to_string(count) + " random degenerate cones (dim 2..5)";
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    oracle::Gen gen(4242);
    const int count = 250;
    for (int t = 0; t < count; ++t) {
        const auto d = static_cast<std::size_t>(gen.integer(1, 4));
        const auto gens = testgen::full_dimensional_generators(gen, d);
        const auto c = cone_from_generators(gens);
        o.require(same_set(dual_cone(dual_cone(c)), c), "dual involution fails");
        o.require(as_set(c.facets()) == oracle::brute_force_facets(gens, d), "facets differ from the oracle");
        const auto any = cone_from_generators(testgen::random_generators(gen, d));
        o.require(same_set(dual_cone(dual_cone(any)), any), "dual involution fails (lower-dimensional)");
    }
    if (o.pass) {
        o.detail = std::to_string(count) + " full-dimensional and " + std::to_string(count) +
                   " arbitrary generator sets (dim 1..4)";
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    const auto path = std::filesystem::path(CONEWB_FIXTURE_DIR) / "fibonacci-quadrant-domain.json";
    const std::string p = path.string();
    const char* argv[] = {"conewb", "verify", p.c_str()};
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(3, argv, out, err);
    o.require(code == 1, "exit code " + std::to_string(code));
    const auto quad = supplied_candidate(fibonacci_cone(), fibonacci_group(),
                                         PolyCone::from_rays(2, std::vector<RatVector>{{1, 0}, {0, 1}}));
    const auto cert = verify_weak_domain(quad);
    o.require(cert.state == Certificate::State::refuted && cert.counterexample, "quadrant not refuted");
    if (!o.pass) {
        return o;
    }
    const auto& ce = *cert.counterexample;
    o.require(ce.word && format_word(quad.group, *ce.word) == "M", "counterexample word is not M");
    o.require(ce.point && quad.pi.contains_in_interior(*ce.point) && quad.pi.transformed(fib_m).contains(*ce.point),
              "counterexample point is not in M Pi and Int(Pi)");
    o.require(out.str().find("\"word\": \"M\"") != std::string::npos, "CLI output lacks word M");
    if (o.pass) {
        o.detail = "refuted by M at " + to_string(*ce.point) + ", exit code 1";
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::vector<PolyCone> pis;
    for (std::size_t depth = 1; depth <= 6; ++depth) {
        pis.push_back(dirichlet_domain(fibonacci_cone(), fibonacci_group(), RatVector{1, 0}, depth).pi);
    }
    for (std::size_t l = 0; l + 1 < pis.size(); ++l) {
        o.require(pis[l].contains(pis[l + 1]), "Pi_{L+1} not inside Pi_L at L = " + std::to_string(l + 1));
        o.require(same_set(pis[l + 1], pis[0]), "not stable from L = 1 (L = " + std::to_string(l + 2) + ")");
    }
    if (o.pass) {
        o.detail = "Pi_L = Cone((2,-1),(3,1)) for L = 1..6";
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Fibonacci domain end-to-end", 2.0, criterion1},
        {2, "tiling witness", 5.0, criterion2},
        {3, "degenerate shear lift", 1.0, criterion3},
        {4, "quotient lemma", 30.0, criterion4},
        {5, "dual involution and facet oracle", 30.0, criterion5},
        {6, "quadrant refutation", 60.0, criterion6},
        {7, "monotonicity in depth", 60.0, criterion7},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && secs > c.limit_seconds) {
            o.pass = false;
            o.detail += " (over the time limit)";
        }
        failures += o.pass ? 0 : 1;
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << secs;
        std::cout << "criterion " << c.id << " [" << c.title << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
                  << o.detail << " (" << t.str() << " s, limit " << c.limit_seconds << " s)\n";
    }
    return failures == 0 ? 0 : 1;
}

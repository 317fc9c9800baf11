#pragma once

#include "conewb/cone.hpp"
#include "conewb/group.hpp"
#include "conewb/sampling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conewb {

/// How a dual point xi is turned into a linear functional on V.
enum class Pairing {
    standard,       // <x, xi> = x . xi, xi in V*
    quadratic_form, // <x, xi>_Q = x^T Q xi, xi in V (Lorentzian cones only)
};

enum class Construction {
    dirichlet, // half-spaces <x, gamma^T f - f> >= 0 over enumerated words
    lifted,    // Dirichlet domain of V/W lifted and thickened by W
    supplied,  // externally given Pi
};

struct Counterexample {
    enum class Kind {
        overlap,             // gamma Pi != Pi meets Int(Pi)
        uncovered,           // sample point not reduced into Pi
        outside_cplus,       // a generator of Pi is not in C+
        stabilizer_mismatch, // {gamma Pi = Pi} differs from {gamma trivial on V/W}
    };
    Kind kind = Kind::overlap;
    std::optional<Word> word;
    std::optional<RatVector> point;
    std::string detail;
};

struct Certificate {
    enum class State { unverified, verified, refuted };
    State state = State::unverified;
    std::size_t depth = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::optional<Counterexample> counterexample;
};

/// Data of the quotient step for candidates lifted from V/W.
struct QuotientData {
    std::vector<RatVector> subspace; // W
    RatMatrix projection;            // p : V -> V/W
    RatMatrix section;
    PolyCone cone;                   // image of the closed cone in V/W
    PolyCone pi;                     // domain in V/W
    RatVector xi;                    // dual point in (V/W)*
    GroupSpec group;                 // induced action on V/W
};

struct DomainCandidate {
    PolyCone pi;
    RatVector xi;
    /// Linear functional on V whose orbit minimum defines Pi and drives the
    /// greedy reduction: xi, Q xi, or P^T xi_quotient.
    RatVector functional;
    Pairing pairing = Pairing::standard;
    std::size_t depth = 0;
    GroupSpec group;
    ConeRef cone;
    Construction construction = Construction::dirichlet;
    Certificate status;
    /// Words whose half-spaces survive redundancy elimination.
    std::vector<Word> active_words;
    std::optional<QuotientData> quotient;
};

Pairing default_pairing(const ConeRef& cone);

/// Functional on V induced by xi under the pairing. Throws InvalidInput for
/// the quadratic-form pairing on a polyhedral cone.
RatVector pairing_functional(const ConeRef& cone, Pairing pairing, std::span<const Rational> xi);

/// Throws XiRejected unless xi lies in the interior of the dual cone.
void check_dual_interior(const ConeRef& cone, Pairing pairing, std::span<const Rational> xi);

/// Pi_L(xi) = {x in closure(C) : <x, f> <= <gamma x, f> for all words gamma
/// of length <= depth}, with redundant half-spaces removed by exact LP.
/// Throws DegenerateCone, XiRejected, or PreconditionFailed.
DomainCandidate dirichlet_domain(const ConeRef& cone, const GroupSpec& group, std::span<const Rational> xi,
                                 std::size_t depth, Pairing pairing);
DomainCandidate dirichlet_domain(const ConeRef& cone, const GroupSpec& group, std::span<const Rational> xi,
                                 std::size_t depth);

/// Some xi in the dual interior: the selector for Lorentzian cones, the sum
/// of facet normals (of the quotient, for degenerate cones) otherwise.
RatVector default_xi(const ConeRef& cone);

/// Candidate for an externally supplied Pi; xi defaults to default_xi.
DomainCandidate supplied_candidate(const ConeRef& cone, const GroupSpec& group, PolyCone pi,
                                   std::optional<RatVector> xi = std::nullopt);

struct ReduceOptions {
    std::size_t budget = 64;    // maximal total word length
    std::size_t bfs_radius = 6; // fallback search once greedy descent stalls
};

struct ReductionTrace {
    RatVector input;
    /// Tile witness: input = matrix(word) * output.
    Word word;
    /// The element actually applied: output = matrix(applied) * input.
    Word applied;
    RatVector output;
    std::vector<RatVector> path; // values after each greedy step
    std::size_t greedy_steps = 0;
    std::size_t pairings_evaluated = 0;
    bool exhausted = false; // output is not in Pi
};

/// Greedy descent of <., f> along generator letters (lowest generator
/// first, direct before inverse on ties), then a BFS over short words.
/// Throws PreconditionFailed when x is outside C+.
ReductionTrace reduce_point(const DomainCandidate& cand, std::span<const Rational> x, const ReduceOptions& options = {});

/// A point of gamma Pi ∩ Int(Pi), or nothing.
std::optional<RatVector> common_interior_point(const PolyCone& translate, const PolyCone& pi);

struct VerifyOptions {
    std::size_t depth = 4;
    std::size_t samples = 500;
    std::uint64_t seed = 42;
    SampleOptions sampling;
    ReduceOptions reduce;
};

/// Depth- and sample-truncated check of the weak fundamental domain axioms.
/// Refutation is a return value. A refuted candidate stays refuted.
Certificate verify_weak_domain(const DomainCandidate& cand, const VerifyOptions& options = {});

/// Non-identity words of length <= depth with gamma Pi = Pi.
std::vector<Word> stabilizer_of_domain(const DomainCandidate& cand, std::size_t depth);

/// Non-identity words of length <= depth acting as the identity on V/W,
/// W the lineality space of the cone.
std::vector<Word> trivial_on_quotient(const DomainCandidate& cand, std::size_t depth);

/// Domain for a degenerate cone: Dirichlet domain of V/W lifted to Pi' and
/// thickened to Pi = Pi' + W. Throws PreconditionFailed when W = 0 or W is
/// not invariant.
DomainCandidate lift_degenerate(const ConeRef& cone, const GroupSpec& group, std::span<const Rational> xi_quotient,
                                std::size_t depth);

struct SidePairing {
    RatVector facet;       // normal of the facet F carried across
    Word gamma;            // gamma F = F', gamma Pi ∩ Pi = F'
    RatVector image_facet; // normal of F'
    bool full_facet = true; // gamma Pi ∩ Pi is all of F'
};

struct SidePairingReport {
    std::vector<SidePairing> pairings;
    std::vector<RatVector> boundary_facets;  // facets lying in the boundary of C
    std::vector<RatVector> unmatched_facets; // interior facets without a partner
};

/// Throws PreconditionFailed unless the candidate is verified.
SidePairingReport side_pairings(const DomainCandidate& cand, std::size_t depth);

/// Sampling certificate that Gamma Pi covers C (and lands in C+).
/// Throws PreconditionFailed when Pi is not inside C+.
Certificate certify_polyhedral_type(const ConeRef& cone, const GroupSpec& group, const PolyCone& pi,
                                    std::size_t depth, std::size_t samples, std::uint64_t seed);

std::string to_string(Certificate::State s);
std::string to_string(Counterexample::Kind k);
std::string to_string(Pairing p);
std::string to_string(Construction c);

} // namespace conewb

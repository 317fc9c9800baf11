#include "conewb/domain.hpp"

#include "conewb/errors.hpp"
#include "conewb/lattice.hpp"
#include "conewb/lp.hpp"

#include <algorithm>
#include <set>

namespace conewb {

namespace {

bool maps_into(const RatMatrix& m, const PolyCone& pi) {
    const auto span = pi.spanning_set();
    return std::all_of(span.begin(), span.end(), [&](const RatVector& v) { return pi.contains(m * v); });
}

bool fixes(const Word& w, const PolyCone& pi) {
    return maps_into(w.matrix(), pi) && maps_into(*inverse(w.matrix()), pi);
}

PolyCone face_of(const PolyCone& pi, const RatVector& normal) {
    std::vector<RatVector> rays;
    for (const auto& g : pi.generators()) {
        if (dot(g, normal).is_zero()) {
            rays.push_back(g);
        }
    }
    for (const auto& l : pi.lineality_basis()) {
        rays.push_back(l);
        rays.push_back(negate(l));
    }
    return PolyCone::from_rays(pi.dim(), rays);
}

bool face_in_boundary(const ConeRef& cone, const PolyCone& face) {
    const auto span = face.spanning_set();
    if (const auto* p = std::get_if<PolyCone>(&cone)) {
        return std::any_of(p->facets().begin(), p->facets().end(), [&](const RatVector& m) {
            return std::all_of(span.begin(), span.end(), [&](const RatVector& v) { return dot(v, m).is_zero(); });
        });
    }
    const auto& q = std::get<QuadCone>(cone);
    if (!face.is_pointed()) {
        return false;
    }
    const auto& gens = face.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            if (!q.pairing(gens[i], gens[j]).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

const RatVector* facet_containing(const PolyCone& pi, const PolyCone& piece) {
    const auto span = piece.spanning_set();
    for (const auto& n : pi.facets()) {
        if (std::all_of(span.begin(), span.end(), [&](const RatVector& v) { return dot(v, n).is_zero(); })) {
            return &n;
        }
    }
    return nullptr;
}

Certificate refuted(Certificate cert, Counterexample::Kind kind, std::optional<Word> word,
                    std::optional<RatVector> point, std::string detail) {
    cert.state = Certificate::State::refuted;
    cert.counterexample = Counterexample{kind, std::move(word), std::move(point), std::move(detail)};
    return cert;
}

void check_group_dims(const ConeRef& cone, const GroupSpec& group) {
    if (group.dim() != cone_dim(cone)) {
        throw DimensionError("group acts on dimension " + std::to_string(group.dim()) + " but the cone lives in " +
                             std::to_string(cone_dim(cone)));
    }
}

} // namespace

Pairing default_pairing(const ConeRef& cone) {
    return std::holds_alternative<QuadCone>(cone) ? Pairing::quadratic_form : Pairing::standard;
}

RatVector pairing_functional(const ConeRef& cone, Pairing pairing, std::span<const Rational> xi) {
    if (xi.size() != cone_dim(cone)) {
        throw DimensionError("xi has length " + std::to_string(xi.size()) + " in dimension " +
                             std::to_string(cone_dim(cone)));
    }
    if (pairing == Pairing::standard) {
        return RatVector(xi.begin(), xi.end());
    }
    const auto* q = std::get_if<QuadCone>(&cone);
    if (q == nullptr) {
        throw InvalidInput("the quadratic-form pairing needs a Lorentzian cone");
    }
    return q->form() * xi;
}

void check_dual_interior(const ConeRef& cone, Pairing pairing, std::span<const Rational> xi) {
    const auto f = pairing_functional(cone, pairing, xi);
    if (const auto* p = std::get_if<PolyCone>(&cone)) {
        if (!p->is_pointed() || !p->is_full_dimensional()) {
            throw XiRejected("xi rejected: the dual cone has empty interior");
        }
        for (const auto& g : p->generators()) {
            const auto v = dot(g, f);
            if (v.sign() <= 0) {
                throw XiRejected("xi rejected: not in the interior of the dual cone (<" + to_string(g) + ", xi> = " +
                                 v.str() + ")");
            }
        }
        return;
    }
    const auto& q = std::get<QuadCone>(cone);
    if (pairing == Pairing::quadratic_form) {
        if (!q.in_open_cone(xi)) {
            throw XiRejected("xi rejected: q(xi) = " + q.quadratic(xi).str() + ", <xi, h>_Q = " +
                             q.pairing(xi, q.selector()).str() + "; both must be positive");
        }
        return;
    }
    const auto eta = (*inverse(q.form())) * f;
    if (!q.in_open_cone(eta)) {
        throw XiRejected("xi rejected: Q^-1 xi is not in the open cone");
    }
}

DomainCandidate dirichlet_domain(const ConeRef& cone, const GroupSpec& group, std::span<const Rational> xi,
                                 std::size_t depth) {
    return dirichlet_domain(cone, group, xi, depth, default_pairing(cone));
}

DomainCandidate dirichlet_domain(const ConeRef& cone, const GroupSpec& group, std::span<const Rational> xi,
                                 std::size_t depth, Pairing pairing) {
    check_group_dims(cone, group);
    const std::size_t dim = cone_dim(cone);
    if (const auto* p = std::get_if<PolyCone>(&cone); p != nullptr && !p->is_pointed()) {
        throw DegenerateCone("cone degenerate: use lift_degenerate (lineality dimension " +
                             std::to_string(p->lineality_basis().size()) + ")");
    }
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (!preserves_cone(group.generators()[i], cone)) {
            throw PreconditionFailed("generator " + group.names()[i] + " does not preserve the cone");
        }
    }
    check_dual_interior(cone, pairing, xi);
    const auto f = pairing_functional(cone, pairing, xi);

    auto orbit = word_bfs(group, depth);
    for (std::size_t i = 1; i < orbit.elements.size(); ++i) {
        if (orbit.elements[i].matrix().transpose() * f == f) {
            throw XiRejected("xi rejected: nontrivial stabilizer at depth " + std::to_string(depth) + " (word " +
                             format_word(group, orbit.elements[i]) + " fixes it)");
        }
    }

    struct Row {
        RatVector normal;
        std::optional<Word> word;
    };
    std::vector<Row> rows;
    std::set<RatVector> seen;
    auto push = [&](const RatVector& n, std::optional<Word> w) {
        auto prim = primitive_integer_ray(n);
        if (seen.insert(prim).second) {
            rows.push_back(Row{std::move(prim), std::move(w)});
        }
    };
    if (const auto* p = std::get_if<PolyCone>(&cone)) {
        for (const auto& n : p->facets()) {
            push(n, std::nullopt);
        }
    } else {
        push(f, std::nullopt);
    }
    for (std::size_t i = 1; i < orbit.elements.size(); ++i) {
        const auto& w = orbit.elements[i];
        push(sub(w.matrix().transpose() * f, f), w);
    }

    // Later rows (longer words) are tried first so that ties keep the
    // shortest word.
    std::vector<bool> alive(rows.size(), true);
    for (std::size_t i = rows.size(); i-- > 0;) {
        std::vector<RatVector> others;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j != i && alive[j]) {
                others.push_back(rows[j].normal);
            }
        }
        if (inequality_implied(others, rows[i].normal)) {
            alive[i] = false;
        }
    }
    std::vector<RatVector> kept;
    std::vector<Word> active;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!alive[i]) {
            continue;
        }
        kept.push_back(rows[i].normal);
        if (rows[i].word) {
            active.push_back(*rows[i].word);
        }
    }
    auto pi = cone_from_facets(kept, dim);

    if (const auto* q = std::get_if<QuadCone>(&cone)) {
        const bool inside = pi.is_pointed() && std::all_of(pi.generators().begin(), pi.generators().end(),
                                                           [&](const RatVector& g) { return q->in_closure(g); });
        if (!inside) {
            throw PreconditionFailed("Dirichlet cone at depth " + std::to_string(depth) +
                                     " is not contained in the closed cone; increase the depth");
        }
    }

    DomainCandidate cand;
    cand.pi = std::move(pi);
    cand.xi = RatVector(xi.begin(), xi.end());
    cand.functional = f;
    cand.pairing = pairing;
    cand.depth = depth;
    cand.group = group;
    cand.cone = cone;
    cand.construction = Construction::dirichlet;
    cand.active_words = std::move(active);
    return cand;
}

RatVector default_xi(const ConeRef& cone) {
    if (const auto* q = std::get_if<QuadCone>(&cone)) {
        return q->selector();
    }
    const auto& p = std::get<PolyCone>(cone);
    RatVector sum(p.dim());
    for (const auto& n : p.facets()) {
        sum = add(sum, n);
    }
    return sum;
}

DomainCandidate supplied_candidate(const ConeRef& cone, const GroupSpec& group, PolyCone pi,
                                   std::optional<RatVector> xi) {
    check_group_dims(cone, group);
    if (pi.dim() != cone_dim(cone)) {
        throw DimensionError("supplied domain has dimension " + std::to_string(pi.dim()) + " but the cone lives in " +
                             std::to_string(cone_dim(cone)));
    }
    DomainCandidate cand;
    cand.pairing = default_pairing(cone);
    cand.xi = xi ? *xi : default_xi(cone);
    cand.functional = pairing_functional(cone, cand.pairing, cand.xi);
    cand.pi = std::move(pi);
    cand.group = group;
    cand.cone = cone;
    cand.construction = Construction::supplied;
    return cand;
}

ReductionTrace reduce_point(const DomainCandidate& cand, std::span<const Rational> x, const ReduceOptions& options) {
    if (x.size() != cand.pi.dim()) {
        throw DimensionError("reduce_point: point dimension does not match the domain");
    }
    if (!cplus_membership(cand.cone, x)) {
        throw PreconditionFailed("reduce_point: " + to_string(x) + " is not in C+");
    }
    const auto& group = cand.group;
    ReductionTrace trace;
    trace.input = RatVector(x.begin(), x.end());
    RatVector y = trace.input;
    Word applied = Word::identity(group.dim());
    auto value = [&](const RatVector& v) {
        ++trace.pairings_evaluated;
        return dot(v, cand.functional);
    };

    if (!cand.pi.contains(y)) {
        Rational current = value(y);
        while (trace.greedy_steps < options.budget) {
            std::optional<Letter> best;
            RatVector best_point;
            Rational best_value = current;
            for (std::size_t i = 0; i < group.size(); ++i) {
                for (int e : {1, -1}) {
                    auto next = group.letter_matrix(i, e) * y;
                    const auto v = value(next);
                    if (v < best_value) {
                        best = Letter{i, e};
                        best_value = v;
                        best_point = std::move(next);
                    }
                }
            }
            if (!best) {
                break;
            }
            std::vector<Letter> letters{*best};
            letters.insert(letters.end(), applied.letters().begin(), applied.letters().end());
            applied = Word::from_letters(group, std::move(letters));
            y = std::move(best_point);
            current = best_value;
            ++trace.greedy_steps;
            trace.path.push_back(y);
            if (cand.pi.contains(y)) {
                break;
            }
        }
    }

    if (!cand.pi.contains(y)) {
        const std::size_t used = applied.length();
        const std::size_t radius = used >= options.budget ? 0 : std::min(options.bfs_radius, options.budget - used);
        const auto orbit = word_bfs(group, radius);
        bool found = false;
        for (std::size_t i = 1; i < orbit.elements.size(); ++i) {
            auto z = orbit.elements[i].matrix() * y;
            if (cand.pi.contains(z)) {
                applied = orbit.elements[i].times(group, applied);
                y = std::move(z);
                found = true;
                break;
            }
        }
        trace.exhausted = !found;
    }

    trace.applied = applied;
    trace.word = applied.inverse(group);
    trace.output = std::move(y);
    return trace;
}

std::optional<RatVector> common_interior_point(const PolyCone& translate, const PolyCone& pi) {
    if (translate.dim() != pi.dim()) {
        throw DimensionError("common_interior_point: dimension mismatch");
    }
    FeasibilityProblem p;
    p.num_vars = pi.dim();
    for (const auto& n : translate.facets()) {
        p.ge_rows.push_back(n);
        p.ge_rhs.push_back(0);
    }
    for (const auto& n : pi.facets()) {
        p.ge_rows.push_back(n);
        p.ge_rhs.push_back(1);
    }
    auto x = find_feasible_point(p);
    if (x && !is_zero(*x)) {
        x = primitive_integer_ray(*x);
    }
    return x;
}

std::vector<Word> stabilizer_of_domain(const DomainCandidate& cand, std::size_t depth) {
    const auto orbit = word_bfs(cand.group, depth);
    std::vector<Word> out;
    for (std::size_t i = 1; i < orbit.elements.size(); ++i) {
        if (fixes(orbit.elements[i], cand.pi)) {
            out.push_back(orbit.elements[i]);
        }
    }
    return out;
}

std::vector<Word> trivial_on_quotient(const DomainCandidate& cand, std::size_t depth) {
    const auto w = lineality_space(cand.cone);
    const std::size_t dim = cone_dim(cand.cone);
    const RatMatrix p = w.empty() ? RatMatrix::identity(dim) : quotient_map(w, dim);
    const auto orbit = word_bfs(cand.group, depth);
    std::vector<Word> out;
    for (std::size_t i = 1; i < orbit.elements.size(); ++i) {
        if (p * orbit.elements[i].matrix() == p) {
            out.push_back(orbit.elements[i]);
        }
    }
    return out;
}

Certificate verify_weak_domain(const DomainCandidate& cand, const VerifyOptions& options) {
    if (cand.status.state == Certificate::State::refuted) {
        return cand.status;
    }
    Certificate cert;
    cert.depth = options.depth;
    cert.samples = options.samples;
    cert.seed = options.seed;
    const auto& group = cand.group;
    const auto& pi = cand.pi;

    // Translates either coincide with Pi or avoid its interior.
    const auto orbit = word_bfs(group, options.depth);
    for (std::size_t i = 1; i < orbit.elements.size(); ++i) {
        const auto& w = orbit.elements[i];
        if (fixes(w, pi)) {
            continue;
        }
        if (auto pt = common_interior_point(pi.transformed(w.matrix()), pi)) {
            return refuted(cert, Counterexample::Kind::overlap, w, *pt,
                           format_word(group, w) + " Pi meets Int(Pi) at " + to_string(*pt));
        }
    }

    for (const auto& v : pi.spanning_set()) {
        if (!cplus_membership(cand.cone, v)) {
            return refuted(cert, Counterexample::Kind::outside_cplus, std::nullopt, v,
                           "generator " + to_string(v) + " of Pi is not in C+");
        }
    }

    if (!lineality_space(cand.cone).empty()) {
        const auto stab = stabilizer_of_domain(cand, options.depth);
        const auto triv = trivial_on_quotient(cand, options.depth);
        std::set<RatMatrix> a;
        std::set<RatMatrix> b;
        for (const auto& w : stab) {
            a.insert(w.matrix());
        }
        for (const auto& w : triv) {
            b.insert(w.matrix());
        }
        if (a != b) {
            const auto& odd = [&]() -> const Word& {
                for (const auto& w : stab) {
                    if (!b.contains(w.matrix())) {
                        return w;
                    }
                }
                for (const auto& w : triv) {
                    if (!a.contains(w.matrix())) {
                        return w;
                    }
                }
                return stab.front();
            }();
            return refuted(cert, Counterexample::Kind::stabilizer_mismatch, odd, std::nullopt,
                           format_word(group, odd) + " lies in exactly one of {gamma Pi = Pi} and "
                                                     "{gamma trivial on V/W}");
        }
    }

    const auto samples = sample_cone(cand.cone, group, options.samples, options.seed, options.sampling);
    for (const auto& s : samples) {
        const auto trace = reduce_point(cand, s, options.reduce);
        if (trace.exhausted) {
            return refuted(cert, Counterexample::Kind::uncovered, std::nullopt, s,
                           "sample " + to_string(s) + " was not reduced into Pi");
        }
        if (!cplus_membership(cand.cone, trace.output)) {
            return refuted(cert, Counterexample::Kind::outside_cplus, std::nullopt, trace.output,
                           "reduced image " + to_string(trace.output) + " is not in C+");
        }
    }

    cert.state = Certificate::State::verified;
    return cert;
}

DomainCandidate lift_degenerate(const ConeRef& cone, const GroupSpec& group, std::span<const Rational> xi_quotient,
                                std::size_t depth) {
    check_group_dims(cone, group);
    const std::size_t dim = cone_dim(cone);
    const auto w = lineality_space(cone);
    if (w.empty()) {
        throw PreconditionFailed("lineality space W = 0: use dirichlet_domain");
    }
    for (std::size_t i = 0; i < group.size(); ++i) {
        for (const auto& v : w) {
            if (!in_span(w, group.generators()[i] * v)) {
                throw PreconditionFailed("W not Gamma-invariant: generator " + group.names()[i] + " moves " +
                                         to_string(v) + " out of W");
            }
        }
    }
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (!preserves_cone(group.generators()[i], cone)) {
            throw PreconditionFailed("generator " + group.names()[i] + " does not preserve the cone");
        }
    }

    auto q = project_quotient(cone, w);
    const std::size_t qdim = q.projection.rows();
    std::vector<RatMatrix> qgens;
    for (const auto& m : group.generators()) {
        qgens.push_back(q.projection * m * q.section);
    }
    auto qgroup = GroupSpec::make(qdim, std::move(qgens), group.names());
    const auto& qcone = std::get<PolyCone>(q.cone);

    PolyCone qpi;
    std::vector<Word> active;
    if (qdim == 0) {
        if (!xi_quotient.empty()) {
            throw DimensionError("the quotient V/W is zero-dimensional; xi must be empty");
        }
        qpi = PolyCone::from_rays(0, std::vector<RatVector>{});
    } else {
        auto qcand = dirichlet_domain(q.cone, qgroup, xi_quotient, depth, Pairing::standard);
        qpi = std::move(qcand.pi);
        for (const auto& aw : qcand.active_words) {
            active.push_back(Word::from_letters(group, aw.letters()));
        }
    }

    std::vector<RatVector> rays;
    for (const auto& g : qpi.spanning_set()) {
        rays.push_back(primitive_integer_ray(q.section * g));
    }
    for (const auto& v : q.subspace) {
        rays.push_back(v);
        rays.push_back(negate(v));
    }

    DomainCandidate cand;
    cand.pi = PolyCone::from_rays(dim, rays);
    cand.functional = q.projection.transpose() * xi_quotient;
    cand.xi = cand.functional;
    cand.pairing = Pairing::standard;
    cand.depth = depth;
    cand.group = group;
    cand.cone = cone;
    cand.construction = Construction::lifted;
    cand.active_words = std::move(active);
    cand.quotient = QuotientData{q.subspace,
                                 q.projection,
                                 q.section,
                                 qcone,
                                 std::move(qpi),
                                 RatVector(xi_quotient.begin(), xi_quotient.end()),
                                 std::move(qgroup)};
    return cand;
}

SidePairingReport side_pairings(const DomainCandidate& cand, std::size_t depth) {
    if (cand.status.state != Certificate::State::verified) {
        throw PreconditionFailed("side_pairings: candidate is not verified");
    }
    const auto& pi = cand.pi;
    const std::size_t dim = pi.dim();
    if (!pi.is_full_dimensional()) {
        throw PreconditionFailed("side_pairings: domain is not full-dimensional");
    }
    SidePairingReport report;
    std::vector<RatVector> interior;
    for (const auto& n : pi.facets()) {
        if (face_in_boundary(cand.cone, face_of(pi, n))) {
            report.boundary_facets.push_back(n);
        } else {
            interior.push_back(n);
        }
    }
    std::set<RatVector> covered;
    const auto orbit = word_bfs(cand.group, depth);
    for (std::size_t i = 1; i < orbit.elements.size() && covered.size() < interior.size(); ++i) {
        const auto& w = orbit.elements[i];
        if (fixes(w, pi)) {
            continue;
        }
        const auto translate = pi.transformed(w.matrix());
        std::vector<RatVector> normals = pi.facets();
        normals.insert(normals.end(), translate.facets().begin(), translate.facets().end());
        const auto meet = PolyCone::from_inequalities(dim, normals);
        if (meet.span_dimension() + 1 != dim) {
            continue;
        }
        const auto* image = facet_containing(pi, meet);
        const auto* source = facet_containing(pi, meet.transformed(*inverse(w.matrix())));
        if (image == nullptr || source == nullptr) {
            continue;
        }
        if (covered.contains(*image) && covered.contains(*source)) {
            continue;
        }
        covered.insert(*image);
        covered.insert(*source);
        report.pairings.push_back(SidePairing{*source, w, *image, same_set(meet, face_of(pi, *image))});
    }
    for (const auto& n : interior) {
        if (!covered.contains(n)) {
            report.unmatched_facets.push_back(n);
        }
    }
    return report;
}

Certificate certify_polyhedral_type(const ConeRef& cone, const GroupSpec& group, const PolyCone& pi,
                                    std::size_t depth, std::size_t samples, std::uint64_t seed) {
    for (const auto& v : pi.spanning_set()) {
        if (!cplus_membership(cone, v)) {
            throw PreconditionFailed("pi is not contained in C+: " + to_string(v));
        }
    }
    const auto cand = supplied_candidate(cone, group, pi);
    Certificate cert;
    cert.depth = depth;
    cert.samples = samples;
    cert.seed = seed;
    ReduceOptions reduce;
    reduce.bfs_radius = depth;
    for (const auto& s : sample_cone(cone, group, samples, seed)) {
        const auto trace = reduce_point(cand, s, reduce);
        if (trace.exhausted) {
            return refuted(cert, Counterexample::Kind::uncovered, std::nullopt, s,
                           "sample " + to_string(s) + " is not covered by Gamma Pi at depth " + std::to_string(depth));
        }
        if (!cplus_membership(cone, trace.output)) {
            return refuted(cert, Counterexample::Kind::outside_cplus, std::nullopt, trace.output,
                           "reduced image " + to_string(trace.output) + " is not in C+");
        }
    }
    cert.state = Certificate::State::verified;
    return cert;
}

std::string to_string(Certificate::State s) {
    switch (s) {
    case Certificate::State::unverified: return "unverified";
    case Certificate::State::verified: return "verified-at-depth";
    case Certificate::State::refuted: return "refuted";
    }
    return "unknown";
}

std::string to_string(Counterexample::Kind k) {
    switch (k) {
    case Counterexample::Kind::overlap: return "overlap";
    case Counterexample::Kind::uncovered: return "uncovered";
    case Counterexample::Kind::outside_cplus: return "outside-cplus";
    case Counterexample::Kind::stabilizer_mismatch: return "stabilizer-mismatch";
    }
    return "unknown";
}

std::string to_string(Pairing p) { return p == Pairing::standard ? "standard" : "quadratic-form"; }

std::string to_string(Construction c) {
    switch (c) {
    case Construction::dirichlet: return "dirichlet";
    case Construction::lifted: return "lifted";
    case Construction::supplied: return "supplied";
    }
    return "unknown";
}

} // namespace conewb

#include "conewb/json_io.hpp"

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace conewb {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw SchemaError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw SchemaError(std::string("field \"") + key + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

Pairing pairing_from_string(const std::string& s) {
    if (s == "standard") {
        return Pairing::standard;
    }
    if (s == "quadratic-form") {
        return Pairing::quadratic_form;
    }
    throw SchemaError("pairing must be \"standard\" or \"quadratic-form\", got \"" + s + "\"");
}

Construction construction_from_string(const std::string& s) {
    for (auto c : {Construction::dirichlet, Construction::lifted, Construction::supplied}) {
        if (to_string(c) == s) {
            return c;
        }
    }
    throw SchemaError("unknown construction \"" + s + "\"");
}

Word word_from_json(const GroupSpec& g, const Json& j) {
    if (!j.is_string()) {
        throw SchemaError("words are strings such as \"M^-3\"");
    }
    try {
        return parse_word(g, j.get<std::string>());
    } catch (const InvalidInput& e) {
        throw SchemaError(e.what());
    }
}

} // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(std::span<const Rational> v) {
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back(x.str());
    }
    return out;
}

Json to_json(const RatMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out.push_back(to_json(m.row(r)));
    }
    return out;
}

Json to_json(std::span<const RatVector> vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
        out.push_back(to_json(v));
    }
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception&) {
            throw SchemaError("not a rational: \"" + j.get<std::string>() + "\"");
        }
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    throw SchemaError("rationals are strings \"p/q\", got " + j.dump());
}

RatVector vector_from_json(const Json& j, std::optional<std::size_t> dim) {
    if (!j.is_array()) {
        throw SchemaError("expected an array of rationals, got " + j.dump());
    }
    RatVector v;
    for (const auto& x : j) {
        v.push_back(rational_from_json(x));
    }
    if (dim && v.size() != *dim) {
        throw SchemaError("vector " + j.dump() + " should have length " + std::to_string(*dim));
    }
    return v;
}

std::vector<RatVector> vectors_from_json(const Json& j, std::optional<std::size_t> dim) {
    if (!j.is_array()) {
        throw SchemaError("expected an array of vectors, got " + j.dump());
    }
    std::vector<RatVector> out;
    for (const auto& x : j) {
        out.push_back(vector_from_json(x, dim));
    }
    return out;
}

RatMatrix matrix_from_json(const Json& j, std::optional<std::size_t> dim) {
    auto rows = vectors_from_json(j);
    std::size_t cols = rows.empty() ? dim.value_or(0) : rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw SchemaError("ragged matrix " + j.dump());
        }
    }
    return RatMatrix::from_rows(rows, cols);
}

RatVector parse_csv_vector(const std::string& text) {
    RatVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) {
            throw SchemaError("empty entry in \"" + text + "\"");
        }
        try {
            v.push_back(Rational::parse(item.substr(b, e - b + 1)));
        } catch (const std::exception&) {
            throw SchemaError("not a rational: \"" + item + "\"");
        }
    }
    return v;
}

Json polycone_to_json(const PolyCone& c) {
    return Json{{"dim", c.dim()},
                {"generators", to_json(c.generators())},
                {"facets", to_json(c.facets())},
                {"lineality", to_json(c.lineality_basis())}};
}

PolyCone polycone_from_json(const Json& j, std::size_t dim) {
    if (j.contains("dim") && size_field(j, "dim") != dim) {
        throw SchemaError("cone dim " + j.at("dim").dump() + " does not match " + std::to_string(dim));
    }
    if (j.contains("generators")) {
        auto rays = vectors_from_json(j.at("generators"), dim);
        if (j.contains("lineality")) {
            for (const auto& l : vectors_from_json(j.at("lineality"), dim)) {
                rays.push_back(l);
                rays.push_back(negate(l));
            }
        }
        return PolyCone::from_rays(dim, rays);
    }
    if (j.contains("facets")) {
        return PolyCone::from_inequalities(dim, vectors_from_json(j.at("facets"), dim));
    }
    throw SchemaError("polyhedral cone needs \"generators\" or \"facets\"");
}

Json cone_to_json(const ConeRef& c) {
    if (const auto* p = std::get_if<PolyCone>(&c)) {
        auto j = polycone_to_json(*p);
        j["type"] = "polyhedral";
        return j;
    }
    const auto& q = std::get<QuadCone>(c);
    return Json{{"type", "quadratic"}, {"dim", q.dim()}, {"Q", to_json(q.form())}, {"selector", to_json(q.selector())}};
}

ConeRef cone_from_json(const Json& j) {
    const auto type = field(j, "type");
    if (type == "polyhedral") {
        std::size_t dim = 0;
        if (j.contains("dim")) {
            dim = size_field(j, "dim");
        } else {
            const auto& list = j.contains("generators") ? j.at("generators") : field(j, "facets");
            if (!list.is_array() || list.empty() || !list.front().is_array()) {
                throw SchemaError("polyhedral cone without \"dim\" needs a non-empty vector list");
            }
            dim = list.front().size();
        }
        return polycone_from_json(j, dim);
    }
    if (type == "quadratic") {
        auto selector = vector_from_json(field(j, "selector"));
        if (j.contains("dim") && size_field(j, "dim") != selector.size()) {
            throw SchemaError("selector length does not match dim");
        }
        auto q = matrix_from_json(field(j, "Q"), selector.size());
        if (q.rows() != selector.size() || q.cols() != selector.size()) {
            throw SchemaError("Q must be square of the selector's size");
        }
        try {
            return QuadCone::make(std::move(q), std::move(selector));
        } catch (const InvalidInput& e) {
            throw SchemaError(e.what());
        }
    }
    throw SchemaError("cone type must be \"polyhedral\" or \"quadratic\", got " + type.dump());
}

Json group_to_json(const GroupSpec& g) {
    Json gens = Json::array();
    for (const auto& m : g.generators()) {
        gens.push_back(to_json(m));
    }
    return Json{{"generators", gens}, {"names", g.names()}};
}

GroupSpec group_from_json(const Json& j, std::size_t dim) {
    std::vector<RatMatrix> gens;
    const auto& list = field(j, "generators");
    if (!list.is_array()) {
        throw SchemaError("\"generators\" must be an array of matrices");
    }
    for (const auto& m : list) {
        auto mat = matrix_from_json(m, dim);
        if (mat.rows() != dim || mat.cols() != dim) {
            throw SchemaError("group generator " + m.dump() + " is not " + std::to_string(dim) + "x" +
                              std::to_string(dim));
        }
        gens.push_back(std::move(mat));
    }
    std::vector<std::string> names;
    if (j.contains("names")) {
        if (!j.at("names").is_array()) {
            throw SchemaError("\"names\" must be an array of strings");
        }
        for (const auto& n : j.at("names")) {
            if (!n.is_string()) {
                throw SchemaError("\"names\" must be an array of strings");
            }
            names.push_back(n.get<std::string>());
        }
        if (names.size() != gens.size()) {
            throw SchemaError("\"names\" and \"generators\" differ in length");
        }
    }
    try {
        return GroupSpec::make(dim, std::move(gens), std::move(names));
    } catch (const InvalidInput& e) {
        throw SchemaError(e.what());
    } catch (const DimensionError& e) {
        throw SchemaError(e.what());
    }
}

Json spec_to_json(const WorkbenchSpec& s) {
    Json j{{"lattice_dim", s.lattice_dim},
           {"cone", cone_to_json(s.cone)},
           {"group", group_to_json(s.group)},
           {"pairing", to_string(s.pairing)}};
    if (s.xi) {
        j["xi"] = to_json(*s.xi);
    }
    if (s.pi) {
        j["pi"] = polycone_to_json(*s.pi);
    }
    return j;
}

WorkbenchSpec spec_from_json(const Json& j) {
    if (j.is_object() && j.contains("spec")) {
        return spec_from_json(j.at("spec"));
    }
    WorkbenchSpec s;
    s.lattice_dim = size_field(j, "lattice_dim");
    if (s.lattice_dim == 0) {
        throw SchemaError("lattice_dim must be positive");
    }
    s.cone = cone_from_json(field(j, "cone"));
    if (cone_dim(s.cone) != s.lattice_dim) {
        throw SchemaError("cone dimension " + std::to_string(cone_dim(s.cone)) + " differs from lattice_dim " +
                          std::to_string(s.lattice_dim));
    }
    s.group = j.contains("group") ? group_from_json(j.at("group"), s.lattice_dim) : GroupSpec::trivial(s.lattice_dim);
    s.pairing = j.contains("pairing") ? pairing_from_string(j.at("pairing").get<std::string>()) : default_pairing(s.cone);
    if (s.pairing == Pairing::quadratic_form && !std::holds_alternative<QuadCone>(s.cone)) {
        throw SchemaError("the quadratic-form pairing needs a quadratic cone");
    }
    if (j.contains("xi")) {
        s.xi = vector_from_json(j.at("xi"));
    }
    if (j.contains("pi")) {
        s.pi = polycone_from_json(j.at("pi"), s.lattice_dim);
    }
    return s;
}

Fixture fixture_from_json(const Json& j) {
    Fixture f;
    f.name = field(j, "name").get<std::string>();
    f.spec = spec_from_json(field(j, "spec"));
    if (j.contains("expected")) {
        f.expected = j.at("expected");
    }
    return f;
}

Json word_to_json(const GroupSpec& g, const Word& w) { return format_word(g, w); }

Json counterexample_to_json(const GroupSpec& g, const Counterexample& c) {
    Json j{{"kind", to_string(c.kind)}, {"detail", c.detail}};
    j["word"] = c.word ? word_to_json(g, *c.word) : Json(nullptr);
    j["point"] = c.point ? to_json(*c.point) : Json(nullptr);
    return j;
}

Json certificate_to_json(const GroupSpec& g, const Certificate& c) {
    Json j{{"status", to_string(c.state)}, {"depth", c.depth}, {"samples", c.samples}, {"seed", c.seed}};
    j["counterexample"] = c.counterexample ? counterexample_to_json(g, *c.counterexample) : Json(nullptr);
    return j;
}

Certificate certificate_from_json(const GroupSpec& g, const Json& j) {
    Certificate c;
    const auto status = field(j, "status").get<std::string>();
    if (status == "unverified") {
        c.state = Certificate::State::unverified;
    } else if (status == "verified-at-depth") {
        c.state = Certificate::State::verified;
    } else if (status == "refuted") {
        c.state = Certificate::State::refuted;
    } else {
        throw SchemaError("unknown status \"" + status + "\"");
    }
    c.depth = j.value("depth", std::size_t{0});
    c.samples = j.value("samples", std::size_t{0});
    c.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("counterexample") && !j.at("counterexample").is_null()) {
        const auto& x = j.at("counterexample");
        Counterexample ce;
        const auto kind = field(x, "kind").get<std::string>();
        bool known = false;
        for (auto k : {Counterexample::Kind::overlap, Counterexample::Kind::uncovered,
                       Counterexample::Kind::outside_cplus, Counterexample::Kind::stabilizer_mismatch}) {
            if (to_string(k) == kind) {
                ce.kind = k;
                known = true;
            }
        }
        if (!known) {
            throw SchemaError("unknown counterexample kind \"" + kind + "\"");
        }
        if (x.contains("word") && !x.at("word").is_null()) {
            ce.word = word_from_json(g, x.at("word"));
        }
        if (x.contains("point") && !x.at("point").is_null()) {
            ce.point = vector_from_json(x.at("point"), g.dim());
        }
        ce.detail = x.value("detail", std::string{});
        c.counterexample = std::move(ce);
    }
    return c;
}

bool is_candidate_json(const Json& j) { return j.is_object() && j.value("kind", std::string{}) == "domain-candidate"; }

Json candidate_to_json(const DomainCandidate& c) {
    Json words = Json::array();
    for (const auto& w : c.active_words) {
        words.push_back(word_to_json(c.group, w));
    }
    Json j{{"kind", "domain-candidate"},
           {"lattice_dim", c.pi.dim()},
           {"cone", cone_to_json(c.cone)},
           {"group", group_to_json(c.group)},
           {"pairing", to_string(c.pairing)},
           {"xi", to_json(c.xi)},
           {"functional", to_json(c.functional)},
           {"depth", c.depth},
           {"construction", to_string(c.construction)},
           {"pi", polycone_to_json(c.pi)},
           {"active_words", words},
           {"status", certificate_to_json(c.group, c.status)}};
    if (c.quotient) {
        const auto& q = *c.quotient;
        j["quotient"] = Json{{"subspace", to_json(q.subspace)},
                             {"projection", to_json(q.projection)},
                             {"section", to_json(q.section)},
                             {"cone", polycone_to_json(q.cone)},
                             {"pi", polycone_to_json(q.pi)},
                             {"xi", to_json(q.xi)}};
    } else {
        j["quotient"] = nullptr;
    }
    return j;
}

DomainCandidate candidate_from_json(const Json& j) {
    if (!is_candidate_json(j)) {
        throw SchemaError("not a domain candidate (missing \"kind\": \"domain-candidate\")");
    }
    DomainCandidate c;
    const auto dim = size_field(j, "lattice_dim");
    c.cone = cone_from_json(field(j, "cone"));
    if (cone_dim(c.cone) != dim) {
        throw SchemaError("candidate cone dimension differs from lattice_dim");
    }
    c.group = group_from_json(field(j, "group"), dim);
    c.pairing = pairing_from_string(field(j, "pairing").get<std::string>());
    c.xi = vector_from_json(field(j, "xi"));
    c.functional = j.contains("functional") ? vector_from_json(j.at("functional"), dim)
                                            : pairing_functional(c.cone, c.pairing, c.xi);
    c.depth = j.value("depth", std::size_t{0});
    c.construction = construction_from_string(j.value("construction", std::string{"supplied"}));
    c.pi = polycone_from_json(field(j, "pi"), dim);
    if (j.contains("active_words")) {
        for (const auto& w : j.at("active_words")) {
            c.active_words.push_back(word_from_json(c.group, w));
        }
    }
    if (j.contains("status")) {
        c.status = certificate_from_json(c.group, j.at("status"));
    }
    if (j.contains("quotient") && !j.at("quotient").is_null()) {
        const auto& q = j.at("quotient");
        QuotientData d;
        d.subspace = vectors_from_json(field(q, "subspace"), dim);
        d.projection = matrix_from_json(field(q, "projection"), dim);
        const std::size_t qdim = d.projection.rows();
        d.section = matrix_from_json(field(q, "section"), qdim);
        if (d.section.rows() != dim || d.section.cols() != qdim) {
            throw SchemaError("quotient section has the wrong shape");
        }
        d.cone = polycone_from_json(field(q, "cone"), qdim);
        d.pi = polycone_from_json(field(q, "pi"), qdim);
        d.xi = vector_from_json(field(q, "xi"), qdim);
        std::vector<RatMatrix> gens;
        for (const auto& m : c.group.generators()) {
            gens.push_back(d.projection * m * d.section);
        }
        d.group = GroupSpec::make(qdim, std::move(gens), c.group.names());
        c.quotient = std::move(d);
    }
    return c;
}

Json trace_to_json(const GroupSpec& g, const ReductionTrace& t) {
    return Json{{"input", to_json(t.input)},
                {"word", word_to_json(g, t.word)},
                {"applied", word_to_json(g, t.applied)},
                {"output", to_json(t.output)},
                {"path", to_json(t.path)},
                {"greedy_steps", t.greedy_steps},
                {"pairings_evaluated", t.pairings_evaluated},
                {"exhausted", t.exhausted}};
}

Json side_pairings_to_json(const GroupSpec& g, const SidePairingReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairings) {
        pairs.push_back(Json{{"facet", to_json(p.facet)},
                             {"gamma", word_to_json(g, p.gamma)},
                             {"image_facet", to_json(p.image_facet)},
                             {"full_facet", p.full_facet}});
    }
    return Json{{"pairings", pairs},
                {"boundary_facets", to_json(r.boundary_facets)},
                {"unmatched_facets", to_json(r.unmatched_facets)}};
}

Json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw SchemaError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            throw Error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace conewb

#include "conewb/cli.hpp"

#include "conewb/json_io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <sstream>

namespace conewb {

namespace {

enum class LogLevel { quiet, warn, info, debug };

LogLevel log_level_from_env() {
    const char* v = std::getenv("WORKBENCH_LOG");
    if (v == nullptr) {
        return LogLevel::warn;
    }
    const std::string s(v);
    if (s == "quiet" || s == "0") {
        return LogLevel::quiet;
    }
    if (s == "info" || s == "1") {
        return LogLevel::info;
    }
    if (s == "debug" || s == "2") {
        return LogLevel::debug;
    }
    return LogLevel::warn;
}

struct Options {
    std::string command;
    std::string input;
    std::string xi;
    std::string point;
    std::size_t depth = 4;
    std::size_t samples = 500;
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string out;
    bool quotient = false;
};

class Runner {
public:
    Runner(Options opts, std::ostream& out, std::ostream& err)
        : opts_(std::move(opts)), out_(out), err_(err), level_(log_level_from_env()) {}

    int run();

private:
    void log(LogLevel level, const std::string& msg) {
        if (level <= level_ && level_ != LogLevel::quiet) {
            err_ << "[" << (level == LogLevel::debug ? "debug" : level == LogLevel::info ? "info" : "warn") << "] "
                 << msg << '\n';
        }
    }

    Json load_input() {
        if (opts_.input.empty()) {
            throw SchemaError("no input file: pass --input PATH");
        }
        log(LogLevel::info, "reading " + opts_.input);
        return load_json_file(opts_.input);
    }

    VerifyOptions verify_options() const {
        VerifyOptions v;
        v.depth = opts_.depth;
        v.samples = opts_.samples;
        v.seed = opts_.seed;
        return v;
    }

    std::optional<RatVector> cli_xi() const {
        if (opts_.xi.empty()) {
            return std::nullopt;
        }
        return parse_csv_vector(opts_.xi);
    }

    DomainCandidate build_domain(const WorkbenchSpec& spec);
    DomainCandidate candidate_from_input(const Json& j);
    void emit(const Json& j);

    int cmd_describe();
    int cmd_domain();
    int cmd_verify();
    int cmd_reduce();
    int cmd_quotient();
    int cmd_orbit();
    int cmd_pairings();

    Options opts_;
    std::ostream& out_;
    std::ostream& err_;
    LogLevel level_;
};

bool is_scalar_array(const Json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_text(const Json& j, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : j.items()) {
        os << pad << key << ":";
        if (value.is_primitive()) {
            os << ' ' << scalar_text(value) << '\n';
        } else if (is_scalar_array(value) && value.empty()) {
            os << " none\n";
        } else if (is_scalar_array(value)) {
            os << " (";
            for (std::size_t i = 0; i < value.size(); ++i) {
                os << (i ? ", " : "") << scalar_text(value[i]);
            }
            os << ")\n";
        } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar_array)) {
            os << (value.empty() ? " none\n" : "\n");
            for (const auto& v : value) {
                os << pad << "  (";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    os << (i ? ", " : "") << scalar_text(v[i]);
                }
                os << ")\n";
            }
        } else if (value.is_array()) {
            os << (value.empty() ? " none\n" : "\n");
            for (std::size_t i = 0; i < value.size(); ++i) {
                os << pad << "  - [" << i << "]\n";
                if (value[i].is_object()) {
                    render_text(value[i], os, indent + 4);
                } else if (value[i].is_array() && std::all_of(value[i].begin(), value[i].end(), is_scalar_array)) {
                    for (const auto& row : value[i]) {
                        os << pad << "    (";
                        for (std::size_t k = 0; k < row.size(); ++k) {
                            os << (k ? ", " : "") << scalar_text(row[k]);
                        }
                        os << ")\n";
                    }
                } else {
                    os << pad << "    " << value[i].dump() << '\n';
                }
            }
        } else {
            os << '\n';
            render_text(value, os, indent + 2);
        }
    }
}

void Runner::emit(const Json& j) {
    std::string text;
    if (opts_.format == "text") {
        std::ostringstream os;
        render_text(j, os, 0);
        text = os.str();
    } else {
        text = j.dump(2) + "\n";
    }
    if (opts_.out.empty()) {
        out_ << text;
    } else {
        write_file_atomic(opts_.out, text);
        log(LogLevel::info, "wrote " + opts_.out);
    }
}

DomainCandidate Runner::build_domain(const WorkbenchSpec& spec) {
    const auto xi = cli_xi() ? cli_xi() : spec.xi;
    const auto w = lineality_space(spec.cone);
    if (!w.empty()) {
        if (!opts_.quotient) {
            throw DegenerateCone("cone degenerate (lineality dimension " + std::to_string(w.size()) +
                                 "): rerun with --quotient to lift a domain of V/W");
        }
        RatVector xq;
        if (xi) {
            xq = *xi;
        } else {
            const auto q = project_quotient(spec.cone, w);
            xq = default_xi(q.cone);
        }
        log(LogLevel::info, "lifting from V/W with xi = " + to_string(xq));
        return lift_degenerate(spec.cone, spec.group, xq, opts_.depth);
    }
    const auto x = xi ? *xi : default_xi(spec.cone);
    log(LogLevel::info, "Dirichlet domain with xi = " + to_string(x) + ", depth " + std::to_string(opts_.depth));
    return dirichlet_domain(spec.cone, spec.group, x, opts_.depth, spec.pairing);
}

DomainCandidate Runner::candidate_from_input(const Json& j) {
    if (is_candidate_json(j)) {
        return candidate_from_json(j);
    }
    const auto spec = spec_from_json(j);
    if (!spec.pi) {
        log(LogLevel::info, "no pi in the input; building the Dirichlet domain first");
        return build_domain(spec);
    }
    return supplied_candidate(spec.cone, spec.group, *spec.pi, spec.xi);
}

int Runner::cmd_describe() {
    const auto spec = spec_from_json(load_input());
    Json cone = cone_to_json(spec.cone);
    const auto w = lineality_space(spec.cone);
    cone["lineality"] = to_json(w);
    cone["non_degenerate"] = w.empty();
    if (const auto* q = std::get_if<QuadCone>(&spec.cone)) {
        const auto s = signature(q->form());
        cone["signature"] = Json::array({s.positive, s.negative});
    } else {
        const auto& p = std::get<PolyCone>(spec.cone);
        cone["full_dimensional"] = p.is_full_dimensional();
    }
    Json gens = Json::array();
    for (std::size_t i = 0; i < spec.group.size(); ++i) {
        const auto& m = spec.group.generators()[i];
        gens.push_back(Json{{"name", spec.group.names()[i]},
                            {"matrix", to_json(m)},
                            {"det", determinant(m).str()},
                            {"preserves_cone", preserves_cone(m, spec.cone)}});
    }
    Json j{{"lattice_dim", spec.lattice_dim}, {"cone", cone}, {"group", gens}, {"pairing", to_string(spec.pairing)}};
    emit(j);
    return exit_ok;
}

int Runner::cmd_domain() {
    const auto spec = spec_from_json(load_input());
    emit(candidate_to_json(build_domain(spec)));
    return exit_ok;
}

int Runner::cmd_verify() {
    auto cand = candidate_from_input(load_input());
    const auto opts = verify_options();
    log(LogLevel::info, "verifying at depth " + std::to_string(opts.depth) + " with " + std::to_string(opts.samples) +
                            " samples, seed " + std::to_string(opts.seed));
    const auto cert = verify_weak_domain(cand, opts);
    cand.status = cert;
    Json j = certificate_to_json(cand.group, cert);
    j["pi"] = polycone_to_json(cand.pi);
    Json pairings = Json::array();
    Json stabilizer = Json::array();
    if (cert.state == Certificate::State::verified) {
        for (const auto& w : stabilizer_of_domain(cand, opts.depth)) {
            stabilizer.push_back(word_to_json(cand.group, w));
        }
        if (cand.pi.is_full_dimensional()) {
            pairings = side_pairings_to_json(cand.group, side_pairings(cand, opts.depth)).at("pairings");
        }
    }
    j["pairings"] = pairings;
    j["stabilizer"] = stabilizer;
    emit(j);
    if (cert.state == Certificate::State::refuted && cert.counterexample) {
        log(LogLevel::warn, "refuted: " + cert.counterexample->detail);
    }
    return cert.state == Certificate::State::verified ? exit_ok : exit_refuted;
}

int Runner::cmd_reduce() {
    if (opts_.point.empty()) {
        throw SchemaError("reduce needs --point");
    }
    const auto cand = candidate_from_input(load_input());
    const auto x = parse_csv_vector(opts_.point);
    if (x.size() != cand.pi.dim()) {
        throw DimensionError("--point has " + std::to_string(x.size()) + " entries, expected " +
                             std::to_string(cand.pi.dim()));
    }
    const auto trace = reduce_point(cand, x);
    emit(trace_to_json(cand.group, trace));
    if (trace.exhausted) {
        log(LogLevel::warn, "reduction budget exhausted; the point is not in Pi");
    }
    return trace.exhausted ? exit_refuted : exit_ok;
}

int Runner::cmd_quotient() {
    const auto spec = spec_from_json(load_input());
    const auto w = lineality_space(spec.cone);
    const auto q = project_quotient(spec.cone, w);
    emit(Json{{"subspace", to_json(q.subspace)},
              {"projection", to_json(q.projection)},
              {"section", to_json(q.section)},
              {"cone", cone_to_json(q.cone)}});
    return exit_ok;
}

int Runner::cmd_orbit() {
    const auto spec = spec_from_json(load_input());
    const auto report = word_bfs(spec.group, opts_.depth);
    Json elements = Json::array();
    for (const auto& w : report.elements) {
        elements.push_back(Json{{"word", word_to_json(spec.group, w)}, {"matrix", to_json(w.matrix())}});
    }
    emit(Json{{"depth", report.depth}, {"truncated", report.truncated}, {"size", report.elements.size()},
              {"elements", elements}});
    return exit_ok;
}

int Runner::cmd_pairings() {
    auto cand = candidate_from_input(load_input());
    if (cand.status.state != Certificate::State::verified) {
        cand.status = verify_weak_domain(cand, verify_options());
    }
    if (cand.status.state != Certificate::State::verified) {
        emit(certificate_to_json(cand.group, cand.status));
        return exit_refuted;
    }
    emit(side_pairings_to_json(cand.group, side_pairings(cand, opts_.depth)));
    return exit_ok;
}

int Runner::run() {
    if (opts_.format != "json" && opts_.format != "text") {
        throw SchemaError("--format must be json or text");
    }
    if (opts_.command == "describe") {
        return cmd_describe();
    }
    if (opts_.command == "domain") {
        return cmd_domain();
    }
    if (opts_.command == "verify") {
        return cmd_verify();
    }
    if (opts_.command == "reduce") {
        return cmd_reduce();
    }
    if (opts_.command == "quotient") {
        return cmd_quotient();
    }
    if (opts_.command == "orbit") {
        return cmd_orbit();
    }
    return cmd_pairings();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"conewb: rational polyhedral fundamental domains for group actions on cones", "conewb"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    app.add_option("--input", opts.input, "JSON spec, fixture or candidate");
    app.add_option("--xi", opts.xi, "dual point, comma separated (V/W coordinates with --quotient)");
    app.add_option("--point", opts.point, "point to reduce, comma separated");
    app.add_option("--depth", opts.depth, "word length truncation")->capture_default_str();
    app.add_option("--samples", opts.samples, "number of seeded samples")->capture_default_str();
    app.add_option("--seed", opts.seed, "sampling seed")->capture_default_str();
    app.add_option("--format", opts.format, "json or text")->capture_default_str();
    app.add_option("--out", opts.out, "write the report here instead of stdout");
    app.add_flag("--quotient", opts.quotient, "degenerate cones: build the domain on V/W and lift it");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"describe", "cone class, lineality, non-degeneracy and group checks"},
        {"domain", "Dirichlet domain for a dual point"},
        {"verify", "depth- and sample-truncated certificate for a candidate"},
        {"reduce", "move --point into the domain"},
        {"quotient", "projection of the cone along its lineality space"},
        {"orbit", "group elements up to --depth"},
        {"pairings", "side pairings of a verified candidate"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", opts.input, "input file (same as --input)");
        sub->callback([&opts, n = std::string(name)] { opts.command = n; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "usage error: " << e.what() << '\n' << "run `conewb --help` for the command list\n";
        return exit_usage;
    }

    try {
        Runner runner(std::move(opts), out, err);
        return runner.run();
    } catch (const XiRejected& e) {
        err << "error: " << e.what() << '\n';
        return exit_xi_rejected;
    } catch (const DegenerateCone& e) {
        err << "error: " << e.what() << '\n';
        return exit_degenerate;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Json::exception& e) {
        err << "schema error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace conewb

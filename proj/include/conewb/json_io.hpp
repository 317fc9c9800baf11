#pragma once

#include "conewb/domain.hpp"
#include "conewb/errors.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace conewb {

using Json = nlohmann::json; // std::map objects: keys come out sorted

/// Input does not match the documented JSON schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

Json to_json(const Rational& r);
Json to_json(std::span<const Rational> v);
Json to_json(const RatMatrix& m);
Json to_json(std::span<const RatVector> vs);

/// Rationals are strings "p/q" or "p"; plain JSON integers are accepted too.
Rational rational_from_json(const Json& j);
RatVector vector_from_json(const Json& j, std::optional<std::size_t> dim = std::nullopt);
std::vector<RatVector> vectors_from_json(const Json& j, std::optional<std::size_t> dim = std::nullopt);
RatMatrix matrix_from_json(const Json& j, std::optional<std::size_t> dim = std::nullopt);

/// Comma-separated rationals, e.g. "13,8" or "1/2,-1".
RatVector parse_csv_vector(const std::string& text);

Json polycone_to_json(const PolyCone& c);
/// {"generators": [...], "lineality": [...]} or {"facets": [...]}.
PolyCone polycone_from_json(const Json& j, std::size_t dim);

Json cone_to_json(const ConeRef& c);
ConeRef cone_from_json(const Json& j);

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j, std::size_t dim);

struct WorkbenchSpec {
    std::size_t lattice_dim = 0;
    ConeRef cone;
    GroupSpec group;
    Pairing pairing = Pairing::standard;
    std::optional<RatVector> xi;
    std::optional<PolyCone> pi;
};

struct Fixture {
    std::string name;
    WorkbenchSpec spec;
    Json expected; // null when absent
};

Json spec_to_json(const WorkbenchSpec& s);
/// Accepts a bare spec or a fixture wrapper {"name", "spec", "expected"}.
WorkbenchSpec spec_from_json(const Json& j);
Fixture fixture_from_json(const Json& j);

Json word_to_json(const GroupSpec& g, const Word& w);
Json counterexample_to_json(const GroupSpec& g, const Counterexample& c);
Json certificate_to_json(const GroupSpec& g, const Certificate& c);
Certificate certificate_from_json(const GroupSpec& g, const Json& j);

Json candidate_to_json(const DomainCandidate& c);
DomainCandidate candidate_from_json(const Json& j);
bool is_candidate_json(const Json& j);

Json trace_to_json(const GroupSpec& g, const ReductionTrace& t);
Json side_pairings_to_json(const GroupSpec& g, const SidePairingReport& r);

/// Throws SchemaError when the file is missing or not JSON.
Json load_json_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace conewb
